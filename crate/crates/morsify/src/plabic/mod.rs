//! Plabic graphs: quivers, local moves, fences, attachment to divides,
//! admissible orientations and their links.

mod fence;
mod graph;
mod linkgen;
mod moves;
mod orient;
mod word;
mod yb;

pub use fence::{
    attach_plabic, braid_normalized, fence_of_divide, fence_of_word, fence_word_of_divide, word_of_fence, TailSpec,
};
pub use graph::{quiver_of_plabic, Color, PlabicError, PlabicGraph};
pub use linkgen::link_of_oriented_plabic;
pub use moves::{
    apply_move, enumerate_moves, enumerate_moves_with, move_equivalent, MoveKind, MoveOptions, MoveSearch, PlabicMove,
};
pub use orient::{admissible_orientation, is_acyclic, is_admissible, transport_orientation, Orientation};
pub use word::{FenceLetter, FenceWord, WordError};
pub use yb::yb_as_moves;

#[cfg(test)]
mod tests;
