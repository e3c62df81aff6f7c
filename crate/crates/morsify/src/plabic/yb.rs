//! Yang-Baxter transformations realized by flips and square moves.

use std::collections::{HashMap, VecDeque};

use super::fence::{attach_plabic, TailSpec};
use super::graph::{PlabicError, PlabicGraph};
use super::moves::{apply_move, enumerate_moves_with, MoveOptions, PlabicMove};
use crate::divide::{apply_yb, PlanarDivide, YbSite};
use crate::search::Budget;

fn swapped(p: &PlabicGraph) -> PlabicGraph {
    let mut g = p.clone();
    for v in 0..g.vertex_count() {
        if !g.on_boundary[v] {
            g.color[v] = g.color[v].flipped();
        }
    }
    g
}

/// Moves turning the attached graph of `d` into an attached graph of the
/// divide after the Yang-Baxter transformation at `site`. The sequence is
/// found by breadth-first search over flips and square moves supported on
/// the twelve vertices of the three node squares around the triangle.
pub fn yb_as_moves(d: &PlanarDivide, site: YbSite, budget: &Budget) -> Result<Vec<PlabicMove>, PlabicError> {
    let after = apply_yb(d, site).map_err(|_| PlabicError::SiteNotFound)?;
    let regions = d.regions();
    let walk = &regions.get(site.region).ok_or(PlabicError::SiteNotFound)?.walk;
    let mut local = vec![false; 4 * d.nodes()];
    for &x in walk {
        for s in 0..4 {
            local[4 * (x / 4) + s] = true;
        }
    }
    let start = attach_plabic(d, &TailSpec::default())?;
    let target = attach_plabic(&after, &TailSpec::default())?;
    let goals = [target.canonical_code(false), swapped(&target).canonical_code(false)];
    let opts = MoveOptions { tail_attach: false, tail_remove: false, free_boundary_colors: false };
    let in_site = |g: &PlabicGraph, m: &PlabicMove| {
        let vert = g.vert();
        match *m {
            PlabicMove::Flip { edge } => local[vert[edge]] && local[vert[g.twin[edge]]],
            PlabicMove::Square { edge } => {
                let (walks, _) = g.faces();
                walks.iter().find(|w| w.contains(&edge)).is_some_and(|w| w.iter().all(|&h| local[vert[h]]))
            }
            _ => false,
        }
    };
    let mut seen: HashMap<Vec<u32>, (usize, Option<PlabicMove>)> = HashMap::new();
    let mut nodes: Vec<Vec<u32>> = Vec::new();
    let code = start.canonical_code(false);
    if goals.contains(&code) {
        return Ok(Vec::new());
    }
    seen.insert(code.clone(), (usize::MAX, None));
    nodes.push(code);
    let mut queue = VecDeque::from([(0usize, start, 0usize)]);
    while let Some((idx, g, depth)) = queue.pop_front() {
        if budget.depth.is_some_and(|cap| depth >= cap) {
            continue;
        }
        for m in enumerate_moves_with(&g, &opts) {
            if !in_site(&g, &m) {
                continue;
            }
            let next = apply_move(&g, &m)?;
            let c = next.canonical_code(false);
            if seen.contains_key(&c) {
                continue;
            }
            seen.insert(c.clone(), (idx, Some(m)));
            nodes.push(c.clone());
            if goals.contains(&c) {
                let mut path = Vec::new();
                let mut cur = c;
                while let Some(&(parent, Some(mv))) = seen.get(&cur) {
                    path.push(mv);
                    cur = nodes[parent].clone();
                }
                path.reverse();
                return Ok(path);
            }
            if nodes.len() >= budget.states {
                return Err(PlabicError::SiteNotFound);
            }
            queue.push_back((nodes.len() - 1, next, depth + 1));
        }
    }
    Err(PlabicError::SiteNotFound)
}
