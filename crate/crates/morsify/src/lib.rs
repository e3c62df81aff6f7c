pub mod acceptance;
pub mod agquiver;
pub mod braid;
pub mod divide;
pub mod gallery;
pub mod link;
pub(crate) mod map;
pub mod plabic;
pub mod quiver;
pub mod search;
