//! Polyhedral decompositions of the dual of the torus Lie algebra, their dual
//! complexes, and the multiple-cut generator.

mod decomposition;
mod format;
mod toric_cut;

pub use decomposition::{Cell, Decomposition, DecompositionSpec};
pub use format::{decomposition_from_json, decomposition_to_json};
pub use toric_cut::{is_tropical_fiber, toric_cut, ToricCut};
