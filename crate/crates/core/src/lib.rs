//! Exact combinatorics of split tropical graphs.
//!
//! The crate is layered: [`exact`] provides rational and integer linear
//! algebra, [`cone`] polyhedral cones and polyhedra, [`complex`] polyhedral
//! decompositions with their dual complexes, [`graph`] tropical graphs,
//! [`split`] quasi-split graphs and the cone condition, [`symmetry`] tropical
//! symmetry groups and [`potential`] Novikov series.

pub mod complex;
pub mod cone;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod graph;
pub mod json;
pub mod potential;
pub mod split;
pub mod symmetry;

pub use error::{Error, Result};
