//! Rational polyhedral cones and polyhedra.

mod cone;
mod dd;
mod increasing;
mod polyhedron;

pub use cone::{Cone, HRep, VRep};
pub use increasing::{
    is_increasing, lex_tail_test, sampled_tail_test, slice_dims, tangent_recursion,
    tangent_recursion_increasing,
};
pub use polyhedron::Polyhedron;
