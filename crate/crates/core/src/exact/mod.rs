//! Exact rational and integer linear algebra.

mod integer;
mod lattice;
mod matrix;
mod rational;
mod subspace;

pub use integer::{hermite_normal_form, integer_kernel, smith_normal_form, IntMatrix, SmithForm};
pub use lattice::{quotient_projection, IntegerLattice};
pub use matrix::RationalMatrix;
pub use rational::{
    dot, format_rational, int, is_zero_vec, parse_rational, parse_rational_vec, primitive,
    primitive_int, q, qr, to_int_vec, to_rational_vec, Rational,
};
pub use subspace::{is_generic_wrt, GenericityCertificate, Subspace};
