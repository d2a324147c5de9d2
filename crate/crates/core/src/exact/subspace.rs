use num_traits::Zero;

use super::matrix::RationalMatrix;
use super::rational::{primitive, Rational};
use crate::error::{dim_err, invalid, Result};

/// Rational linear subspace of `Q^n`, stored as the reduced row echelon basis
/// of its span, so equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, gens: &[Vec<Rational>]) -> Result<Self> {
        let m = RationalMatrix::from_rows(ambient_dim, gens)?;
        Ok(Subspace { ambient_dim, basis: m.row_space() })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: RationalMatrix::identity(ambient_dim).rows() }
    }

    /// `{x : a . x = 0 for every row a}`.
    pub fn annihilator_of(ambient_dim: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let k = RationalMatrix::from_rows(ambient_dim, rows)?.kernel();
        Self::span(ambient_dim, &k)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis rescaled to primitive integer vectors.
    pub fn integral_basis(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|b| primitive(b)).collect()
    }

    pub fn is_proper(&self) -> bool {
        self.dim() < self.ambient_dim
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        RationalMatrix::from_rows(self.ambient_dim, &rows).expect("width").rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Linear equations cutting out the subspace (a basis of its annihilator).
    pub fn equations(&self) -> Vec<Vec<Rational>> {
        if self.basis.is_empty() {
            return RationalMatrix::identity(self.ambient_dim).rows();
        }
        RationalMatrix::from_rows(self.ambient_dim, &self.basis).expect("width").kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return dim_err("intersecting subspaces of different ambient spaces");
        }
        let mut eqs = self.equations();
        eqs.extend(other.equations());
        Self::annihilator_of(self.ambient_dim, &eqs)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return dim_err("adding subspaces of different ambient spaces");
        }
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &gens)
    }

    /// Image under `m` (an `m.nrows() x ambient_dim` matrix).
    pub fn image(&self, m: &RationalMatrix) -> Result<Subspace> {
        let gens = self.basis.iter().map(|b| m.apply(b)).collect::<Result<Vec<_>>>()?;
        Self::span(m.nrows(), &gens)
    }
}

/// Outcome of an effective genericity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityCertificate {
    pub generic: bool,
    /// Indices into the tested family of the subspaces containing the vector.
    pub violations: Vec<usize>,
    pub family_size: usize,
}

/// Whether `v` avoids every subspace of a finite family of proper subspaces.
pub fn is_generic_wrt(v: &[Rational], subspaces: &[Subspace]) -> Result<GenericityCertificate> {
    let mut violations = Vec::new();
    for (i, s) in subspaces.iter().enumerate() {
        if s.ambient_dim() != v.len() {
            return dim_err("subspace and vector live in different spaces");
        }
        if !s.is_proper() {
            return invalid(format!("subspace {i} of the genericity family is the whole space"));
        }
        if s.contains(v) {
            violations.push(i);
        }
    }
    Ok(GenericityCertificate { generic: violations.is_empty(), violations, family_size: subspaces.len() })
}
