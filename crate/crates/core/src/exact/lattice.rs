use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::integer::{hermite_normal_form, integer_kernel, IntMatrix};
use super::matrix::RationalMatrix;
use super::rational::{primitive_int, to_rational_vec};
use crate::error::{dim_err, invalid, Result};

/// Sublattice of `Z^n` given by a linearly independent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    ambient_dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntegerLattice {
    pub fn new(ambient_dim: usize, basis: Vec<Vec<BigInt>>) -> Result<Self> {
        if basis.iter().any(|b| b.len() != ambient_dim) {
            return dim_err("lattice generator of wrong length");
        }
        let rows: Vec<_> = basis.iter().map(|b| to_rational_vec(b)).collect();
        if RationalMatrix::from_rows(ambient_dim, &rows)?.rank() != basis.len() {
            return invalid("lattice basis is linearly dependent");
        }
        Ok(IntegerLattice { ambient_dim, basis })
    }

    /// Lattice generated by arbitrary integer vectors; the basis is the
    /// nonzero part of their Hermite normal form.
    pub fn span(ambient_dim: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        if gens.iter().any(|b| b.len() != ambient_dim) {
            return dim_err("lattice generator of wrong length");
        }
        if gens.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let (h, _) = hermite_normal_form(&IntMatrix::from_rows(ambient_dim, gens)?);
        let basis = h.rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        Ok(IntegerLattice { ambient_dim, basis })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        IntegerLattice { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        IntegerLattice { ambient_dim, basis: IntMatrix::identity(ambient_dim).rows() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Largest lattice with the same rational span, in Hermite normal form.
    pub fn saturate(&self) -> IntegerLattice {
        let n = self.ambient_dim;
        if self.basis.is_empty() {
            return self.clone();
        }
        let rows: Vec<_> = self.basis.iter().map(|b| to_rational_vec(b)).collect();
        let ann = RationalMatrix::from_rows(n, &rows).expect("width").kernel();
        let basis = if ann.is_empty() {
            IntMatrix::identity(n).rows()
        } else {
            let ann: Vec<Vec<BigInt>> = ann.iter().map(|a| primitive_int(a)).collect();
            integer_kernel(&IntMatrix::from_rows(n, &ann).expect("width"))
        };
        IntegerLattice { ambient_dim: n, basis }
    }

    /// Canonical basis (Hermite normal form); equal lattices compare equal after this.
    pub fn canonical(&self) -> IntegerLattice {
        Self::span(self.ambient_dim, &self.basis).expect("consistent dims")
    }

    /// Integer coordinates of `v` in this basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        if self.basis.is_empty() {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        let cols: Vec<_> = self.basis.iter().map(|b| to_rational_vec(b)).collect();
        let m = RationalMatrix::from_columns(self.ambient_dim, &cols).ok()?;
        let x = m.solve(&to_rational_vec(v)).ok()??;
        x.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Index of this lattice in its saturation.
    pub fn index_in_saturation(&self) -> BigInt {
        let sat = self.saturate();
        let mut m = Vec::new();
        for b in &self.basis {
            m.push(sat.coordinates(b).expect("lattice lies in its saturation"));
        }
        let k = self.rank();
        IntMatrix::from_rows(k, &m).expect("square").det().expect("square").abs()
    }
}

/// For a nonzero integer vector `t`, a unimodular `W` with `W * prim(t) = e_n`
/// (last standard basis vector) built from integer row operations. The first
/// `n - 1` rows of `W` give integral coordinates on `Z^n / <t>`.
pub fn quotient_projection(t: &[BigInt]) -> Result<IntMatrix> {
    let n = t.len();
    if t.iter().all(Zero::is_zero) {
        return invalid("quotient by the zero vector");
    }
    let tr: Vec<_> = to_rational_vec(t);
    let u = primitive_int(&tr);
    let mut w = IntMatrix::identity(n);
    let mut x = u.clone();
    // Euclid on the coordinates, tracking row operations in `w`.
    loop {
        let nz: Vec<usize> = (0..n).filter(|&i| !x[i].is_zero()).collect();
        if nz.len() == 1 {
            break;
        }
        let p = *nz
            .iter()
            .min_by(|&&a, &&b| x[a].abs().cmp(&x[b].abs()).then(a.cmp(&b)))
            .expect("nonzero");
        for &i in &nz {
            if i == p {
                continue;
            }
            let f = x[i].div_floor(&x[p]);
            let d = &f * &x[p];
            x[i] -= d;
            for j in 0..n {
                let v = w.get(i, j) - &f * w.get(p, j);
                w.set(i, j, v);
            }
        }
    }
    let p = (0..n).find(|&i| !x[i].is_zero()).expect("nonzero");
    if p != n - 1 {
        for j in 0..n {
            let a = w.get(p, j).clone();
            let b = w.get(n - 1, j).clone();
            w.set(p, j, b);
            w.set(n - 1, j, a);
        }
        x.swap(p, n - 1);
    }
    if x[n - 1].is_negative() {
        for j in 0..n {
            let v = -w.get(n - 1, j).clone();
            w.set(n - 1, j, v);
        }
    }
    Ok(w)
}
