use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use super::dd::double_description;
use crate::error::{dim_err, invalid, Result};
use crate::exact::{dot, is_zero_vec, primitive, Rational, RationalMatrix, Subspace};

/// Inequalities `a.x >= 0` and equalities `a.x = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub inequalities: Vec<Vec<Rational>>,
    pub equalities: Vec<Vec<Rational>>,
}

/// Extreme rays and a lineality basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub rays: Vec<Vec<Rational>>,
    pub lineality: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug)]
enum Given {
    H(HRep),
    V(VRep),
}

/// Rational polyhedral cone. Whichever representation was supplied is kept;
/// the canonical forms of both are computed on first use and cached.
///
/// Canonical forms: lineality (resp. equalities) is the primitive integer
/// rescaling of the reduced echelon basis; rays (resp. inequalities) are
/// orthogonally projected off that subspace, made primitive and sorted.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient: usize,
    given: Given,
    v: OnceLock<VRep>,
    h: OnceLock<HRep>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.v_rep() == other.v_rep()
    }
}

impl Eq for Cone {}

fn check_len(n: usize, vs: &[Vec<Rational>]) -> Result<()> {
    if let Some(v) = vs.iter().find(|v| v.len() != n) {
        return dim_err(format!("vector of length {} in a cone in dimension {n}", v.len()));
    }
    Ok(())
}

impl Cone {
    pub fn from_h(ambient: usize, inequalities: Vec<Vec<Rational>>, equalities: Vec<Vec<Rational>>) -> Result<Self> {
        check_len(ambient, &inequalities)?;
        check_len(ambient, &equalities)?;
        Ok(Cone {
            ambient,
            given: Given::H(HRep { inequalities, equalities }),
            v: OnceLock::new(),
            h: OnceLock::new(),
        })
    }

    pub fn from_v(ambient: usize, rays: Vec<Vec<Rational>>, lineality: Vec<Vec<Rational>>) -> Result<Self> {
        check_len(ambient, &rays)?;
        check_len(ambient, &lineality)?;
        Ok(Cone {
            ambient,
            given: Given::V(VRep { rays, lineality }),
            v: OnceLock::new(),
            h: OnceLock::new(),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_v(ambient, Vec::new(), Vec::new()).expect("empty generator list")
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_h(ambient, Vec::new(), Vec::new()).expect("empty constraint list")
    }

    pub fn orthant(ambient: usize) -> Self {
        Self::from_h(ambient, RationalMatrix::identity(ambient).rows(), Vec::new()).expect("square")
    }

    /// Linear subspace viewed as a cone.
    pub fn from_subspace(s: &Subspace) -> Self {
        Self::from_v(s.ambient_dim(), Vec::new(), s.basis().to_vec()).expect("consistent dims")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Canonical generator representation.
    pub fn v_rep(&self) -> &VRep {
        self.v.get_or_init(|| {
            let (rays, lin) = match &self.given {
                Given::H(h) => double_description(self.ambient, &h.inequalities, &h.equalities),
                Given::V(_) => {
                    let h = self.h_rep();
                    double_description(self.ambient, &h.inequalities, &h.equalities)
                }
            };
            canonical_pair(self.ambient, rays, lin)
        })
    }

    /// Canonical, irredundant inequality representation.
    pub fn h_rep(&self) -> &HRep {
        self.h.get_or_init(|| {
            let gens = match &self.given {
                Given::V(v) => v.clone(),
                Given::H(_) => self.v_rep().clone(),
            };
            // Rays of the dual cone are facet normals; its lineality is the
            // space of equations.
            let (ineqs, eqs) = double_description(self.ambient, &gens.rays, &gens.lineality);
            let (inequalities, equalities) = {
                let c = canonical_pair(self.ambient, ineqs, eqs);
                (c.rays, c.lineality)
            };
            HRep { inequalities, equalities }
        })
    }

    pub fn rays(&self) -> &[Vec<Rational>] {
        &self.v_rep().rays
    }

    pub fn lineality(&self) -> &[Vec<Rational>] {
        &self.v_rep().lineality
    }

    pub fn inequalities(&self) -> &[Vec<Rational>] {
        &self.h_rep().inequalities
    }

    pub fn equalities(&self) -> &[Vec<Rational>] {
        &self.h_rep().equalities
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        let v = self.v_rep();
        let mut gens = v.rays.clone();
        gens.extend(v.lineality.iter().cloned());
        RationalMatrix::from_rows(self.ambient, &gens).expect("width").rank()
    }

    pub fn span(&self) -> Subspace {
        let v = self.v_rep();
        let mut gens = v.rays.clone();
        gens.extend(v.lineality.iter().cloned());
        Subspace::span(self.ambient, &gens).expect("width")
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn is_pointed(&self) -> bool {
        self.v_rep().lineality.is_empty()
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        if p.len() != self.ambient {
            return false;
        }
        let h = self.h_rep();
        h.equalities.iter().all(|a| dot(a, p).is_zero())
            && h.inequalities.iter().all(|a| !dot(a, p).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        let v = other.v_rep();
        v.rays.iter().all(|r| self.contains(r))
            && v.lineality.iter().all(|l| {
                self.contains(l) && self.contains(&l.iter().map(|x| -x.clone()).collect::<Vec<_>>())
            })
    }

    /// Image under `m` (a `k x ambient` matrix).
    pub fn linear_image(&self, m: &RationalMatrix) -> Result<Cone> {
        if m.ncols() != self.ambient {
            return dim_err("linear map does not accept the cone's ambient space");
        }
        let v = self.v_rep();
        let rays = v.rays.iter().map(|r| m.apply(r)).collect::<Result<Vec<_>>>()?;
        let lin = v.lineality.iter().map(|r| m.apply(r)).collect::<Result<Vec<_>>>()?;
        Cone::from_v(m.nrows(), rays, lin)
    }

    /// `{x : m x in self}` for `m` a `ambient x k` matrix.
    pub fn preimage(&self, m: &RationalMatrix) -> Result<Cone> {
        if m.nrows() != self.ambient {
            return dim_err("linear map does not land in the cone's ambient space");
        }
        let h = self.h_rep();
        let mt = m.transpose();
        let pull = |a: &Vec<Rational>| mt.apply(a);
        let ineqs = h.inequalities.iter().map(pull).collect::<Result<Vec<_>>>()?;
        let eqs = h.equalities.iter().map(pull).collect::<Result<Vec<_>>>()?;
        Cone::from_h(m.ncols(), ineqs, eqs)
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient != other.ambient {
            return dim_err("intersecting cones in different spaces");
        }
        let (a, b) = (self.h_rep(), other.h_rep());
        let mut ineqs = a.inequalities.clone();
        ineqs.extend(b.inequalities.iter().cloned());
        let mut eqs = a.equalities.clone();
        eqs.extend(b.equalities.iter().cloned());
        Cone::from_h(self.ambient, ineqs, eqs)
    }

    /// Sum of all rays plus all lineality basis vectors. Positive on every
    /// inequality that is not identically zero on the cone.
    pub fn relative_interior_point(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return invalid("the zero cone has no relative interior point");
        }
        let v = self.v_rep();
        let mut p = vec![Rational::zero(); self.ambient];
        for g in v.rays.iter().chain(&v.lineality) {
            for (x, y) in p.iter_mut().zip(g) {
                *x += y;
            }
        }
        Ok(p)
    }

    /// Tangent cone at a point `p` of the cone: keep only constraints tight at `p`.
    pub fn tangent_cone(&self, p: &[Rational]) -> Result<Cone> {
        if !self.contains(p) {
            return invalid("tangent cone at a point outside the cone");
        }
        let h = self.h_rep();
        let ineqs = h.inequalities.iter().filter(|a| dot(a, p).is_zero()).cloned().collect();
        Cone::from_h(self.ambient, ineqs, h.equalities.clone())
    }

    /// Linear spans of the facets.
    pub fn facet_spans(&self) -> Vec<Subspace> {
        let v = self.v_rep();
        self.h_rep()
            .inequalities
            .iter()
            .map(|a| {
                let mut gens: Vec<_> = v.rays.iter().filter(|r| dot(a, r).is_zero()).cloned().collect();
                gens.extend(v.lineality.iter().cloned());
                Subspace::span(self.ambient, &gens).expect("width")
            })
            .collect()
    }

    /// Cone in `R^{a+b}` that is the product of `self` and `other`.
    pub fn product(&self, other: &Cone) -> Cone {
        let (n, m) = (self.ambient, other.ambient);
        let lift = |v: &Vec<Rational>, off: usize| {
            let mut x = vec![Rational::zero(); n + m];
            x[off..off + v.len()].clone_from_slice(v);
            x
        };
        let (a, b) = (self.v_rep(), other.v_rep());
        let rays = a.rays.iter().map(|r| lift(r, 0)).chain(b.rays.iter().map(|r| lift(r, n))).collect();
        let lin = a
            .lineality
            .iter()
            .map(|r| lift(r, 0))
            .chain(b.lineality.iter().map(|r| lift(r, n)))
            .collect();
        Cone::from_v(n + m, rays, lin).expect("consistent dims")
    }
}

/// Canonical form of (rays, lineality): see the [`Cone`] docs.
fn canonical_pair(n: usize, rays: Vec<Vec<Rational>>, lin: Vec<Vec<Rational>>) -> VRep {
    let lin_basis: Vec<Vec<Rational>> = RationalMatrix::from_rows(n, &lin)
        .expect("width")
        .row_space()
        .iter()
        .map(|b| primitive(b))
        .collect();
    let mut out: Vec<Vec<Rational>> = rays
        .iter()
        .map(|r| primitive(&project_off(r, &lin_basis)))
        .filter(|r| !is_zero_vec(r))
        .collect();
    out.sort();
    out.dedup();
    VRep { rays: out, lineality: lin_basis }
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`.
fn project_off(v: &[Rational], basis: &[Vec<Rational>]) -> Vec<Rational> {
    if basis.is_empty() {
        return v.to_vec();
    }
    let k = basis.len();
    let gram: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| dot(&basis[i], &basis[j])).collect()).collect();
    let rhs: Vec<Rational> = basis.iter().map(|b| dot(b, v)).collect();
    let c = RationalMatrix::from_rows(k, &gram)
        .expect("square")
        .solve(&rhs)
        .expect("dims")
        .expect("gram matrix of a basis is invertible");
    let mut out = v.to_vec();
    for (ci, b) in c.iter().zip(basis) {
        for (x, y) in out.iter_mut().zip(b) {
            *x -= ci * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qr};

    fn qs(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn orthant_rays() {
        let c = Cone::orthant(2);
        assert_eq!(c.rays(), &[qs(&[0, 1]), qs(&[1, 0])]);
        assert!(c.lineality().is_empty());
    }

    #[test]
    fn half_plane() {
        let c = Cone::from_h(2, vec![qs(&[1, 0])], vec![]).unwrap();
        assert_eq!(c.rays(), &[qs(&[1, 0])]);
        assert_eq!(c.lineality(), &[qs(&[0, 1])]);
        let p = c.relative_interior_point().unwrap();
        assert!(p[0] > q(0));
    }

    #[test]
    fn line_with_sign() {
        let c = Cone::from_h(2, vec![qs(&[1, 0])], vec![qs(&[1, -2])]).unwrap();
        assert_eq!(c.rays(), &[qs(&[2, 1])]);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn image_and_preimage() {
        let ray = Cone::from_v(2, vec![qs(&[2, 1])], vec![]).unwrap();
        // Coordinates along (1,-1) after quotienting by (1,1): x -> (x1 - x2)/2.
        let m = RationalMatrix::from_rows(2, &[vec![qr(1, 2), qr(-1, 2)]]).unwrap();
        let img = ray.linear_image(&m).unwrap();
        assert_eq!(img.rays(), &[qs(&[1])]);
        let pr = RationalMatrix::from_i64(&[&[1, 0]]);
        let pre = Cone::zero(1).preimage(&pr).unwrap();
        assert_eq!(pre.lineality(), &[qs(&[0, 1])]);
        assert!(pre.rays().is_empty());
    }

    #[test]
    fn v_to_h_round_trip() {
        let c = Cone::from_v(3, vec![qs(&[1, 0, 0]), qs(&[0, 1, 0]), qs(&[1, 1, 0]), qs(&[0, 0, 1])], vec![]).unwrap();
        assert_eq!(c.rays().len(), 3);
        assert_eq!(c.inequalities().len(), 3);
        let back = Cone::from_h(3, c.inequalities().to_vec(), c.equalities().to_vec()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn zero_cone() {
        let z = Cone::zero(3);
        assert_eq!(z.dim(), 0);
        assert!(z.relative_interior_point().is_err());
        assert_eq!(z.equalities().len(), 3);
        let f = Cone::full(2);
        assert_eq!(f.dim(), 2);
        assert_eq!(f.lineality().len(), 2);
    }

    #[test]
    fn implicit_equality_detected() {
        let c = Cone::from_h(2, vec![qs(&[1, -1]), qs(&[-1, 1]), qs(&[1, 0])], vec![]).unwrap();
        assert_eq!(c.rays(), &[qs(&[1, 1])]);
        assert_eq!(c.equalities().len(), 1);
        assert_eq!(c.inequalities(), &[qs(&[1, 1])]);
    }
}
