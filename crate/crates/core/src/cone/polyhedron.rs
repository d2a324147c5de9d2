use num_traits::{One, Signed, Zero};

use super::cone::Cone;
use crate::error::{dim_err, Result};
use crate::exact::{dot, is_zero_vec, Rational, Subspace};

/// Affine polyhedron in `Q^n`, stored as its homogenization: the cone of
/// `(x, s)` with `s >= 0` and `b s - a.x >= 0` for each constraint `a.x <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    dim: usize,
    cone: Cone,
}

fn homog(a: &[Rational], b: &Rational) -> Vec<Rational> {
    let mut r: Vec<Rational> = a.iter().map(|x| -x.clone()).collect();
    r.push(b.clone());
    r
}

fn lift(v: &[Rational], s: Rational) -> Vec<Rational> {
    let mut r = v.to_vec();
    r.push(s);
    r
}

impl Polyhedron {
    /// `{x : a.x <= b for (a, b) in ineqs, a.x = b for (a, b) in eqs}`.
    pub fn from_h(n: usize, ineqs: &[(Vec<Rational>, Rational)], eqs: &[(Vec<Rational>, Rational)]) -> Result<Self> {
        if ineqs.iter().chain(eqs).any(|(a, _)| a.len() != n) {
            return dim_err("constraint of wrong length");
        }
        let mut rows: Vec<Vec<Rational>> = ineqs.iter().map(|(a, b)| homog(a, b)).collect();
        let mut s = vec![Rational::zero(); n + 1];
        s[n] = Rational::one();
        rows.push(s);
        let eq_rows = eqs.iter().map(|(a, b)| homog(a, b)).collect();
        Ok(Polyhedron { dim: n, cone: Cone::from_h(n + 1, rows, eq_rows)? })
    }

    /// Convex hull of `points` plus the cone on `rays` plus the span of `lineality`.
    pub fn from_v(
        n: usize,
        points: &[Vec<Rational>],
        rays: &[Vec<Rational>],
        lineality: &[Vec<Rational>],
    ) -> Result<Self> {
        if points.iter().chain(rays).chain(lineality).any(|v| v.len() != n) {
            return dim_err("generator of wrong length");
        }
        let mut gens: Vec<Vec<Rational>> = points.iter().map(|p| lift(p, Rational::one())).collect();
        if points.is_empty() {
            // No points: the empty polyhedron regardless of directions.
            return Ok(Polyhedron { dim: n, cone: Cone::zero(n + 1) });
        }
        gens.extend(rays.iter().map(|r| lift(r, Rational::zero())));
        let lin = lineality.iter().map(|r| lift(r, Rational::zero())).collect();
        Ok(Polyhedron { dim: n, cone: Cone::from_v(n + 1, gens, lin)? })
    }

    pub fn point(p: &[Rational]) -> Self {
        Self::from_v(p.len(), &[p.to_vec()], &[], &[]).expect("consistent dims")
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn homogenization(&self) -> &Cone {
        &self.cone
    }

    pub fn is_empty(&self) -> bool {
        !self.cone.rays().iter().any(|r| r[self.dim].is_positive())
    }

    /// Affine dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.cone.dim() - 1)
    }

    /// Vertices (minimal face representatives when there is lineality).
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        let n = self.dim;
        let mut out: Vec<Vec<Rational>> = self
            .cone
            .rays()
            .iter()
            .filter(|r| r[n].is_positive())
            .map(|r| r[..n].iter().map(|x| x / &r[n]).collect())
            .collect();
        out.sort();
        out
    }

    pub fn rays(&self) -> Vec<Vec<Rational>> {
        if self.is_empty() {
            return Vec::new();
        }
        let n = self.dim;
        self.cone.rays().iter().filter(|r| r[n].is_zero()).map(|r| r[..n].to_vec()).collect()
    }

    pub fn lineality(&self) -> Vec<Vec<Rational>> {
        if self.is_empty() {
            return Vec::new();
        }
        self.cone.lineality().iter().map(|r| r[..self.dim].to_vec()).collect()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays().is_empty() && self.lineality().is_empty()
    }

    /// Irredundant inequalities `a.x <= b`.
    pub fn inequalities(&self) -> Vec<(Vec<Rational>, Rational)> {
        let n = self.dim;
        self.cone
            .inequalities()
            .iter()
            .filter(|r| !is_zero_vec(&r[..n]))
            .map(|r| (r[..n].iter().map(|x| -x.clone()).collect(), r[n].clone()))
            .collect()
    }

    /// Affine equations `a.x = b` of the affine hull.
    pub fn equalities(&self) -> Vec<(Vec<Rational>, Rational)> {
        let n = self.dim;
        self.cone
            .equalities()
            .iter()
            .map(|r| (r[..n].iter().map(|x| -x.clone()).collect(), r[n].clone()))
            .collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && !self.is_empty() && self.cone.contains(&lift(x, Rational::one()))
    }

    /// Contained in `other` as point sets.
    pub fn is_subset_of(&self, other: &Polyhedron) -> bool {
        self.is_empty() || other.cone.contains_cone(&self.cone)
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim != other.dim {
            return dim_err("intersecting polyhedra in different spaces");
        }
        Ok(Polyhedron { dim: self.dim, cone: self.cone.intersect(&other.cone)? })
    }

    /// Point in the relative interior, `None` when empty.
    pub fn relative_interior_point(&self) -> Option<Vec<Rational>> {
        if self.is_empty() {
            return None;
        }
        let p = self.cone.relative_interior_point().ok()?;
        let s = p[self.dim].clone();
        Some(p[..self.dim].iter().map(|x| x / &s).collect())
    }

    /// Linear space parallel to the affine hull.
    pub fn direction_space(&self) -> Subspace {
        let n = self.dim;
        let verts = self.vertices();
        let mut gens: Vec<Vec<Rational>> = Vec::new();
        if let Some(v0) = verts.first() {
            gens.extend(verts[1..].iter().map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect()));
        }
        gens.extend(self.rays());
        gens.extend(self.lineality());
        Subspace::span(n, &gens).expect("width")
    }

    /// Whether `self` is a nonempty face of `other`.
    pub fn is_face_of(&self, other: &Polyhedron) -> bool {
        if self.is_empty() || !self.is_subset_of(other) {
            return false;
        }
        let p = self.relative_interior_point().expect("nonempty");
        let tight: Vec<(Vec<Rational>, Rational)> =
            other.inequalities().into_iter().filter(|(a, b)| dot(a, &p) == *b).collect();
        let mut eqs = other.equalities();
        eqs.extend(tight);
        let face = Polyhedron::from_h(self.dim, &other.inequalities(), &eqs).expect("dims");
        face == *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qr};

    fn qs(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    fn square() -> Polyhedron {
        Polyhedron::from_h(
            2,
            &[(qs(&[1, 0]), q(1)), (qs(&[-1, 0]), q(0)), (qs(&[0, 1]), q(1)), (qs(&[0, -1]), q(0))],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn square_vertices() {
        let s = square();
        assert_eq!(s.vertices(), vec![qs(&[0, 0]), qs(&[0, 1]), qs(&[1, 0]), qs(&[1, 1])]);
        assert_eq!(s.dim(), Some(2));
        assert_eq!(s.inequalities().len(), 4);
        assert_eq!(s.relative_interior_point().unwrap(), vec![qr(1, 2), qr(1, 2)]);
        assert!(s.is_bounded());
    }

    #[test]
    fn empty_and_faces() {
        let e = Polyhedron::from_h(1, &[(qs(&[1]), q(0)), (qs(&[-1]), q(-1))], &[]).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.dim(), None);
        let s = square();
        let edge = Polyhedron::from_v(2, &[qs(&[1, 0]), qs(&[1, 1])], &[], &[]).unwrap();
        assert!(edge.is_face_of(&s));
        let diag = Polyhedron::from_v(2, &[qs(&[0, 0]), qs(&[1, 1])], &[], &[]).unwrap();
        assert!(!diag.is_face_of(&s));
        assert!(s.is_face_of(&s));
    }

    #[test]
    fn unbounded_quadrant() {
        let p = Polyhedron::from_h(2, &[(qs(&[-1, 0]), q(0)), (qs(&[0, -1]), q(0))], &[]).unwrap();
        assert_eq!(p.vertices(), vec![qs(&[0, 0])]);
        assert_eq!(p.rays(), vec![qs(&[0, 1]), qs(&[1, 0])]);
        assert_eq!(p.inequalities().len(), 2);
    }
}
