use num_traits::Zero;

use super::tropical::TropicalGraph;
use crate::complex::Decomposition;
use crate::cone::Polyhedron;
use crate::error::{invalid, Error, Result};
use crate::exact::{dot, int, Rational, Subspace};

/// Strict inequality `a.x < b` on the stacked vertex positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictConstraint {
    pub label: String,
    pub a: Vec<Rational>,
    pub b: Rational,
}

/// Closed polyhedron of vertex positions together with the strict conditions
/// (open dual cells and positive edge multipliers).
#[derive(Clone, Debug)]
pub struct VertexPositions {
    pub vertex_order: Vec<String>,
    /// `dim t` per vertex; the ambient space has `n * |V|` coordinates.
    pub n: usize,
    pub closed: Polyhedron,
    pub strict: Vec<StrictConstraint>,
    pub weakly_realizable: bool,
    pub strictly_realizable: bool,
    /// Satisfies every strict constraint when strictly realizable.
    pub witness: Option<Vec<Rational>>,
    pub dim: Option<usize>,
}

impl VertexPositions {
    /// Position of one vertex inside a stacked point.
    pub fn position<'a>(&self, point: &'a [Rational], vertex: &str) -> Option<&'a [Rational]> {
        let i = self.vertex_order.iter().position(|v| v == vertex)?;
        Some(&point[i * self.n..(i + 1) * self.n])
    }
}

fn lift(n: usize, total: usize, parts: &[(usize, &[Rational], bool)]) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); total];
    for &(block, a, negate) in parts {
        for (k, x) in a.iter().enumerate() {
            if negate {
                row[block * n + k] -= x;
            } else {
                row[block * n + k] += x;
            }
        }
    }
    row
}

/// Positions `T(v)` in the dual cells with `T(plus) - T(minus)` a nonnegative
/// multiple of the direction of every tropical edge, plus strictness data.
pub fn vertex_positions(g: &TropicalGraph, dec: &Decomposition) -> Result<VertexPositions> {
    let n = dec.ambient_dim();
    let nv = g.vertices().len();
    let total = n * nv;
    let mut ineqs = Vec::new();
    let mut eqs = Vec::new();
    let mut strict = Vec::new();
    for (i, v) in g.vertices().iter().enumerate() {
        let d = dec.dual(&v.polytope).map_err(|_| Error::Invalid(format!("missing dual cell for {:?}", v.polytope)))?;
        for (a, b) in d.equalities() {
            eqs.push((lift(n, total, &[(i, &a, false)]), b));
        }
        for (a, b) in d.inequalities() {
            let row = lift(n, total, &[(i, &a, false)]);
            strict.push(StrictConstraint { label: format!("interior of dual cell at {}", v.id), a: row.clone(), b: b.clone() });
            ineqs.push((row, b));
        }
    }
    for e in g.tropical_edges() {
        let dir: Vec<Rational> = e
            .direction
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("tropical edge {:?} has no direction", e.id)))?
            .iter()
            .map(int)
            .collect();
        let (p, m) = (g.vertex_index(&e.plus)?, g.vertex_index(&e.minus)?);
        for l in Subspace::annihilator_of(n, &[dir.clone()])?.basis() {
            eqs.push((lift(n, total, &[(p, l, false), (m, l, true)]), Rational::zero()));
        }
        let neg: Vec<Rational> = dir.iter().map(|x| -x.clone()).collect();
        let row = lift(n, total, &[(p, &neg, false), (m, &neg, true)]);
        strict.push(StrictConstraint { label: format!("positive length of edge {}", e.id), a: row.clone(), b: Rational::zero() });
        ineqs.push((row, Rational::zero()));
    }
    let closed = Polyhedron::from_h(total, &ineqs, &eqs)?;
    let weakly = !closed.is_empty();
    let point = closed.relative_interior_point();
    let strictly = point.as_ref().is_some_and(|x| strict.iter().all(|c| dot(&c.a, x) < c.b));
    Ok(VertexPositions {
        vertex_order: g.vertices().iter().map(|v| v.id.clone()).collect(),
        n,
        dim: closed.dim(),
        closed,
        strict,
        weakly_realizable: weakly,
        strictly_realizable: strictly,
        witness: if strictly { point } else { None },
    })
}

/// Vertex positions are unique.
pub fn is_rigid(g: &TropicalGraph, dec: &Decomposition) -> Result<bool> {
    let w = vertex_positions(g, dec)?;
    if !w.strictly_realizable {
        return invalid("graph is not realizable");
    }
    Ok(w.dim == Some(0))
}

