use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::Decomposition;
use crate::cone::Cone;
use crate::error::{invalid, Error, Result};
use crate::exact::{int, quotient_projection, Rational, RationalMatrix, Subspace};
use crate::graph::{is_rigid, split_edges, validate_collapse, EdgeKind, TropicalGraph};

/// A collapse `kappa: top -> base` that is a tropical edge collapse away from
/// the split edges of `base`, with an ordering of those split edges.
#[derive(Clone, Debug)]
pub struct QuasiSplitGraph {
    pub base: TropicalGraph,
    pub top: TropicalGraph,
    pub kappa: BTreeMap<String, String>,
    pub split_order: Vec<String>,
    /// Directions of the split edges, taken from the base graph.
    pub split_directions: BTreeMap<String, Vec<BigInt>>,
}

impl QuasiSplitGraph {
    /// Validates the pair. The collapse map is `kappa` when given, otherwise
    /// the one stored on `top`. The split order is the one stored on `base`
    /// (or on `top`), else graph order.
    pub fn new(
        base: TropicalGraph,
        top: TropicalGraph,
        kappa: Option<BTreeMap<String, String>>,
        dec: &Decomposition,
    ) -> Result<Self> {
        let kappa = match kappa {
            Some(k) => k,
            None => top
                .collapse
                .as_ref()
                .map(|c| c.vertex_map.clone())
                .ok_or_else(|| Error::Invalid("the split graph carries no collapse map".into()))?,
        };
        base.validate(dec)?;
        let mut base_for_order = base.clone();
        if base_for_order.split_order.is_none() {
            base_for_order.split_order = top.split_order.clone();
        }
        let split_order = split_edges(&base_for_order, dec)?;
        let split: BTreeSet<String> = split_order.iter().cloned().collect();
        for id in &split_order {
            match top.edge(id) {
                Some(e) if e.kind == EdgeKind::Tropical => {}
                _ => return invalid(format!("split edge {id:?} is missing from the split graph")),
            }
        }
        top.validate_except(dec, &split)?;
        let report = validate_collapse(&top, &base, &kappa, dec, &split)?;
        if !report.valid {
            return invalid(format!("not a quasi-split graph: {}", report.diagnostics.join("; ")));
        }
        let split_directions = split_order
            .iter()
            .map(|id| (id.clone(), base.edge(id).and_then(|e| e.direction.clone()).expect("validated")))
            .collect();
        Ok(QuasiSplitGraph { base, top, kappa, split_order, split_directions })
    }

    pub fn split_set(&self) -> BTreeSet<String> {
        self.split_order.iter().cloned().collect()
    }

    pub fn num_split(&self) -> usize {
        self.split_order.len()
    }

    /// `|Edge_s| (dim t - 1)`.
    pub fn expected_dim(&self, dec: &Decomposition) -> usize {
        self.num_split() * (dec.ambient_dim() - 1)
    }
}

/// Cone of relative vertex positions, one block of `n` coordinates per vertex
/// of the split graph (in its vertex order).
#[derive(Clone, Debug)]
pub struct RelativeCone {
    pub cone: Cone,
    pub vertex_order: Vec<String>,
    pub n: usize,
}

impl RelativeCone {
    pub fn block<'a>(&self, x: &'a [Rational], vertex: &str) -> Option<&'a [Rational]> {
        let i = self.vertex_order.iter().position(|v| v == vertex)?;
        Some(&x[i * self.n..(i + 1) * self.n])
    }
}

fn lift_rows(rows: &[Vec<Rational>], block: usize, n: usize, total: usize) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|a| {
            let mut r = vec![Rational::zero(); total];
            r[block * n..(block + 1) * n].clone_from_slice(a);
            r
        })
        .collect()
}

fn diff_row(a: &[Rational], p: usize, m: usize, n: usize, total: usize) -> Vec<Rational> {
    let mut r = vec![Rational::zero(); total];
    for k in 0..n {
        r[p * n + k] += &a[k];
        r[m * n + k] -= &a[k];
    }
    r
}

/// `t(v) in Cone(kappa, v)` for every vertex, `t(plus) - t(minus)` in
/// `R_{>=0} T(e)` on collapsed tropical edges and in `R T(e)` on retained
/// non-split ones. Split edges impose nothing.
pub fn relative_position_cone(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<RelativeCone> {
    let n = dec.ambient_dim();
    let verts = q.top.vertices();
    let total = n * verts.len();
    let mut ineqs = Vec::new();
    let mut eqs = Vec::new();
    for (i, v) in verts.iter().enumerate() {
        let target = &q.base.vertex(&q.kappa[&v.id])?.polytope;
        let c = dec.cone_kappa_v(&v.polytope, target)?;
        ineqs.extend(lift_rows(c.inequalities(), i, n, total));
        eqs.extend(lift_rows(c.equalities(), i, n, total));
    }
    let split = q.split_set();
    for e in q.top.tropical_edges() {
        if split.contains(&e.id) {
            continue;
        }
        let dir: Vec<Rational> = e.direction.as_ref().expect("validated").iter().map(int).collect();
        let (p, m) = (q.top.vertex_index(&e.plus)?, q.top.vertex_index(&e.minus)?);
        for l in Subspace::annihilator_of(n, &[dir.clone()])?.basis() {
            eqs.push(diff_row(l, p, m, n, total));
        }
        if q.base.edge(&e.id).is_none() {
            ineqs.push(diff_row(&dir, p, m, n, total));
        }
    }
    Ok(RelativeCone {
        cone: Cone::from_h(total, ineqs, eqs)?,
        vertex_order: verts.iter().map(|v| v.id.clone()).collect(),
        n,
    })
}

/// Coordinates on `t / <T(e)>` for each split edge: the first `n - 1` rows of
/// a unimodular matrix sending the primitive direction to the last basis vector.
#[derive(Clone, Debug)]
pub struct DeformationSpace {
    pub n: usize,
    pub edges: Vec<String>,
    pub projections: Vec<RationalMatrix>,
}

impl DeformationSpace {
    pub fn new(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<Self> {
        let n = dec.ambient_dim();
        let mut projections = Vec::new();
        for id in &q.split_order {
            let w = quotient_projection(&q.split_directions[id])?;
            let rows: Vec<Vec<Rational>> = (0..n - 1).map(|i| w.row(i).iter().map(int).collect()).collect();
            projections.push(RationalMatrix::from_rows(n, &rows)?);
        }
        Ok(DeformationSpace { n, edges: q.split_order.clone(), projections })
    }

    /// Total dimension `N (n - 1)`.
    pub fn dim(&self) -> usize {
        self.edges.len() * (self.n - 1)
    }

    /// `(pi_e(eta))_e` concatenated.
    pub fn project(&self, eta: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        self.projections.iter().map(|p| p.apply(eta)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub space: DeformationSpace,
    pub relative: RelativeCone,
    /// `Diff`, from stacked vertex positions to the deformation space.
    pub diff: RationalMatrix,
    pub disc: Cone,
}

/// `Diff(t) = (pi_e(t(plus) - t(minus)))_e` and its image of the relative cone.
pub fn discrepancy(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<Discrepancy> {
    let relative = relative_position_cone(q, dec)?;
    let space = DeformationSpace::new(q, dec)?;
    let n = dec.ambient_dim();
    let total = relative.cone.ambient_dim();
    let mut rows = Vec::new();
    for (id, proj) in q.split_order.iter().zip(&space.projections) {
        let e = q.top.edge(id).expect("validated");
        let (p, m) = (q.top.vertex_index(&e.plus)?, q.top.vertex_index(&e.minus)?);
        for r in proj.rows() {
            rows.push(diff_row(&r, p, m, n, total));
        }
    }
    let diff = RationalMatrix::from_rows(total, &rows)?;
    let disc = relative.cone.linear_image(&diff)?;
    Ok(Discrepancy { space, relative, diff, disc })
}

/// Base graph rigid and the relative cone of the expected dimension.
pub fn is_rigid_split(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<bool> {
    if !is_rigid(&q.base, dec)? {
        return Ok(false);
    }
    Ok(relative_position_cone(q, dec)?.cone.dim() == q.expected_dim(dec))
}

/// `(i_br + 2 |Edge_s| (dim t - 1), i_br)`.
pub fn index_shift(num_split: usize, dim_t: usize, i_br: i64) -> (i64, i64) {
    let shift = 2 * (num_split * dim_t.saturating_sub(1)) as i64;
    (i_br + shift, i_br)
}
