//! Tropical symmetry groups as kernels of torus homomorphisms, described by
//! their integer relation matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::Decomposition;
use crate::error::{invalid, Error, Result};
use crate::exact::{
    integer_kernel, primitive, smith_normal_form, to_rational_vec, IntMatrix, IntegerLattice, Rational,
    RationalMatrix,
};
use crate::graph::{split_edges, TropicalGraph};
use crate::split::{is_rigid_split, QuasiSplitGraph, RelativeCone};

/// Kernel of `(g, z) -> (g(plus) g(minus)^{-1} z_e^{-T(e)})_e`: `g(v)` runs
/// over the subtorus of `P(v)` and one `z_e` per constrained edge.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    pub complex_dimension: usize,
    /// Order of the component group.
    pub torsion_order: BigInt,
    /// Invariant factors of the relation matrix exceeding one.
    pub invariant_factors: Vec<BigInt>,
    /// Exponents of the identity component: the integer kernel of the relations.
    pub exponent_lattice: IntegerLattice,
    pub variables: Vec<String>,
    pub relations: IntMatrix,
}

/// Vertex exponent blocks and edge variables of a relation matrix.
struct Layout {
    vertex_basis: BTreeMap<String, (usize, Vec<Vec<BigInt>>)>,
    edge_var: BTreeMap<String, usize>,
    names: Vec<String>,
}

fn build(
    g: &TropicalGraph,
    dec: &Decomposition,
    vertices: &[String],
    edges: &[(String, String, String, Vec<BigInt>)],
) -> Result<(SymmetryGroup, Layout)> {
    let n = dec.ambient_dim();
    let mut layout = Layout { vertex_basis: BTreeMap::new(), edge_var: BTreeMap::new(), names: Vec::new() };
    for vid in vertices {
        let v = g.vertex(vid)?;
        let lat = dec.normal_space(&v.polytope)?;
        if lat.rank() == 0 {
            continue;
        }
        let start = layout.names.len();
        for k in 0..lat.rank() {
            layout.names.push(format!("g[{vid}].{k}"));
        }
        layout.vertex_basis.insert(vid.clone(), (start, lat.basis().to_vec()));
    }
    for (id, _, _, _) in edges {
        layout.edge_var.insert(id.clone(), layout.names.len());
        layout.names.push(format!("z[{id}]"));
    }
    let nvars = layout.names.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (id, plus, minus, dir) in edges {
        let cell = g.edge_cell(dec, g.edge(id).ok_or_else(|| Error::Invalid(format!("unknown edge {id:?}")))?)?;
        if !dec.normal_space(cell)?.contains(dir) {
            return invalid(format!("direction of {id:?} is not in the normal lattice of {cell:?}"));
        }
        for i in 0..n {
            let mut r = vec![BigInt::zero(); nvars];
            for (v, sign) in [(plus, 1i64), (minus, -1i64)] {
                if let Some((start, basis)) = layout.vertex_basis.get(v) {
                    for (k, b) in basis.iter().enumerate() {
                        r[start + k] += &b[i] * sign;
                    }
                }
            }
            r[layout.edge_var[id]] -= &dir[i];
            rows.push(r);
        }
    }
    let m = IntMatrix::from_rows(nvars, &rows)?;
    let snf = smith_normal_form(&m);
    let factors = snf.invariant_factors();
    let torsion_order = factors.iter().fold(BigInt::one(), |a, b| a * b);
    let invariant_factors = factors.into_iter().filter(|f| !f.is_one()).collect();
    let kernel = if nvars == 0 { Vec::new() } else { integer_kernel(&m) };
    let group = SymmetryGroup {
        complex_dimension: nvars - snf.rank(),
        torsion_order,
        invariant_factors,
        exponent_lattice: IntegerLattice::new(nvars, kernel)?,
        variables: layout.names.clone(),
        relations: m,
    };
    Ok((group, layout))
}

fn constrained_edges(
    g: &TropicalGraph,
    skip: &BTreeSet<String>,
    overrides: &BTreeMap<String, Vec<BigInt>>,
    within: Option<&BTreeSet<String>>,
) -> Result<Vec<(String, String, String, Vec<BigInt>)>> {
    let mut out = Vec::new();
    for e in g.tropical_edges() {
        if skip.contains(&e.id) {
            continue;
        }
        if let Some(w) = within {
            if !w.contains(&e.plus) || !w.contains(&e.minus) {
                continue;
            }
        }
        let dir = overrides
            .get(&e.id)
            .cloned()
            .or_else(|| e.direction.clone())
            .ok_or_else(|| Error::Invalid(format!("tropical edge {:?} has no direction", e.id)))?;
        out.push((e.id.clone(), e.plus.clone(), e.minus.clone(), dir));
    }
    Ok(out)
}

/// Symmetry group of a tropical graph. Unframed: edges whose cell is in the
/// split set are unconstrained. Framed: every tropical edge is constrained.
/// Non-tropical edges never impose relations.
pub fn symmetry_group(g: &TropicalGraph, dec: &Decomposition, framed: bool) -> Result<SymmetryGroup> {
    let skip: BTreeSet<String> = if framed { BTreeSet::new() } else { split_edges(g, dec)?.into_iter().collect() };
    let verts: Vec<String> = g.vertices().iter().map(|v| v.id.clone()).collect();
    Ok(build(g, dec, &verts, &constrained_edges(g, &skip, &BTreeMap::new(), None)?)?.0)
}

/// Group of the split graph of `q`, with the split edges left free.
pub fn unframed_symmetry(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<SymmetryGroup> {
    let verts: Vec<String> = q.top.vertices().iter().map(|v| v.id.clone()).collect();
    let edges = constrained_edges(&q.top, &q.split_set(), &BTreeMap::new(), None)?;
    Ok(build(&q.top, dec, &verts, &edges)?.0)
}

/// Group of the split graph of `q` with the split edges constrained by their
/// base directions.
pub fn framed_symmetry(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<SymmetryGroup> {
    let verts: Vec<String> = q.top.vertices().iter().map(|v| v.id.clone()).collect();
    let edges = constrained_edges(&q.top, &BTreeSet::new(), &q.split_directions, None)?;
    Ok(build(&q.top, dec, &verts, &edges)?.0)
}

/// Order of the framed symmetry group of a rigid split graph.
pub fn multiplicity(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<BigInt> {
    if !is_rigid_split(q, dec)? {
        return Err(Error::Precondition("split graph is not rigid".into()));
    }
    let g = framed_symmetry(q, dec)?;
    if g.complex_dimension > 0 {
        return Err(Error::Precondition("non-rigid: group infinite".into()));
    }
    Ok(g.torsion_order)
}

/// Unframed groups of the connected components of the split graph with its
/// split edges removed.
pub fn component_splitting(q: &QuasiSplitGraph, dec: &Decomposition) -> Result<Vec<(Vec<String>, SymmetryGroup)>> {
    let split = q.split_set();
    let mut out = Vec::new();
    for comp in q.top.components_without(&split) {
        let within: BTreeSet<String> = comp.iter().cloned().collect();
        let edges = constrained_edges(&q.top, &split, &BTreeMap::new(), Some(&within))?;
        out.push((comp.clone(), build(&q.top, dec, &comp, &edges)?.0));
    }
    Ok(out)
}

/// Expresses a relative vertex position `t` as a real point of the unframed
/// exponent space (vertex coordinates in the lattice bases, edge multipliers
/// from `t(plus) - t(minus) = z_e T(e)`). Returns `None` when `t` is not of
/// that form, which would contradict the one-parameter subgroup it induces.
pub fn lift_relative_position(
    q: &QuasiSplitGraph,
    dec: &Decomposition,
    rel: &RelativeCone,
    t: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    let verts: Vec<String> = q.top.vertices().iter().map(|v| v.id.clone()).collect();
    let edges = constrained_edges(&q.top, &q.split_set(), &BTreeMap::new(), None)?;
    let (group, layout) = build(&q.top, dec, &verts, &edges)?;
    let n = dec.ambient_dim();
    let mut x = vec![Rational::zero(); group.variables.len()];
    for vid in &verts {
        let tv = rel.block(t, vid).expect("vertex of the split graph");
        match layout.vertex_basis.get(vid) {
            None => {
                if tv.iter().any(|c| !c.is_zero()) {
                    return Ok(None);
                }
            }
            Some((start, basis)) => {
                let cols: Vec<Vec<Rational>> = basis.iter().map(|b| to_rational_vec(b)).collect();
                let Some(c) = RationalMatrix::from_columns(n, &cols)?.solve(tv)? else {
                    return Ok(None);
                };
                for (k, ck) in c.into_iter().enumerate() {
                    x[start + k] = ck;
                }
            }
        }
    }
    for (id, plus, minus, dir) in &edges {
        let d: Vec<Rational> = rel
            .block(t, plus)
            .expect("vertex")
            .iter()
            .zip(rel.block(t, minus).expect("vertex"))
            .map(|(a, b)| a - b)
            .collect();
        let col = RationalMatrix::from_columns(n, &[to_rational_vec(dir)])?;
        let Some(z) = col.solve(&d)? else { return Ok(None) };
        x[layout.edge_var[id]] = z[0].clone();
    }
    Ok(Some(primitive(&x)))
}
