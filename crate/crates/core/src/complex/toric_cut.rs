use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::decomposition::{Decomposition, DecompositionSpec};
use crate::cone::Polyhedron;
use crate::error::{dim_err, invalid, Result};
use crate::exact::{dot, int, Rational};

/// Output of [`toric_cut`]: the decomposition and the id of the inner polytope.
#[derive(Clone, Debug)]
pub struct ToricCut {
    pub decomposition: Decomposition,
    pub inner: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Inner,
    On,
    Outer,
}

fn sign_id(sig: &[Side]) -> String {
    let s: String = sig
        .iter()
        .map(|s| match s {
            Side::Inner => 'i',
            Side::On => 'c',
            Side::Outer => 'o',
        })
        .collect();
    format!("P_{s}")
}

/// Cuts the polytope `{<mu_i, x> <= c_i}` along every hyperplane
/// `<mu_i, x> = c_i - eps_i`.
///
/// Cells are indexed by a side per hyperplane (inside, on, outside). The dual
/// vertex of a full-dimensional cell is the sum of the normals whose cut it lies
/// outside of; the dual of a lower-dimensional cell is the hull of the dual
/// vertices of the full-dimensional cells containing it. The split set consists
/// of the cells that are faces of the inner polytope.
pub fn toric_cut(
    normals: &[Vec<BigInt>],
    constants: &[Rational],
    eps: &[Rational],
    lambda: &[Rational],
) -> Result<ToricCut> {
    let m = normals.len();
    let n = lambda.len();
    if m == 0 || constants.len() != m || eps.len() != m {
        return dim_err("normals, constants and epsilons must have the same nonzero length");
    }
    if normals.iter().any(|v| v.len() != n) {
        return dim_err("normal vectors must have the dimension of lambda");
    }
    if eps.iter().any(|e| !e.is_positive()) {
        return invalid("cut widths must be positive");
    }
    let mu: Vec<Vec<Rational>> = normals.iter().map(|v| v.iter().map(int).collect()).collect();
    let level: Vec<Rational> = constants.iter().zip(eps).map(|(c, e)| c - e).collect();
    for i in 0..m {
        if dot(&mu[i], lambda) >= level[i] {
            return invalid("lambda is not strictly inside the inner polytope");
        }
    }
    let outer: Vec<(Vec<Rational>, Rational)> = mu.iter().cloned().zip(constants.iter().cloned()).collect();
    let delta = Polyhedron::from_h(n, &outer, &[])?;
    if !delta.is_bounded() || delta.dim() != Some(n) {
        return invalid("the moment polytope must be bounded and full-dimensional");
    }

    let mut found: Vec<(Vec<Side>, Polyhedron)> = Vec::new();
    let total = 3usize.pow(m as u32);
    for code in 0..total {
        let mut sig = Vec::with_capacity(m);
        let mut c = code;
        for _ in 0..m {
            sig.push([Side::Inner, Side::On, Side::Outer][c % 3]);
            c /= 3;
        }
        let mut ineqs = outer.clone();
        let mut eqs = Vec::new();
        for i in 0..m {
            let neg: Vec<Rational> = mu[i].iter().map(|x| -x.clone()).collect();
            match sig[i] {
                Side::Inner => ineqs.push((mu[i].clone(), level[i].clone())),
                Side::Outer => ineqs.push((neg, -level[i].clone())),
                Side::On => eqs.push((mu[i].clone(), level[i].clone())),
            }
        }
        let p = Polyhedron::from_h(n, &ineqs, &eqs)?;
        let Some(x) = p.relative_interior_point() else { continue };
        // Cells lying inside a cut they are not labelled "on" are duplicates.
        if (0..m).any(|i| sig[i] != Side::On && dot(&mu[i], &x) == level[i]) {
            continue;
        }
        found.push((sig, p));
    }
    // Stable order: by dimension descending, then by sign code.
    found.sort_by(|a, b| {
        let da = a.1.dim().expect("nonempty");
        let db = b.1.dim().expect("nonempty");
        db.cmp(&da).then_with(|| sign_id(&a.0).cmp(&sign_id(&b.0)))
    });

    let mut spec = DecompositionSpec { ambient_dim: n, ..Default::default() };
    let top: Vec<usize> = (0..found.len()).filter(|&k| found[k].1.dim() == Some(n)).collect();
    let dual_vertex = |sig: &[Side]| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        for i in 0..m {
            if sig[i] == Side::Outer {
                for (a, b) in v.iter_mut().zip(&mu[i]) {
                    *a += b;
                }
            }
        }
        v
    };
    let refines = |q: &[Side], p: &[Side]| (0..m).all(|i| p[i] == Side::On && q[i] == Side::On || p[i] != Side::On && (q[i] == p[i] || q[i] == Side::On));
    let inner_sig = vec![Side::Inner; m];
    let inner_id = sign_id(&inner_sig);
    for (sig, p) in &found {
        let id = sign_id(sig);
        let mut rows = Vec::new();
        for (a, b) in p.equalities() {
            rows.push(a.iter().cloned().chain([b.clone()]).collect::<Vec<_>>());
            rows.push(a.iter().map(|x| -x.clone()).chain([-b]).collect());
        }
        for (a, b) in p.inequalities() {
            rows.push(a.into_iter().chain([b]).collect());
        }
        spec.polytopes.push((id.clone(), rows));
        let mut verts: Vec<Vec<Rational>> =
            top.iter().filter(|&&t| refines(sig, &found[t].0)).map(|&t| dual_vertex(&found[t].0)).collect();
        verts.sort();
        verts.dedup();
        spec.dual_cells.push((id.clone(), verts, Vec::new()));
        if refines(sig, &inner_sig) {
            spec.split_set.push(id);
        }
    }
    for (qs, _) in &found {
        for (ps, _) in &found {
            if qs != ps && refines(qs, ps) {
                spec.faces.push((sign_id(qs), sign_id(ps)));
            }
        }
    }
    if !found.iter().any(|(s, _)| *s == inner_sig) {
        return invalid("inner polytope is empty");
    }
    Ok(ToricCut { decomposition: Decomposition::new(spec)?, inner: inner_id })
}

/// Every facet of `p0` is a cell of the decomposition listed as a face of
/// `p0`, and `lambda` lies in the interior of `p0`.
pub fn is_tropical_fiber(dec: &Decomposition, p0: &str, lambda: &[Rational]) -> Result<bool> {
    let cell = dec.cell(p0)?;
    let p = &cell.polytope;
    if lambda.len() != dec.ambient_dim() {
        return dim_err("lambda has the wrong dimension");
    }
    if p.dim() != Some(dec.ambient_dim()) {
        return Ok(false);
    }
    let ineqs = p.inequalities();
    if ineqs.iter().any(|(a, b)| dot(a, lambda) >= *b) {
        return Ok(false);
    }
    for (a, b) in &ineqs {
        let facet = Polyhedron::from_h(dec.ambient_dim(), &ineqs, &[(a.clone(), b.clone())])?;
        let Some(c) = dec.cells().iter().find(|c| c.polytope == facet) else {
            return Ok(false);
        };
        if !dec.is_face(&c.id, p0)? {
            return Ok(false);
        }
    }
    Ok(true)
}
