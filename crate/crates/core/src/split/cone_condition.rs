use num_traits::Zero;

use super::qsplit::{discrepancy, Discrepancy, QuasiSplitGraph};
use crate::complex::Decomposition;
use crate::cone::{is_increasing, slice_dims, tangent_recursion, tangent_recursion_increasing, Cone};
use crate::error::{invalid, Result};
use crate::exact::{is_generic_wrt, GenericityCertificate, Rational, RationalMatrix, Subspace};

/// Outcome of testing a cone direction against a discrepancy cone.
#[derive(Clone, Debug)]
pub struct ScalingVerdict {
    pub holds: bool,
    /// Scalings `c >= 0` with `(c_i eta_i)_i` in the discrepancy cone.
    pub d: Cone,
    pub slice_dims: Vec<usize>,
    /// One certificate per block.
    pub certificates: Vec<GenericityCertificate>,
    pub certified: bool,
    /// Outcome of the one-edge-at-a-time check; always equals `holds`.
    pub iterative_holds: bool,
}

/// Tests block vectors `etas` (each of length `m`) against a cone in the
/// direct sum of the blocks.
pub fn evaluate_scaling(disc: &Cone, etas: &[Vec<Rational>], m: usize) -> Result<ScalingVerdict> {
    let k = etas.len();
    if disc.ambient_dim() != k * m || etas.iter().any(|e| e.len() != m) {
        return invalid("block sizes do not match the discrepancy cone");
    }
    let big = scaling_matrix(etas, m)?;
    let d = disc.preimage(&big)?.intersect(&Cone::orthant(k))?;
    let holds = is_increasing(&d)?;
    debug_assert_eq!(tangent_recursion_increasing(&d)?, holds);
    let iterative_holds = iterative_split_check(disc, etas, m)?;
    let family = genericity_family(disc, k, m);
    let certificates =
        etas.iter().zip(&family).map(|(e, fam)| is_generic_wrt(e, fam)).collect::<Result<Vec<_>>>()?;
    let certified = certificates.iter().all(|c| c.generic);
    Ok(ScalingVerdict { holds, slice_dims: slice_dims(&d), d, certificates, certified, iterative_holds })
}

#[derive(Clone, Debug)]
pub struct ConeConditionVerdict {
    pub scaling: ScalingVerdict,
    /// `pi_e(eta)` per split edge, in split order.
    pub eta_projections: Vec<Vec<Rational>>,
    pub discrepancy: Discrepancy,
}

impl ConeConditionVerdict {
    pub fn holds(&self) -> bool {
        self.scaling.holds
    }

    /// `eta` avoids every subspace of the genericity family. Without this the
    /// verdict is not certified.
    pub fn certified(&self) -> bool {
        self.scaling.certified
    }
}

/// Decides whether the scaling cone is increasing and certifies the choice of
/// `eta` against the subspaces cut out by the discrepancy cone.
pub fn cone_condition(q: &QuasiSplitGraph, dec: &Decomposition, eta: &[Rational]) -> Result<ConeConditionVerdict> {
    let n = dec.ambient_dim();
    if eta.len() != n {
        return invalid(format!("cone direction must have {n} coordinates"));
    }
    if eta.iter().all(Zero::is_zero) {
        return invalid("cone direction must be nonzero");
    }
    let discrepancy = discrepancy(q, dec)?;
    let eta_projections = discrepancy.space.project(eta)?;
    let scaling = evaluate_scaling(&discrepancy.disc, &eta_projections, n - 1)?;
    Ok(ConeConditionVerdict { scaling, eta_projections, discrepancy })
}

/// Matrix of `c -> (c_i eta_i)_i`, with `eta_i` placed in block `i`.
fn scaling_matrix(etas: &[Vec<Rational>], m: usize) -> Result<RationalMatrix> {
    let k = etas.len();
    let mut big = RationalMatrix::zeros(k * m, k);
    for (i, e) in etas.iter().enumerate() {
        for (j, x) in e.iter().enumerate() {
            big.set(i * m + j, i, x.clone());
        }
    }
    Ok(big)
}

fn embed(v: &[Rational], block: usize, m: usize, k: usize) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); k * m];
    x[block * m..(block + 1) * m].clone_from_slice(v);
    x
}

/// Splits edges one at a time in order: `eta_1` (in block 1) must lie in
/// `K_1 = Disc`, then `eta_2` in the tangent cone `K_2` of `K_1` at it, and so on.
pub fn iterative_split_check(disc: &Cone, etas: &[Vec<Rational>], m: usize) -> Result<bool> {
    let k = etas.len();
    let dirs: Vec<Vec<Rational>> = etas.iter().enumerate().map(|(i, e)| embed(e, i, m, k)).collect();
    tangent_recursion(disc, &dirs)
}

/// For block `k`, the proper subspaces among `pr_{>=k}(S) ∩ V_k`, where `S`
/// runs over the span of the discrepancy cone and the spans of its facets,
/// `pr_{>=k}` kills the blocks before `k` and `V_k` is block `k`.
///
/// If the cone condition holds, `eta_k` lies in the first of these for every
/// `k`; when it avoids all of them the discrepancy cone is full-dimensional.
pub fn genericity_family(disc: &Cone, k: usize, m: usize) -> Vec<Vec<Subspace>> {
    let total = k * m;
    let mut sources = vec![disc.span()];
    sources.extend(disc.facet_spans());
    (0..k)
        .map(|b| {
            let mut fam: Vec<Subspace> = Vec::new();
            for s in &sources {
                let projected: Vec<Vec<Rational>> = s
                    .basis()
                    .iter()
                    .map(|v| v.iter().enumerate().map(|(i, x)| if i < b * m { Rational::zero() } else { x.clone() }).collect())
                    .collect();
                let pr = Subspace::span(total, &projected).expect("width");
                let block_gens: Vec<Vec<Rational>> = (0..m).map(|j| {
                    let mut e = vec![Rational::zero(); m];
                    e[j] = Rational::from_integer(1.into());
                    embed(&e, b, m, k)
                }).collect();
                let vb = Subspace::span(total, &block_gens).expect("width");
                let meet = pr.intersect(&vb).expect("same space");
                let local: Vec<Vec<Rational>> =
                    meet.basis().iter().map(|v| v[b * m..(b + 1) * m].to_vec()).collect();
                let local = Subspace::span(m, &local).expect("width");
                if local.is_proper() && !fam.contains(&local) {
                    fam.push(local);
                }
            }
            fam
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SplitVerdict {
    pub cone_condition: ConeConditionVerdict,
    pub disc_dim: usize,
    pub expected_dim: usize,
    pub dimension_matches: bool,
    /// Cone condition holds and `eta` is certified generic.
    pub is_split: bool,
}

/// Quasi-split validity is established by constructing `q`; this adds the
/// cone condition and the dimension bookkeeping.
pub fn is_split_graph(q: &QuasiSplitGraph, dec: &Decomposition, eta: &[Rational]) -> Result<SplitVerdict> {
    let cc = cone_condition(q, dec, eta)?;
    let disc_dim = cc.discrepancy.disc.dim();
    let expected_dim = q.expected_dim(dec);
    let is_split = cc.holds() && cc.certified();
    Ok(SplitVerdict { disc_dim, expected_dim, dimension_matches: disc_dim == expected_dim, is_split, cone_condition: cc })
}
