use std::collections::{BTreeMap, BTreeSet};

use super::tropical::{EdgeKind, TropicalGraph};
use crate::complex::Decomposition;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseReport {
    pub valid: bool,
    /// Edges of the source graph absent from the target.
    pub collapsed: Vec<String>,
    pub diagnostics: Vec<String>,
}

/// Checks that `kappa: top -> base` (given on vertices; edges are matched by
/// id) is a tropical edge collapse: `P(v)` is a face of `P(kappa v)` and
/// uncollapsed tropical edges keep their direction. Directions of edges in
/// `ignore_directions` are not compared.
///
/// Structural problems (non-surjective map, edges whose image is undefined)
/// are errors; failed geometric conditions are diagnostics.
pub fn validate_collapse(
    top: &TropicalGraph,
    base: &TropicalGraph,
    kappa: &BTreeMap<String, String>,
    dec: &Decomposition,
    ignore_directions: &BTreeSet<String>,
) -> Result<CollapseReport> {
    let structural = |m: String| Err(Error::Structure(m));
    let mut hit = BTreeSet::new();
    for v in top.vertices() {
        let Some(img) = kappa.get(&v.id) else {
            return structural(format!("vertex {:?} has no image", v.id));
        };
        base.vertex(img).map_err(|_| Error::Structure(format!("vertex {:?} maps to unknown vertex {img:?}", v.id)))?;
        hit.insert(img.as_str());
    }
    for k in kappa.keys() {
        if top.vertex(k).is_err() {
            return structural(format!("collapse map mentions unknown vertex {k:?}"));
        }
    }
    if let Some(v) = base.vertices().iter().find(|v| !hit.contains(v.id.as_str())) {
        return structural(format!("collapse map is not surjective: {:?} has no preimage", v.id));
    }
    let mut diagnostics = Vec::new();
    let mut collapsed = Vec::new();
    for e in top.edges() {
        let (kp, km) = (&kappa[&e.plus], &kappa[&e.minus]);
        match base.edge(&e.id) {
            None => {
                if kp != km {
                    return structural(format!("collapsed edge {:?} joins different image vertices", e.id));
                }
                collapsed.push(e.id.clone());
            }
            Some(b) => {
                if (&b.plus, &b.minus) != (kp, km) {
                    return structural(format!("edge {:?} does not map onto the edge of the same id", e.id));
                }
                if b.kind != e.kind {
                    diagnostics.push(format!("edge {:?} changes kind", e.id));
                } else if e.kind == EdgeKind::Tropical && !ignore_directions.contains(&e.id) && b.direction != e.direction {
                    diagnostics.push(format!("edge {:?} changes direction", e.id));
                }
            }
        }
    }
    for b in base.edges() {
        if top.edge(&b.id).is_none() {
            return structural(format!("edge {:?} of the target has no preimage", b.id));
        }
    }
    for v in top.vertices() {
        let (p, pk) = (&v.polytope, &base.vertex(&kappa[&v.id])?.polytope);
        if !dec.is_face(p, pk)? {
            diagnostics.push(format!("P({}) = {p} is not a face of P(κ({})) = {pk}", v.id, v.id));
        }
    }
    Ok(CollapseReport { valid: diagnostics.is_empty(), collapsed, diagnostics })
}
