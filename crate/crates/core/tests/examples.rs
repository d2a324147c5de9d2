//! Small worked examples for the graph, complex, split and symmetry layers.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use common::*;
use tropsplit::complex::{decomposition_from_json, decomposition_to_json, is_tropical_fiber};
use tropsplit::cone::Cone;
use tropsplit::exact::{q, qr};
use tropsplit::graph::{graph_from_value, graph_to_json, is_rigid, split_edges, validate_collapse, vertex_positions};
use tropsplit::split::{discrepancy, index_shift, is_rigid_split, is_split_graph, qsplit_from_json};
use tropsplit::symmetry::{component_splitting, multiplicity, symmetry_group, unframed_symmetry};
use tropsplit::Error;

fn with_identity_collapse(g: &serde_json::Value) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = g["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| (v["id"].as_str().unwrap().to_string(), v["id"].clone()))
        .collect();
    let mut top = g.clone();
    top["collapse"] = json!({"vertex_map": map});
    top
}

#[test]
fn normal_lattices() {
    let d = dec("square.dec.json");
    assert_eq!(d.normal_space("c_pp").unwrap().rank(), 0);
    let facet = d.normal_space("c_pz").unwrap();
    assert_eq!(facet.basis(), &[iv(&[0, 1])]);
    let c = dec("cube_split.dec.json");
    assert_eq!(c.normal_space("c_pzz").unwrap().rank(), 2);
    assert_eq!(c.normal_space("c_zzz").unwrap().rank(), 3);
}

#[test]
fn relative_motion_cones() {
    let d = dec("square.dec.json");
    assert!(d.cone_kappa_v("c_pp", "c_pp").unwrap().is_zero());
    let same = d.cone_kappa_v("c_zz", "c_zz").unwrap();
    assert_eq!(same, Cone::full(2));
    let down = d.cone_kappa_v("c_pz", "c_pp").unwrap();
    assert_eq!(down, Cone::from_v(2, vec![qv(&[0, -1])], vec![]).unwrap());
}

#[test]
fn faces_and_meets() {
    let d = dec("square.dec.json");
    assert!(d.is_face("c_zz", "c_pp").unwrap());
    assert!(d.is_face("c_pz", "c_pp").unwrap());
    assert!(!d.is_face("c_pp", "c_pz").unwrap());
    assert_eq!(d.meet("c_pp", "c_mm").unwrap(), Some("c_zz"));
    assert_eq!(d.meet("c_pp", "c_pm").unwrap(), Some("c_pz"));
    assert_eq!(d.dim("c_zp").unwrap(), 1);
}

#[test]
fn decomposition_round_trip() {
    let d = dec("cube_split.dec.json");
    let text = decomposition_to_json(&d).to_string();
    let back = decomposition_from_json(&text).unwrap();
    assert_eq!(decomposition_to_json(&back), decomposition_to_json(&d));
    assert!(back.audit().is_empty());
}

#[test]
fn tropical_fiber_counterexamples() {
    // A lone quadrant: its facets are not cells.
    let lone = json!({
        "ambient_dim": 2,
        "polytopes": [{"id": "Q", "ineqs": [["-1", "0", "0"], ["0", "-1", "0"]]}],
        "faces": [],
        "dual_cells": [{"id": "Q", "vertices": [["0", "0"]], "rays": []}],
        "split_set": []
    });
    let d = decomposition_from_json(&lone.to_string()).unwrap();
    assert!(!is_tropical_fiber(&d, "Q", &qv(&[1, 1])).unwrap());
    // The full orthant decomposition passes for interior points only.
    let sq = dec("square.dec.json");
    assert!(is_tropical_fiber(&sq, "c_pp", &qv(&[1, 1])).unwrap());
    assert!(!is_tropical_fiber(&sq, "c_pp", &qv(&[0, 1])).unwrap());
    assert!(!is_tropical_fiber(&sq, "c_pz", &qv(&[1, 0])).unwrap());
}

#[test]
fn malformed_decompositions_are_rejected() {
    assert!(matches!(decomposition_from_json("{"), Err(Error::Parse(_))));
    let bad_dual = json!({
        "ambient_dim": 2,
        "polytopes": [{"id": "Q", "ineqs": [["-1", "0", "0"], ["0", "-1", "0"]]}],
        "faces": [],
        "dual_cells": [{"id": "Q", "vertices": [["0", "0"], ["1", "0"]], "rays": []}],
        "split_set": []
    });
    assert!(decomposition_from_json(&bad_dual.to_string()).is_err());
}

#[test]
fn realization_spaces() {
    let d = dec("square.dec.json");
    let rigid = graph("square_rigid.graph.json");
    let p = vertex_positions(&rigid, &d).unwrap();
    assert_eq!(p.dim, Some(0));
    let m = p.position(p.witness.as_ref().unwrap(), "m").unwrap();
    assert_eq!(m, &[qr(1, 2), qr(1, 2)]);
    assert!(is_rigid(&rigid, &d).unwrap());
    assert!(!is_rigid(&graph("square_flexible.graph.json"), &d).unwrap());
    let lone = graph_from_value(&json!({"vertices": [{"id": "v", "polytope": "c_pm"}], "edges": []})).unwrap();
    assert_eq!(vertex_positions(&lone, &d).unwrap().dim, Some(0));
    assert!(is_rigid(&lone, &d).unwrap());
}

#[test]
fn unrealizable_graph_is_reported() {
    let d = dec("square.dec.json");
    // Parallel directions from two corners cannot meet.
    let g = graph_from_value(&json!({
        "vertices": [{"id": "a", "polytope": "c_mm"}, {"id": "c", "polytope": "c_pm"}, {"id": "m", "polytope": "c_zz"}],
        "edges": [
            {"id": "e1", "ends": ["m", "a"], "direction": [1, 1]},
            {"id": "e2", "ends": ["m", "c"], "direction": [1, 1]}
        ]
    }))
    .unwrap();
    let p = vertex_positions(&g, &d).unwrap();
    assert!(!p.strictly_realizable);
    assert!(is_rigid(&g, &d).is_err());
}

#[test]
fn collapses() {
    let d = dec("square.dec.json");
    let base = graph("square_rigid.graph.json");
    let top = graph("square_flexible.graph.json");
    let kappa = top.collapse.as_ref().unwrap().vertex_map.clone();
    let r = validate_collapse(&top, &base, &kappa, &d, &BTreeSet::new()).unwrap();
    assert!(r.valid, "{:?}", r.diagnostics);
    assert_eq!(r.collapsed, vec!["e".to_string()]);

    let id: BTreeMap<String, String> = base.vertices().iter().map(|v| (v.id.clone(), v.id.clone())).collect();
    assert!(validate_collapse(&base, &base, &id, &d, &BTreeSet::new()).unwrap().valid);

    let mut bent = graph_to_json(&top);
    bent["edges"][0]["direction"] = json!([1, 2]);
    let bent = graph_from_value(&bent).unwrap();
    let r = validate_collapse(&bent, &base, &kappa, &d, &BTreeSet::new()).unwrap();
    assert!(!r.valid);

    let mut partial = kappa.clone();
    partial.remove("m1");
    assert!(matches!(validate_collapse(&top, &base, &partial, &d, &BTreeSet::new()), Err(Error::Structure(_))));
}

#[test]
fn split_edge_lists() {
    let sq = dec("square_split.dec.json");
    assert_eq!(split_edges(&graph("square_one_split.graph.json"), &sq).unwrap(), vec!["e"]);
    assert!(split_edges(&graph("square_rigid.graph.json"), &dec("square.dec.json")).unwrap().is_empty());
    assert_eq!(split_edges(&graph("square_four_split.graph.json"), &sq).unwrap(), vec!["e1", "e2", "e3", "e4"]);
}

#[test]
fn identity_resolution_of_rigid_graph() {
    let d = dec("square.dec.json");
    let g: serde_json::Value = serde_json::from_str(text("square_rigid.graph.json")).unwrap();
    let doc = json!({"base": g, "top": with_identity_collapse(&g)});
    let qs = qsplit_from_json(&doc.to_string(), &d).unwrap();
    let disc = discrepancy(&qs, &d).unwrap();
    assert!(disc.relative.cone.is_zero());
    assert_eq!(disc.disc.ambient_dim(), 0);
}

#[test]
fn discrepancy_cones() {
    let sq = dec("square_split.dec.json");
    let qs = qsplit("square_new_edge.qsplit.json", &sq);
    let disc = discrepancy(&qs, &sq).unwrap();
    assert_eq!(disc.disc.dim(), 1);
    let proj = &disc.space.projections[0];
    let expected = Cone::from_v(1, vec![proj.apply(&qv(&[2, 1])).unwrap()], vec![]).unwrap();
    assert_eq!(disc.disc, expected);
    assert!(disc.disc.contains(&proj.apply(&qv(&[1, -1])).unwrap()));

    let cube = dec("cube_split.dec.json");
    let qs = qsplit("cube_wedge.qsplit.json", &cube);
    let disc = discrepancy(&qs, &cube).unwrap();
    let proj = &disc.space.projections[0];
    let gens = [qv(&[2, 1, 0]), qv(&[1, 2, 0])].iter().map(|g| proj.apply(g).unwrap()).collect();
    assert_eq!(disc.disc, Cone::from_v(2, gens, vec![]).unwrap());
    assert!(disc.disc.contains(&proj.apply(&[qr(3, 4), q(1), q(0)]).unwrap()));
}

#[test]
fn unresolved_four_split_fails() {
    let sq = dec("square_split.dec.json");
    let qs = qsplit("square_four_split_identity.qsplit.json", &sq);
    let v = is_split_graph(&qs, &sq, &qv(&[1, 5])).unwrap();
    assert!(!v.is_split);
    assert_eq!(v.disc_dim, 2);
    assert_eq!(v.cone_condition.scaling.slice_dims, vec![0, 0, 1, 2]);
}

#[test]
fn eta_validation() {
    let sq = dec("square_split.dec.json");
    let qs = qsplit("square_new_edge.qsplit.json", &sq);
    assert!(is_split_graph(&qs, &sq, &qv(&[0, 0])).is_err());
    assert!(is_split_graph(&qs, &sq, &qv(&[1, 0, 0])).is_err());
}

#[test]
fn rigidity_of_split_graphs() {
    let sq = dec("square_split.dec.json");
    assert!(is_rigid_split(&qsplit("square_new_edge.qsplit.json", &sq), &sq).unwrap());
    let cube = dec("cube_split.dec.json");
    assert!(is_rigid_split(&qsplit("cube_wedge.qsplit.json", &cube), &cube).unwrap());
    assert!(!is_rigid_split(&qsplit("cube_line.qsplit.json", &cube), &cube).unwrap());
    // A flexible base is never rigid split.
    let d = dec("square.dec.json");
    let g: serde_json::Value = serde_json::from_str(text("square_flexible.graph.json")).unwrap();
    let mut base = g.clone();
    base.as_object_mut().unwrap().remove("collapse");
    let qs = qsplit_from_json(&json!({"base": base, "top": with_identity_collapse(&base)}).to_string(), &d).unwrap();
    assert!(!is_rigid_split(&qs, &d).unwrap());
}

#[test]
fn index_shifts() {
    assert_eq!(index_shift(1, 2, 0), (2, 0));
    assert_eq!(index_shift(0, 2, 1), (1, 1));
    assert_eq!(index_shift(4, 2, 0), (8, 0));
}

#[test]
fn symmetry_of_flexible_graph() {
    let d = dec("square.dec.json");
    let g = symmetry_group(&graph("square_flexible.graph.json"), &d, false).unwrap();
    assert_eq!(g.complex_dimension, 1);
    assert!(g.torsion_order.is_one());
    assert_eq!(symmetry_group(&graph("square_rigid.graph.json"), &d, false).unwrap().complex_dimension, 0);
}

#[test]
fn single_split_edge_multiplicity() {
    let sq = dec("square_split.dec.json");
    let qs = qsplit("square_new_edge.qsplit.json", &sq);
    assert_eq!(multiplicity(&qs, &sq).unwrap(), BigInt::one());
    let comps = component_splitting(&qs, &sq).unwrap();
    let dims: BTreeMap<bool, usize> =
        comps.iter().map(|(c, g)| (c.iter().any(|v| v == "vp"), g.complex_dimension)).collect();
    assert_eq!(dims[&true], 1);
    assert_eq!(dims[&false], 0);
    let cube = dec("cube_split.dec.json");
    assert!(multiplicity(&qsplit("cube_line.qsplit.json", &cube), &cube).is_err());
}

#[test]
fn framed_orders_match_enumeration() {
    let sq = dec("square_split.dec.json");
    for name in ["square_free_edge.qsplit.json", "square_four_split.qsplit.json", "square_three_free.qsplit.json"] {
        let qs = qsplit(name, &sq);
        let fr = tropsplit::symmetry::framed_symmetry(&qs, &sq).unwrap();
        assert_eq!(fr.complex_dimension, 0, "{name}");
        let t: u64 = (&fr.torsion_order).try_into().unwrap();
        if t.pow(fr.relations.ncols() as u32) <= 5_000_000 {
            assert_eq!(count_roots_of_unity(&fr.relations, t), t, "{name}");
        }
    }
}

#[test]
fn no_split_edges_single_component() {
    let d = dec("square.dec.json");
    let qs = qsplit("square_collapse.qsplit.json", &d);
    let comps = component_splitting(&qs, &d).unwrap();
    assert_eq!(comps.len(), 1);
    let whole = unframed_symmetry(&qs, &d).unwrap();
    assert_eq!(comps[0].1.complex_dimension, whole.complex_dimension);
    assert_eq!(comps[0].1.torsion_order, whole.torsion_order);
}

#[test]
fn direction_outside_normal_lattice_is_an_error() {
    let d = dec("square.dec.json");
    // An edge inside a vertical wall must be vertical.
    let g = graph_from_value(&json!({
        "vertices": [{"id": "a", "polytope": "c_zp"}, {"id": "b", "polytope": "c_zp"}],
        "edges": [{"id": "e", "ends": ["a", "b"], "direction": [1, 1]}]
    }))
    .unwrap();
    assert!(symmetry_group(&g, &d, false).is_err());
}
