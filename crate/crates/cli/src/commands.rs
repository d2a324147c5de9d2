//! The analyses behind each subcommand, on in-memory inputs.

use num_bigint::BigInt;
use serde_json::Value;

use tropsplit::complex::{decomposition_from_json, decomposition_to_json, is_tropical_fiber, toric_cut, Decomposition};
use tropsplit::exact::{parse_rational, Rational};
use tropsplit::graph::{graph_from_value, is_rigid, split_edges, vertex_positions, TropicalGraph};
use tropsplit::json::{int_json, ivec_json, object, parse, q_json, qrows_json, qvec_json};
use tropsplit::potential::{bg_potential, series_from_value, series_to_json, split_contribution, NovikovSeries};
use tropsplit::split::{is_rigid_split, is_split_graph, qsplit_from_json, QuasiSplitGraph, ToricInput};
use tropsplit::symmetry::{component_splitting, framed_symmetry, multiplicity, symmetry_group, unframed_symmetry, SymmetryGroup};
use tropsplit::Error;

use crate::diagram::{self, Overlay};
use crate::report::{cone_json, report, sha256_hex, CliResult, Input, InputError, Outcome};

fn strings(xs: &[String]) -> Value {
    Value::Array(xs.iter().map(|s| Value::String(s.clone())).collect())
}

pub fn parse_eta(text: &str) -> CliResult<Vec<Rational>> {
    text.split(',').map(|s| parse_rational(s.trim()).map_err(InputError::from)).collect()
}

fn load_dec(input: &Input) -> CliResult<Decomposition> {
    decomposition_from_json(&input.text).map_err(|e| InputError(format!("{}: {e}", input.name)))
}

fn load_qsplit(input: &Input, dec: &Decomposition) -> CliResult<QuasiSplitGraph> {
    qsplit_from_json(&input.text, dec).map_err(|e| InputError(format!("{}: {e}", input.name)))
}

/// Witness positions of a strictly realizable graph, per vertex.
fn witness_positions(g: &TropicalGraph, dec: &Decomposition) -> Option<Vec<(String, Vec<Rational>)>> {
    let p = vertex_positions(g, dec).ok()?;
    let w = p.witness.as_ref()?;
    Some(p.vertex_order.iter().map(|v| (v.clone(), p.position(w, v).unwrap().to_vec())).collect())
}

pub fn graph_check(dec_in: &Input, graph_in: &Input, diagram_out: Option<&mut String>) -> CliResult<Outcome> {
    let dec = load_dec(dec_in)?;
    let g = graph_from_value(&parse(&graph_in.text)?)?;
    let inputs = [dec_in, graph_in];
    if let Err(e) = g.validate(&dec) {
        let result = object(vec![("valid", false.into()), ("diagnostics", Value::Array(vec![e.to_string().into()]))]);
        return Ok(Outcome { report: report("graph check", &inputs, Value::Null, result), positive: false });
    }
    let p = vertex_positions(&g, &dec)?;
    let positions = p.witness.as_ref().map(|w| {
        Value::Object(p.vertex_order.iter().map(|v| (v.clone(), qvec_json(p.position(w, v).unwrap()))).collect())
    });
    let rigid = if p.strictly_realizable { Value::Bool(is_rigid(&g, &dec)?) } else { Value::Null };
    let result = object(vec![
        ("valid", true.into()),
        ("diagnostics", Value::Array(vec![])),
        ("vertex_order", strings(&p.vertex_order)),
        ("weakly_realizable", p.weakly_realizable.into()),
        ("strictly_realizable", p.strictly_realizable.into()),
        ("realization_dim", p.dim.map_or(Value::Null, Value::from)),
        ("witness", positions.unwrap_or(Value::Null)),
        ("rigid", rigid),
        ("split_edges", strings(&split_edges(&g, &dec)?)),
    ]);
    if let Some(out) = diagram_out {
        *out = diagram::svg(&dec, &overlay(&g, &dec, &[]))?;
    }
    Ok(Outcome { report: report("graph check", &inputs, Value::Null, result), positive: p.strictly_realizable })
}

fn overlay(g: &TropicalGraph, dec: &Decomposition, highlighted: &[String]) -> Overlay {
    let positions = witness_positions(g, dec).unwrap_or_default();
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.plus.clone(), e.minus.clone(), highlighted.contains(&e.id)))
        .collect();
    Overlay { positions, edges }
}

fn certificates_json(q: &QuasiSplitGraph, certs: &[tropsplit::exact::GenericityCertificate]) -> Value {
    Value::Array(
        q.split_order
            .iter()
            .zip(certs)
            .map(|(e, c)| {
                object(vec![
                    ("edge", e.clone().into()),
                    ("generic", c.generic.into()),
                    ("family_size", c.family_size.into()),
                    ("violations", Value::Array(c.violations.iter().map(|&i| i.into()).collect())),
                ])
            })
            .collect(),
    )
}

pub fn split_check(dec_in: &Input, q_in: &Input, eta: &[Rational], diagram_out: Option<&mut String>) -> CliResult<Outcome> {
    let dec = load_dec(dec_in)?;
    let q = load_qsplit(q_in, &dec)?;
    let v = is_split_graph(&q, &dec, eta)?;
    let cc = &v.cone_condition;
    let s = &cc.scaling;
    let rel = &cc.discrepancy.relative;
    let result = object(vec![
        ("split_edges", strings(&q.split_order)),
        (
            "relative_cone",
            object(vec![("vertex_order", strings(&rel.vertex_order)), ("block", rel.n.into()), ("cone", cone_json(&rel.cone))]),
        ),
        ("deformation_dim", cc.discrepancy.space.dim().into()),
        ("eta_projections", qrows_json(&cc.eta_projections)),
        ("discrepancy_cone", cone_json(&cc.discrepancy.disc)),
        ("scaling_cone", cone_json(&s.d)),
        ("slice_dims", Value::Array(s.slice_dims.iter().map(|&d| d.into()).collect())),
        ("increasing", s.holds.into()),
        ("iterative_check", s.iterative_holds.into()),
        ("certificates", certificates_json(&q, &s.certificates)),
        ("certified", s.certified.into()),
        ("disc_dim", v.disc_dim.into()),
        ("expected_dim", v.expected_dim.into()),
        ("dimension_matches", v.dimension_matches.into()),
        ("is_split", v.is_split.into()),
        ("rigid_split", is_rigid_split(&q, &dec)?.into()),
    ]);
    if let Some(out) = diagram_out {
        *out = diagram::svg(&dec, &overlay(&q.base, &dec, &q.split_order))?;
    }
    let params = object(vec![("eta", qvec_json(eta))]);
    Ok(Outcome { report: report("split check", &[dec_in, q_in], params, result), positive: v.is_split })
}

fn group_json(g: &SymmetryGroup) -> Value {
    object(vec![
        ("complex_dimension", g.complex_dimension.into()),
        ("torsion_order", int_json(&g.torsion_order)),
        ("invariant_factors", ivec_json(&g.invariant_factors)),
        ("variables", strings(&g.variables)),
        ("exponent_lattice", Value::Array(g.exponent_lattice.basis().iter().map(|b| ivec_json(b)).collect())),
    ])
}

/// Accepts a plain graph or a quasi-split pair (an object with `top`).
pub fn symmetry(dec_in: &Input, g_in: &Input, framed: bool) -> CliResult<Outcome> {
    let dec = load_dec(dec_in)?;
    let v = parse(&g_in.text)?;
    let params = object(vec![("framed", framed.into())]);
    let result = if v.get("top").is_some() {
        let q = load_qsplit(g_in, &dec)?;
        let g = if framed { framed_symmetry(&q, &dec)? } else { unframed_symmetry(&q, &dec)? };
        let mut r = group_json(&g);
        let m = r.as_object_mut().unwrap();
        m.insert("dimension_bound".into(), q.expected_dim(&dec).into());
        if !framed {
            let comps = component_splitting(&q, &dec)?
                .iter()
                .map(|(vs, cg)| {
                    object(vec![
                        ("vertices", strings(vs)),
                        ("complex_dimension", cg.complex_dimension.into()),
                        ("torsion_order", int_json(&cg.torsion_order)),
                    ])
                })
                .collect();
            m.insert("components".into(), Value::Array(comps));
        }
        r
    } else {
        let g = graph_from_value(&v)?;
        group_json(&symmetry_group(&g, &dec, framed)?)
    };
    Ok(Outcome { report: report("symmetry", &[dec_in, g_in], params, result), positive: true })
}

pub fn mult(dec_in: &Input, q_in: &Input) -> CliResult<Outcome> {
    let dec = load_dec(dec_in)?;
    let q = load_qsplit(q_in, &dec)?;
    let inputs = [dec_in, q_in];
    let (result, positive) = match multiplicity(&q, &dec) {
        Ok(m) => {
            let g = framed_symmetry(&q, &dec)?;
            (object(vec![("multiplicity", int_json(&m)), ("framed_group", group_json(&g))]), true)
        }
        Err(Error::Precondition(why)) => (object(vec![("multiplicity", Value::Null), ("reason", why.into())]), false),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome { report: report("mult", &inputs, Value::Null, result), positive })
}

/// Returns the report and the decomposition file text.
pub fn cut(input: &Input, t: &ToricInput, diagram_out: Option<&mut String>) -> CliResult<(Outcome, String)> {
    let c = toric_cut(&t.normals, &t.constants, &t.eps, &t.lambda)?;
    let dec = &c.decomposition;
    let n = dec.ambient_dim();
    let text = crate::report::render(&decomposition_to_json(dec));
    let top = dec.cells().iter().filter(|cell| cell.polytope.dim() == Some(n)).count();
    let audit = dec.audit();
    let fiber = is_tropical_fiber(dec, &c.inner, &t.lambda)?;
    let split: Vec<String> = dec.split_set().map(str::to_string).collect();
    let result = object(vec![
        ("cells", dec.cells().len().into()),
        ("top_cells", top.into()),
        ("inner", c.inner.clone().into()),
        ("split_set", strings(&split)),
        ("audit", strings(&audit)),
        ("tropical_fiber", fiber.into()),
        ("decomposition_sha256", sha256_hex(&text).into()),
    ]);
    if let Some(out) = diagram_out {
        *out = diagram::svg(dec, &Overlay::default())?;
    }
    let params = toric_params(t);
    let positive = audit.is_empty() && fiber;
    Ok((Outcome { report: report("cut", &[input], params, result), positive }, text))
}

fn toric_params(t: &ToricInput) -> Value {
    object(vec![
        ("normals", Value::Array(t.normals.iter().map(|v| ivec_json(v)).collect())),
        ("constants", qvec_json(&t.constants)),
        ("eps", qvec_json(&t.eps)),
        ("lambda", qvec_json(&t.lambda)),
    ])
}

fn series_summary(s: &NovikovSeries) -> CliResult<Value> {
    let lead = if s.is_empty() { Value::Null } else { series_to_json(&s.leading_terms()?) };
    Ok(object(vec![
        ("terms", s.len().into()),
        ("valuation", s.valuation().map_or(Value::Null, q_json)),
        ("series", series_to_json(s)),
        ("leading_terms", lead),
    ]))
}

pub fn potential_bg(input: &Input, t: &ToricInput) -> CliResult<Outcome> {
    let w = bg_potential(&t.normals, &t.constants, &t.lambda)?;
    Ok(Outcome { report: report("potential bg", &[input], toric_params(t), series_summary(&w)?), positive: true })
}

pub fn potential_combine(
    mult: &BigInt,
    num_split: usize,
    d_black: usize,
    sign: i8,
    components: &[Input],
) -> CliResult<Outcome> {
    let series = components
        .iter()
        .map(|c| series_from_value(&parse(&c.text)?).map_err(|e| InputError(format!("{}: {e}", c.name))))
        .collect::<CliResult<Vec<_>>>()?;
    let s = split_contribution(mult, num_split, d_black, sign, &series)?;
    let params = object(vec![
        ("mult", int_json(mult)),
        ("split_edges", num_split.into()),
        ("d_black", d_black.into()),
        ("sign", i64::from(sign).into()),
    ]);
    let inputs: Vec<&Input> = components.iter().collect();
    Ok(Outcome { report: report("potential combine", &inputs, params, series_summary(&s)?), positive: true })
}
