use serde_json::Value;

use super::decomposition::{Decomposition, DecompositionSpec};
use crate::error::{Error, Result};
use crate::json::{array, field, object, opt_field, parse, qrows_json, rational_rows, string, string_list, usize_of};

/// Parses the decomposition file format.
pub fn decomposition_from_json(text: &str) -> Result<Decomposition> {
    let v = parse(text)?;
    let mut spec = DecompositionSpec { ambient_dim: usize_of(field(&v, "ambient_dim")?, "ambient_dim")?, ..Default::default() };
    for p in array(field(&v, "polytopes")?, "polytopes")? {
        spec.polytopes.push((string(field(p, "id")?, "polytope id")?, rational_rows(field(p, "ineqs")?)?));
    }
    if let Some(faces) = opt_field(&v, "faces") {
        for pair in array(faces, "faces")? {
            let ids = string_list(pair, "face pair")?;
            let [q, p] = <[String; 2]>::try_from(ids).map_err(|_| Error::Parse("face pairs have two ids".into()))?;
            spec.faces.push((q, p));
        }
    }
    if let Some(duals) = opt_field(&v, "dual_cells") {
        for d in array(duals, "dual_cells")? {
            let rays = match opt_field(d, "rays") {
                Some(r) => rational_rows(r)?,
                None => Vec::new(),
            };
            spec.dual_cells.push((string(field(d, "id")?, "dual cell id")?, rational_rows(field(d, "vertices")?)?, rays));
        }
    }
    if let Some(s) = opt_field(&v, "split_set") {
        spec.split_set = string_list(s, "split_set")?;
    }
    Decomposition::new(spec)
}

/// Serializes in the same format, with irredundant inequalities.
pub fn decomposition_to_json(dec: &Decomposition) -> Value {
    let cells = dec.cells();
    let polytopes = cells
        .iter()
        .enumerate()
        .map(|(i, c)| object(vec![("id", Value::String(c.id.clone())), ("ineqs", qrows_json(&dec.inequality_rows(i)))]))
        .collect();
    let faces = dec
        .face_pairs()
        .iter()
        .map(|&(q, p)| Value::Array(vec![Value::String(cells[q].id.clone()), Value::String(cells[p].id.clone())]))
        .collect();
    let duals = cells
        .iter()
        .filter_map(|c| {
            c.dual.as_ref().map(|d| {
                object(vec![
                    ("id", Value::String(c.id.clone())),
                    ("vertices", qrows_json(&d.vertices())),
                    ("rays", qrows_json(&d.rays())),
                ])
            })
        })
        .collect();
    object(vec![
        ("ambient_dim", Value::from(dec.ambient_dim())),
        ("polytopes", Value::Array(polytopes)),
        ("faces", Value::Array(faces)),
        ("dual_cells", Value::Array(duals)),
        ("split_set", Value::Array(dec.split_set().map(|s| Value::String(s.to_owned())).collect())),
    ])
}
