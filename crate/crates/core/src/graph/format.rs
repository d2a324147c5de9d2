use std::collections::BTreeMap;

use serde_json::{Map, Value};

use super::tropical::{Collapse, Edge, EdgeKind, TropicalGraph, Vertex};
use crate::error::{Error, Result};
use crate::json::{array, field, int_vec, ivec_json, object, opt_field, parse, string, string_list};

pub fn graph_from_json(text: &str) -> Result<TropicalGraph> {
    graph_from_value(&parse(text)?)
}

pub fn graph_from_value(v: &Value) -> Result<TropicalGraph> {
    let mut vertices = Vec::new();
    for x in array(field(v, "vertices")?, "vertices")? {
        vertices.push(Vertex { id: string(field(x, "id")?, "vertex id")?, polytope: string(field(x, "polytope")?, "polytope")? });
    }
    let mut edges = Vec::new();
    if let Some(es) = opt_field(v, "edges") {
        for x in array(es, "edges")? {
            let ends = string_list(field(x, "ends")?, "ends")?;
            let [plus, minus] = <[String; 2]>::try_from(ends).map_err(|_| Error::Parse("edges have two ends".into()))?;
            let kind = match opt_field(x, "kind") {
                Some(k) => EdgeKind::parse(&string(k, "edge kind")?)?,
                None => EdgeKind::Tropical,
            };
            let direction = opt_field(x, "direction").map(int_vec).transpose()?;
            edges.push(Edge { id: string(field(x, "id")?, "edge id")?, plus, minus, kind, direction });
        }
    }
    let mut g = TropicalGraph::new(vertices, edges)?;
    if let Some(s) = opt_field(v, "split_order") {
        g.split_order = Some(string_list(s, "split_order")?);
    }
    if let Some(c) = opt_field(v, "collapse") {
        let mut vertex_map = BTreeMap::new();
        let m = field(c, "vertex_map")?
            .as_object()
            .ok_or_else(|| Error::Parse("vertex_map must be an object".into()))?;
        for (k, val) in m {
            vertex_map.insert(k.clone(), string(val, "vertex_map value")?);
        }
        let to_graph = opt_field(c, "to_graph").map(|t| string(t, "to_graph")).transpose()?;
        g.collapse = Some(Collapse { vertex_map, to_graph });
    }
    Ok(g)
}

pub fn graph_to_json(g: &TropicalGraph) -> Value {
    let vertices = g
        .vertices()
        .iter()
        .map(|v| object(vec![("id", Value::String(v.id.clone())), ("polytope", Value::String(v.polytope.clone()))]))
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let mut pairs = vec![
                ("id", Value::String(e.id.clone())),
                ("ends", Value::Array(vec![Value::String(e.plus.clone()), Value::String(e.minus.clone())])),
                ("kind", Value::String(e.kind.as_str().into())),
            ];
            if let Some(d) = &e.direction {
                pairs.push(("direction", ivec_json(d)));
            }
            object(pairs)
        })
        .collect();
    let mut pairs = vec![("vertices", Value::Array(vertices)), ("edges", Value::Array(edges))];
    if let Some(s) = &g.split_order {
        pairs.push(("split_order", Value::Array(s.iter().map(|x| Value::String(x.clone())).collect())));
    }
    if let Some(c) = &g.collapse {
        let mut m = Map::new();
        for (k, v) in &c.vertex_map {
            m.insert(k.clone(), Value::String(v.clone()));
        }
        let mut cp = vec![("vertex_map", Value::Object(m))];
        if let Some(t) = &c.to_graph {
            cp.push(("to_graph", Value::String(t.clone())));
        }
        pairs.push(("collapse", object(cp)));
    }
    object(pairs)
}
