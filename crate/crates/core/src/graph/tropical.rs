use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::Decomposition;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeKind {
    Tropical,
    Interior,
    Boundary,
}

impl EdgeKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "tropical" => Ok(EdgeKind::Tropical),
            "interior" => Ok(EdgeKind::Interior),
            "boundary" => Ok(EdgeKind::Boundary),
            _ => Err(Error::Parse(format!("unknown edge kind {s:?}"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Tropical => "tropical",
            EdgeKind::Interior => "interior",
            EdgeKind::Boundary => "boundary",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub polytope: String,
}

/// Edge oriented from `plus` to `minus`; the direction condition reads
/// `T(plus) - T(minus) in R_{>0} direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub plus: String,
    pub minus: String,
    pub kind: EdgeKind,
    pub direction: Option<Vec<BigInt>>,
}

/// Vertex map of an edge collapse onto another graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Collapse {
    pub vertex_map: BTreeMap<String, String>,
    pub to_graph: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    pub split_order: Option<Vec<String>>,
    pub collapse: Option<Collapse>,
}

impl TropicalGraph {
    /// Checks ids are unique and edge ends exist.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.id.as_str()) {
                return invalid(format!("duplicate vertex id {:?}", v.id));
            }
        }
        let mut seen_e = BTreeSet::new();
        for e in &edges {
            if !seen_e.insert(e.id.as_str()) {
                return invalid(format!("duplicate edge id {:?}", e.id));
            }
            for end in [&e.plus, &e.minus] {
                if !seen.contains(end.as_str()) {
                    return invalid(format!("edge {:?} ends at unknown vertex {end:?}", e.id));
                }
            }
            if e.kind == EdgeKind::Tropical && e.plus == e.minus {
                return invalid(format!("tropical edge {:?} is a loop", e.id));
            }
        }
        Ok(TropicalGraph { vertices, edges, split_order: None, collapse: None })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: &str) -> Result<&Vertex> {
        self.vertices.iter().find(|v| v.id == id).ok_or_else(|| Error::Invalid(format!("unknown vertex {id:?}")))
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v.id == id).ok_or_else(|| Error::Invalid(format!("unknown vertex {id:?}")))
    }

    pub fn tropical_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Tropical)
    }

    /// The cell `P(plus) ∩ P(minus)`, required to be a cell.
    pub fn edge_cell<'d>(&self, dec: &'d Decomposition, e: &Edge) -> Result<&'d str> {
        let (p, m) = (&self.vertex(&e.plus)?.polytope, &self.vertex(&e.minus)?.polytope);
        dec.meet(p, m)?
            .ok_or_else(|| Error::Invalid(format!("edge {:?}: P({}) ∩ P({}) is not a cell", e.id, e.plus, e.minus)))
    }

    /// Tropical graph invariants, skipping the edges in `skip`.
    pub fn validate_except(&self, dec: &Decomposition, skip: &BTreeSet<String>) -> Result<()> {
        for v in &self.vertices {
            dec.cell(&v.polytope)
                .map_err(|_| Error::Invalid(format!("vertex {:?} labelled by unknown polytope {:?}", v.id, v.polytope)))?;
        }
        for e in self.tropical_edges().filter(|e| !skip.contains(&e.id)) {
            let cell = self.edge_cell(dec, e)?;
            let dir = e
                .direction
                .as_ref()
                .ok_or_else(|| Error::Invalid(format!("tropical edge {:?} has no direction", e.id)))?;
            if dir.len() != dec.ambient_dim() {
                return invalid(format!("edge {:?}: direction has the wrong dimension", e.id));
            }
            if dir.iter().all(Zero::is_zero) {
                return invalid(format!("edge {:?}: direction is zero", e.id));
            }
            if !dec.normal_space(cell)?.contains(dir) {
                return invalid(format!("edge {:?}: direction is not in the normal lattice of {cell:?}", e.id));
            }
        }
        Ok(())
    }

    pub fn validate(&self, dec: &Decomposition) -> Result<()> {
        self.validate_except(dec, &BTreeSet::new())
    }

    /// Connected components of the graph after deleting the edges in `removed`,
    /// each listed in vertex order, ordered by first vertex.
    pub fn components_without(&self, removed: &BTreeSet<String>) -> Vec<Vec<String>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in self.edges.iter().filter(|e| !removed.contains(&e.id)) {
            let a = self.vertex_index(&e.plus).expect("checked");
            let b = self.vertex_index(&e.minus).expect("checked");
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.vertices[i].id.clone());
        }
        groups.into_values().collect()
    }
}

/// Tropical edges whose cell lies in the split set, in the supplied split order
/// when there is one (which must then list exactly these edges), otherwise in
/// graph order.
pub fn split_edges(g: &TropicalGraph, dec: &Decomposition) -> Result<Vec<String>> {
    let mut found = Vec::new();
    for e in g.tropical_edges() {
        if dec.is_split(g.edge_cell(dec, e)?)? {
            found.push(e.id.clone());
        }
    }
    match &g.split_order {
        None => Ok(found),
        Some(order) => {
            let a: BTreeSet<&String> = order.iter().collect();
            let b: BTreeSet<&String> = found.iter().collect();
            if a != b || a.len() != order.len() {
                return invalid(format!("split order {order:?} does not list exactly the split edges {found:?}"));
            }
            Ok(order.clone())
        }
    }
}
