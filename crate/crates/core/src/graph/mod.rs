//! Tropical graphs, vertex positions and edge-collapse morphisms.

mod collapse;
mod format;
mod positions;
mod tropical;

pub use collapse::{validate_collapse, CollapseReport};
pub use format::{graph_from_json, graph_from_value, graph_to_json};
pub use positions::{is_rigid, vertex_positions, StrictConstraint, VertexPositions};
pub use tropical::{split_edges, Collapse, Edge, EdgeKind, TropicalGraph, Vertex};
