//! Worked examples bundled with the crate.

/// `(file name, contents)` of every bundled fixture.
pub const FIXTURES: &[(&str, &str)] = &[
    ("cube_line.qsplit.json", include_str!("../fixtures/cube_line.qsplit.json")),
    ("cube_one_split.graph.json", include_str!("../fixtures/cube_one_split.graph.json")),
    ("cube_split.dec.json", include_str!("../fixtures/cube_split.dec.json")),
    ("cube_wedge.qsplit.json", include_str!("../fixtures/cube_wedge.qsplit.json")),
    ("hirzebruch2.toric.json", include_str!("../fixtures/hirzebruch2.toric.json")),
    ("square.dec.json", include_str!("../fixtures/square.dec.json")),
    ("square_collapse.qsplit.json", include_str!("../fixtures/square_collapse.qsplit.json")),
    ("square_flexible.graph.json", include_str!("../fixtures/square_flexible.graph.json")),
    ("square_four_split.graph.json", include_str!("../fixtures/square_four_split.graph.json")),
    ("square_four_split.qsplit.json", include_str!("../fixtures/square_four_split.qsplit.json")),
    ("square_four_split_identity.qsplit.json", include_str!("../fixtures/square_four_split_identity.qsplit.json")),
    ("square_free_edge.qsplit.json", include_str!("../fixtures/square_free_edge.qsplit.json")),
    ("square_moved_vertex.qsplit.json", include_str!("../fixtures/square_moved_vertex.qsplit.json")),
    ("square_new_edge.qsplit.json", include_str!("../fixtures/square_new_edge.qsplit.json")),
    ("square_one_split.graph.json", include_str!("../fixtures/square_one_split.graph.json")),
    ("square_rigid.graph.json", include_str!("../fixtures/square_rigid.graph.json")),
    ("square_split.dec.json", include_str!("../fixtures/square_split.dec.json")),
    ("square_three_free.graph.json", include_str!("../fixtures/square_three_free.graph.json")),
    ("square_three_free.qsplit.json", include_str!("../fixtures/square_three_free.qsplit.json")),
    ("unit_cube.toric.json", include_str!("../fixtures/unit_cube.toric.json")),
    ("unit_square.toric.json", include_str!("../fixtures/unit_square.toric.json")),
];

/// Contents of a bundled fixture.
pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
