//! Regression corpus: every bundled worked example is run through the same
//! code path as the command line, and the rendered reports are compared
//! byte for byte with checked-in copies.

use std::path::{Path, PathBuf};

use tropsplit::split::toric_input_from_json;

use crate::commands;
use crate::report::{render, CliResult, Input, InputError, Outcome};

pub const DEFAULT_EXPECTED: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/expected");

enum Job {
    Graph(&'static str, &'static str),
    Split(&'static str, &'static str, &'static str),
    Symmetry(&'static str, &'static str, bool),
    Mult(&'static str, &'static str),
    Cut(&'static str),
    Bg(&'static str),
}

const SQ: &str = "square.dec.json";
const SQS: &str = "square_split.dec.json";
const CUBE: &str = "cube_split.dec.json";

const JOBS: &[(&str, Job)] = &[
    ("graph_square_rigid", Job::Graph(SQ, "square_rigid.graph.json")),
    ("graph_square_flexible", Job::Graph(SQ, "square_flexible.graph.json")),
    ("split_square_collapse", Job::Split(SQ, "square_collapse.qsplit.json", "1,0")),
    ("split_new_edge_plus", Job::Split(SQS, "square_new_edge.qsplit.json", "1,-1")),
    ("split_new_edge_minus", Job::Split(SQS, "square_new_edge.qsplit.json", "-1,1")),
    ("split_moved_vertex_plus", Job::Split(SQS, "square_moved_vertex.qsplit.json", "1,-1")),
    ("split_moved_vertex_minus", Job::Split(SQS, "square_moved_vertex.qsplit.json", "-1,1")),
    ("split_free_edge", Job::Split(SQS, "square_free_edge.qsplit.json", "1,3")),
    ("split_three_free", Job::Split(SQS, "square_three_free.qsplit.json", "1,3")),
    ("split_four_split", Job::Split(SQS, "square_four_split.qsplit.json", "1,5")),
    ("split_four_split_identity", Job::Split(SQS, "square_four_split_identity.qsplit.json", "1,5")),
    ("split_cube_line", Job::Split(CUBE, "cube_line.qsplit.json", "1,1,0")),
    ("split_cube_wedge", Job::Split(CUBE, "cube_wedge.qsplit.json", "3/4,1,0")),
    ("symmetry_square_flexible", Job::Symmetry(SQ, "square_flexible.graph.json", false)),
    ("symmetry_cube_wedge_unframed", Job::Symmetry(CUBE, "cube_wedge.qsplit.json", false)),
    ("symmetry_cube_wedge_framed", Job::Symmetry(CUBE, "cube_wedge.qsplit.json", true)),
    ("mult_cube_wedge", Job::Mult(CUBE, "cube_wedge.qsplit.json")),
    ("mult_cube_line", Job::Mult(CUBE, "cube_line.qsplit.json")),
    ("mult_four_split", Job::Mult(SQS, "square_four_split.qsplit.json")),
    ("mult_new_edge", Job::Mult(SQS, "square_new_edge.qsplit.json")),
    ("cut_unit_square", Job::Cut("unit_square.toric.json")),
    ("cut_unit_cube", Job::Cut("unit_cube.toric.json")),
    ("cut_hirzebruch2", Job::Cut("hirzebruch2.toric.json")),
    ("bg_unit_square", Job::Bg("unit_square.toric.json")),
    ("bg_hirzebruch2", Job::Bg("hirzebruch2.toric.json")),
];

fn fixture(name: &str) -> CliResult<Input> {
    tropsplit::corpus::fixture(name)
        .map(|t| Input::inline(name, t))
        .ok_or_else(|| InputError(format!("no bundled fixture {name}")))
}

fn run_job(job: &Job) -> CliResult<Outcome> {
    match *job {
        Job::Graph(d, g) => commands::graph_check(&fixture(d)?, &fixture(g)?, None),
        Job::Split(d, q, eta) => commands::split_check(&fixture(d)?, &fixture(q)?, &commands::parse_eta(eta)?, None),
        Job::Symmetry(d, g, framed) => commands::symmetry(&fixture(d)?, &fixture(g)?, framed),
        Job::Mult(d, q) => commands::mult(&fixture(d)?, &fixture(q)?),
        Job::Cut(t) => {
            let input = fixture(t)?;
            let toric = toric_input_from_json(&input.text)?;
            Ok(commands::cut(&input, &toric, None)?.0)
        }
        Job::Bg(t) => {
            let input = fixture(t)?;
            let toric = toric_input_from_json(&input.text)?;
            commands::potential_bg(&input, &toric)
        }
    }
}

/// Rendered report of every job, in a fixed order.
pub fn reports() -> CliResult<Vec<(&'static str, String)>> {
    JOBS.iter().map(|(name, job)| Ok((*name, render(&run_job(job)?.report)))).collect()
}

pub struct Summary {
    pub matched: usize,
    pub problems: Vec<String>,
}

/// Runs the corpus. With `bless` the expected directory is rewritten instead
/// of compared; `out` receives a copy of every fresh report.
pub fn run(expected: &Path, out: Option<&Path>, bless: bool) -> CliResult<Summary> {
    let io = |p: &Path, e: std::io::Error| InputError(format!("{}: {e}", p.display()));
    let reports = reports()?;
    for dir in [Some(expected).filter(|_| bless), out].into_iter().flatten() {
        std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
        for (name, text) in &reports {
            let path = dir.join(format!("{name}.json"));
            std::fs::write(&path, text).map_err(|e| io(&path, e))?;
        }
    }
    let mut summary = Summary { matched: 0, problems: Vec::new() };
    for (name, text) in &reports {
        let path: PathBuf = expected.join(format!("{name}.json"));
        match std::fs::read_to_string(&path) {
            Ok(want) if want == *text => summary.matched += 1,
            Ok(_) => summary.problems.push(format!("{name}: report differs from {}", path.display())),
            Err(_) => summary.problems.push(format!("{name}: missing {}", path.display())),
        }
    }
    Ok(summary)
}
