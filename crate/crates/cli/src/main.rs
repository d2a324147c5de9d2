mod commands;
mod corpus;
mod diagram;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use tropsplit::exact::{parse_rational, Rational};
use tropsplit::split::{toric_input_from_json, ToricInput};

use report::{render, CliResult, Input, InputError, Outcome};

/// Exact tropical split-graph toolkit.
#[derive(Parser)]
#[command(name = "tropsplit", version)]
struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the toric cut decomposition of a moment polytope.
    Cut {
        #[command(flatten)]
        toric: ToricArgs,
        /// Write the decomposition here.
        #[arg(short = 'o', long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Write an SVG sketch of the dual complex here.
        #[arg(long, value_name = "FILE")]
        diagram: Option<PathBuf>,
    },
    /// Tropical graph checks.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Quasi-split graph checks.
    #[command(subcommand)]
    Split(SplitCommand),
    /// Symmetry group of a tropical or quasi-split graph.
    Symmetry {
        decomposition: PathBuf,
        graph: PathBuf,
        /// Fix the split edges to the base directions.
        #[arg(long)]
        framed: bool,
    },
    /// Multiplicity of a rigid split graph.
    Mult { decomposition: PathBuf, qsplit: PathBuf },
    /// Disk potentials.
    #[command(subcommand)]
    Potential(PotentialCommand),
    /// Bundled regression corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Validate a graph and compute its realization space.
    Check {
        decomposition: PathBuf,
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        diagram: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SplitCommand {
    /// Decide whether a quasi-split graph is split for a given direction.
    Check {
        decomposition: PathBuf,
        qsplit: PathBuf,
        /// Comma separated rationals, e.g. `3/4,1,0`.
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, value_name = "FILE")]
        diagram: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PotentialCommand {
    /// Toric disk potential of a moment polytope.
    Bg {
        #[command(flatten)]
        toric: ToricArgs,
    },
    /// Combine component potentials into a split contribution.
    Combine {
        #[arg(long, allow_hyphen_values = true)]
        mult: String,
        #[arg(long)]
        split_edges: usize,
        #[arg(long)]
        black: usize,
        #[arg(long, allow_hyphen_values = true)]
        sign: i8,
        /// Series files, one per component.
        #[arg(required = true)]
        series: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Run the bundled examples and compare with the expected reports.
    Run {
        /// Overwrite the expected reports with fresh ones.
        #[arg(long)]
        bless: bool,
        #[arg(long, value_name = "DIR")]
        expected: Option<PathBuf>,
        /// Also write fresh reports here.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

/// A polytope either as one JSON file or as separate values. Each value is a
/// file path or an inline list: rows split by `;`, entries by `,`.
#[derive(Args)]
struct ToricArgs {
    #[arg(long, value_name = "FILE", conflicts_with_all = ["normals", "constants", "eps", "lambda"])]
    input: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    normals: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    constants: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

fn inline_or_file(value: &str) -> CliResult<String> {
    let p = Path::new(value);
    if p.is_file() {
        std::fs::read_to_string(p).map_err(|e| InputError(format!("{value}: {e}")))
    } else {
        Ok(value.to_string())
    }
}

fn rows(text: &str) -> Vec<Vec<&str>> {
    text.split(';').map(|r| r.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()).collect()
}

fn rational_list(flag: &str, value: &str) -> CliResult<Vec<Rational>> {
    let text = inline_or_file(value)?;
    let t = text.trim();
    if t.starts_with('[') {
        let v = tropsplit::json::parse(t)?;
        return Ok(tropsplit::json::rational_vec(&v)?);
    }
    t.split([',', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_rational(s).map_err(|e| InputError(format!("--{flag}: {e}"))))
        .collect()
}

fn normals_list(value: &str) -> CliResult<Vec<Vec<BigInt>>> {
    let text = inline_or_file(value)?;
    let t = text.trim();
    if t.starts_with('[') {
        let v = tropsplit::json::parse(t)?;
        let rows = tropsplit::json::array(&v, "normals")?;
        return Ok(rows.iter().map(tropsplit::json::int_vec).collect::<tropsplit::Result<_>>()?);
    }
    rows(t)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|s| s.parse::<BigInt>().map_err(|_| InputError(format!("--normals: not an integer: {s}"))))
                .collect()
        })
        .collect()
}

impl ToricArgs {
    fn load(&self) -> CliResult<(Input, ToricInput)> {
        if let Some(p) = &self.input {
            let input = Input::read(p)?;
            let t = toric_input_from_json(&input.text)?;
            return Ok((input, t));
        }
        let need = |v: &Option<String>, flag: &str| {
            v.clone().ok_or_else(|| InputError(format!("either --input or --{flag} is required")))
        };
        let normals = normals_list(&need(&self.normals, "normals")?)?;
        let constants = rational_list("constants", &need(&self.constants, "constants")?)?;
        let lambda = rational_list("lambda", &need(&self.lambda, "lambda")?)?;
        let eps = match &self.eps {
            Some(e) => rational_list("eps", e)?,
            None => Vec::new(),
        };
        if normals.len() != constants.len() {
            return Err(InputError("normals and constants differ in length".into()));
        }
        let t = ToricInput { normals, constants, eps, lambda };
        // Inline values are recorded through their canonical JSON form.
        let canonical = render(&tropsplit::json::object(vec![
            ("normals", serde_json::Value::Array(t.normals.iter().map(|v| tropsplit::json::ivec_json(v)).collect())),
            ("constants", tropsplit::json::qvec_json(&t.constants)),
            ("eps", tropsplit::json::qvec_json(&t.eps)),
            ("lambda", tropsplit::json::qvec_json(&t.lambda)),
        ]));
        Ok((Input::inline("<inline>", &canonical), t))
    }
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit(outcome: Outcome, report_path: Option<&Path>) -> CliResult<ExitCode> {
    let text = render(&outcome.report);
    if let Some(p) = report_path {
        write(p, &text)?;
    }
    print!("{text}");
    Ok(if outcome.positive { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn with_diagram(
    path: &Option<PathBuf>,
    f: impl FnOnce(Option<&mut String>) -> CliResult<Outcome>,
) -> CliResult<Outcome> {
    let mut svg = String::new();
    let outcome = f(path.as_ref().map(|_| &mut svg))?;
    if let Some(p) = path {
        write(p, &svg)?;
    }
    Ok(outcome)
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let rep = cli.report.as_deref();
    let outcome = match cli.command {
        Command::Cut { toric, output, diagram } => {
            let (input, t) = toric.load()?;
            let mut svg = String::new();
            let (outcome, dec_text) = commands::cut(&input, &t, diagram.as_ref().map(|_| &mut svg))?;
            if let Some(p) = &diagram {
                write(p, &svg)?;
            }
            if let Some(p) = &output {
                write(p, &dec_text)?;
            }
            outcome
        }
        Command::Graph(GraphCommand::Check { decomposition, graph, diagram }) => {
            let (d, g) = (Input::read(&decomposition)?, Input::read(&graph)?);
            with_diagram(&diagram, |out| commands::graph_check(&d, &g, out))?
        }
        Command::Split(SplitCommand::Check { decomposition, qsplit, eta, diagram }) => {
            let (d, q) = (Input::read(&decomposition)?, Input::read(&qsplit)?);
            let eta = commands::parse_eta(&eta)?;
            with_diagram(&diagram, |out| commands::split_check(&d, &q, &eta, out))?
        }
        Command::Symmetry { decomposition, graph, framed } => {
            commands::symmetry(&Input::read(&decomposition)?, &Input::read(&graph)?, framed)?
        }
        Command::Mult { decomposition, qsplit } => commands::mult(&Input::read(&decomposition)?, &Input::read(&qsplit)?)?,
        Command::Potential(PotentialCommand::Bg { toric }) => {
            let (input, t) = toric.load()?;
            commands::potential_bg(&input, &t)?
        }
        Command::Potential(PotentialCommand::Combine { mult, split_edges, black, sign, series }) => {
            let mult: BigInt = mult.trim().parse().map_err(|_| InputError(format!("--mult: not an integer: {mult}")))?;
            let inputs = series.iter().map(|p| Input::read(p)).collect::<CliResult<Vec<_>>>()?;
            commands::potential_combine(&mult, split_edges, black, sign, &inputs)?
        }
        Command::Corpus(CorpusCommand::Run { bless, expected, out }) => {
            let expected = expected.unwrap_or_else(|| PathBuf::from(corpus::DEFAULT_EXPECTED));
            let summary = corpus::run(&expected, out.as_deref(), bless)?;
            for p in &summary.problems {
                eprintln!("{p}");
            }
            println!("corpus: {} matched, {} problems", summary.matched, summary.problems.len());
            return Ok(if summary.problems.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    emit(outcome, rep)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("tropsplit: {e}");
            ExitCode::from(2)
        }
    }
}
