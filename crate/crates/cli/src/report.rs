use std::fmt;
use std::path::Path;

use serde_json::Value;
use sha2::{Digest, Sha256};

use tropsplit::cone::Cone;
use tropsplit::json::{object, qrows_json};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A failure that is the caller's fault: unreadable or malformed input.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<tropsplit::Error> for InputError {
    fn from(e: tropsplit::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type CliResult<T> = Result<T, InputError>;

/// A named input text. Only the file name enters reports, so reports do not
/// depend on where the inputs live.
#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub text: String,
}

impl Input {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
        Ok(Input { name, text })
    }

    pub fn inline(name: &str, text: &str) -> Self {
        Input { name: name.to_string(), text: text.to_string() }
    }
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Outcome of one command: the report and whether the verdict was positive.
pub struct Outcome {
    pub report: Value,
    pub positive: bool,
}

pub fn report(command: &str, inputs: &[&Input], parameters: Value, result: Value) -> Value {
    let inputs = inputs
        .iter()
        .map(|i| object(vec![("name", Value::String(i.name.clone())), ("sha256", Value::String(sha256_hex(&i.text)))]))
        .collect();
    object(vec![
        ("tool", object(vec![("name", "tropsplit".into()), ("version", VERSION.into())])),
        ("command", command.into()),
        ("inputs", Value::Array(inputs)),
        ("parameters", parameters),
        ("result", result),
    ])
}

pub fn cone_json(c: &Cone) -> Value {
    object(vec![
        ("ambient_dim", c.ambient_dim().into()),
        ("dim", c.dim().into()),
        ("rays", qrows_json(c.rays())),
        ("lineality", qrows_json(c.lineality())),
        ("inequalities", qrows_json(c.inequalities())),
        ("equalities", qrows_json(c.equalities())),
    ])
}

/// Pretty JSON with a trailing newline; key order is insertion order.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
