use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::qsplit::QuasiSplitGraph;
use crate::complex::Decomposition;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::graph_from_value;
use crate::json::{array, field, int_vec, opt_field, parse, rational_vec, string_list};

/// Parses `{base, top}` (optionally with a top-level `split_order`).
pub fn qsplit_from_json(text: &str, dec: &Decomposition) -> Result<QuasiSplitGraph> {
    let v = parse(text)?;
    let mut base = graph_from_value(field(&v, "base")?)?;
    let top = graph_from_value(field(&v, "top")?)?;
    if let Some(s) = opt_field(&v, "split_order") {
        base.split_order = Some(string_list(s, "split_order")?);
    }
    QuasiSplitGraph::new(base, top, None::<BTreeMap<String, String>>, dec)
}

/// Input of the multiple-cut generator.
#[derive(Clone, Debug)]
pub struct ToricInput {
    pub normals: Vec<Vec<BigInt>>,
    pub constants: Vec<Rational>,
    pub eps: Vec<Rational>,
    pub lambda: Vec<Rational>,
}

/// Parses `{normals, constants, eps, lambda}`; `eps` may be omitted.
pub fn toric_input_from_json(text: &str) -> Result<ToricInput> {
    let v = parse(text)?;
    let normals = array(field(&v, "normals")?, "normals")?.iter().map(int_vec).collect::<Result<Vec<_>>>()?;
    let constants = rational_vec(field(&v, "constants")?)?;
    let eps = match opt_field(&v, "eps") {
        Some(e) => rational_vec(e)?,
        None => Vec::new(),
    };
    let lambda = rational_vec(field(&v, "lambda")?)?;
    if normals.len() != constants.len() {
        return Err(Error::Parse("normals and constants differ in length".into()));
    }
    Ok(ToricInput { normals, constants, eps, lambda })
}
