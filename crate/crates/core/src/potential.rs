//! Novikov series and the toric disk potential.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{dim_err, invalid, Result};
use crate::exact::{dot, int, Rational};
use crate::json::{array, field, int_vec, ivec_json, object, q_json, rational};

/// One term `coeff * q^area * y^monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub area: Rational,
    pub monomial: Vec<BigInt>,
}

/// Finite formal sum of terms with nonnegative rational areas, kept sorted by
/// `(area, monomial)` with like terms merged and zero coefficients dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NovikovSeries {
    nvars: usize,
    terms: Vec<Term>,
}

impl NovikovSeries {
    pub fn zero(nvars: usize) -> Self {
        NovikovSeries { nvars, terms: Vec::new() }
    }

    pub fn monomial(coeff: Rational, area: Rational, monomial: Vec<BigInt>) -> Result<Self> {
        let n = monomial.len();
        Self::from_terms(n, vec![Term { coeff, area, monomial }])
    }

    /// `coeff * q^area` with no y-variables.
    pub fn constant(coeff: Rational, area: Rational) -> Result<Self> {
        Self::monomial(coeff, area, Vec::new())
    }

    /// Normalizes arbitrary terms; monomials shorter than `nvars` are padded.
    pub fn from_terms(nvars: usize, terms: Vec<Term>) -> Result<Self> {
        let mut acc: BTreeMap<(Rational, Vec<BigInt>), Rational> = BTreeMap::new();
        for mut t in terms {
            if t.area.is_negative() {
                return invalid("area exponents must be nonnegative");
            }
            if t.monomial.len() > nvars {
                return dim_err("monomial has more variables than the series");
            }
            t.monomial.resize(nvars, BigInt::zero());
            *acc.entry((t.area, t.monomial)).or_insert_with(Rational::zero) += t.coeff;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((area, monomial), coeff)| Term { coeff, area, monomial })
            .collect();
        Ok(NovikovSeries { nvars, terms })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least area exponent, `None` for the zero series.
    pub fn valuation(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.area)
    }

    pub fn add(&self, other: &NovikovSeries) -> NovikovSeries {
        let n = self.nvars.max(other.nvars);
        let terms = self.terms.iter().chain(&other.terms).cloned().collect();
        Self::from_terms(n, terms).expect("normalized inputs")
    }

    pub fn scale(&self, c: &Rational) -> NovikovSeries {
        let terms = self.terms.iter().map(|t| Term { coeff: &t.coeff * c, ..t.clone() }).collect();
        Self::from_terms(self.nvars, terms).expect("normalized input")
    }

    pub fn mul(&self, other: &NovikovSeries) -> NovikovSeries {
        let n = self.nvars.max(other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut m = vec![BigInt::zero(); n];
                for (i, x) in a.monomial.iter().enumerate() {
                    m[i] += x;
                }
                for (i, x) in b.monomial.iter().enumerate() {
                    m[i] += x;
                }
                terms.push(Term { coeff: &a.coeff * &b.coeff, area: &a.area + &b.area, monomial: m });
            }
        }
        Self::from_terms(n, terms).expect("normalized inputs")
    }

    /// Terms of area at most `cap`.
    pub fn truncate(&self, cap: &Rational) -> NovikovSeries {
        NovikovSeries { nvars: self.nvars, terms: self.terms.iter().filter(|t| t.area <= *cap).cloned().collect() }
    }

    /// Terms of minimal area.
    pub fn leading_terms(&self) -> Result<NovikovSeries> {
        let Some(v) = self.valuation().cloned() else {
            return invalid("the zero series has no leading terms");
        };
        Ok(self.truncate(&v))
    }
}

/// `sum_i y^{mu_i} q^{c_i - <lambda, mu_i>}`.
pub fn bg_potential(normals: &[Vec<BigInt>], constants: &[Rational], lambda: &[Rational]) -> Result<NovikovSeries> {
    if normals.len() != constants.len() {
        return dim_err("one constant per normal is required");
    }
    let n = lambda.len();
    let mut terms = Vec::new();
    for (mu, c) in normals.iter().zip(constants) {
        if mu.len() != n {
            return dim_err("normal and lambda dimensions differ");
        }
        let muq: Vec<Rational> = mu.iter().map(int).collect();
        let area = c - dot(&muq, lambda);
        if !area.is_positive() {
            return invalid("lambda is not in the interior of the polytope");
        }
        terms.push(Term { coeff: Rational::one(), area, monomial: mu.clone() });
    }
    NovikovSeries::from_terms(n, terms)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// `sign * mult / (d! s!)` times the product of the component series.
pub fn split_contribution(
    mult: &BigInt,
    num_split: usize,
    d_black: usize,
    heart_sign: i8,
    components: &[NovikovSeries],
) -> Result<NovikovSeries> {
    if components.is_empty() {
        return invalid("at least one component series is required");
    }
    if !mult.is_positive() {
        return invalid("multiplicity must be positive");
    }
    if heart_sign != 1 && heart_sign != -1 {
        return invalid("sign must be +1 or -1");
    }
    let mut prod = components[0].clone();
    for c in &components[1..] {
        prod = prod.mul(c);
    }
    let w = Rational::new(mult * BigInt::from(heart_sign), factorial(d_black) * factorial(num_split));
    Ok(prod.scale(&w))
}

/// `[{coeff, area, monomial}, ...]` with rationals as strings.
pub fn series_to_json(s: &NovikovSeries) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|t| object(vec![("coeff", q_json(&t.coeff)), ("area", q_json(&t.area)), ("monomial", ivec_json(&t.monomial))]))
            .collect(),
    )
}

/// Inverse of [`series_to_json`]; shorter monomials are padded.
pub fn series_from_value(v: &Value) -> Result<NovikovSeries> {
    let mut terms = Vec::new();
    for t in array(v, "series")? {
        terms.push(Term {
            coeff: rational(field(t, "coeff")?)?,
            area: rational(field(t, "area")?)?,
            monomial: int_vec(field(t, "monomial")?)?,
        });
    }
    let nvars = terms.iter().map(|t| t.monomial.len()).max().unwrap_or(0);
    NovikovSeries::from_terms(nvars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qr};

    fn iv(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn series_json_round_trip() {
        let s = NovikovSeries::from_terms(
            2,
            vec![
                Term { coeff: qr(-1, 2), area: q(3), monomial: iv(&[0, 1]) },
                Term { coeff: q(2), area: qr(1, 3), monomial: iv(&[-1, 0]) },
            ],
        )
        .unwrap();
        let v = series_to_json(&s);
        assert_eq!(v[0]["area"], "1/3");
        assert_eq!(series_from_value(&v).unwrap(), s);
        assert!(series_from_value(&serde_json::json!([{"coeff": "1"}])).is_err());
    }

    #[test]
    fn leading_order() {
        let s = NovikovSeries::from_terms(
            2,
            vec![
                Term { coeff: q(1), area: q(2), monomial: iv(&[0, 1]) },
                Term { coeff: q(1), area: q(1), monomial: iv(&[1, 0]) },
            ],
        )
        .unwrap();
        let l = s.leading_terms().unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.terms()[0].monomial, iv(&[1, 0]));
        assert!(NovikovSeries::zero(1).leading_terms().is_err());
    }

    #[test]
    fn contribution_examples() {
        let a = NovikovSeries::constant(q(1), qr(1, 2)).unwrap();
        let b = NovikovSeries::constant(q(1), qr(1, 3)).unwrap();
        let r = split_contribution(&BigInt::from(3), 1, 0, 1, &[a, b]).unwrap();
        assert_eq!(r.terms(), &[Term { coeff: q(3), area: qr(5, 6), monomial: vec![] }]);
        let c = NovikovSeries::constant(q(2), q(1)).unwrap();
        let d = NovikovSeries::constant(q(1), q(2)).unwrap();
        let r = split_contribution(&BigInt::from(1), 2, 2, -1, &[c, d]).unwrap();
        assert_eq!(r.terms(), &[Term { coeff: qr(-1, 2), area: q(3), monomial: vec![] }]);
        assert!(split_contribution(&BigInt::from(1), 0, 0, 1, &[]).is_err());
    }

    #[test]
    fn like_terms_cancel() {
        let a = NovikovSeries::monomial(q(1), q(1), iv(&[1])).unwrap();
        let b = NovikovSeries::monomial(q(-1), q(1), iv(&[1])).unwrap();
        assert!(a.add(&b).is_empty());
        assert_eq!(a.add(&b).valuation(), None);
    }
}
