use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cone::Cone;
use crate::error::{invalid, Result};
use crate::exact::{int, Rational};

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); n];
    e[i] = Rational::one();
    e
}

fn check_in_orthant(c: &Cone) -> Result<()> {
    let v = c.v_rep();
    if !v.lineality.is_empty() || v.rays.iter().any(|r| r.iter().any(Signed::is_negative)) {
        return invalid("cone is not contained in the nonnegative orthant");
    }
    Ok(())
}

/// A cone in the nonnegative orthant is increasing when its slice
/// `{x_{i+1} = ... = x_n = 0}` has dimension `i` for every `i`.
pub fn is_increasing(c: &Cone) -> Result<bool> {
    check_in_orthant(c)?;
    let n = c.ambient_dim();
    let h = c.h_rep();
    for i in 1..=n {
        let mut eqs = h.equalities.clone();
        eqs.extend((i..n).map(|j| unit(n, j)));
        let slice = Cone::from_h(n, h.inequalities.clone(), eqs)?;
        if slice.dim() != i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `d_1 in K_1`, `d_2 in K_2 = T_{d_1} K_1`, ... , stopping at the
/// first failure.
pub fn tangent_recursion(c: &Cone, dirs: &[Vec<Rational>]) -> Result<bool> {
    let mut k = c.clone();
    for d in dirs {
        if !k.contains(d) {
            return Ok(false);
        }
        k = k.tangent_cone(d)?;
    }
    Ok(true)
}

/// Inductive characterization: `e_1` lies in the cone and the normal cone at
/// `e_1` is again increasing. Unwinds to a tangent-cone recursion along the
/// standard basis.
pub fn tangent_recursion_increasing(c: &Cone) -> Result<bool> {
    check_in_orthant(c)?;
    let n = c.ambient_dim();
    let dirs: Vec<_> = (0..n).map(|i| unit(n, i)).collect();
    tangent_recursion(c, &dirs)
}

/// Whether `(v^n, v^{n-1}, ..., v)` lies in the cone for all large `v`:
/// every inequality has positive leading coefficient and there are no
/// nontrivial equalities.
pub fn lex_tail_test(c: &Cone) -> bool {
    let h = c.h_rep();
    h.equalities.is_empty()
        && h.inequalities.iter().all(|a| a.iter().find(|x| !x.is_zero()).is_none_or(Signed::is_positive))
}

/// Evaluates membership of the sequence point at a few values of `v` past the
/// root bound of every inequality polynomial. Agrees with [`lex_tail_test`].
pub fn sampled_tail_test(c: &Cone) -> bool {
    let n = c.ambient_dim();
    let h = c.h_rep();
    let mut bound = Rational::from_integer(BigInt::from(2));
    for a in h.inequalities.iter().chain(&h.equalities) {
        let Some(lead) = a.iter().find(|x| !x.is_zero()) else { continue };
        let m = a.iter().map(|x| x.abs()).max().expect("nonempty") / lead.abs();
        let b = m + Rational::from_integer(BigInt::from(2));
        if b > bound {
            bound = b;
        }
    }
    let nu0 = int(&bound.ceil().to_integer());
    let points = [nu0.clone(), &nu0 + Rational::one(), &nu0 * Rational::from_integer(BigInt::from(2))];
    points.iter().all(|nu| {
        let mut x = vec![Rational::zero(); n];
        let mut p = Rational::one();
        for i in (0..n).rev() {
            p *= nu;
            x[i] = p.clone();
        }
        c.contains(&x)
    })
}

/// Dimension of the slice used in [`is_increasing`]; exposed for reports.
pub fn slice_dims(c: &Cone) -> Vec<usize> {
    let n = c.ambient_dim();
    let h = c.h_rep();
    (1..=n)
        .map(|i| {
            let mut eqs = h.equalities.clone();
            eqs.extend((i..n).map(|j| unit(n, j)));
            Cone::from_h(n, h.inequalities.clone(), eqs).expect("dims").dim()
        })
        .collect()
}



#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn qs(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn examples() {
        assert!(is_increasing(&Cone::orthant(3)).unwrap());
        let diag = Cone::from_v(2, vec![qs(&[1, 1])], vec![]).unwrap();
        assert!(!is_increasing(&diag).unwrap());
        let wedge = Cone::from_h(2, vec![qs(&[1, -1]), qs(&[0, 1])], vec![]).unwrap();
        assert!(is_increasing(&wedge).unwrap());
        let not_in = Cone::from_v(2, vec![qs(&[1, -1])], vec![]).unwrap();
        assert!(is_increasing(&not_in).is_err());
    }

    #[test]
    fn characterizations_agree_on_examples() {
        let wedge = Cone::from_h(2, vec![qs(&[1, -1]), qs(&[0, 1])], vec![]).unwrap();
        let other = Cone::from_h(2, vec![qs(&[-1, 1]), qs(&[1, 0])], vec![]).unwrap();
        for (c, expect) in [(wedge, true), (other, false), (Cone::orthant(2), true)] {
            assert_eq!(tangent_recursion_increasing(&c).unwrap(), expect);
            assert_eq!(lex_tail_test(&c), expect);
            assert_eq!(sampled_tail_test(&c), expect);
        }
    }
}
