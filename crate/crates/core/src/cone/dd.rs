//! Double description conversion in the Motzkin style, with an algebraic
//! adjacency test after every inserted constraint.

use num_traits::{Signed, Zero};

use crate::exact::{dot, primitive, Rational, RationalMatrix};

/// Generators of `{x : a.x >= 0 (ineqs), a.x = 0 (eqs)}`: extreme rays
/// (not yet canonical) and a lineality basis.
pub(crate) fn double_description(
    n: usize,
    ineqs: &[Vec<Rational>],
    eqs: &[Vec<Rational>],
) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let mut lin: Vec<Vec<Rational>> = RationalMatrix::identity(n).rows();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed: Vec<Vec<Rational>> = Vec::new();

    let constraints = eqs.iter().map(|a| (a, true)).chain(ineqs.iter().map(|a| (a, false)));
    for (a, is_eq) in constraints {
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        let k = processed.len();
        if let Some(idx) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lin.remove(idx);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l.iter_mut().for_each(|x| *x = -x.clone());
                al = -al;
            }
            for other in lin.iter_mut() {
                let f = dot(a, other) / &al;
                if !f.is_zero() {
                    sub_scaled(other, &l, &f);
                }
            }
            for r in rays.iter_mut() {
                let f = dot(a, &r.v) / &al;
                if !f.is_zero() {
                    sub_scaled(&mut r.v, &l, &f);
                }
                r.v = primitive(&r.v);
                r.tight.push(true);
            }
            if !is_eq {
                let mut tight = vec![true; k];
                tight.push(false);
                rays.push(Ray { v: primitive(&l), tight });
            }
        } else {
            let vals: Vec<Rational> = rays.iter().map(|r| dot(a, &r.v)).collect();
            let mut next = Vec::new();
            for (r, s) in rays.iter().zip(&vals) {
                if s.is_zero() {
                    let mut r = r.clone();
                    r.tight.push(true);
                    next.push(r);
                } else if s.is_positive() && !is_eq {
                    let mut r = r.clone();
                    r.tight.push(false);
                    next.push(r);
                }
            }
            let target = n as isize - lin.len() as isize - 2;
            for (i, p) in rays.iter().enumerate() {
                if !vals[i].is_positive() {
                    continue;
                }
                for (j, m) in rays.iter().enumerate() {
                    if !vals[j].is_negative() {
                        continue;
                    }
                    let common: Vec<usize> = (0..k).filter(|&c| p.tight[c] && m.tight[c]).collect();
                    if (common.len() as isize) < target {
                        continue;
                    }
                    let rows: Vec<Vec<Rational>> = common.iter().map(|&c| processed[c].clone()).collect();
                    let rank = RationalMatrix::from_rows(n, &rows).expect("width").rank() as isize;
                    if rank != target {
                        continue;
                    }
                    // (a.p) m - (a.m) p has a-value zero and positive coefficients.
                    let v: Vec<Rational> = m
                        .v
                        .iter()
                        .zip(&p.v)
                        .map(|(mx, px)| &vals[i] * mx - &vals[j] * px)
                        .collect();
                    let mut tight: Vec<bool> = (0..k).map(|c| p.tight[c] && m.tight[c]).collect();
                    tight.push(true);
                    next.push(Ray { v: primitive(&v), tight });
                }
            }
            rays = next;
        }
        processed.push(a.clone());
    }
    (rays.into_iter().map(|r| r.v).collect(), lin)
}

#[derive(Clone)]
struct Ray {
    v: Vec<Rational>,
    tight: Vec<bool>,
}

fn sub_scaled(v: &mut [Rational], l: &[Rational], f: &Rational) {
    for (x, y) in v.iter_mut().zip(l) {
        *x -= f * y;
    }
}
