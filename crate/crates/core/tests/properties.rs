//! Algebraic identities of the exact layers, checked on generated inputs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use tropsplit::cone::{Cone, Polyhedron};
use tropsplit::exact::{
    format_rational, hermite_normal_form, integer_kernel, parse_rational, primitive_int, quotient_projection, qr,
    to_rational_vec, IntMatrix, IntegerLattice, Rational, Subspace,
};
use tropsplit::potential::{NovikovSeries, Term};

fn int_vec(n: usize, bound: i64) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(-bound..=bound, n).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn int_matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(int_vec(c, bound), r).prop_map(move |rows| IntMatrix::from_rows(c, &rows).unwrap())
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| qr(n, d))
}

fn series() -> impl Strategy<Value = NovikovSeries> {
    let term = (rational(), 0i64..=6, 1i64..=3, int_vec(2, 2)).prop_map(|(coeff, a, d, monomial)| Term {
        coeff,
        area: qr(a, d),
        monomial,
    });
    prop::collection::vec(term, 0..5).prop_map(|terms| NovikovSeries::from_terms(2, terms).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn hnf_is_a_unimodular_canonical_form(m in int_matrix(4, 4, 5)) {
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert!(u.det().unwrap().abs().is_one());
        let (h2, _) = hermite_normal_form(&h);
        prop_assert_eq!(h2, h);
    }

    #[test]
    fn integer_kernel_is_saturated(m in int_matrix(3, 4, 4)) {
        let k = integer_kernel(&m);
        for v in &k {
            prop_assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
        let rank = tropsplit::exact::smith_normal_form(&m).rank();
        prop_assert_eq!(k.len(), m.ncols() - rank);
        if !k.is_empty() {
            let l = IntegerLattice::span(m.ncols(), &k).unwrap();
            prop_assert!(l.index_in_saturation().is_one());
        }
    }

    #[test]
    fn saturation_contains_the_lattice(gens in prop::collection::vec(int_vec(3, 6), 1..=3)) {
        let l = IntegerLattice::span(3, &gens).unwrap();
        let s = l.saturate();
        prop_assert_eq!(s.rank(), l.rank());
        for g in &gens {
            prop_assert!(s.contains(g));
        }
        prop_assert!(s.index_in_saturation().is_one());
    }

    #[test]
    fn quotient_projection_sends_t_to_last_basis_vector(t in int_vec(4, 6)) {
        prop_assume!(t.iter().any(|x| !x.is_zero()));
        let w = quotient_projection(&t).unwrap();
        prop_assert!(w.det().unwrap().abs().is_one());
        let image = w.apply(&primitive_int(&to_rational_vec(&t))).unwrap();
        let mut e = vec![BigInt::zero(); 4];
        e[3] = BigInt::one();
        prop_assert_eq!(image, e);
    }

    #[test]
    fn subspace_dimension_formula(a in prop::collection::vec(int_vec(4, 3), 1..=3), b in prop::collection::vec(int_vec(4, 3), 1..=3)) {
        let a = Subspace::span(4, &a.iter().map(|v| to_rational_vec(v)).collect::<Vec<_>>()).unwrap();
        let b = Subspace::span(4, &b.iter().map(|v| to_rational_vec(v)).collect::<Vec<_>>()).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains_subspace(&a) && a.contains_subspace(&meet));
    }

    #[test]
    fn cone_intersection_is_contained_in_both(
        g1 in prop::collection::vec(int_vec(3, 3), 1..=4),
        g2 in prop::collection::vec(int_vec(3, 3), 1..=4),
    ) {
        let c1 = Cone::from_v(3, g1.iter().map(|v| to_rational_vec(v)).collect(), vec![]).unwrap();
        let c2 = Cone::from_v(3, g2.iter().map(|v| to_rational_vec(v)).collect(), vec![]).unwrap();
        let i = c1.intersect(&c2).unwrap();
        prop_assert!(c1.contains_cone(&i) && c2.contains_cone(&i));
        if !i.is_zero() {
            let p = i.relative_interior_point().unwrap();
            prop_assert!(c1.contains(&p) && c2.contains(&p));
        }
    }

    #[test]
    fn polytope_vertices_regenerate_it(points in prop::collection::vec(int_vec(2, 4), 1..=6)) {
        let pts: Vec<Vec<Rational>> = points.iter().map(|p| to_rational_vec(p)).collect();
        let p = Polyhedron::from_v(2, &pts, &[], &[]).unwrap();
        prop_assert!(p.is_bounded());
        let back = Polyhedron::from_v(2, &p.vertices(), &[], &[]).unwrap();
        prop_assert!(back.is_subset_of(&p) && p.is_subset_of(&back));
        for v in &pts {
            prop_assert!(p.contains(v));
        }
        let h = Polyhedron::from_h(2, &p.inequalities(), &p.equalities()).unwrap();
        prop_assert!(h.is_subset_of(&p) && p.is_subset_of(&h));
    }

    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn valuation_is_additive(a in series(), b in series()) {
        let ab = a.mul(&b);
        match (a.valuation(), b.valuation()) {
            (Some(x), Some(y)) => prop_assert_eq!(ab.valuation().cloned(), Some(x + y)),
            _ => prop_assert!(ab.is_empty()),
        }
    }

    #[test]
    fn series_terms_are_normalized(a in series()) {
        let keys: Vec<_> = a.terms().iter().map(|t| (t.area.clone(), t.monomial.clone())).collect();
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(a.terms().iter().all(|t| !t.coeff.is_zero() && !t.area.is_negative()));
    }
}
