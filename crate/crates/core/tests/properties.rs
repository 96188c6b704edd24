use proptest::prelude::*;

use qhankel_core::hankel::{d_sequence, hankel_det};
use qhankel_core::jfraction::{
    jfraction_from_moments, moments_from_jfraction, orthopolys, JFraction, MomentFunctional,
};
use qhankel_core::series::Series;
use qhankel_core::{Monomial, Poly, QFrac, Substitution, Var};

fn poly(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-5i64..=5, 0u32..4, 0u32..3, 0u32..3), 0..=max_terms)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(c, e, f, g)| (Monomial::new(e, f, g), c))))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly(4).prop_filter("nonzero", |p| !p.is_zero())
}

fn int_jfraction(depth: usize) -> impl Strategy<Value = JFraction> {
    (
        prop::collection::vec(-3i64..=3, depth),
        prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], depth),
    )
        .prop_map(|(s, t)| {
            JFraction::new(
                s.into_iter().map(Poly::constant).collect(),
                t.into_iter().map(Poly::constant).collect(),
            )
        })
}

fn q_jfraction(depth: usize) -> impl Strategy<Value = JFraction> {
    (
        prop::collection::vec(poly(2), depth),
        prop::collection::vec(nonzero_poly(), depth),
    )
        .prop_map(|(s, t)| JFraction::new(s, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(x in poly(5), y in poly(5), z in poly(5)) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, Poly::zero());
        prop_assert_eq!(&x * &Poly::one(), x.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(x in poly(5), y in nonzero_poly()) {
        prop_assert_eq!((&x * &y).exact_div(&y).unwrap(), x);
    }

    #[test]
    fn non_multiples_are_rejected(x in nonzero_poly()) {
        // x*q + 1 is never a multiple of q
        let p = &(&x * &Poly::q()) + &Poly::one();
        prop_assert!(p.exact_div(&Poly::q()).is_err());
    }

    #[test]
    fn substitution_composes(p in poly(5), s1 in poly(2), s2 in poly(2), t in poly(2)) {
        let first = Substitution::new().with(Var::A, s1.clone()).with(Var::B, s2.clone());
        let second = Substitution::new().with(Var::Q, t.clone());
        let composed = Substitution::new()
            .with(Var::A, s1.substitute(&second))
            .with(Var::B, s2.substitute(&second))
            .with(Var::Q, t);
        prop_assert_eq!(p.substitute(&first).substitute(&second), p.substitute(&composed));
    }

    #[test]
    fn qfrac_representations_agree(x in poly(4), y in poly(4), i in 1u32..4, j in 1u32..4) {
        let fx = QFrac::new(x.clone(), [(i, 1)]);
        // x/(1-q^i) == x(1-q^j)/((1-q^i)(1-q^j))
        let expanded = QFrac::new(x.mul_one_minus_q_pow(j), [(i, 1), (j, 1)]);
        prop_assert_eq!(&fx, &expanded);
        let fy = QFrac::new(y, [(j, 2)]);
        prop_assert_eq!(&(&fx + &fy) - &fy, fx.clone());
        prop_assert_eq!((&fx * &QFrac::from(Poly::one().mul_one_minus_q_pow(i))).into_poly(), Some(x));
    }

    #[test]
    fn series_division_inverts_multiplication(u in prop::collection::vec(poly(3), 5), v in prop::collection::vec(poly(3), 4)) {
        let u = Series::from_polys(u);
        let v = Series::from_polys(std::iter::once(Poly::one()).chain(v));
        prop_assert_eq!((&u * &v).div(&v).unwrap(), u);
    }

    #[test]
    fn jfraction_round_trip(jf in q_jfraction(3)) {
        let mu = moments_from_jfraction(&jf, 7).unwrap();
        let back = jfraction_from_moments(&MomentFunctional::new(mu), 3).unwrap();
        prop_assert_eq!(back, jf);
    }

    #[test]
    fn lemma_laws_for_integer_fractions(jf in int_jfraction(5)) {
        let mu = moments_from_jfraction(&jf, 10).unwrap();
        let ds = d_sequence(&jf, 5).unwrap();
        let fun = MomentFunctional::new(mu.clone());
        let ps = orthopolys(&jf, 4).unwrap();
        for n in 0..=4 {
            let tprod: Poly = (0..n).map(|k| jf.t[k].pow((n - k) as u32)).product();
            prop_assert_eq!(hankel_det(&mu, 0, n).unwrap(), tprod.clone());
            prop_assert_eq!(hankel_det(&mu, 1, n).unwrap(), &ds[n + 1] * &tprod);
            for m in 0..=4 {
                let expect = if n == m { jf.norm(n) } else { Poly::zero() };
                prop_assert_eq!(fun.apply(&ps[n].mul(&ps[m])).unwrap(), expect);
            }
        }
    }

    #[test]
    fn hankel_det_survives_reversal(seq in prop::collection::vec(poly(2), 7)) {
        // reversal conjugates the matrix by the reversal permutation
        let rev: Vec<Poly> = seq.iter().rev().cloned().collect();
        prop_assert_eq!(hankel_det(&seq, 0, 3).unwrap(), hankel_det(&rev, 0, 3).unwrap());
    }
}
