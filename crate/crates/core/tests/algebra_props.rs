use std::collections::BTreeMap;

use chordlab_core::algebra::{
    esym_expand, frac, gamma_expand, poly, rat, rising_factorial, stirling1_unsigned, BigRat, MVPoly, Monomial,
    TruncatedSeries,
};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn small_poly() -> impl Strategy<Value = MVPoly> {
    prop::collection::vec((-4i64..=4, 1i64..=3, [0u32..3, 0u32..3, 0u32..3]), 0..5).prop_map(|terms| {
        MVPoly::from_terms(terms.into_iter().map(|(n, d, e)| {
            let m = Monomial::from_pairs(VARS.iter().zip(e).map(|(v, k)| (*v, k)));
            (m, frac(n, d))
        }))
    })
}

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn power_matches_repeated_product(a in small_poly(), k in 0u32..4) {
        let mut expected = MVPoly::one();
        for _ in 0..k {
            expected = &expected * &a;
        }
        prop_assert_eq!(a.pow(k), expected);
    }

    #[test]
    fn substitution_composes(p in small_poly(), f in small_poly(), g in small_poly()) {
        // f is substituted for x, then g for y; the composite binds x to f[y := g].
        let first: BTreeMap<String, MVPoly> = [("x".to_string(), f.clone())].into();
        let second: BTreeMap<String, MVPoly> = [("y".to_string(), g.clone())].into();
        let composite: BTreeMap<String, MVPoly> =
            [("x".to_string(), f.subst(&second)), ("y".to_string(), g)].into();
        prop_assert_eq!(p.subst(&first).subst(&second), p.subst(&composite));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), x in small_rat(), y in small_rat(), z in small_rat()) {
        let point: BTreeMap<String, BigRat> =
            [("x".to_string(), x), ("y".to_string(), y), ("z".to_string(), z)].into();
        let ea = a.eval(&point).unwrap();
        let eb = b.eval(&point).unwrap();
        prop_assert_eq!((&a * &b).eval(&point).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&point).unwrap(), ea + eb);
    }

    #[test]
    fn text_round_trip(a in small_poly()) {
        prop_assert_eq!(poly(&a.to_string()), a);
    }

    #[test]
    fn gamma_expansion_round_trips(coeffs in prop::collection::vec(-5i64..=5, 1..4), extra in 0u32..3) {
        let (x, y) = (MVPoly::var("x"), MVPoly::var("y"));
        let d = 2 * (coeffs.len() as u32 - 1) + extra;
        let mut p = MVPoly::zero();
        for (j, c) in coeffs.iter().enumerate() {
            let j = j as u32;
            let term = &(&x * &y).pow(j) * &(&x + &y).pow(d - 2 * j);
            p.add_assign_scaled(&term.mul_monomial(&Monomial::var("z")), &rat(*c));
        }
        let g = gamma_expand(&p, "x", "y").unwrap();
        prop_assert_eq!(g.reassemble("x", "y"), p);
    }

    #[test]
    fn esym_expansion_round_trips(coeffs in prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..=4), 0..4)) {
        let (x, y, z) = (MVPoly::var("x"), MVPoly::var("y"), MVPoly::var("z"));
        let e1 = &(&x + &y) + &z;
        let e2 = &(&(&x * &y) + &(&y * &z)) + &(&z * &x);
        let e3 = &(&x * &y) * &z;
        let mut p = MVPoly::zero();
        for ((i, j, k), c) in coeffs {
            let term = &(&e1.pow(i) * &e2.pow(j)) * &e3.pow(k);
            p.add_assign_scaled(&term, &rat(c));
        }
        let e = esym_expand(&p, VARS).unwrap();
        prop_assert_eq!(e.reassemble(VARS), p);
    }

    #[test]
    fn exp_inverts_log(coeffs in prop::collection::vec(small_rat(), 1..7)) {
        let order = coeffs.len();
        let s = TruncatedSeries::from_coeffs(order, std::iter::once(rat(1)).chain(coeffs));
        prop_assert_eq!(s.log().unwrap().exp().unwrap(), s.clone());
        let half = s.pow(&frac(1, 2)).unwrap();
        prop_assert_eq!(half.mul(&half), s);
    }
}

#[test]
fn asymmetric_input_is_rejected() {
    assert!(gamma_expand(&poly("x^2 + x*y"), "x", "y").is_err());
    assert!(esym_expand(&poly("x + y"), VARS).is_err());
}

#[test]
fn stirling_first_kind_rows_match_rising_step_two() {
    for n in 0..=12u32 {
        let mut lhs = MVPoly::zero();
        for k in 0..=n {
            let c = BigRat::from_integer(stirling1_unsigned(n, k) << (n - k) as usize);
            lhs.add_assign_scaled(&MVPoly::var("q").pow(k), &c);
        }
        assert_eq!(lhs, rising_factorial(&rat(2), n), "n = {n}");
    }
}
