use chordlab_core::algebra::{frac, poly, BigRat, MVPoly, Monomial};
use chordlab_core::grammar::{known, Grammar};
use proptest::prelude::*;

const VARS: [&str; 3] = ["a", "b", "c"];

fn small_poly() -> impl Strategy<Value = MVPoly> {
    prop::collection::vec((-3i64..=3, [0u32..3, 0u32..3, 0u32..3]), 0..4).prop_map(|terms| {
        MVPoly::from_terms(terms.into_iter().map(|(n, e)| {
            let m = Monomial::from_pairs(VARS.iter().zip(e).map(|(v, k)| (*v, k)));
            (m, BigRat::from_integer(n.into()))
        }))
    })
}

fn small_grammar() -> impl Strategy<Value = Grammar> {
    (small_poly(), small_poly()).prop_map(|(ra, rb)| Grammar::new().with_rule("a", ra).with_rule("b", rb))
}

proptest! {
    #[test]
    fn derivative_is_leibniz(g in small_grammar(), p in small_poly(), q in small_poly()) {
        let lhs = g.d_apply(&(&p * &q));
        let rhs = &(&g.d_apply(&p) * &q) + &(&p * &g.d_apply(&q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_is_linear(g in small_grammar(), p in small_poly(), q in small_poly(), n in -3i64..=3) {
        let c = frac(n, 2);
        prop_assert_eq!(g.d_apply(&(&p + &q)), &g.d_apply(&p) + &g.d_apply(&q));
        prop_assert_eq!(g.d_apply(&p.scale(&c)), g.d_apply(&p).scale(&c));
    }

    #[test]
    fn unruled_variables_are_constants(g in small_grammar(), p in small_poly()) {
        let explicit = g.clone().with_rule("c", MVPoly::zero());
        prop_assert_eq!(g.d_apply(&p), explicit.d_apply(&p));
        prop_assert!(g.d_apply(&MVPoly::var("c")).is_zero());
    }
}

#[test]
fn stirling_grammar_orbit() {
    let g = known::stirling_second_kind();
    assert_eq!(g.d_apply(&poly("a")), poly("a*b"));
    assert_eq!(g.d_iter(&poly("a"), 2), poly("a*b + a*b^2"));
    assert_eq!(g.d_iter(&poly("a"), 0), poly("a"));
    assert!(g.d_apply(&poly("7")).is_zero());
}
