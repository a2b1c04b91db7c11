//! Checks over permutations, inversion sequences and signed permutations.

use chordlab_core::algebra::{factorial, frac, gamma_expand, rat, rising_factorial, BigRat, MVPoly, TruncatedSeries};
use chordlab_core::grammar::known;
use chordlab_core::perm::{self, InversionSequence};
use num_bigint::BigInt;

use super::{
    binomial_convolution, ensure, eval_at, int, mono, object_failure, pow2, same, same_value, subst, var, Check,
    CheckFamily, Outcome,
};
use crate::ctx::{Ctx, MatchingFamily, PermFamily, SignedFamily};
use crate::families;

pub(super) fn checks() -> Vec<Check> {
    use CheckFamily::*;
    vec![
        Check {
            id: "A-EQUIDIST",
            description: "excedance refinements of A_n(x,y) = sum x^asc y^des, drop = n - exc - fix, and x<->y symmetry",
            family: Permutations,
            min_n: 1,
            default_max_n: 8,
            note: Some(
                "erratum: sum x^exc y^drop is not A_n(x,y) (n=2: 1 + x*y vs x + y); verified y*A_n = sum x^exc y^(drop+fix) and x*A_n = sum x^(exc+fix) y^drop",
            ),
            on_failure: None,
            run: a_equidist,
        },
        Check {
            id: "A-RISING",
            description: "A_n(1,1,q) = q(q+1)...(q+n-1)",
            family: Permutations,
            min_n: 1,
            default_max_n: 8,
            note: None,
            on_failure: None,
            run: a_rising,
        },
        Check {
            id: "A-EGF",
            description: "sum A_n(x,p,q) z^n/n! = ((1-x)e^(pz)/(e^(xz) - x e^z))^q at sampled x, p, q",
            family: Series,
            min_n: 0,
            default_max_n: super::DEFAULT_EGF_ORDER,
            note: None,
            on_failure: None,
            run: a_egf,
        },
        Check {
            id: "A-NEG",
            description: "A_n(x,1,-1) = -(x-1)^(n-1) and A_n(x,0,-1) = -(x + ... + x^(n-1))",
            family: Permutations,
            min_n: 1,
            default_max_n: 8,
            note: None,
            on_failure: None,
            run: a_neg,
        },
        Check {
            id: "INVSEQ-BIJ",
            description: "permutations <-> inversion sequences is a bijection and sum e_i = inv",
            family: Permutations,
            min_n: 1,
            default_max_n: 8,
            note: None,
            on_failure: None,
            run: invseq_bij,
        },
        Check {
            id: "FOATA-GAMMA",
            description: "gamma coefficients of A_n(x,y) count double-descent-free permutations by des and 0-1-2 trees by degree-two vertices",
            family: Permutations,
            min_n: 1,
            default_max_n: 7,
            note: None,
            on_failure: None,
            run: eulerian_gamma_by_double_descents,
        },
        Check {
            id: "G-EXC",
            description: "D^n(I) for {I->Ipq, p->xy, x->xy, y->xy, q->0} is I sum x^exc y^drop p^fix q^cyc",
            family: Permutations,
            min_n: 1,
            default_max_n: 7,
            note: None,
            on_failure: None,
            run: g_exc,
        },
        Check {
            id: "G-DUMONT",
            description: "D^n(a) = D^n(b) = a b^n A_n(a/b) for {a->ab, b->ab}",
            family: Permutations,
            min_n: 1,
            default_max_n: 8,
            note: None,
            on_failure: None,
            run: descent_grammar,
        },
        Check {
            id: "G-STIRLING2",
            description: "D^n(a) = a sum S(n,k) b^k for {a->ab, b->b}",
            family: Tables,
            min_n: 1,
            default_max_n: 8,
            note: None,
            on_failure: None,
            run: g_stirling2,
        },
        Check {
            id: "DNK",
            description: "d_n(x,q) expands over cda-free derangements in x^k(1+x)^(n-2k); fixed-block-free matchings give 2^n d_n(x,q/2)",
            family: Permutations,
            min_n: 1,
            default_max_n: 6,
            note: None,
            on_failure: None,
            run: dnk,
        },
        Check {
            id: "B-MAIN",
            description: "B_n(x,p,q) = 2^n A_n(x,(p+x)/2,q) = sum over matchings x^el (p+x)^fixb 2^(trace-fixb) q^trace, and the d^B_n form",
            family: Signed,
            min_n: 1,
            default_max_n: 5,
            note: None,
            on_failure: Some(
                "the type-B cycle count is read as the cycle count of |sigma|; a mismatch here may mean that reading is wrong rather than a code error",
            ),
            run: b_main,
        },
        Check {
            id: "B-DUAL",
            description: "B_n(x,1,q) = sum C(n,k) M_k(x,q) M~_(n-k)(x,q) and M_n(x,q) = x^n M~_n(1/x,q)",
            family: Signed,
            min_n: 1,
            default_max_n: 5,
            note: None,
            on_failure: None,
            run: b_dual,
        },
        Check {
            id: "COLORED",
            description: "r^n A_n(x,(1+(r-1)x)/r,1) is A_n(x) at r=1 and B_n(x,1,1) at r=2",
            family: Signed,
            min_n: 1,
            default_max_n: 5,
            note: None,
            on_failure: None,
            run: colored,
        },
    ]
}

fn a_equidist(ctx: &Ctx, n: usize) -> Outcome {
    let a = families::eulerian_xy(ctx, n);
    let by_exc_y = ctx
        .tally::<PermFamily, 2>(n, |_, s| Some([s.exc, s.drop + s.fix]))
        .to_poly(["x", "y"]);
    let by_exc_x = ctx
        .tally::<PermFamily, 2>(n, |_, s| Some([s.exc + s.fix, s.drop]))
        .to_poly(["x", "y"]);
    same("y*A_n(x,y) vs sum x^exc y^(drop+fix)", &(&var("y") * &a), &by_exc_y)?;
    same("x*A_n(x,y) vs sum x^(exc+fix) y^drop", &(&var("x") * &a), &by_exc_x)?;
    same(
        "A_n(x,y) vs A_n(y,x)",
        &a,
        &subst(&a, &[("x", var("y")), ("y", var("x"))]),
    )?;
    object_failure(ctx.first_failure::<PermFamily>(n, |p, s| {
        (s.exc + s.drop + s.fix != n as u32).then(|| format!("{p}: exc={} drop={} fix={}", s.exc, s.drop, s.fix))
    }))
}

fn a_rising(ctx: &Ctx, n: usize) -> Outcome {
    let a = families::eulerian_xpq(ctx, n);
    same(
        "A_n(1,1,q) vs q(q+1)...(q+n-1)",
        &subst(&a, &[("x", int(1)), ("p", int(1))]),
        &rising_factorial(&rat(1), n as u32),
    )
}

/// `exp(c z)` truncated at `order`.
fn e(c: &BigRat, order: usize) -> TruncatedSeries {
    TruncatedSeries::exp_linear(c, order)
}

/// Sample points `(x, p, q)`.
fn a_samples() -> [[BigRat; 3]; 3] {
    let (x, p) = (frac(1, 2), frac(1, 3));
    [
        [x.clone(), p.clone(), rat(2)],
        [x.clone(), p.clone(), rat(3)],
        [x, p, frac(1, 2)],
    ]
}

fn a_egf(ctx: &Ctx, n: usize) -> Outcome {
    let a = families::eulerian_xpq(ctx, n);
    for [x, p, q] in a_samples() {
        let one = rat(1);
        let num = e(&p, n).scale(&(&one - &x));
        let den = e(&x, n).sub(&e(&one, n).scale(&x));
        let series = num.div(&den).and_then(|b| b.pow(&q)).map_err(|err| err.to_string())?;
        let lhs = eval_at(&a, &[("x", &x), ("p", &p), ("q", &q)])?;
        same_value(
            &format!("A_{n}(x,p,q) at x={x}, p={p}, q={q} vs series"),
            lhs,
            series.egf_term(n),
        )?;
    }
    Ok(())
}

fn a_neg(ctx: &Ctx, n: usize) -> Outcome {
    let a = families::eulerian_xpq(ctx, n);
    let x = var("x");
    let at_one = subst(&a, &[("p", int(1)), ("q", int(-1))]);
    same(
        "A_n(x,1,-1) vs -(x-1)^(n-1)",
        &at_one,
        &-(&x - &int(1)).pow(n as u32 - 1),
    )?;
    let at_zero = subst(&a, &[("p", int(0)), ("q", int(-1))]);
    let tail: MVPoly = (1..n as u32).map(|k| x.pow(k)).sum();
    same("A_n(x,0,-1) vs -(x + ... + x^(n-1))", &at_zero, &-tail)
}

fn invseq_bij(ctx: &Ctx, n: usize) -> Outcome {
    object_failure(ctx.first_failure::<PermFamily>(n, |p, s| {
        let e = perm::to_inversion_sequence(p);
        if perm::from_inversion_sequence(&e) != *p {
            return Some(format!("{p}: round trip through {:?} fails", e.entries()));
        }
        let total: u32 = e.entries().iter().sum();
        (total != s.inv).then(|| format!("{p}: sum of inversion sequence {total} != inv {}", s.inv))
    }))?;
    let mut seen = std::collections::BTreeSet::new();
    for e in InversionSequence::enumerate(n) {
        let p = perm::from_inversion_sequence(&e);
        ensure(perm::to_inversion_sequence(&p) == e, || {
            format!("{:?}: round trip through {p} fails", e.entries())
        })?;
        ensure(seen.insert(p.clone()), || format!("{p} reached twice"))?;
    }
    same_value(
        "#inversion sequences vs n!",
        BigInt::from(seen.len()),
        factorial(n as u32),
    )
}

fn eulerian_gamma_by_double_descents(ctx: &Ctx, n: usize) -> Outcome {
    let a = families::eulerian_xy(ctx, n);
    let g = gamma_expand(&a, "x", "y").map_err(|err| format!("gamma expansion of A_n(x,y): {err}"))?;
    ensure(g.degree as usize == n - 1, || {
        format!("A_n(x,y) has degree {} in x, y", g.degree)
    })?;
    let no_dd = ctx.tally::<PermFamily, 1>(n, |_, s| (s.dd == 0).then_some([s.des]));
    let trees = ctx.tree_census(n, 2);
    let top = (n as u32 - 1) / 2;
    for i in 0..=top {
        let alpha = g.get(i);
        let perms = no_dd.get(&[i]);
        let by_trees: u64 = trees.iter().filter(|(h, _)| h[2] == i).map(|(_, c)| c).sum();
        same(
            &format!("alpha_{n},{i} vs double-descent-free count"),
            &alpha,
            &int(perms as i64),
        )?;
        same(
            &format!("alpha_{n},{i} vs 0-1-2 tree count"),
            &alpha,
            &int(by_trees as i64),
        )?;
    }
    same_value(
        "double-descent-free permutations beyond the gamma range",
        no_dd.total(),
        no_dd.iter().filter(|(k, _)| k[0] <= top).map(|(_, c)| c).sum(),
    )?;
    same_value(
        "0-1-2 trees",
        trees.total(),
        trees.iter().filter(|(h, _)| h[2] <= top).map(|(_, c)| c).sum(),
    )
}

fn g_exc(ctx: &Ctx, n: usize) -> Outcome {
    let i = var("I");
    let lhs = known::exc_drop_fix_cyc().d_iter(&i, n as u32);
    let sum = ctx
        .tally::<PermFamily, 4>(n, |_, s| Some([s.exc, s.drop, s.fix, s.cyc]))
        .to_poly(["x", "y", "p", "q"]);
    same("D^n(I) vs I sum x^exc y^drop p^fix q^cyc", &lhs, &(&i * &sum))
}

fn descent_grammar(ctx: &Ctx, n: usize) -> Outcome {
    let g = known::eulerian();
    let rhs = ctx
        .tally::<PermFamily, 1>(n, |_, s| Some([s.des]))
        .weighted(|k| mono(&[("a", k[0] + 1), ("b", n as u32 - k[0])]));
    same("D^n(a) vs a b^n A_n(a/b)", &g.d_iter(&var("a"), n as u32), &rhs)?;
    same("D^n(b) vs a b^n A_n(a/b)", &g.d_iter(&var("b"), n as u32), &rhs)
}

fn g_stirling2(_: &Ctx, n: usize) -> Outcome {
    let rhs: MVPoly = (0..=n as u32)
        .map(|k| {
            mono(&[("a", 1), ("b", k)]).scale(&BigRat::from_integer(chordlab_core::algebra::stirling2(n as u32, k)))
        })
        .sum();
    same(
        "D^n(a) vs a sum S(n,k) b^k",
        &known::stirling_second_kind().d_iter(&var("a"), n as u32),
        &rhs,
    )
}

/// `sum_k c_k(q) x^k (1+x)^(n-2k)`.
fn x_one_plus_x(n: usize, coeffs: impl IntoIterator<Item = (u32, MVPoly)>) -> MVPoly {
    let x = var("x");
    let onex = &int(1) + &x;
    coeffs
        .into_iter()
        .map(|(k, c)| &(&c * &x.pow(k)) * &onex.pow(n as u32 - 2 * k))
        .sum()
}

fn dnk(ctx: &Ctx, n: usize) -> Outcome {
    let d = families::derangement_poly(ctx, n);
    let cda_free = ctx.tally::<PermFamily, 2>(n, |_, s| (s.fix == 0 && s.cda == 0).then_some([s.exc, s.cyc]));
    let top = n as u32 / 2;
    ensure(cda_free.iter().all(|(k, _)| k[0] >= 1 && k[0] <= top), || {
        "a cda-free derangement has exc outside 1..n/2".into()
    })?;
    let by_k = |weight: &dyn Fn(u32) -> MVPoly| {
        x_one_plus_x(
            n,
            (1..=top).map(|k| {
                let c: MVPoly = cda_free
                    .iter()
                    .filter(|(key, _)| key[0] == k)
                    .map(|(key, cnt)| weight(key[1]).scale(&rat(cnt as i64)))
                    .sum();
                (k, c)
            }),
        )
    };
    same("d_n(x,q) vs cda-free expansion", &d, &by_k(&|c| mono(&[("q", c)])))?;

    let matchings = ctx
        .tally::<MatchingFamily, 2>(n, |_, s| (s.fixb == 0).then_some([s.elblock, s.trace]))
        .to_poly(["x", "q"]);
    let halved = &pow2(n) * &subst(&d, &[("q", var("q").scale(&frac(1, 2)))]);
    same("fixed-block-free matchings vs 2^n d_n(x,q/2)", &matchings, &halved)?;
    same(
        "fixed-block-free matchings vs cda-free expansion",
        &matchings,
        &by_k(&|c| mono(&[("q", c)]).scale(&rat(1i64 << (n as u32 - c)))),
    )
}

/// `M_n(x,q)` (el + fixb) or `M~_n(x,q)` (el only).
fn m_xq(ctx: &Ctx, n: usize, with_fixb: bool) -> MVPoly {
    if n == 0 {
        return int(1);
    }
    ctx.tally::<MatchingFamily, 2>(n, |_, s| {
        Some([s.elblock + if with_fixb { s.fixb } else { 0 }, s.trace])
    })
    .to_poly(["x", "q"])
}

fn b_main(ctx: &Ctx, n: usize) -> Outcome {
    object_failure(ctx.first_failure::<SignedFamily>(n, |sp, s| {
        (s.wexc != s.exc + s.single).then(|| format!("{sp}: wexc={} exc={} single={}", s.wexc, s.exc, s.single))
    }))?;
    let b = families::b_poly(ctx, n);
    let a = families::eulerian_xpq(ctx, n);
    let p_half = (&var("p") + &var("x")).scale(&frac(1, 2));
    let from_a = &pow2(n) * &subst(&a, &[("p", p_half)]);
    same("B_n(x,p,q) vs 2^n A_n(x,(p+x)/2,q)", &b, &from_a)?;
    let pe = &var("p") + &var("x");
    let from_m = ctx
        .tally::<MatchingFamily, 3>(n, |_, s| Some([s.elblock, s.fixb, s.trace]))
        .weighted(|k| {
            let two = BigRat::from_integer(BigInt::from(2)).pow(k[2] as i32 - k[1] as i32);
            (&mono(&[("x", k[0]), ("q", k[2])]) * &pe.pow(k[1])).scale(&two)
        });
    same("B_n(x,p,q) vs matching form", &b, &from_m)?;
    let db = families::type_b_derangement_poly(ctx, n);
    let db_m = ctx
        .tally::<MatchingFamily, 3>(n, |_, s| Some([s.elblock, s.fixb, s.trace]))
        .weighted(|k| {
            let two = BigRat::from_integer(BigInt::from(2)).pow(k[2] as i32 - k[1] as i32);
            mono(&[("x", k[0] + k[1])]).scale(&two)
        });
    same("d^B_n vs sum x^(el+fixb) 2^(trace-fixb)", &db, &db_m)
}

fn b_dual(ctx: &Ctx, n: usize) -> Outcome {
    let b1 = subst(&families::b_poly(ctx, n), &[("p", int(1))]);
    let conv = binomial_convolution(n, |k| m_xq(ctx, k, true), |k| m_xq(ctx, k, false));
    same("B_n(x,1,q) vs dual convolution", &b1, &conv)?;
    let m = m_xq(ctx, n, true);
    let reflected = m_xq(ctx, n, false).map_monomials(|mono| {
        let a = mono.exponent("x");
        if a as usize > n {
            return Err(format!("x-degree {a} exceeds n"));
        }
        Ok(chordlab_core::algebra::Monomial::from_pairs([
            ("x", n as u32 - a),
            ("q", mono.exponent("q")),
        ]))
    })?;
    same("M_n(x,q) vs x^n M~_n(1/x,q)", &m, &reflected)
}

fn colored(ctx: &Ctx, n: usize) -> Outcome {
    let a = families::eulerian_xpq(ctx, n);
    let colored = |r: i64| {
        let p = (&int(1) + &var("x").scale(&rat(r - 1))).scale(&frac(1, r));
        subst(&a, &[("p", p), ("q", int(1))]).scale(&rat(r).pow(n as i32))
    };
    same("A_(n,1)(x) vs A_n(x)", &colored(1), &families::eulerian(ctx, n))?;
    let b11 = subst(&families::b_poly(ctx, n), &[("p", int(1)), ("q", int(1))]);
    same("A_(n,2)(x) vs B_n(x,1,1)", &colored(2), &b11)
}
