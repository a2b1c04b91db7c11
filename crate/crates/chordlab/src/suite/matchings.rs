//! Checks over perfect matchings.

use std::collections::BTreeSet;

use chordlab_core::algebra::{
    binomial, catalan, double_factorial_odd, factorial, frac, gamma_expand, narayana, rat, rising_factorial,
    stirling1_unsigned, BigRat, MVPoly, TruncatedSeries,
};
use chordlab_core::grammar::known;
use chordlab_core::matching::{self, Matching, Matchings, Step};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    binomial_convolution, ensure, eval_at, int, mono, object_failure, pow2, same, same_value, subst, var, Check,
    CheckFamily, Outcome,
};
use crate::ctx::{Ctx, MatchingFamily, PermFamily};
use crate::families;

pub(super) fn checks() -> Vec<Check> {
    use CheckFamily::*;
    let m = |id, description, default_max_n, run| Check {
        id,
        description,
        family: Matchings,
        min_n: 1,
        default_max_n,
        note: None,
        on_failure: None,
        run,
    };
    vec![
        m(
            "M-MAIN",
            "M_n(x,y,s,t) = sum over permutations (2x)^exc (2y)^drop (2s)^fix (t/2)^cyc; 2^n A_n(x,p,q) by elblock and by olblock",
            7,
            m_main,
        ),
        m("M-SYM", "M_n(x,y,s,t) = M_n(y,x,s,t)", 7, m_sym),
        Check {
            id: "M-EGF",
            description: "sum M_n z^n/n! = ((y-x)e^(2sz)/(y e^(2xz) - x e^(2yz)))^(t/2) at sampled x, y, s, t",
            family: Series,
            min_n: 0,
            default_max_n: super::DEFAULT_EGF_ORDER,
            note: None,
            on_failure: None,
            run: m_egf,
        },
        m("TRACE-RISING", "sum q^trace = q(q+2)...(q+2n-2)", 7, trace_rising),
        m("STIRLING1-ID", "sum q^trace = sum 2^(n-k) c(n,k) q^k", 7, stirling1_id),
        m("CONV", "2^n A_n(x,p,q) = sum C(n,k) M^_k M^_(n-k) with M^ = sum x^el p^fixb q^trace", 6, conv),
        m("COR2", "sum x^el (-2)^trace = -2^n (x-1)^(n-1); over fixb = 0 it is -2^n (x + ... + x^(n-1))", 6, cor2),
        m(
            "M-GAMMA",
            "M_n = sum_i s^i sum_j 2^n gamma_(n,i,j)(t/2) (xy)^j (x+y)^(n-i-2j) with nonnegative integer gamma_(n,i,j)",
            6,
            m_gamma,
        ),
        Check {
            note: Some(
                "the fixed-block-free identity weights each matching by 2^trace; the unweighted count is checked against inclusion-exclusion instead",
            ),
            ..m(
                "DER-COUNT",
                "sum over fixed-block-free matchings of 2^trace = (2n)!! sum (-1)^i/i!",
                7,
                der_count,
            )
        },
        m("G-MATCH", "D^n(J) for {J->Jst, s,a,b->2ab, t->0} is J M_n(a,b,s,t); change of variables from the permutation grammar", 7, g_match),
        Check {
            id: "CALLAN-EGF",
            description: "matchings without even-to-odd blocks have EGF sqrt(e^z/(2-e^z))",
            family: Series,
            min_n: 0,
            default_max_n: super::DEFAULT_EGF_ORDER,
            note: None,
            on_failure: None,
            run: even_to_odd_free_egf,
        },
        m("BLOCK-PARTITION", "opener and closer parity classes partition the blocks", 7, block_partition),
        m("PSI-BIJ", "psi, psi1, psi2 generate every matching once and reduce_step inverts them; trace agrees with the reduction chain", 6, psi_bij),
        m("KLAZAR-SYM", "(cr, ne) is symmetric", 6, cr_ne_symmetry),
        m("KZ-SYM", "I_n(x,y,q) = I_n(y,x,q)", 6, cr_ne_symmetry_by_alignments),
        m("COUNT-CATALAN", "noncrossing matchings number C_n", 7, count_catalan),
        m(
            "COUNT-NARAYANA",
            "noncrossing matchings by blocks (i,i+1) and nonnesting matchings by lrp both give N(n,k)",
            7,
            count_narayana,
        ),
        m("COUNT-LNE-FACT", "matchings with no left-nesting number n!", 7, count_lne_fact),
    ]
}

fn m_main(ctx: &Ctx, n: usize) -> Outcome {
    let m = families::m_poly(ctx, n);
    let half = frac(1, 2);
    let from_perms = ctx
        .tally::<PermFamily, 4>(n, |_, s| Some([s.exc, s.drop, s.fix, s.cyc]))
        .weighted(|k| {
            let c = BigRat::from_integer(BigInt::from(2)).pow((k[0] + k[1] + k[2]) as i32) * half.pow(k[3] as i32);
            mono(&[("x", k[0]), ("y", k[1]), ("s", k[2]), ("t", k[3])]).scale(&c)
        });
    same("M_n vs permutation sum", &m, &from_perms)?;
    let a2 = &pow2(n) * &families::eulerian_xpq(ctx, n);
    let by = |ol: bool| {
        ctx.tally::<MatchingFamily, 3>(n, |_, s| {
            Some([if ol { s.olblock } else { s.elblock }, s.fixb, s.trace])
        })
        .weighted(|k| mono(&[("x", k[0]), ("p", k[1]), ("q", k[2])]).scale(&rat(1i64 << k[2])))
    };
    same("2^n A_n(x,p,q) vs sum x^el p^fixb (2q)^trace", &a2, &by(false))?;
    same("2^n A_n(x,p,q) vs sum x^ol p^fixb (2q)^trace", &a2, &by(true))
}

fn m_sym(ctx: &Ctx, n: usize) -> Outcome {
    let m = families::m_poly(ctx, n);
    same(
        "M_n(x,y,s,t) vs M_n(y,x,s,t)",
        &m,
        &subst(&m, &[("x", var("y")), ("y", var("x"))]),
    )
}

/// Sample points `(x, y, s, t)`.
fn m_samples() -> [[BigRat; 4]; 2] {
    let (x, y, s) = (frac(1, 2), rat(2), frac(1, 3));
    [[x.clone(), y.clone(), s.clone(), rat(1)], [x, y, s, frac(1, 2)]]
}

fn m_egf(ctx: &Ctx, n: usize) -> Outcome {
    let m = if n == 0 { int(1) } else { families::m_poly(ctx, n) };
    for [x, y, s, t] in m_samples() {
        let e = |c: BigRat| TruncatedSeries::exp_linear(&c, n);
        let two = rat(2);
        let num = e(&two * &s).scale(&(&y - &x));
        let den = e(&two * &x).scale(&y).sub(&e(&two * &y).scale(&x));
        let series = num
            .div(&den)
            .and_then(|b| b.pow(&(&t / &two)))
            .map_err(|err| err.to_string())?;
        let lhs = eval_at(&m, &[("x", &x), ("y", &y), ("s", &s), ("t", &t)])?;
        same_value(
            &format!("M_{n} at x={x}, y={y}, s={s}, t={t} vs series"),
            lhs,
            series.egf_term(n),
        )?;
    }
    Ok(())
}

fn trace_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<MatchingFamily, 1>(n, |_, s| Some([s.trace])).to_poly(["q"])
}

fn trace_rising(ctx: &Ctx, n: usize) -> Outcome {
    same(
        "sum q^trace vs q(q+2)...(q+2n-2)",
        &trace_poly(ctx, n),
        &rising_factorial(&rat(2), n as u32),
    )
}

fn stirling1_id(ctx: &Ctx, n: usize) -> Outcome {
    let n32 = n as u32;
    let rhs: MVPoly = (1..=n32)
        .map(|k| {
            let c = BigInt::from(2).pow(n32 - k) * stirling1_unsigned(n32, k);
            mono(&[("q", k)]).scale(&BigRat::from_integer(c))
        })
        .sum();
    same("sum q^trace vs sum 2^(n-k) c(n,k) q^k", &trace_poly(ctx, n), &rhs)
}

/// `sum x^el p^fixb q^trace`, with the empty matching for `n = 0`.
fn m_hat(ctx: &Ctx, n: usize) -> MVPoly {
    if n == 0 {
        return int(1);
    }
    ctx.tally::<MatchingFamily, 3>(n, |_, s| Some([s.elblock, s.fixb, s.trace]))
        .to_poly(["x", "p", "q"])
}

fn conv(ctx: &Ctx, n: usize) -> Outcome {
    let lhs = &pow2(n) * &families::eulerian_xpq(ctx, n);
    let rhs = binomial_convolution(n, |k| m_hat(ctx, k), |k| m_hat(ctx, k));
    same("2^n A_n(x,p,q) vs convolution", &lhs, &rhs)
}

fn cor2(ctx: &Ctx, n: usize) -> Outcome {
    let x = var("x");
    let weight = |k: &[u32; 2]| mono(&[("x", k[0])]).scale(&rat(-2).pow(k[1] as i32));
    let all = ctx
        .tally::<MatchingFamily, 2>(n, |_, s| Some([s.elblock, s.trace]))
        .weighted(weight);
    let scale = pow2(n);
    same(
        "sum x^el (-2)^trace vs -2^n (x-1)^(n-1)",
        &all,
        &-(&scale * &(&x - &int(1)).pow(n as u32 - 1)),
    )?;
    let free = ctx
        .tally::<MatchingFamily, 2>(n, |_, s| (s.fixb == 0).then_some([s.elblock, s.trace]))
        .weighted(weight);
    let tail: MVPoly = (1..n as u32).map(|k| x.pow(k)).sum();
    same("fixb = 0 part vs -2^n (x + ... + x^(n-1))", &free, &-(&scale * &tail))
}

fn m_gamma(ctx: &Ctx, n: usize) -> Outcome {
    let m = families::m_poly(ctx, n);
    let mut rebuilt = MVPoly::zero();
    let scale = rat(1i64 << n).recip();
    for (s_part, coeff) in m.coefficients_in(&["s"]) {
        let i = s_part.exponent("s");
        let g = gamma_expand(&coeff, "x", "y").map_err(|err| format!("s^{i} part of M_{n}: {err}"))?;
        ensure(g.degree as usize + i as usize == n, || {
            format!("s^{i} part of M_{n} has degree {} in x, y", g.degree)
        })?;
        for (j, c) in &g.coeffs {
            let gamma = subst(c, &[("t", var("t").scale(&rat(2)))]).scale(&scale);
            ensure(gamma.has_nonnegative_integer_coeffs(), || {
                format!("gamma_({n},{i},{j})(t) = {gamma} is not a nonnegative integer polynomial")
            })?;
        }
        rebuilt = rebuilt + &g.reassemble("x", "y") * &mono(&[("s", i)]);
    }
    same("M_n vs reassembled expansion", &m, &rebuilt)
}

fn der_count(ctx: &Ctx, n: usize) -> Outcome {
    let free = ctx.tally::<MatchingFamily, 1>(n, |_, s| (s.fixb == 0).then_some([s.trace]));
    let weighted: BigInt = free.iter().map(|(k, c)| BigInt::from(c) << k[0]).sum();
    let n32 = n as u32;
    let mut alt = BigRat::zero();
    for i in 0..=n32 {
        let term = BigRat::new(BigInt::one(), factorial(i));
        alt = if i % 2 == 0 { alt + term } else { alt - term };
    }
    let formula = alt * BigRat::from_integer(BigInt::from(2).pow(n32) * factorial(n32));
    same_value(
        "sum over fixed-block-free matchings of 2^trace vs (2n)!! sum (-1)^i/i!",
        BigRat::from_integer(weighted),
        formula,
    )?;
    let mut incl_excl = BigInt::zero();
    for k in 0..=n32 {
        let term = binomial(n32, k) * double_factorial_odd(n32 - k);
        incl_excl = if k % 2 == 0 { incl_excl + term } else { incl_excl - term };
    }
    same_value(
        "fixed-block-free matchings vs sum (-1)^k C(n,k) (2n-2k-1)!!",
        BigInt::from(free.total()),
        incl_excl,
    )
}

fn g_match(ctx: &Ctx, n: usize) -> Outcome {
    let j = var("J");
    let lhs = known::matching_blocks().d_iter(&j, n as u32);
    let sum = ctx
        .tally::<MatchingFamily, 4>(n, |_, s| Some([s.elblock, s.olblock, s.fixb, s.trace]))
        .to_poly(["a", "b", "s", "t"]);
    same("D^n(J) vs J sum a^el b^ol s^fixb t^trace", &lhs, &(&j * &sum))?;
    let from_perm = subst(
        &known::exc_drop_fix_cyc().d_iter(&var("I"), n as u32),
        &[
            ("I", var("J")),
            ("p", var("s").scale(&rat(2))),
            ("q", var("t").scale(&frac(1, 2))),
            ("x", var("a").scale(&rat(2))),
            ("y", var("b").scale(&rat(2))),
        ],
    );
    same("D^n(I) after I=J, p=2s, q=t/2, x=2a, y=2b vs D^n(J)", &from_perm, &lhs)
}

fn even_to_odd_free_egf(ctx: &Ctx, n: usize) -> Outcome {
    let count = if n == 0 {
        1
    } else {
        ctx.tally::<MatchingFamily, 1>(n, |_, s| (s.even_to_odd == 0).then_some([0]))
            .total()
    };
    let ez = TruncatedSeries::exp_linear(&rat(1), n);
    let series = ez
        .div(&TruncatedSeries::constant(rat(2), n).sub(&ez))
        .and_then(|b| b.pow(&frac(1, 2)))
        .map_err(|err| err.to_string())?;
    same_value(
        "matchings without even-to-odd blocks vs sqrt(e^z/(2-e^z))",
        BigRat::from_integer(count.into()),
        series.egf_term(n),
    )
}

fn block_partition(ctx: &Ctx, n: usize) -> Outcome {
    let n32 = n as u32;
    object_failure(ctx.first_failure::<MatchingFamily>(n, |m, s| {
        let checks = [
            ("fixb + elblock + olblock", s.fixb + s.elblock + s.olblock),
            ("fixb + osblock + esblock", s.fixb + s.osblock + s.esblock),
            ("fixb + osblock + olblock", s.fixb + s.osblock + s.olblock),
            ("fixb + esblock + elblock", s.fixb + s.esblock + s.elblock),
        ];
        for (what, v) in checks {
            if v != n32 {
                return Some(format!("{m}: {what} = {v}"));
            }
        }
        (s.even_to_odd > s.esblock.min(s.olblock))
            .then(|| format!("{m}: even_to_odd {} exceeds esblock or olblock", s.even_to_odd))
    }))
}

fn psi_bij(ctx: &Ctx, n: usize) -> Outcome {
    let mut seen = BTreeSet::new();
    for m in Matchings::from_rank(n - 1, 0) {
        let mut children: Vec<(Matching, Step)> = vec![(matching::extend_psi(&m), Step::Psi)];
        for &arc in m.arcs() {
            let e = |r: Result<Matching, _>| r.map_err(|err| format!("{m} at {arc:?}: {err}"));
            children.push((e(matching::extend_psi1(&m, arc))?, Step::Psi1(arc)));
            children.push((e(matching::extend_psi2(&m, arc))?, Step::Psi2(arc)));
        }
        for (child, step) in children {
            ensure(matching::reduce_step(&child) == (m.clone(), step), || {
                format!("reduce_step({child}) does not undo {step:?} on {m}")
            })?;
            ensure(seen.insert(child.clone()), || format!("{child} generated twice"))?;
        }
    }
    same_value(
        "generated matchings vs (2n-1)!!",
        seen.len() as u64,
        Matchings::count(n),
    )?;
    object_failure(ctx.first_failure::<MatchingFamily>(n, |m, s| {
        let chain = matching::trace_indices_by_reduction(m);
        if !chain.contains(&1) {
            return Some(format!("{m}: 1 is not a trace index"));
        }
        (chain.len() as u32 != s.trace).then(|| format!("{m}: trace {} vs reduction chain {chain:?}", s.trace))
    }))
}

fn cr_ne_symmetry(ctx: &Ctx, n: usize) -> Outcome {
    let t = ctx.tally::<MatchingFamily, 2>(n, |_, s| Some([s.cr, s.ne]));
    for (&[cr, ne], c) in t.iter() {
        ensure(t.get(&[ne, cr]) == c, || {
            format!(
                "{c} matchings with cr={cr}, ne={ne} but {} with cr={ne}, ne={cr}",
                t.get(&[ne, cr])
            )
        })?;
    }
    Ok(())
}

fn cr_ne_symmetry_by_alignments(ctx: &Ctx, n: usize) -> Outcome {
    let i = families::i_poly(ctx, n);
    same(
        "I_n(x,y,q) vs I_n(y,x,q)",
        &i,
        &subst(&i, &[("x", var("y")), ("y", var("x"))]),
    )
}

fn count_catalan(ctx: &Ctx, n: usize) -> Outcome {
    let c = ctx
        .tally::<MatchingFamily, 1>(n, |_, s| (s.cr == 0).then_some([0]))
        .total();
    same_value("noncrossing matchings vs C_n", BigInt::from(c), catalan(n as u32))
}

fn count_narayana(ctx: &Ctx, n: usize) -> Outcome {
    let short = ctx.tally::<MatchingFamily, 1>(n, |m, s| {
        (s.cr == 0).then(|| [m.arcs().iter().filter(|&&(i, j)| j == i + 1).count() as u32])
    });
    let by_lrp = ctx.tally::<MatchingFamily, 1>(n, |_, s| (s.ne == 0).then_some([s.lrp]));
    for (what, t) in [
        ("noncrossing matchings with k blocks (i,i+1)", &short),
        ("nonnesting matchings with lrp = k", &by_lrp),
    ] {
        ensure(t.iter().all(|(k, _)| (1..=n as u32).contains(&k[0])), || {
            format!("{what}: k outside 1..n")
        })?;
        for k in 1..=n as u32 {
            same_value(
                &format!("{what}, k = {k}, vs N(n,k)"),
                BigInt::from(t.get(&[k])),
                narayana(n as u32, k),
            )?;
        }
    }
    Ok(())
}

fn count_lne_fact(ctx: &Ctx, n: usize) -> Outcome {
    let c = ctx
        .tally::<MatchingFamily, 1>(n, |_, s| (s.lne == 0).then_some([0]))
        .total();
    same_value(
        "matchings without left-nestings vs n!",
        BigInt::from(c),
        factorial(n as u32),
    )
}
