//! Checks over matching permutations and their neighbor statistics.

use std::collections::BTreeSet;

use chordlab_core::algebra::{esym_expand, poly, BigRat, MVPoly};
use chordlab_core::grammar::known;
use chordlab_core::stirling::xi_table;
use chordlab_core::words::{self, MatchingWord};

use super::{ensure, object_failure, same, var, Check, CheckFamily, Outcome};
use crate::ctx::{Ctx, MStats, MatchingFamily, StirlingFamily, WordFamily};
use crate::families;

pub(super) fn checks() -> Vec<Check> {
    let m = |id, description, default_max_n, run| Check {
        id,
        description,
        family: CheckFamily::Matchings,
        min_n: 1,
        default_max_n,
        note: None,
        on_failure: None,
        run,
    };
    const COINV: &str = "erratum: coinv counts crossings and alignments (coinv = cr + al), so I_n = sum x^inv y^coinv q^rank fails (n=2: x + y + y*q vs x + y + q); verified ne = inv, al = rank, cr = coinv - rank";
    vec![
        Check {
            note: Some(COINV),
            ..m(
                "MP-BIJ",
                "matchings <-> matching permutations round trip, insertion generator agrees, statistics transfer",
                6,
                mp_bij,
            )
        },
        Check {
            note: Some(COINV),
            ..m(
                "I-STATS",
                "I_n(x,y,q) = sum over words x^inv y^(coinv-rank) q^rank",
                6,
                i_stats,
            )
        },
        m(
            "C-GRAMMAR",
            "D^n(I y2 E) = I E C_(n+1) for the seven-letter neighbor grammar",
            6,
            c_grammar,
        ),
        m(
            "C-EPOS",
            "C_(n+1) = y2 xi_n(w1,w2,w3); NCA_(n+1) = NCR_(n+1) = sum xi_(n;i,j,k) e1^i e2^j e3^k",
            5,
            c_epos,
        ),
        m(
            "C-Q-TRANSFORM",
            "C_n, NCA_n, the (lne,lcr,lrp) and (rrp,lrp) polynomials are monomial transforms of Q_n(x,y,z)",
            6,
            c_q_transform,
        ),
        m("Q-LNE", "sum over matchings x^(n-lne) = Q_n(x)", 7, q_lne),
        m("Q-LRP", "sum over matchings x^(n+1-lrp) = Q_n(x)", 7, q_lrp),
        m(
            "NCA-RECU",
            "NCA_(n+1) = n(x+y+z) NCA_n - (x^2 d/dx + y^2 d/dy + z^2 d/dz) NCA_n, and the printed NCA_1..NCA_4",
            6,
            nca_recu,
        ),
        m(
            "SIX-EULERIAN",
            "the six restricted (lne, lcr, nal, lrp) sums over matchings and words equal A_n(x,y)",
            6,
            six_eulerian,
        ),
    ]
}

fn mp_bij(ctx: &Ctx, n: usize) -> Outcome {
    let n32 = n as u32;
    object_failure(ctx.first_failure::<WordFamily>(n, |(m, w), (ms, ws)| {
        if w.to_matching() != *m {
            return Some(format!("{w} does not map back to {m}"));
        }
        if w.to_string().parse::<MatchingWord>().ok().as_ref() != Some(w) {
            return Some(format!("{w} does not survive its text form"));
        }
        let c = words::neighbor_classify(w);
        let sizes = [c.lne.len(), c.lcr.len(), c.nal.len(), c.rrp.len(), c.lrp.len()].map(|k| k as u32);
        let stats = [ws.lne, ws.lcr, ws.nal, ws.rrp, ws.lrp];
        if sizes != stats {
            return Some(format!(
                "{w}: classification sizes {sizes:?} vs word statistics {stats:?}"
            ));
        }
        let mut all: Vec<u32> = [&c.lne, &c.lcr, &c.nal, &c.rrp, &c.lrp]
            .into_iter()
            .flatten()
            .copied()
            .collect();
        all.sort_unstable();
        if all != (1..2 * n32).collect::<Vec<_>>() {
            return Some(format!("{w}: classification does not partition 1..{}", 2 * n32 - 1));
        }
        if ws.rrp + ws.lrp != n32 || ws.lne + ws.lcr + ws.nal + 1 != n32 || ws.lrp == 0 {
            return Some(format!(
                "{w}: class sizes {stats:?} violate rrp+lrp = n, lne+lcr+nal = n-1, lrp >= 1"
            ));
        }
        let matching = [ms.lne, ms.lcr, ms.nal, ms.rrp, ms.lrp];
        if matching != stats {
            return Some(format!(
                "{w}: word (lne,lcr,nal,rrp,lrp) {stats:?} vs matching {m} {matching:?}"
            ));
        }
        transfer(m, w, ms, ws)
    }))?;
    let generated: BTreeSet<MatchingWord> = words::words_by_insertion(n).into_iter().collect();
    let enumerated: BTreeSet<MatchingWord> = words::enumerate_words(n).collect();
    ensure(generated == enumerated, || {
        let diff = generated.symmetric_difference(&enumerated).next();
        format!(
            "insertion generator differs from enumeration at {}",
            diff.map(|w| w.to_string()).unwrap_or_default()
        )
    })
}

fn transfer(m: &chordlab_core::Matching, w: &MatchingWord, ms: &MStats, ws: &words::WordStats) -> Option<String> {
    let ok = ms.ne == ws.inv && ms.al == ws.rank && ws.coinv >= ws.rank && ms.cr == ws.coinv - ws.rank;
    (!ok).then(|| {
        format!(
            "{w}: inv={} coinv={} rank={} vs {m}: ne={} cr={} al={}",
            ws.inv, ws.coinv, ws.rank, ms.ne, ms.cr, ms.al
        )
    })
}

fn i_stats(ctx: &Ctx, n: usize) -> Outcome {
    let words = ctx
        .tally::<WordFamily, 3>(n, |_, (_, w)| Some([w.inv, w.coinv.saturating_sub(w.rank), w.rank]))
        .to_poly(["x", "y", "q"]);
    same(
        "I_n(x,y,q) vs sum x^inv y^(coinv-rank) q^rank",
        &families::i_poly(ctx, n),
        &words,
    )
}

fn c_grammar(ctx: &Ctx, n: usize) -> Outcome {
    let seed = poly("I*y2*E");
    let lhs = known::neighbor().d_iter(&seed, n as u32);
    let rhs = &poly("I*E") * &families::c_poly(ctx, n + 1);
    same("D^n(I y2 E) vs I E C_(n+1)", &lhs, &rhs)
}

fn w_basis() -> [MVPoly; 3] {
    [
        poly("x1*y1 + x2*y1 + x3*y2"),
        poly("x1*x2*y1^2 + x1*x3*y1*y2 + x2*x3*y1*y2"),
        poly("x1*x2*x3*y1^2*y2"),
    ]
}

fn c_epos(ctx: &Ctx, n: usize) -> Outcome {
    let xi = xi_table(n);
    let [w1, w2, w3] = w_basis();
    let c = families::c_poly(ctx, n + 1);
    same(
        "C_(n+1) vs y2 xi_n(w1,w2,w3)",
        &c,
        &(&var("y2") * &xi.evaluate([&w1, &w2, &w3])),
    )?;
    let nca = families::nca_poly(ctx, n + 1);
    same("NCA_(n+1) vs NCR_(n+1)", &nca, &families::ncr_poly(ctx, n + 1))?;
    let e = esym_expand(&nca, ["x", "y", "z"]).map_err(|err| format!("NCA_(n+1): {err}"))?;
    ensure(e.is_nonnegative(), || {
        "NCA_(n+1) has a negative elementary coefficient".into()
    })?;
    let from_e: Vec<((u32, u32, u32), BigRat)> = e.coeffs.clone();
    let from_xi: Vec<((u32, u32, u32), BigRat)> =
        xi.iter().map(|(k, c)| (k, BigRat::from_integer(c.clone()))).collect();
    let sorted = |mut v: Vec<((u32, u32, u32), BigRat)>| {
        v.sort();
        v
    };
    ensure(sorted(from_e) == sorted(from_xi), || {
        format!("elementary coefficients of NCA_(n+1) differ from xi_n: {:?}", e.coeffs)
    })
}

fn q_poly_checked(ctx: &Ctx, n: usize) -> Result<MVPoly, String> {
    object_failure(ctx.first_failure::<StirlingFamily>(n, |t, s| {
        (s.asc == 0 || s.plat == 0 || s.des == 0).then(|| format!("{t}: asc={} plat={} des={}", s.asc, s.plat, s.des))
    }))?;
    Ok(families::q_poly(ctx, n))
}

fn c_q_transform(ctx: &Ctx, n: usize) -> Outcome {
    let q = q_poly_checked(ctx, n)?;
    let err = |e: words::WordError| e.to_string();
    same(
        "C_n vs transform of Q_n",
        &families::c_poly(ctx, n),
        &words::c_from_q(&q, n).map_err(err)?,
    )?;
    same(
        "NCA_n vs transform of Q_n",
        &families::nca_poly(ctx, n),
        &words::nca_from_q(&q, n).map_err(err)?,
    )?;
    let lll = ctx
        .tally::<WordFamily, 3>(n, |_, (_, w)| Some([w.lne, w.lcr, w.lrp]))
        .to_poly(["x1", "x2", "y2"]);
    same(
        "sum x1^lne x2^lcr y2^lrp vs transform of Q_n",
        &lll,
        &words::lne_lcr_lrp_from_q(&q, n).map_err(err)?,
    )?;
    let rl = ctx
        .tally::<WordFamily, 2>(n, |_, (_, w)| Some([w.rrp, w.lrp]))
        .to_poly(["y1", "y2"]);
    same(
        "sum y1^rrp y2^lrp vs transform of Q_n",
        &rl,
        &words::rrp_lrp_from_q(&q, n).map_err(err)?,
    )
}

fn q_by_des(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<StirlingFamily, 1>(n, |_, s| Some([s.des])).to_poly(["x"])
}

fn q_lne(ctx: &Ctx, n: usize) -> Outcome {
    let n32 = n as u32;
    object_failure(ctx.first_failure::<MatchingFamily>(n, |m, s| {
        (s.lne >= n32).then(|| format!("{m}: lne = {} is not below n", s.lne))
    }))?;
    let lhs = ctx
        .tally::<MatchingFamily, 1>(n, |_, s| Some([n32 - s.lne]))
        .to_poly(["x"]);
    same("sum x^(n-lne) vs Q_n(x)", &lhs, &q_by_des(ctx, n))
}

fn q_lrp(ctx: &Ctx, n: usize) -> Outcome {
    let n32 = n as u32;
    object_failure(ctx.first_failure::<MatchingFamily>(n, |m, s| {
        (s.lrp == 0 || s.lrp > n32).then(|| format!("{m}: lrp = {} outside 1..n", s.lrp))
    }))?;
    let lhs = ctx
        .tally::<MatchingFamily, 1>(n, |_, s| Some([n32 + 1 - s.lrp]))
        .to_poly(["x"]);
    same("sum x^(n+1-lrp) vs Q_n(x)", &lhs, &q_by_des(ctx, n))
}

fn nca_recu(ctx: &Ctx, n: usize) -> Outcome {
    let cur = families::nca_poly(ctx, n);
    let next = families::nca_poly(ctx, n + 1);
    for (k, p) in [(n, &cur), (n + 1, &next)] {
        if let Some(listed) = super::golden::NCA.get(k - 1) {
            same(&format!("NCA_{k} vs printed value"), p, &poly(listed))?;
        }
    }
    let sum = poly("x + y + z").scale(&BigRat::from_integer((n as i64).into()));
    let mut rhs = &sum * &cur;
    for v in ["x", "y", "z"] {
        rhs = rhs - &var(v).pow(2) * &cur.partial(v);
    }
    same("NCA_(n+1) vs recursion", &next, &rhs)
}

fn six_eulerian(ctx: &Ctx, n: usize) -> Outcome {
    object_failure(ctx.first_failure::<WordFamily>(n, |(m, w), (ms, ws)| {
        let a = [ms.lne, ms.lcr, ms.nal, ms.lrp];
        let b = [ws.lne, ws.lcr, ws.nal, ws.lrp];
        if a != b {
            return Some(format!(
                "word {w}: (lne,lcr,nal,lrp) = {b:?} but its matching {m} has {a:?}"
            ));
        }
        (ws.lrp == 0).then(|| format!("word {w} has no LR pair"))
    }))?;
    let a = families::eulerian_xy(ctx, n);
    type Form = (&'static str, fn([u32; 4]) -> Option<[u32; 2]>);
    let forms: [Form; 6] = [
        ("nal=0: x^lne y^lcr", |[lne, lcr, nal, _]| {
            (nal == 0).then_some([lne, lcr])
        }),
        ("lcr=0: x^lne y^nal", |[lne, lcr, nal, _]| {
            (lcr == 0).then_some([lne, nal])
        }),
        ("lne=0: x^lcr y^nal", |[lne, lcr, nal, _]| {
            (lne == 0).then_some([lcr, nal])
        }),
        ("lne=0: x^lcr y^(lrp-1)", |[lne, lcr, _, lrp]| {
            (lne == 0).then_some([lcr, lrp.saturating_sub(1)])
        }),
        ("lcr=0: x^lne y^(lrp-1)", |[lne, lcr, _, lrp]| {
            (lcr == 0).then_some([lne, lrp.saturating_sub(1)])
        }),
        ("lrp=1: x^lne y^lcr", |[lne, lcr, _, lrp]| {
            (lrp == 1).then_some([lne, lcr])
        }),
    ];
    for (what, f) in forms {
        let over_m = ctx
            .tally::<MatchingFamily, 2>(n, |_, s| f([s.lne, s.lcr, s.nal, s.lrp]))
            .to_poly(["x", "y"]);
        same(&format!("matchings, {what}, vs A_n(x,y)"), &over_m, &a)?;
        let over_w = ctx
            .tally::<WordFamily, 2>(n, |_, (_, w)| f([w.lne, w.lcr, w.nal, w.lrp]))
            .to_poly(["x", "y"]);
        same(&format!("words, {what}, vs A_n(x,y)"), &over_w, &a)?;
    }
    Ok(())
}
