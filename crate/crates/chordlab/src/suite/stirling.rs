//! Checks over Stirling permutations, increasing plane trees and the
//! `xi`/`gamma` coefficient tables.

use chordlab_core::algebra::{esym_expand, poly, BigRat, MVPoly};
use chordlab_core::grammar::known;
use chordlab_core::stirling::{gamma_table, xi_table, CoeffTable};

use super::{ensure, mono, same, subst, var, Check, CheckFamily, Outcome};
use crate::ctx::Ctx;
use crate::families;

pub(super) fn checks() -> Vec<Check> {
    let c = |id, description, family, default_max_n, run| Check {
        id,
        description,
        family,
        min_n: 1,
        default_max_n,
        note: None,
        on_failure: None,
        run,
    };
    use CheckFamily::{Stirling, Tables, Trees};
    vec![
        c(
            "XI-TREE",
            "0-1-2-3 increasing plane trees on [n+1] by (deg1, deg2, deg3) give xi_n, which satisfies its derivative recursion",
            Trees,
            7,
            xi_tree,
        ),
        c(
            "GAMMA-TREE",
            "0-1-2-3 increasing plane trees on [n] by (deg2, deg1, leaves) give gamma_n, which satisfies its derivative recursion",
            Trees,
            7,
            gamma_tree,
        ),
        c("XI-GAMMA", "xi_(n;i,j,k) = gamma_(n+1;j,i,n+1-i-j-k)", Tables, 7, xi_gamma),
        c("Q-DUMONT", "Q_(n+1) = xyz (d/dx + d/dy + d/dz) Q_n with Q_1 = xyz", Stirling, 6, q_derivative_recursion),
        c("Q-SYM", "Q_n(x,y,z) is invariant under all permutations of x, y, z", Stirling, 6, q_sym),
        c(
            "Q-GRAMMAR",
            "D^n(x) = Q_n for {x,y,z -> xyz} and D_H^(n-1)(w) = Q_n for {u -> 3w, v -> 2uw, w -> vw}",
            Stirling,
            6,
            q_grammar,
        ),
        c(
            "Q-CHEN22",
            "Q_n = sum gamma_(n;i,j,k) e1^i e2^j e3^k",
            Stirling,
            6,
            q_elementary_gamma,
        ),
    ]
}

fn xi_recursion(xi: &MVPoly) -> MVPoly {
    let (x, y, z) = (var("x"), var("y"), var("z"));
    &x * xi
        + &(&int2() * &y) * &xi.partial("x")
        + &(&(&x * &y) + &(&poly("3") * &z)) * &xi.partial("y")
        + &(&int2() * &(&x * &z)) * &xi.partial("z")
}

fn gamma_recursion(g: &MVPoly) -> MVPoly {
    let (x, y, z) = (var("x"), var("y"), var("z"));
    &(&poly("3") * &z) * &g.partial("x") + &(&int2() * &(&x * &z)) * &g.partial("y") + &(&y * &z) * &g.partial("z")
}

fn int2() -> MVPoly {
    poly("2")
}

fn xi_tree(ctx: &Ctx, n: usize) -> Outcome {
    let census = ctx
        .tree_census(n + 1, 3)
        .weighted(|&[_, d1, d2, d3]| mono(&[("x", d1), ("y", d2), ("z", d3)]));
    let xi = xi_table(n).to_poly(["x", "y", "z"]);
    same("trees on [n+1] by (deg1, deg2, deg3) vs xi_n", &census, &xi)?;
    same(
        "xi_(n+1) vs recursion",
        &xi_table(n + 1).to_poly(["x", "y", "z"]),
        &xi_recursion(&xi),
    )
}

fn gamma_tree(ctx: &Ctx, n: usize) -> Outcome {
    let census = ctx
        .tree_census(n, 3)
        .weighted(|&[leaves, d1, d2, _]| mono(&[("x", d2), ("y", d1), ("z", leaves)]));
    let g = gamma_table(n).to_poly(["x", "y", "z"]);
    same("trees on [n] by (deg2, deg1, leaves) vs gamma_n", &census, &g)?;
    same(
        "gamma_(n+1) vs recursion",
        &gamma_table(n + 1).to_poly(["x", "y", "z"]),
        &gamma_recursion(&g),
    )
}

fn xi_gamma(_: &Ctx, n: usize) -> Outcome {
    let xi = xi_table(n);
    let gamma = gamma_table(n + 1);
    let m = n as u32 + 1;
    let mut mapped = CoeffTable::new(n + 1);
    for ((i, j, k), c) in xi.iter() {
        ensure(i + j + k <= m, || format!("xi key ({i},{j},{k}) has i+j+k > n+1"))?;
        mapped.add((j, i, m - i - j - k), c.clone());
    }
    ensure(mapped == gamma, || {
        let diff = gamma
            .iter()
            .find(|(key, c)| mapped.get(*key) != **c)
            .map(|(key, _)| key)
            .or_else(|| {
                mapped
                    .iter()
                    .find(|(key, c)| gamma.get(*key) != **c)
                    .map(|(key, _)| key)
            });
        format!("index bijection fails at gamma key {diff:?}")
    })
}

fn q_derivative_recursion(ctx: &Ctx, n: usize) -> Outcome {
    let q = families::q_poly(ctx, n);
    if n == 1 {
        same("Q_1 vs xyz", &q, &poly("x*y*z"))?;
    }
    let d = q.partial("x") + q.partial("y") + q.partial("z");
    same(
        "Q_(n+1) vs xyz (dx + dy + dz) Q_n",
        &families::q_poly(ctx, n + 1),
        &(&poly("x*y*z") * &d),
    )
}

fn q_sym(ctx: &Ctx, n: usize) -> Outcome {
    let q = families::q_poly(ctx, n);
    let orders = [
        ["x", "z", "y"],
        ["y", "x", "z"],
        ["y", "z", "x"],
        ["z", "x", "y"],
        ["z", "y", "x"],
    ];
    for [a, b, c] in orders {
        let moved = subst(&q, &[("x", var(a)), ("y", var(b)), ("z", var(c))]);
        same(&format!("Q_n vs Q_n({a},{b},{c})"), &q, &moved)?;
    }
    Ok(())
}

fn elementary() -> [(&'static str, MVPoly); 3] {
    [
        ("u", poly("x + y + z")),
        ("v", poly("x*y + y*z + z*x")),
        ("w", poly("x*y*z")),
    ]
}

fn q_grammar(ctx: &Ctx, n: usize) -> Outcome {
    let q = families::q_poly(ctx, n);
    let direct = known::stirling_permutations().d_iter(&var("x"), n as u32);
    same("D^n(x) vs Q_n", &direct, &q)?;
    let h = known::stirling_elementary().d_iter(&var("w"), n as u32 - 1);
    same("D_H^(n-1)(w) at u,v,w = e1,e2,e3 vs Q_n", &subst(&h, &elementary()), &q)
}

fn q_elementary_gamma(ctx: &Ctx, n: usize) -> Outcome {
    let q = families::q_poly(ctx, n);
    let gamma = gamma_table(n);
    let [(_, e1), (_, e2), (_, e3)] = elementary();
    same("Q_n vs sum gamma e1^i e2^j e3^k", &q, &gamma.evaluate([&e1, &e2, &e3]))?;
    let h = known::stirling_elementary().d_iter(&var("w"), n as u32 - 1);
    same("D_H^(n-1)(w) vs gamma_n(u,v,w)", &h, &gamma.to_poly(["u", "v", "w"]))?;
    let e = esym_expand(&q, ["x", "y", "z"]).map_err(|err| format!("Q_n: {err}"))?;
    let mut from_e = e.coeffs.clone();
    from_e.sort();
    let from_gamma: Vec<((u32, u32, u32), BigRat)> = gamma
        .iter()
        .map(|(k, c)| (k, BigRat::from_integer(c.clone())))
        .collect();
    ensure(from_e == from_gamma, || {
        format!("elementary coefficients of Q_n differ from gamma_n: {:?}", e.coeffs)
    })
}
