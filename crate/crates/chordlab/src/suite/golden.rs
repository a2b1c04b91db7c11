//! Printed small values of the polynomial families.

use chordlab_core::algebra::{poly, MVPoly};
use chordlab_core::grammar::known;
use chordlab_core::stirling::{gamma_table, xi_table};

use super::{mono, same, Check, CheckFamily, Outcome};
use crate::ctx::Ctx;
use crate::families;

pub(super) fn checks() -> Vec<Check> {
    vec![Check {
        id: "GOLDEN",
        description: "printed values of M_n, C_n, NCA_n, d^B_n, xi_n, the G2 iterates, gamma_n and Q_1",
        family: CheckFamily::Golden,
        min_n: 1,
        default_max_n: 6,
        note: None,
        on_failure: None,
        run: golden,
    }]
}

const M: [&str; 3] = [
    "s*t",
    "s^2*t^2 + 2*t*x*y",
    "s^3*t^3 + 6*s*t^2*x*y + 4*t*x^2*y + 4*t*x*y^2",
];

const C: [&str; 2] = ["y2", "x1*y1*y2 + x2*y1*y2 + x3*y2^2"];

pub(super) const NCA: [&str; 4] = [
    "1",
    "x + y + z",
    "x^2 + 4*x*y + y^2 + 4*x*z + 4*y*z + z^2",
    "x^3 + 11*x^2*y + 11*x*y^2 + y^3 + 11*x^2*z + 36*x*y*z + 11*y^2*z + 11*x*z^2 + 11*y*z^2 + z^3",
];

const DB: [&str; 3] = ["x", "4*x + x^2", "8*x + 20*x^2 + x^3"];

const XI: [&str; 2] = ["x", "x^2 + 2*y"];

/// `D_{G2}^n(a) / a` for `n = 1..6`.
const G2: [&str; 6] = [
    "w1",
    "w1^2 + 2*w2",
    "w1^3 + 8*w1*w2 + 6*w3",
    "w1^4 + 22*w1^2*w2 + 16*w2^2 + 42*w1*w3",
    "w1^5 + 52*w1^3*w2 + 136*w1*w2^2 + 192*w1^2*w3 + 180*w2*w3",
    "w1^6 + 114*w1^4*w2 + 720*w1^2*w2^2 + 272*w2^3 + 732*w1^3*w3 + 2304*w1*w2*w3 + 540*w3^2",
];

const GAMMA: [&str; 3] = ["z", "y*z", "y^2*z + 2*x*z^2"];

fn printed<'a>(table: &[&'a str], n: usize) -> Option<&'a str> {
    table.get(n - 1).copied()
}

fn golden(ctx: &Ctx, n: usize) -> Outcome {
    if let Some(m) = printed(&M, n) {
        same(&format!("M_{n}"), &families::m_poly(ctx, n), &poly(m))?;
    }
    if let Some(c) = printed(&C, n) {
        same(&format!("C_{n}"), &families::c_poly(ctx, n), &poly(c))?;
    }
    if let Some(v) = printed(&NCA, n) {
        same(&format!("NCA_{n}"), &families::nca_poly(ctx, n), &poly(v))?;
    }
    if let Some(d) = printed(&DB, n) {
        same(
            &format!("d^B_{n}"),
            &families::type_b_derangement_poly(ctx, n),
            &poly(d),
        )?;
    }
    if let Some(x) = printed(&XI, n) {
        same(&format!("xi_{n}"), &xi_table(n).to_poly(["x", "y", "z"]), &poly(x))?;
    }
    if let Some(g) = printed(&G2, n) {
        let a = MVPoly::var("a");
        let listed = &a * &poly(g);
        same(
            &format!("D_G2^{n}(a)"),
            &known::neighbor_symmetric().d_iter(&a, n as u32),
            &listed,
        )?;
        same(
            &format!("xi_{n} in w1, w2, w3"),
            &xi_table(n).to_poly(["w1", "w2", "w3"]),
            &poly(g),
        )?;
    }
    if let Some(g) = printed(&GAMMA, n) {
        same(
            &format!("gamma_{n}"),
            &gamma_table(n).to_poly(["x", "y", "z"]),
            &poly(g),
        )?;
        let census = ctx
            .tree_census(n, 3)
            .weighted(|h| mono(&[("x", h[2]), ("y", h[1]), ("z", h[0])]));
        same(&format!("gamma_{n} by tree census"), &census, &poly(g))?;
    }
    if n == 1 {
        same("Q_1", &families::q_poly(ctx, 1), &poly("x*y*z"))?;
    }
    Ok(())
}
