//! Generating polynomials of the enumerated families, tallied through a
//! [`Ctx`] so that sharding and fault injection apply.

use chordlab_core::algebra::MVPoly;

use crate::ctx::{Ctx, MatchingFamily, PermFamily, SignedFamily, StirlingFamily, WordFamily};

/// `A_n(x,y) = sum x^asc y^des`.
pub fn eulerian_xy(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<PermFamily, 2>(n, |_, s| Some([s.asc, s.des]))
        .to_poly(["x", "y"])
}

/// `A_n(x) = sum x^des`.
pub fn eulerian(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<PermFamily, 1>(n, |_, s| Some([s.des])).to_poly(["x"])
}

/// `A_n(x,p,q) = sum x^exc p^fix q^cyc`.
pub fn eulerian_xpq(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<PermFamily, 3>(n, |_, s| Some([s.exc, s.fix, s.cyc]))
        .to_poly(["x", "p", "q"])
}

/// `d_n(x,q) = sum over derangements of x^exc q^cyc`.
pub fn derangement_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<PermFamily, 2>(n, |_, s| (s.fix == 0).then_some([s.exc, s.cyc]))
        .to_poly(["x", "q"])
}

/// `B_n(x,p,q) = sum x^wexc p^fix q^cyc` over signed permutations.
pub fn b_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<SignedFamily, 3>(n, |_, s| Some([s.wexc, s.fix, s.cyc]))
        .to_poly(["x", "p", "q"])
}

/// `d_n^B(x) = B_n(x,0,1)`.
pub fn type_b_derangement_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<SignedFamily, 1>(n, |_, s| (s.fix == 0).then_some([s.wexc]))
        .to_poly(["x"])
}

/// `M_n(x,y,s,t) = sum x^elblock y^olblock s^fixb t^trace`.
pub fn m_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<MatchingFamily, 4>(n, |_, s| Some([s.elblock, s.olblock, s.fixb, s.trace]))
        .to_poly(["x", "y", "s", "t"])
}

/// `I_n(x,y,q) = sum x^ne y^cr q^al`.
pub fn i_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<MatchingFamily, 3>(n, |_, s| Some([s.ne, s.cr, s.al]))
        .to_poly(["x", "y", "q"])
}

/// `C_n = sum x1^lne x2^lcr x3^nal y1^rrp y2^lrp` over matching words.
pub fn c_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<WordFamily, 5>(n, |_, (_, w)| Some([w.lne, w.lcr, w.nal, w.rrp, w.lrp]))
        .to_poly(["x1", "x2", "x3", "y1", "y2"])
}

/// `NCA_n = sum x^lne y^lcr z^nal` over matching words.
pub fn nca_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<WordFamily, 3>(n, |_, (_, w)| Some([w.lne, w.lcr, w.nal]))
        .to_poly(["x", "y", "z"])
}

/// `NCR_n = sum x^lne y^lcr z^(lrp-1)` over matching words.
pub fn ncr_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<WordFamily, 3>(n, |_, (_, w)| Some([w.lne, w.lcr, w.lrp.saturating_sub(1)]))
        .to_poly(["x", "y", "z"])
}

/// `Q_n(x,y,z) = sum x^asc y^plat z^des` over Stirling permutations.
pub fn q_poly(ctx: &Ctx, n: usize) -> MVPoly {
    ctx.tally::<StirlingFamily, 3>(n, |_, s| Some([s.asc, s.plat, s.des]))
        .to_poly(["x", "y", "z"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordlab_core::algebra::poly;

    #[test]
    fn small_values() {
        let ctx = Ctx::new(2);
        assert_eq!(m_poly(&ctx, 2), poly("s^2*t^2 + 2*t*x*y"));
        assert_eq!(eulerian_xy(&ctx, 2), poly("x + y"));
        assert_eq!(c_poly(&ctx, 1), poly("y2"));
        assert_eq!(q_poly(&ctx, 1), poly("x*y*z"));
        assert_eq!(type_b_derangement_poly(&ctx, 2), poly("4*x + x^2"));
        assert_eq!(derangement_poly(&ctx, 2), poly("q*x"));
    }
}
