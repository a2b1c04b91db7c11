//! Perfect matchings on `[2n]`: enumeration, block classes, pairwise and
//! neighbor statistics, the three-way generation step and trace indices.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::MVPoly;
use crate::radix::MixedRadix;
use crate::tally::Tally;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("arcs do not cover 1..{0} exactly once")]
    NotPerfect(usize),
    #[error("arc ({0},{1}) is not in the matching")]
    ArcNotFound(u32, u32),
    #[error("cannot parse matching: {0}")]
    Parse(String),
}

/// A perfect matching, stored as arcs `(opener, closer)` sorted by closer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    arcs: Vec<(u32, u32)>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { arcs: Vec::new() }
    }

    /// Builds a matching from unordered pairs in any order.
    pub fn from_arcs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, MatchingError> {
        let arcs: Vec<(u32, u32)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let size = 2 * arcs.len();
        let mut seen = alloc::vec![false; size + 1];
        for &(a, b) in &arcs {
            for v in [a, b] {
                let v = v as usize;
                if v == 0 || v > size || seen[v] {
                    return Err(MatchingError::NotPerfect(size));
                }
                seen[v] = true;
            }
        }
        Ok(Self::normalized(arcs))
    }

    fn normalized(mut arcs: Vec<(u32, u32)>) -> Self {
        arcs.sort_unstable_by_key(|&(_, j)| j);
        Matching { arcs }
    }

    fn from_partner(partner: &[u32]) -> Self {
        // partner is 1-indexed with a dummy slot 0
        let arcs = (1..partner.len() as u32)
            .filter(|&v| partner[v as usize] < v)
            .map(|v| (partner[v as usize], v))
            .collect();
        Matching { arcs }
    }

    /// Number of arcs.
    pub fn order(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn contains_arc(&self, arc: (u32, u32)) -> bool {
        self.arcs.contains(&(arc.0.min(arc.1), arc.0.max(arc.1)))
    }

    /// `partner[v]` for `1 <= v <= 2n`; slot 0 is unused.
    pub fn partners(&self) -> Vec<u32> {
        let mut p = alloc::vec![0; 2 * self.arcs.len() + 1];
        for &(i, j) in &self.arcs {
            p[i as usize] = j;
            p[j as usize] = i;
        }
        p
    }

    /// `true` at index `v` when `v` is an opener; slot 0 unused.
    pub fn opener_mask(&self) -> Vec<bool> {
        let mut m = alloc::vec![false; 2 * self.arcs.len() + 1];
        for &(i, _) in &self.arcs {
            m[i as usize] = true;
        }
        m
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in &self.arcs {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

impl core::str::FromStr for Matching {
    type Err = MatchingError;

    /// Parses `(i1,j1)(i2,j2)...`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || MatchingError::Parse(compact.clone());
        let mut pairs = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let (a, b) = body[..close].split_once(',').ok_or_else(bad)?;
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: u32 = b.parse().map_err(|_| bad())?;
            pairs.push((a, b));
            rest = &body[close + 1..];
        }
        Matching::from_arcs(pairs)
    }
}

/// Lexicographic stream over matchings of `[2n]`. The digit at each step
/// chooses which of the larger unmatched vertices the smallest unmatched
/// vertex pairs with.
#[derive(Debug, Clone)]
pub struct Matchings {
    n: usize,
    radix: MixedRadix,
}

impl Matchings {
    pub fn from_rank(n: usize, rank: u64) -> Self {
        let bases = (0..n as u32).map(|k| 2 * (n as u32 - k) - 1).collect();
        Matchings {
            n,
            radix: MixedRadix::from_rank(bases, rank),
        }
    }

    /// `(2n-1)!!`.
    pub fn count(n: usize) -> u64 {
        (1..=n as u64).map(|k| 2 * k - 1).product()
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        let digits = self.radix.next_digits()?;
        let mut free: Vec<u32> = (1..=2 * self.n as u32).collect();
        let mut partner = alloc::vec![0u32; 2 * self.n + 1];
        for &d in digits {
            let a = free.remove(0);
            let b = free.remove(d as usize);
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        Some(Matching::from_partner(&partner))
    }
}

pub fn enumerate_matchings(n: usize) -> Matchings {
    Matchings::from_rank(n, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CloserClass {
    Fixed,
    EvenLarger,
    OddLarger,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpenerClass {
    Fixed,
    EvenSmaller,
    OddSmaller,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockClass {
    pub closer_class: CloserClass,
    pub opener_class: OpenerClass,
}

pub fn is_fixed_block((i, j): (u32, u32)) -> bool {
    i % 2 == 1 && j == i + 1
}

pub fn classify_block(arc: (u32, u32)) -> BlockClass {
    let (i, j) = arc;
    if is_fixed_block(arc) {
        return BlockClass {
            closer_class: CloserClass::Fixed,
            opener_class: OpenerClass::Fixed,
        };
    }
    BlockClass {
        closer_class: if j % 2 == 0 {
            CloserClass::EvenLarger
        } else {
            CloserClass::OddLarger
        },
        opener_class: if i % 2 == 0 {
            OpenerClass::EvenSmaller
        } else {
            OpenerClass::OddSmaller
        },
    }
}

fn count_arcs(m: &Matching, pred: impl Fn((u32, u32)) -> bool) -> u32 {
    m.arcs.iter().filter(|&&a| pred(a)).count() as u32
}

pub fn fixb(m: &Matching) -> u32 {
    count_arcs(m, is_fixed_block)
}

/// Even closer, not a fixed block.
pub fn elblock(m: &Matching) -> u32 {
    count_arcs(m, |a| a.1 % 2 == 0 && !is_fixed_block(a))
}

/// Odd closer.
pub fn olblock(m: &Matching) -> u32 {
    count_arcs(m, |a| a.1 % 2 == 1)
}

/// Even opener.
pub fn esblock(m: &Matching) -> u32 {
    count_arcs(m, |a| a.0 % 2 == 0)
}

/// Odd opener, not a fixed block.
pub fn osblock(m: &Matching) -> u32 {
    count_arcs(m, |a| a.0 % 2 == 1 && !is_fixed_block(a))
}

/// Even opener and odd closer.
pub fn even_to_odd(m: &Matching) -> u32 {
    count_arcs(m, |a| a.0 % 2 == 0 && a.1 % 2 == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BlockStats {
    pub fixb: u32,
    pub elblock: u32,
    pub olblock: u32,
    pub esblock: u32,
    pub osblock: u32,
    pub even_to_odd: u32,
}

pub fn block_stats(m: &Matching) -> BlockStats {
    BlockStats {
        fixb: fixb(m),
        elblock: elblock(m),
        olblock: olblock(m),
        esblock: esblock(m),
        osblock: osblock(m),
        even_to_odd: even_to_odd(m),
    }
}

/// Counts ordered arc pairs `(a, b)` with `a.0 < b.0` satisfying `pred`.
fn count_pairs(m: &Matching, pred: impl Fn((u32, u32), (u32, u32)) -> bool) -> u32 {
    let mut by_opener = m.arcs.clone();
    by_opener.sort_unstable();
    let mut count = 0;
    for (k, &a) in by_opener.iter().enumerate() {
        for &b in &by_opener[k + 1..] {
            if pred(a, b) {
                count += 1;
            }
        }
    }
    count
}

fn crosses((_, j1): (u32, u32), (i2, j2): (u32, u32)) -> bool {
    i2 < j1 && j1 < j2
}

fn nests((_, j1): (u32, u32), (_, j2): (u32, u32)) -> bool {
    j2 < j1
}

fn aligned((_, j1): (u32, u32), (i2, _): (u32, u32)) -> bool {
    j1 < i2
}

pub fn cr(m: &Matching) -> u32 {
    count_pairs(m, crosses)
}

pub fn ne(m: &Matching) -> u32 {
    count_pairs(m, nests)
}

pub fn al(m: &Matching) -> u32 {
    count_pairs(m, aligned)
}

/// Nestings whose openers are adjacent.
pub fn lne(m: &Matching) -> u32 {
    count_pairs(m, |a, b| a.0 + 1 == b.0 && nests(a, b))
}

/// Crossings whose openers are adjacent.
pub fn lcr(m: &Matching) -> u32 {
    count_pairs(m, |a, b| a.0 + 1 == b.0 && crosses(a, b))
}

/// Alignments where the first closer is immediately followed by the second
/// opener.
pub fn nal(m: &Matching) -> u32 {
    count_pairs(m, |a, b| a.1 + 1 == b.0)
}

/// Nestings whose closers are adjacent.
pub fn rne(m: &Matching) -> u32 {
    count_pairs(m, |a, b| nests(a, b) && b.1 + 1 == a.1)
}

/// Crossings whose closers are adjacent.
pub fn rcr(m: &Matching) -> u32 {
    count_pairs(m, |a, b| crosses(a, b) && a.1 + 1 == b.1)
}

/// Positions `i` with `i` an opener and `i + 1` a closer.
pub fn lrp(m: &Matching) -> u32 {
    let open = m.opener_mask();
    (1..open.len().saturating_sub(1))
        .filter(|&i| open[i] && !open[i + 1])
        .count() as u32
}

/// Positions `i` with `i` and `i + 1` both closers.
pub fn rrp(m: &Matching) -> u32 {
    let open = m.opener_mask();
    (1..open.len().saturating_sub(1))
        .filter(|&i| !open[i] && !open[i + 1])
        .count() as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairwiseStats {
    pub cr: u32,
    pub ne: u32,
    pub al: u32,
    pub lne: u32,
    pub lcr: u32,
    pub nal: u32,
    pub rne: u32,
    pub rcr: u32,
    pub lrp: u32,
    pub rrp: u32,
}

pub fn pairwise_stats(m: &Matching) -> PairwiseStats {
    PairwiseStats {
        cr: cr(m),
        ne: ne(m),
        al: al(m),
        lne: lne(m),
        lcr: lcr(m),
        nal: nal(m),
        rne: rne(m),
        rcr: rcr(m),
        lrp: lrp(m),
        rrp: rrp(m),
    }
}

/// Appends the fixed block `(2n+1, 2n+2)`.
pub fn extend_psi(m: &Matching) -> Matching {
    let top = 2 * m.order() as u32;
    let mut arcs = m.arcs.clone();
    arcs.push((top + 1, top + 2));
    Matching { arcs }
}

fn split(m: &Matching, arc: (u32, u32), swap: bool) -> Result<Matching, MatchingError> {
    let arc = (arc.0.min(arc.1), arc.0.max(arc.1));
    let pos = m
        .arcs
        .iter()
        .position(|&a| a == arc)
        .ok_or(MatchingError::ArcNotFound(arc.0, arc.1))?;
    let top = 2 * m.order() as u32;
    let (first, second) = if swap { (arc.1, arc.0) } else { arc };
    let mut arcs = m.arcs.clone();
    arcs.remove(pos);
    arcs.push((first, top + 1));
    arcs.push((second, top + 2));
    Ok(Matching::normalized(arcs))
}

/// Replaces `(i,j)` by `(i, 2n+1)(j, 2n+2)`.
pub fn extend_psi1(m: &Matching, arc: (u32, u32)) -> Result<Matching, MatchingError> {
    split(m, arc, false)
}

/// Replaces `(i,j)` by `(j, 2n+1)(i, 2n+2)`.
pub fn extend_psi2(m: &Matching, arc: (u32, u32)) -> Result<Matching, MatchingError> {
    split(m, arc, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// The last block was the fixed block `(2n-1, 2n)`.
    Psi,
    /// Undoes `extend_psi1` applied to the given arc.
    Psi1((u32, u32)),
    /// Undoes `extend_psi2` applied to the given arc.
    Psi2((u32, u32)),
}

/// Deletes the entries `2n-1, 2n`, or contracts the arcs through them.
/// Panics on the empty matching.
pub fn reduce_step(m: &Matching) -> (Matching, Step) {
    let n = m.order() as u32;
    assert!(n > 0, "cannot reduce the empty matching");
    let p = m.partners();
    let a = p[2 * n as usize - 1];
    if a == 2 * n {
        let mut arcs = m.arcs.clone();
        arcs.pop();
        return (Matching { arcs }, Step::Psi);
    }
    let b = p[2 * n as usize];
    let arc = (a.min(b), a.max(b));
    let mut arcs: Vec<(u32, u32)> = m.arcs.iter().copied().filter(|&(_, j)| j < 2 * n - 1).collect();
    arcs.push(arc);
    let step = if a < b { Step::Psi1(arc) } else { Step::Psi2(arc) };
    (Matching::normalized(arcs), step)
}

/// Trace indices by walking the full reduction chain and collecting the
/// openers of fixed blocks at every stage.
pub fn trace_indices_by_reduction(m: &Matching) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    let mut cur = m.clone();
    loop {
        out.extend(cur.arcs.iter().filter(|&&a| is_fixed_block(a)).map(|a| a.0));
        if cur.order() == 0 {
            return out;
        }
        cur = reduce_step(&cur).0;
    }
}

/// Trace indices in linear time. Deletion never creates a fixed block, so
/// only the initial fixed blocks and the contracted arcs need inspecting.
pub fn trace_indices(m: &Matching) -> BTreeSet<u32> {
    let mut p = m.partners();
    let mut out: BTreeSet<u32> = m.arcs.iter().filter(|&&a| is_fixed_block(a)).map(|a| a.0).collect();
    for k in (1..=m.order()).rev() {
        let a = p[2 * k - 1];
        if a as usize == 2 * k {
            continue;
        }
        let b = p[2 * k];
        let (lo, hi) = (a.min(b), a.max(b));
        p[lo as usize] = hi;
        p[hi as usize] = lo;
        if is_fixed_block((lo, hi)) {
            out.insert(lo);
        }
    }
    out
}

pub fn trace(m: &Matching) -> u32 {
    trace_indices(m).len() as u32
}

/// `M_n(x,y,s,t) = sum x^elblock y^olblock s^fixb t^trace`.
pub fn m_poly(n: usize) -> MVPoly {
    enumerate_matchings(n)
        .map(|m| [elblock(&m), olblock(&m), fixb(&m), trace(&m)])
        .collect::<Tally<4>>()
        .to_poly(["x", "y", "s", "t"])
}

/// `I_n(x,y,q) = sum x^ne y^cr q^al`.
pub fn i_poly(n: usize) -> MVPoly {
    enumerate_matchings(n)
        .map(|m| [ne(&m), cr(&m), al(&m)])
        .collect::<Tally<3>>()
        .to_poly(["x", "y", "q"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{poly, rat, rising_factorial};
    use alloc::string::ToString;
    use alloc::vec;

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let x = m("(2,4)(5,7)(6,8)(3,9)(1,10)");
        assert_eq!(x.to_string(), "(2,4)(5,7)(6,8)(3,9)(1,10)");
        assert_eq!(m("(4,1) (3,2)").to_string(), "(2,3)(1,4)");
        assert!("(1,2)(2,3)".parse::<Matching>().is_err());
        assert!("(1,2".parse::<Matching>().is_err());
        assert_eq!("".parse::<Matching>().unwrap(), Matching::empty());
    }

    #[test]
    fn enumeration() {
        let one: Vec<_> = enumerate_matchings(1).map(|x| x.to_string()).collect();
        assert_eq!(one, vec!["(1,2)"]);
        let two: Vec<_> = enumerate_matchings(2).map(|x| x.to_string()).collect();
        assert_eq!(two, vec!["(1,2)(3,4)", "(1,3)(2,4)", "(2,3)(1,4)"]);
        assert_eq!(enumerate_matchings(4).count(), 105);
        assert_eq!(enumerate_matchings(0).count(), 1);
        let all: Vec<_> = enumerate_matchings(4).collect();
        for r in [0u64, 17, 104] {
            assert_eq!(Matchings::from_rank(4, r).next().unwrap(), all[r as usize]);
        }
    }

    #[test]
    fn block_examples() {
        let s = block_stats(&m("(1,2)(3,4)"));
        assert_eq!((s.fixb, s.elblock, s.olblock), (2, 0, 0));
        let s = block_stats(&m("(2,3)(1,4)"));
        assert_eq!((s.fixb, s.elblock, s.olblock, s.esblock, s.osblock), (0, 1, 1, 1, 1));
        let free: Vec<usize> = (0..=4)
            .map(|n| enumerate_matchings(n).filter(|x| even_to_odd(x) == 0).count())
            .collect();
        assert_eq!(free, vec![1, 1, 2, 7, 35]);
    }

    #[test]
    fn pairwise_examples() {
        let s = pairwise_stats(&m("(2,3)(1,4)"));
        assert_eq!((s.ne, s.lne, s.cr, s.al, s.lrp), (1, 1, 0, 0, 1));
        let s = pairwise_stats(&m("(1,3)(2,4)"));
        assert_eq!((s.cr, s.lcr, s.ne, s.lrp, s.rrp), (1, 1, 0, 1, 1));
        let s = pairwise_stats(&m("(1,2)(3,4)"));
        assert_eq!((s.al, s.nal, s.lrp, s.rrp), (1, 1, 2, 0));
        assert_eq!(rcr(&m("(1,3)(2,4)")), 1);
        assert_eq!(rne(&m("(2,3)(1,4)")), 1);
        assert_eq!(rne(&m("(1,3)(2,4)")), 0);
    }

    #[test]
    fn noncrossing_counts() {
        let mut by_fixed = [0u32; 4];
        for x in enumerate_matchings(3).filter(|x| cr(x) == 0) {
            let adjacent = x.arcs().iter().filter(|a| a.1 == a.0 + 1).count();
            by_fixed[adjacent] += 1;
        }
        assert_eq!(by_fixed, [0, 1, 3, 1]);
    }

    #[test]
    fn generation_steps() {
        assert_eq!(extend_psi(&m("(1,2)")), m("(1,2)(3,4)"));
        assert_eq!(extend_psi1(&m("(1,2)"), (1, 2)).unwrap(), m("(1,3)(2,4)"));
        assert_eq!(extend_psi2(&m("(1,2)"), (1, 2)).unwrap(), m("(2,3)(1,4)"));
        assert_eq!(extend_psi1(&m("(1,2)"), (1, 3)), Err(MatchingError::ArcNotFound(1, 3)));
        assert_eq!(reduce_step(&m("(1,2)(3,4)")), (m("(1,2)"), Step::Psi));
        assert_eq!(reduce_step(&m("(1,3)(2,4)")), (m("(1,2)"), Step::Psi1((1, 2))));
        assert_eq!(
            reduce_step(&m("(2,4)(5,7)(6,8)(3,9)(1,10)")),
            (m("(1,3)(2,4)(5,7)(6,8)"), Step::Psi2((1, 3)))
        );
    }

    #[test]
    fn trace_examples() {
        let set = |s: &str| trace_indices(&m(s)).into_iter().collect::<Vec<_>>();
        assert_eq!(set("(1,3)(2,4)(6,7)(5,8)(9,10)"), vec![1, 5, 9]);
        assert_eq!(set("(2,4)(5,7)(6,8)(3,9)(1,10)"), vec![1, 5]);
        assert_eq!(set("(1,2)(3,4)(5,6)"), vec![1, 3, 5]);
        for n in 0..=6 {
            for x in enumerate_matchings(n) {
                assert_eq!(trace_indices(&x), trace_indices_by_reduction(&x), "{x}");
            }
        }
    }

    #[test]
    fn trace_rising_factorial() {
        for n in 1..=6 {
            let by_trace: Tally<1> = enumerate_matchings(n).map(|x| [trace(&x)]).collect();
            assert_eq!(by_trace.to_poly(["q"]), rising_factorial(&rat(2), n as u32));
        }
    }

    #[test]
    fn small_m_polys() {
        assert_eq!(m_poly(1), poly("s*t"));
        assert_eq!(m_poly(2), poly("(s*t)^2 + 2*t*x*y"));
        assert_eq!(m_poly(3), poly("(s*t)^3 + 6*s*t^2*x*y + 4*t*x*y*(x + y)"));
        assert_eq!(i_poly(2), poly("x + y + q"));
    }
}
