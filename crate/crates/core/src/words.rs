//! Matching permutations: words over unbarred and barred `1..n` that encode
//! a matching, read left to right, by labeling the `r`-th closer `r'` and its
//! opener `r`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{MVPoly, Monomial};
use crate::matching::{enumerate_matchings, Matching};
use crate::tally::Tally;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("not a matching permutation: {0}")]
    Invalid(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("monomial {0} maps to a negative exponent")]
    NegativeExponent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub value: u32,
    pub barred: bool,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.barred {
            f.write_str("'")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingWord {
    symbols: Vec<Symbol>,
}

impl MatchingWord {
    /// Checks that every value occurs once barred and once unbarred, barred
    /// values increase left to right and each `r` precedes `r'`.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, WordError> {
        let n = symbols.len() / 2;
        let invalid = |why: &str| WordError::Invalid(String::from(why));
        if !symbols.len().is_multiple_of(2) {
            return Err(invalid("odd length"));
        }
        let mut seen_plain = alloc::vec![false; n + 1];
        let mut next_bar = 1;
        for s in &symbols {
            let v = s.value as usize;
            if v == 0 || v > n {
                return Err(invalid("value out of range"));
            }
            if s.barred {
                if s.value != next_bar {
                    return Err(invalid("barred values out of order"));
                }
                if !seen_plain[v] {
                    return Err(invalid("barred value before its unbarred copy"));
                }
                next_bar += 1;
            } else {
                if seen_plain[v] {
                    return Err(invalid("repeated unbarred value"));
                }
                seen_plain[v] = true;
            }
        }
        Ok(MatchingWord { symbols })
    }

    pub fn order(&self) -> usize {
        self.symbols.len() / 2
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn from_matching(m: &Matching) -> Self {
        let mut symbols = alloc::vec![
            Symbol {
                value: 0,
                barred: false
            };
            2 * m.order()
        ];
        for (r, &(i, j)) in m.arcs().iter().enumerate() {
            let value = r as u32 + 1;
            symbols[i as usize - 1] = Symbol { value, barred: false };
            symbols[j as usize - 1] = Symbol { value, barred: true };
        }
        MatchingWord { symbols }
    }

    pub fn to_matching(&self) -> Matching {
        let n = self.order();
        let mut opener = alloc::vec![0u32; n + 1];
        let mut arcs = Vec::with_capacity(n);
        for (p, s) in self.symbols.iter().enumerate() {
            let pos = p as u32 + 1;
            if s.barred {
                arcs.push((opener[s.value as usize], pos));
            } else {
                opener[s.value as usize] = pos;
            }
        }
        Matching::from_arcs(arcs).expect("valid word gives a perfect matching")
    }
}

impl fmt::Display for MatchingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl core::str::FromStr for MatchingWord {
    type Err = WordError;

    /// Parses space-separated symbols, barred ones with a trailing `'`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s
            .split_whitespace()
            .map(|tok| {
                let (digits, barred) = match tok.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                digits
                    .parse()
                    .map(|value| Symbol { value, barred })
                    .map_err(|_| WordError::Parse(String::from(tok)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MatchingWord::new(symbols)
    }
}

/// All matching permutations of order `n`, in the order of
/// [`enumerate_matchings`].
pub fn enumerate_words(n: usize) -> impl Iterator<Item = MatchingWord> {
    enumerate_matchings(n).map(|m| MatchingWord::from_matching(&m))
}

/// Matching permutations of order `n` built by insertion: from each word
/// of order `n-1`, append `n'` and then place `n` at the front or right
/// after any earlier entry.
pub fn words_by_insertion(n: usize) -> Vec<MatchingWord> {
    let mut level = alloc::vec![MatchingWord { symbols: Vec::new() }];
    for k in 1..=n as u32 {
        let mut next = Vec::new();
        for w in &level {
            for pos in 0..=w.symbols.len() {
                let mut symbols = w.symbols.clone();
                symbols.insert(
                    pos,
                    Symbol {
                        value: k,
                        barred: false,
                    },
                );
                symbols.push(Symbol { value: k, barred: true });
                next.push(MatchingWord { symbols });
            }
        }
        level = next;
    }
    level
}

/// The five index classes of adjacent positions `(i, i+1)`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NeighborClassification {
    pub lne: Vec<u32>,
    pub lcr: Vec<u32>,
    pub nal: Vec<u32>,
    pub rrp: Vec<u32>,
    pub lrp: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborKind {
    Lne,
    Lcr,
    Nal,
    Rrp,
    Lrp,
}

fn kind(a: Symbol, b: Symbol) -> NeighborKind {
    match (a.barred, b.barred) {
        (false, false) if a.value > b.value => NeighborKind::Lne,
        (false, false) => NeighborKind::Lcr,
        (true, false) => NeighborKind::Nal,
        (true, true) => NeighborKind::Rrp,
        (false, true) => NeighborKind::Lrp,
    }
}

pub fn neighbor_classify(w: &MatchingWord) -> NeighborClassification {
    let mut c = NeighborClassification::default();
    for (i, pair) in w.symbols.windows(2).enumerate() {
        let idx = i as u32 + 1;
        let set = match kind(pair[0], pair[1]) {
            NeighborKind::Lne => &mut c.lne,
            NeighborKind::Lcr => &mut c.lcr,
            NeighborKind::Nal => &mut c.nal,
            NeighborKind::Rrp => &mut c.rrp,
            NeighborKind::Lrp => &mut c.lrp,
        };
        set.push(idx);
    }
    c
}

fn count_kind(w: &MatchingWord, k: NeighborKind) -> u32 {
    w.symbols.windows(2).filter(|p| kind(p[0], p[1]) == k).count() as u32
}

pub fn word_lne(w: &MatchingWord) -> u32 {
    count_kind(w, NeighborKind::Lne)
}

pub fn word_lcr(w: &MatchingWord) -> u32 {
    count_kind(w, NeighborKind::Lcr)
}

pub fn word_nal(w: &MatchingWord) -> u32 {
    count_kind(w, NeighborKind::Nal)
}

pub fn word_rrp(w: &MatchingWord) -> u32 {
    count_kind(w, NeighborKind::Rrp)
}

pub fn word_lrp(w: &MatchingWord) -> u32 {
    count_kind(w, NeighborKind::Lrp)
}

fn count_symbol_pairs(w: &MatchingWord, pred: impl Fn(Symbol, Symbol) -> bool) -> u32 {
    let s = &w.symbols;
    let mut count = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if pred(s[i], s[j]) {
                count += 1;
            }
        }
    }
    count
}

/// Unbarred pairs in decreasing order.
pub fn word_inv(w: &MatchingWord) -> u32 {
    count_symbol_pairs(w, |a, b| !a.barred && !b.barred && a.value > b.value)
}

/// Unbarred pairs in increasing order.
pub fn word_coinv(w: &MatchingWord) -> u32 {
    count_symbol_pairs(w, |a, b| !a.barred && !b.barred && a.value < b.value)
}

/// A barred entry followed later by a larger unbarred entry.
pub fn word_rank(w: &MatchingWord) -> u32 {
    count_symbol_pairs(w, |a, b| a.barred && !b.barred && a.value < b.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WordStats {
    pub lne: u32,
    pub lcr: u32,
    pub nal: u32,
    pub rrp: u32,
    pub lrp: u32,
    pub inv: u32,
    pub coinv: u32,
    pub rank: u32,
}

pub fn word_stats(w: &MatchingWord) -> WordStats {
    WordStats {
        lne: word_lne(w),
        lcr: word_lcr(w),
        nal: word_nal(w),
        rrp: word_rrp(w),
        lrp: word_lrp(w),
        inv: word_inv(w),
        coinv: word_coinv(w),
        rank: word_rank(w),
    }
}

/// `C_n = sum x1^lne x2^lcr x3^nal y1^rrp y2^lrp`.
pub fn c_poly(n: usize) -> MVPoly {
    enumerate_words(n)
        .map(|w| {
            let s = word_stats(&w);
            [s.lne, s.lcr, s.nal, s.rrp, s.lrp]
        })
        .collect::<Tally<5>>()
        .to_poly(["x1", "x2", "x3", "y1", "y2"])
}

/// `NCA_n = sum x^lne y^lcr z^nal`.
pub fn nca_poly(n: usize) -> MVPoly {
    enumerate_words(n)
        .map(|w| [word_lne(&w), word_lcr(&w), word_nal(&w)])
        .collect::<Tally<3>>()
        .to_poly(["x", "y", "z"])
}

/// `NCR_n = sum x^lne y^lcr z^(lrp - 1)`.
pub fn ncr_poly(n: usize) -> MVPoly {
    enumerate_words(n)
        .map(|w| [word_lne(&w), word_lcr(&w), word_lrp(&w) - 1])
        .collect::<Tally<3>>()
        .to_poly(["x", "y", "z"])
}

/// Applies an exponent map to every monomial `x^a y^b z^c` of a polynomial
/// in `x, y, z`, failing if any resulting exponent is negative.
fn relabel_xyz(q: &MVPoly, map: impl Fn(i64, i64, i64) -> Vec<(&'static str, i64)>) -> Result<MVPoly, WordError> {
    q.map_monomials(|m| {
        let e = |v| i64::from(m.exponent(v));
        let target = map(e("x"), e("y"), e("z"));
        if target.iter().any(|&(_, k)| k < 0) {
            return Err(WordError::NegativeExponent(alloc::format!("{m}")));
        }
        Ok(Monomial::from_pairs(target.into_iter().map(|(v, k)| (v, k as u32))))
    })
}

/// `y2 (x1 x2 x3 y1^2 y2)^n Q_n(1/(x1 y1), 1/(x2 y1), 1/(x3 y2))`.
pub fn c_from_q(q: &MVPoly, n: usize) -> Result<MVPoly, WordError> {
    let n = n as i64;
    relabel_xyz(q, |a, b, c| {
        alloc::vec![
            ("x1", n - a),
            ("x2", n - b),
            ("x3", n - c),
            ("y1", 2 * n - a - b),
            ("y2", n + 1 - c),
        ]
    })
}

/// `(xyz)^n Q_n(1/x, 1/y, 1/z)`.
pub fn nca_from_q(q: &MVPoly, n: usize) -> Result<MVPoly, WordError> {
    let n = n as i64;
    relabel_xyz(q, |a, b, c| alloc::vec![("x", n - a), ("y", n - b), ("z", n - c)])
}

/// `y2 (x1 x2 y2)^n Q_n(1/x1, 1/x2, 1/y2)`.
pub fn lne_lcr_lrp_from_q(q: &MVPoly, n: usize) -> Result<MVPoly, WordError> {
    let n = n as i64;
    relabel_xyz(q, |a, b, c| {
        alloc::vec![("x1", n - a), ("x2", n - b), ("y2", n + 1 - c)]
    })
}

/// `y1^(2n) y2^(n+1) Q_n(1/y1, 1/y1, 1/y2)`.
pub fn rrp_lrp_from_q(q: &MVPoly, n: usize) -> Result<MVPoly, WordError> {
    let n = n as i64;
    relabel_xyz(q, |a, b, c| alloc::vec![("y1", 2 * n - a - b), ("y2", n + 1 - c)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly;
    use crate::matching::{al, cr, lcr, lne, lrp, nal, ne, rrp};
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> MatchingWord {
        s.parse().unwrap()
    }

    fn m(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn matching_correspondence() {
        assert_eq!(MatchingWord::from_matching(&m("(1,2)(3,4)")).to_string(), "1 1' 2 2'");
        assert_eq!(MatchingWord::from_matching(&m("(2,3)(1,4)")).to_string(), "2 1 1' 2'");
        assert_eq!(MatchingWord::from_matching(&m("(1,3)(2,4)")).to_string(), "1 2 1' 2'");
        for x in enumerate_matchings(5) {
            assert_eq!(MatchingWord::from_matching(&x).to_matching(), x);
        }
    }

    #[test]
    fn invalid_words() {
        assert!("1' 1".parse::<MatchingWord>().is_err());
        assert!("1 2 2' 1'".parse::<MatchingWord>().is_err());
        assert!("1 1 1' 2'".parse::<MatchingWord>().is_err());
        assert!("1 x'".parse::<MatchingWord>().is_err());
    }

    #[test]
    fn classification_example() {
        let c = neighbor_classify(&w("2 1 1' 3 4 2' 3' 4' 5 5'"));
        assert_eq!(c.lne, vec![1]);
        assert_eq!(c.lcr, vec![4]);
        assert_eq!(c.nal, vec![3, 8]);
        assert_eq!(c.rrp, vec![6, 7]);
        assert_eq!(c.lrp, vec![2, 5, 9]);
        let c = neighbor_classify(&w("1 1' 2 2'"));
        assert_eq!((c.lrp, c.nal), (vec![1, 3], vec![2]));
    }

    #[test]
    fn classification_partitions_positions() {
        for word in enumerate_words(3) {
            let c = neighbor_classify(&word);
            let mut all: Vec<u32> = [c.lne, c.lcr, c.nal, c.rrp, c.lrp].concat();
            all.sort_unstable();
            assert_eq!(all, (1..=5).collect::<Vec<_>>());
        }
    }

    #[test]
    fn word_stat_examples() {
        let s = word_stats(&w("1 1' 2 2'"));
        assert_eq!((s.inv, s.coinv, s.rank), (0, 1, 1));
        let s = word_stats(&w("2 1 1' 2'"));
        assert_eq!((s.inv, s.coinv, s.rank), (1, 0, 0));
    }

    #[test]
    fn word_and_matching_statistics_agree() {
        for x in enumerate_matchings(5) {
            let s = word_stats(&MatchingWord::from_matching(&x));
            assert_eq!(
                (s.lne, s.lcr, s.nal, s.lrp, s.rrp, s.inv, s.coinv - s.rank, s.rank),
                (lne(&x), lcr(&x), nal(&x), lrp(&x), rrp(&x), ne(&x), cr(&x), al(&x)),
                "{x}"
            );
        }
    }

    #[test]
    fn coinversions_count_crossings_and_alignments() {
        // An ascending unbarred pair a..b is a crossing when b comes before
        // a' and an alignment otherwise, so coinv alone overcounts crossings.
        let lhs: Tally<3> = enumerate_words(2)
            .map(|w| [word_inv(&w), word_coinv(&w), word_rank(&w)])
            .collect();
        assert_eq!(lhs.to_poly(["x", "y", "q"]), poly("x + y + y*q"));
        assert_eq!(crate::matching::i_poly(2), poly("x + y + q"));
    }

    #[test]
    fn insertion_oracle_agrees() {
        for n in 0..=5 {
            let mut a = words_by_insertion(n);
            let mut b: Vec<_> = enumerate_words(n).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn neighbor_polynomials() {
        assert_eq!(c_poly(1), poly("y2"));
        assert_eq!(c_poly(2), poly("(x1 + x2)*y1*y2 + x3*y2^2"));
        assert_eq!(nca_poly(1), poly("1"));
        assert_eq!(nca_poly(2), poly("x + y + z"));
        assert_eq!(nca_poly(3), poly("x^2 + 4*x*y + y^2 + 4*x*z + 4*y*z + z^2"));
        assert_eq!(
            nca_poly(4),
            poly("x^3 + 11*x^2*y + 11*x*y^2 + y^3 + 11*x^2*z + 36*x*y*z + 11*y^2*z + 11*x*z^2 + 11*y*z^2 + z^3")
        );
        for n in 1..=5 {
            assert_eq!(nca_poly(n), ncr_poly(n));
        }
    }

    #[test]
    fn transforms_of_small_q() {
        let q1 = poly("x*y*z");
        assert_eq!(c_from_q(&q1, 1).unwrap(), poly("y2"));
        assert_eq!(nca_from_q(&q1, 1).unwrap(), poly("1"));
        let q2 = poly("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2");
        assert_eq!(c_from_q(&q2, 2).unwrap(), c_poly(2));
        assert!(nca_from_q(&poly("x^3"), 2).is_err());
    }
}
