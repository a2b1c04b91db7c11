//! Permutations, signed permutations, inversion sequences and their
//! Eulerian-type generating polynomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::algebra::{poly, BigRat, MVPoly};
use crate::radix::MixedRadix;
use crate::tally::Tally;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("one-line values are not a permutation of 1..{0}")]
    NotAPermutation(usize),
    #[error("absolute values are not a permutation of 1..{0}")]
    NotSigned(usize),
    #[error("entry {index} is {value}, must be below {index}")]
    BadInversionEntry { index: usize, value: u32 },
}

fn is_bijection(values: impl Iterator<Item = u32>, n: usize) -> bool {
    let mut seen = alloc::vec![false; n + 1];
    for v in values {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        if !is_bijection(values.iter().copied(), values.len()) {
            return Err(PermError::NotAPermutation(values.len()));
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `pi(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn one_line(&self) -> &[u32] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values: inv }
    }

    pub fn cycle_count(&self) -> u32 {
        cycle_count(&self.values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn cycle_count(values: &[u32]) -> u32 {
    let mut seen = alloc::vec![false; values.len()];
    let mut cycles = 0;
    for start in 0..values.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = values[i] as usize - 1;
        }
    }
    cycles
}

pub fn exc(p: &Permutation) -> u32 {
    p.values
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize > i + 1)
        .count() as u32
}

pub fn drop(p: &Permutation) -> u32 {
    p.values
        .iter()
        .enumerate()
        .filter(|&(i, &v)| (v as usize) < i + 1)
        .count() as u32
}

pub fn fix(p: &Permutation) -> u32 {
    p.values
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize == i + 1)
        .count() as u32
}

pub fn cyc(p: &Permutation) -> u32 {
    p.cycle_count()
}

pub fn asc(p: &Permutation) -> u32 {
    p.values.windows(2).filter(|w| w[0] < w[1]).count() as u32
}

pub fn des(p: &Permutation) -> u32 {
    p.values.windows(2).filter(|w| w[0] > w[1]).count() as u32
}

pub fn inv(p: &Permutation) -> u32 {
    let v = &p.values;
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

/// Cycle double ascents: `#{i : pi^-1(i) < i < pi(i)}`.
pub fn cda(p: &Permutation) -> u32 {
    let pinv = p.inverse();
    (1..=p.len())
        .filter(|&i| (pinv.at(i) as usize) < i && i < p.at(i) as usize)
        .count() as u32
}

/// Double descents `pi(i-1) > pi(i) > pi(i+1)` with `pi(0) = pi(n+1) = 0`.
pub fn dd(p: &Permutation) -> u32 {
    let n = p.len();
    let val = |i: usize| if i == 0 || i > n { 0 } else { p.at(i) };
    (1..=n).filter(|&i| val(i - 1) > val(i) && val(i) > val(i + 1)).count() as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PermStats {
    pub exc: u32,
    pub drop: u32,
    pub fix: u32,
    pub cyc: u32,
    pub asc: u32,
    pub des: u32,
    pub inv: u32,
    pub cda: u32,
    pub dd: u32,
}

pub fn perm_stats(p: &Permutation) -> PermStats {
    PermStats {
        exc: exc(p),
        drop: drop(p),
        fix: fix(p),
        cyc: cyc(p),
        asc: asc(p),
        des: des(p),
        inv: inv(p),
        cda: cda(p),
        dd: dd(p),
    }
}

/// Lexicographic stream of permutations of `[n]`, restartable at any rank.
#[derive(Debug, Clone)]
pub struct Permutations {
    n: usize,
    radix: MixedRadix,
}

impl Permutations {
    pub fn from_rank(n: usize, rank: u64) -> Self {
        let bases = (1..=n as u32).rev().collect();
        Permutations {
            n,
            radix: MixedRadix::from_rank(bases, rank),
        }
    }

    pub fn count(n: usize) -> u64 {
        (1..=n as u64).product()
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let digits = self.radix.next_digits()?;
        let mut free: Vec<u32> = (1..=self.n as u32).collect();
        let values = digits.iter().map(|&d| free.remove(d as usize)).collect();
        Some(Permutation { values })
    }
}

pub fn enumerate_permutations(n: usize) -> Permutations {
    Permutations::from_rank(n, 0)
}

pub fn enumerate_derangements(n: usize) -> impl Iterator<Item = Permutation> {
    enumerate_permutations(n).filter(|p| fix(p) == 0)
}

/// Lehmer-style code `e_i = #{j < i : pi(j) > pi(i)}`, `0 <= e_i <= i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence {
    entries: Vec<u32>,
}

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self, PermError> {
        for (i, &e) in entries.iter().enumerate() {
            if e as usize > i {
                return Err(PermError::BadInversionEntry { index: i + 1, value: e });
            }
        }
        Ok(InversionSequence { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// All inversion sequences of length `n`, lexicographically.
    pub fn enumerate(n: usize) -> impl Iterator<Item = InversionSequence> {
        let mut radix = MixedRadix::from_rank((1..=n as u32).collect(), 0);
        core::iter::from_fn(move || radix.next_digits().map(|d| InversionSequence { entries: d.to_vec() }))
    }
}

pub fn to_inversion_sequence(p: &Permutation) -> InversionSequence {
    let v = &p.values;
    let entries = (0..v.len())
        .map(|i| v[..i].iter().filter(|&&w| w > v[i]).count() as u32)
        .collect();
    InversionSequence { entries }
}

pub fn from_inversion_sequence(e: &InversionSequence) -> Permutation {
    let n = e.entries.len();
    let mut free: Vec<u32> = (1..=n as u32).collect();
    let mut values = alloc::vec![0; n];
    for i in (0..n).rev() {
        // pi(i) has exactly e_i larger values to its left, all still free.
        let idx = free.len() - 1 - e.entries[i] as usize;
        values[i] = free.remove(idx);
    }
    Permutation { values }
}

/// An element of the hyperoctahedral group in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self, PermError> {
        if !is_bijection(window.iter().map(|v| v.unsigned_abs()), window.len()) {
            return Err(PermError::NotSigned(window.len()));
        }
        Ok(SignedPermutation { window })
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn at(&self, i: usize) -> i32 {
        self.window[i - 1]
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// The underlying permutation `i -> |sigma(i)|`.
    pub fn abs(&self) -> Permutation {
        Permutation {
            values: self.window.iter().map(|v| v.unsigned_abs()).collect(),
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Excedances `sigma(|sigma(i)|) > sigma(i)`.
pub fn signed_exc(s: &SignedPermutation) -> u32 {
    (1..=s.len())
        .filter(|&i| s.at(s.at(i).unsigned_abs() as usize) > s.at(i))
        .count() as u32
}

pub fn signed_fix(s: &SignedPermutation) -> u32 {
    (1..=s.len()).filter(|&i| s.at(i) == i as i32).count() as u32
}

/// Singletons `sigma(i) = -i`.
pub fn single(s: &SignedPermutation) -> u32 {
    (1..=s.len()).filter(|&i| s.at(i) == -(i as i32)).count() as u32
}

pub fn wexc(s: &SignedPermutation) -> u32 {
    signed_exc(s) + single(s)
}

/// Cycle count of `|sigma|`.
pub fn signed_cyc(s: &SignedPermutation) -> u32 {
    s.abs().cycle_count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SignedStats {
    pub wexc: u32,
    pub exc: u32,
    pub fix: u32,
    pub single: u32,
    pub cyc: u32,
}

pub fn signed_stats(s: &SignedPermutation) -> SignedStats {
    SignedStats {
        wexc: wexc(s),
        exc: signed_exc(s),
        fix: signed_fix(s),
        single: single(s),
        cyc: signed_cyc(s),
    }
}

/// Signed permutations of `[n]` ordered lexicographically by window, each
/// position choosing among the unused values `-n..-1, 1..n` in integer order.
#[derive(Debug, Clone)]
pub struct SignedPermutations {
    n: usize,
    radix: MixedRadix,
}

impl SignedPermutations {
    pub fn from_rank(n: usize, rank: u64) -> Self {
        let bases = (1..=n as u32).rev().map(|k| 2 * k).collect();
        SignedPermutations {
            n,
            radix: MixedRadix::from_rank(bases, rank),
        }
    }

    pub fn count(n: usize) -> u64 {
        (1..=n as u64).map(|k| 2 * k).product()
    }
}

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let digits = self.radix.next_digits()?;
        let mut free: Vec<u32> = (1..=self.n as u32).collect();
        let window = digits
            .iter()
            .map(|&d| {
                let k = free.len();
                let d = d as usize;
                if d < k {
                    // negatives in increasing order: -free[k-1], ..., -free[0]
                    -(free.remove(k - 1 - d) as i32)
                } else {
                    free.remove(d - k) as i32
                }
            })
            .collect();
        Some(SignedPermutation { window })
    }
}

pub fn enumerate_signed(n: usize) -> SignedPermutations {
    SignedPermutations::from_rank(n, 0)
}

/// `A_n(x,y) = sum x^asc y^des`. The excedance form
/// `sum x^exc y^(drop + fix) = y A_n(x,y)` is tallied alongside and must
/// agree.
pub fn eulerian_xy(n: usize) -> MVPoly {
    let mut by_des = Tally::<2>::new();
    let mut by_exc = Tally::<2>::new();
    for p in enumerate_permutations(n) {
        by_des.add([asc(&p), des(&p)]);
        by_exc.add([exc(&p), drop(&p) + fix(&p)]);
    }
    let out = by_des.to_poly(["x", "y"]);
    if n > 0 {
        assert_eq!(
            &out * &MVPoly::var("y"),
            by_exc.to_poly(["x", "y"]),
            "excedance and descent forms disagree at n = {n}"
        );
    }
    out
}

/// `A_n(x,p,q) = sum x^exc p^fix q^cyc`.
pub fn eulerian_xpq(n: usize) -> MVPoly {
    enumerate_permutations(n)
        .map(|p| [exc(&p), fix(&p), cyc(&p)])
        .collect::<Tally<3>>()
        .to_poly(["x", "p", "q"])
}

/// `d_n(x,q) = sum over derangements x^exc q^cyc`.
pub fn derangement_poly(n: usize) -> MVPoly {
    enumerate_derangements(n)
        .map(|p| [exc(&p), cyc(&p)])
        .collect::<Tally<2>>()
        .to_poly(["x", "q"])
}

/// `k -> sum q^cyc` over derangements with no cycle double ascent and
/// `exc = k`.
pub fn dnk_table(n: usize) -> BTreeMap<u32, MVPoly> {
    let mut out: BTreeMap<u32, Tally<1>> = BTreeMap::new();
    for p in enumerate_derangements(n).filter(|p| cda(p) == 0) {
        out.entry(exc(&p)).or_default().add([cyc(&p)]);
    }
    out.into_iter().map(|(k, t)| (k, t.to_poly(["q"]))).collect()
}

/// `B_n(x,p,q) = sum x^wexc p^fix q^cyc` over signed permutations.
pub fn b_poly(n: usize) -> MVPoly {
    enumerate_signed(n)
        .map(|s| [wexc(&s), signed_fix(&s), signed_cyc(&s)])
        .collect::<Tally<3>>()
        .to_poly(["x", "p", "q"])
}

/// `r^n A_n(x, (1 + (r-1)x)/r, 1)`.
pub fn colored_eulerian(n: usize, r: u32) -> MVPoly {
    let r_rat = BigRat::from_integer(BigInt::from(r));
    let p_val =
        (MVPoly::one() + MVPoly::var("x").scale(&(&r_rat - BigRat::from_integer(1.into())))).scale(&r_rat.recip());
    let a = eulerian_xpq(n).subst_pairs([("p", p_val), ("q", MVPoly::one())]);
    a.scale(&BigRat::from_integer(BigInt::from(r).pow(n as u32)))
}

/// `alpha[i]` = number of permutations of `[n]` with no double descent and
/// `des = i`.
pub fn no_double_descent_counts(n: usize) -> Vec<u64> {
    let mut out = alloc::vec![0u64; n.max(1)];
    for p in enumerate_permutations(n).filter(|p| dd(p) == 0) {
        out[des(&p) as usize] += 1;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// `d_n^B(x) = B_n(x, 0, 1)`.
pub fn type_b_derangement_poly(n: usize) -> MVPoly {
    b_poly(n).subst_pairs([("p", MVPoly::zero()), ("q", MVPoly::one())])
}

/// Two-variable Eulerian polynomial at `y = 1`, as a polynomial in `x`.
pub fn eulerian(n: usize) -> MVPoly {
    eulerian_xy(n).subst_pairs([("y", poly("1"))])
}
