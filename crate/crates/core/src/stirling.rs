//! Stirling permutations, the trivariate second-order Eulerian polynomials
//! and the two coefficient tables defined by recurrence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{BigRat, MVPoly, Monomial};
use crate::radix::MixedRadix;
use crate::tally::Tally;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StirlingError {
    #[error("word is not a Stirling permutation")]
    Invalid,
}

/// A permutation of the multiset `{1,1,...,n,n}` in which every value
/// between the two copies of `i` exceeds `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingPermutation {
    word: Vec<u32>,
}

impl StirlingPermutation {
    pub fn new(word: Vec<u32>) -> Result<Self, StirlingError> {
        let n = word.len() / 2;
        let mut first = alloc::vec![usize::MAX; n + 1];
        let mut count = alloc::vec![0u8; n + 1];
        if !word.len().is_multiple_of(2) {
            return Err(StirlingError::Invalid);
        }
        for (p, &v) in word.iter().enumerate() {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(StirlingError::Invalid);
            }
            count[v] += 1;
            match count[v] {
                1 => first[v] = p,
                2 => {
                    if word[first[v] + 1..p].iter().any(|&u| u as usize <= v) {
                        return Err(StirlingError::Invalid);
                    }
                }
                _ => return Err(StirlingError::Invalid),
            }
        }
        Ok(StirlingPermutation { word })
    }

    pub fn order(&self) -> usize {
        self.word.len() / 2
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    fn padded(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let w = &self.word;
        (0..=w.len()).map(move |i| {
            let at = |k: usize| if k == 0 || k > w.len() { 0 } else { w[k - 1] };
            (at(i), at(i + 1))
        })
    }
}

impl fmt::Display for StirlingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Ascents over positions `0..=2n` with zero boundaries.
pub fn stirling_asc(t: &StirlingPermutation) -> u32 {
    t.padded().filter(|(a, b)| a < b).count() as u32
}

pub fn stirling_plat(t: &StirlingPermutation) -> u32 {
    t.padded().filter(|(a, b)| a == b).count() as u32
}

pub fn stirling_des(t: &StirlingPermutation) -> u32 {
    t.padded().filter(|(a, b)| a > b).count() as u32
}

/// Stirling permutations of order `n`: the digit for value `k` picks which
/// of the `2k-1` gaps of the order-`(k-1)` word receives `k k`.
#[derive(Debug, Clone)]
pub struct StirlingPermutations {
    radix: MixedRadix,
}

impl StirlingPermutations {
    pub fn from_rank(n: usize, rank: u64) -> Self {
        let bases = (1..=n as u32).map(|k| 2 * k - 1).collect();
        StirlingPermutations {
            radix: MixedRadix::from_rank(bases, rank),
        }
    }

    pub fn count(n: usize) -> u64 {
        (1..=n as u64).map(|k| 2 * k - 1).product()
    }
}

impl Iterator for StirlingPermutations {
    type Item = StirlingPermutation;

    fn next(&mut self) -> Option<StirlingPermutation> {
        let digits = self.radix.next_digits()?;
        let mut word = Vec::with_capacity(2 * digits.len());
        for (k, &g) in digits.iter().enumerate() {
            let v = k as u32 + 1;
            word.splice(g as usize..g as usize, [v, v]);
        }
        Some(StirlingPermutation { word })
    }
}

pub fn enumerate_stirling(n: usize) -> StirlingPermutations {
    StirlingPermutations::from_rank(n, 0)
}

/// `Q_n(x,y,z) = sum x^asc y^plat z^des`.
pub fn q_poly(n: usize) -> MVPoly {
    enumerate_stirling(n)
        .map(|t| [stirling_asc(&t), stirling_plat(&t), stirling_des(&t)])
        .collect::<Tally<3>>()
        .to_poly(["x", "y", "z"])
}

/// Nonnegative integer coefficients indexed by `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoeffTable {
    pub n: usize,
    entries: BTreeMap<(u32, u32, u32), BigInt>,
}

impl CoeffTable {
    pub fn new(n: usize) -> Self {
        CoeffTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, key: (u32, u32, u32)) -> BigInt {
        self.entries.get(&key).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, key: (u32, u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    /// Entries sorted by key.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32, u32), &BigInt)> {
        self.entries.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// `sum c * a^i * b^j * c^k` for `vars = [a, b, c]`.
    pub fn to_poly(&self, vars: [&str; 3]) -> MVPoly {
        MVPoly::from_terms(self.entries.iter().map(|(&(i, j, k), c)| {
            (
                Monomial::from_pairs([(vars[0], i), (vars[1], j), (vars[2], k)]),
                BigRat::from_integer(c.clone()),
            )
        }))
    }

    /// `sum c * p^i * q^j * r^k` for arbitrary polynomials `p, q, r`.
    pub fn evaluate(&self, basis: [&MVPoly; 3]) -> MVPoly {
        let mut out = MVPoly::zero();
        for (&(i, j, k), c) in &self.entries {
            let term = &(&basis[0].pow(i) * &basis[1].pow(j)) * &basis[2].pow(k);
            out.add_assign_scaled(&term, &BigRat::from_integer(c.clone()));
        }
        out
    }
}

/// `xi_n` from `xi_1 = x` and
/// `xi_{n+1;i,j,k} = (1+j+2k) xi_{n;i-1,j,k} + 2(1+i) xi_{n;i+1,j-1,k}
///   + 3(1+j) xi_{n;i,j+1,k-1}`. Keys satisfy `i + 2j + 3k = n`.
pub fn xi_table(n: usize) -> CoeffTable {
    assert!(n >= 1, "xi tables start at n = 1");
    let mut cur = CoeffTable::new(1);
    cur.add((1, 0, 0), BigInt::from(1));
    for m in 1..n {
        let mut next = CoeffTable::new(m + 1);
        for ((i, j, k), c) in cur.iter() {
            next.add((i + 1, j, k), c * (1 + j + 2 * k));
            if i > 0 {
                next.add((i - 1, j + 1, k), c * (2 * i));
            }
            if j > 0 {
                next.add((i, j - 1, k + 1), c * (3 * j));
            }
        }
        cur = next;
    }
    cur
}

/// `gamma_n` from `gamma_1 = z` and
/// `gamma_{n;i,j,k} = 3(1+i) gamma_{n-1;i+1,j,k-1} + 2(1+j) gamma_{n-1;i-1,j+1,k-1}
///   + k gamma_{n-1;i,j-1,k}`. Keys satisfy `i + 2j + 3k = 2n + 1`.
pub fn gamma_table(n: usize) -> CoeffTable {
    assert!(n >= 1, "gamma tables start at n = 1");
    let mut cur = CoeffTable::new(1);
    cur.add((0, 0, 1), BigInt::from(1));
    for m in 1..n {
        let mut next = CoeffTable::new(m + 1);
        for ((i, j, k), c) in cur.iter() {
            if i > 0 {
                next.add((i - 1, j, k + 1), c * (3 * i));
            }
            if j > 0 {
                next.add((i + 1, j - 1, k + 1), c * (2 * j));
            }
            next.add((i, j + 1, k), c * k);
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly;
    use alloc::vec;

    #[test]
    fn validation() {
        assert!(StirlingPermutation::new(vec![1, 2, 2, 1]).is_ok());
        assert!(StirlingPermutation::new(vec![2, 1, 1, 2]).is_err());
        assert!(StirlingPermutation::new(vec![1, 2, 1, 2]).is_err());
        assert!(StirlingPermutation::new(vec![1, 1, 1, 1]).is_err());
    }

    #[test]
    fn enumeration() {
        let q2: Vec<Vec<u32>> = enumerate_stirling(2).map(|t| t.word().to_vec()).collect();
        assert_eq!(q2, vec![vec![2, 2, 1, 1], vec![1, 2, 2, 1], vec![1, 1, 2, 2]]);
        assert_eq!(enumerate_stirling(5).count(), 945);
        for t in enumerate_stirling(5) {
            assert!(StirlingPermutation::new(t.word().to_vec()).is_ok());
        }
    }

    #[test]
    fn small_q_polys() {
        assert_eq!(q_poly(1), poly("x*y*z"));
        assert_eq!(q_poly(2), poly("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
        let q2 = q_poly(2).subst_pairs([("x", MVPoly::one()), ("y", MVPoly::one())]);
        assert_eq!(q2, poly("z + 2*z^2"));
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi_table(1).to_poly(["x", "y", "z"]), poly("x"));
        assert_eq!(xi_table(2).to_poly(["x", "y", "z"]), poly("x^2 + 2*y"));
        assert_eq!(
            xi_table(4).to_poly(["w1", "w2", "w3"]),
            poly("w1^4 + 22*w1^2*w2 + 16*w2^2 + 42*w1*w3")
        );
        assert_eq!(
            xi_table(6).to_poly(["w1", "w2", "w3"]),
            poly("w1^6 + 114*w1^4*w2 + 720*w1^2*w2^2 + 272*w2^3 + 732*w1^3*w3 + 2304*w1*w2*w3 + 540*w3^2")
        );
        for n in 1..=7 {
            assert!(xi_table(n)
                .iter()
                .all(|((i, j, k), _)| (i + 2 * j + 3 * k) as usize == n));
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_table(1).to_poly(["x", "y", "z"]), poly("z"));
        assert_eq!(gamma_table(2).to_poly(["x", "y", "z"]), poly("y*z"));
        assert_eq!(gamma_table(3).to_poly(["x", "y", "z"]), poly("y^2*z + 2*x*z^2"));
        for n in 1..=7 {
            assert!(gamma_table(n)
                .iter()
                .all(|((i, j, k), _)| (i + 2 * j + 3 * k) as usize == 2 * n + 1));
        }
    }
}
