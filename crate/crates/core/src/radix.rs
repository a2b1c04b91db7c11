//! Mixed-radix counters.
//!
//! Every rank-restartable family in this crate is a sequence of independent
//! choices with a fixed number of options at each step (matchings pick a
//! partner for the smallest free vertex, permutations pick the next value,
//! Stirling permutations pick an insertion gap). A [`MixedRadix`] counter
//! walks those choice vectors in lexicographic order and can start at any
//! rank, which is what makes sharded enumeration possible.

use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct MixedRadix {
    bases: Vec<u32>,
    digits: Vec<u32>,
    remaining: u64,
    started: bool,
}

impl MixedRadix {
    /// Counter over all digit vectors with `digits[i] < bases[i]`, starting
    /// at lexicographic position `rank`. Every base must be positive.
    pub fn from_rank(bases: Vec<u32>, rank: u64) -> Self {
        let total = Self::count(&bases);
        let rank = rank.min(total);
        let mut digits = alloc::vec![0; bases.len()];
        let mut r = rank;
        for i in (0..bases.len()).rev() {
            let b = u64::from(bases[i]);
            digits[i] = (r % b) as u32;
            r /= b;
        }
        MixedRadix {
            bases,
            digits,
            remaining: total - rank,
            started: false,
        }
    }

    pub fn count(bases: &[u32]) -> u64 {
        bases.iter().map(|&b| u64::from(b)).product()
    }

    /// Lexicographic rank of a digit vector.
    pub fn rank_of(bases: &[u32], digits: &[u32]) -> u64 {
        digits
            .iter()
            .zip(bases)
            .fold(0u64, |acc, (&d, &b)| acc * u64::from(b) + u64::from(d))
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    /// Advances and returns the next digit vector.
    pub fn next_digits(&mut self) -> Option<&[u32]> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        if self.started {
            for i in (0..self.digits.len()).rev() {
                self.digits[i] += 1;
                if self.digits[i] < self.bases[i] {
                    break;
                }
                self.digits[i] = 0;
            }
        }
        self.started = true;
        Some(&self.digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn walks_in_lex_order_from_any_rank() {
        let bases = vec![3, 1, 2];
        let mut all = Vec::new();
        let mut c = MixedRadix::from_rank(bases.clone(), 0);
        while let Some(d) = c.next_digits() {
            all.push(d.to_vec());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0, 0]);
        assert_eq!(all[1], vec![0, 0, 1]);
        assert_eq!(all[5], vec![2, 0, 1]);
        for (r, d) in all.iter().enumerate() {
            assert_eq!(MixedRadix::rank_of(&bases, d), r as u64);
            let mut c = MixedRadix::from_rank(bases.clone(), r as u64);
            assert_eq!(c.next_digits().unwrap(), &d[..]);
            assert_eq!(c.remaining(), (5 - r) as u64);
        }
        assert!(MixedRadix::from_rank(bases, 6).next_digits().is_none());
    }

    #[test]
    fn empty_base_list_has_one_element() {
        let mut c = MixedRadix::from_rank(vec![], 0);
        assert_eq!(c.next_digits(), Some(&[][..]));
        assert!(c.next_digits().is_none());
    }
}
