//! Exponent-vector tallies.
//!
//! Enumerations count objects by a fixed-length statistic vector instead of
//! building a polynomial per object; the tally is turned into an [`MVPoly`]
//! once at the end. Merging is associative addition, so shards can be
//! combined in any grouping.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{BigRat, MVPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally<const K: usize> {
    counts: BTreeMap<[u32; K], u64>,
}

impl<const K: usize> Default for Tally<K> {
    fn default() -> Self {
        Tally {
            counts: BTreeMap::new(),
        }
    }
}

impl<const K: usize> Tally<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: [u32; K]) {
        *self.counts.entry(key).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: &Tally<K>) {
        for (k, c) in &other.counts {
            *self.counts.entry(*k).or_insert(0) += c;
        }
    }

    pub fn get(&self, key: &[u32; K]) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u32; K], u64)> {
        self.counts.iter().map(|(k, c)| (k, *c))
    }

    /// `sum count * vars[0]^key[0] * ... * vars[K-1]^key[K-1]`.
    pub fn to_poly(&self, vars: [&str; K]) -> MVPoly {
        MVPoly::from_terms(self.counts.iter().map(|(k, c)| {
            let m = Monomial::from_pairs(vars.iter().copied().zip(k.iter().copied()));
            (m, BigRat::from_integer(BigInt::from(*c)))
        }))
    }

    /// `sum count * weight(key)` for an arbitrary polynomial weight.
    pub fn weighted(&self, mut weight: impl FnMut(&[u32; K]) -> MVPoly) -> MVPoly {
        let mut out = MVPoly::zero();
        for (k, c) in &self.counts {
            out.add_assign_scaled(&weight(k), &BigRat::from_integer(BigInt::from(*c)));
        }
        out
    }
}

impl<const K: usize> FromIterator<[u32; K]> for Tally<K> {
    fn from_iter<I: IntoIterator<Item = [u32; K]>>(iter: I) -> Self {
        let mut t = Tally::new();
        for k in iter {
            t.add(k);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly;

    #[test]
    fn tally_to_poly() {
        let t: Tally<2> = [[1, 0], [0, 1], [1, 0]].into_iter().collect();
        assert_eq!(t.total(), 3);
        assert_eq!(t.to_poly(["x", "y"]), poly("2*x + y"));
        assert_eq!(t.weighted(|k| MVPoly::int(k[0] as i64 + 1)), poly("5"));
    }

    #[test]
    fn merge_is_addition() {
        let mut a: Tally<1> = [[0], [1]].into_iter().collect();
        let b: Tally<1> = [[1]].into_iter().collect();
        a.merge(&b);
        assert_eq!(a.get(&[1]), 2);
    }
}
