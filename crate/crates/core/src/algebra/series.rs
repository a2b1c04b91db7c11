use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{factorial, AlgebraError, BigRat};

/// Power series in `z` truncated after `z^order`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRat>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: alloc::vec![BigRat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigRat::one();
        s
    }

    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRat>) -> Self {
        let mut v: Vec<BigRat> = coeffs.into_iter().take(order + 1).collect();
        v.resize(order + 1, BigRat::zero());
        TruncatedSeries { coeffs: v }
    }

    /// `c + 0*z + ...`
    pub fn constant(c: BigRat, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `exp(c*z)` truncated at `order`.
    pub fn exp_linear(c: &BigRat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRat::one();
        for k in 0..=order {
            if k > 0 {
                term = term * c / BigRat::from_integer(k.into());
            }
            coeffs.push(term.clone());
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// `k! * [z^k]`, the `k`-th term of an exponential generating function.
    pub fn egf_term(&self, k: usize) -> BigRat {
        &self.coeffs[k] * BigRat::from_integer(factorial(k as u32))
    }

    fn shared(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.shared(other);
        TruncatedSeries::from_coeffs(n, (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.shared(other);
        TruncatedSeries::from_coeffs(n, (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]))
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.shared(other);
        let mut out = TruncatedSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(AlgebraError::BadConstantTerm {
                expected: "nonzero",
                found: a0.clone(),
            });
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut b = alloc::vec![BigRat::zero(); n + 1];
        b[0] = inv0.clone();
        for m in 1..=n {
            let mut s = BigRat::zero();
            for k in 1..=m {
                s += &self.coeffs[k] * &b[m - k];
            }
            b[m] = -(s * &inv0);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    /// `exp(s)`; requires constant term 0. Uses `E' = s' E`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::BadConstantTerm {
                expected: "0",
                found: self.coeffs[0].clone(),
            });
        }
        let n = self.order();
        let mut e = alloc::vec![BigRat::zero(); n + 1];
        e[0] = BigRat::one();
        for m in 1..=n {
            let mut s = BigRat::zero();
            for k in 1..=m {
                s += BigRat::from_integer(k.into()) * &self.coeffs[k] * &e[m - k];
            }
            e[m] = s / BigRat::from_integer(m.into());
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// `log(s)`; requires constant term 1. Uses `s L' = s'`.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::BadConstantTerm {
                expected: "1",
                found: self.coeffs[0].clone(),
            });
        }
        let n = self.order();
        let mut l = alloc::vec![BigRat::zero(); n + 1];
        for m in 1..=n {
            let mut s = BigRat::from_integer(m.into()) * &self.coeffs[m];
            for (k, lk) in l.iter().enumerate().take(m).skip(1) {
                s -= BigRat::from_integer(k.into()) * lk * &self.coeffs[m - k];
            }
            l[m] = s / BigRat::from_integer(m.into());
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// `s^r = exp(r log s)` for rational `r`; requires constant term 1.
    pub fn pow(&self, r: &BigRat) -> Result<Self, AlgebraError> {
        self.log()?.scale(r).exp()
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| alloc::format!("{c}")))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, rat};
    use super::*;
    use alloc::vec;

    fn z(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, [rat(0), rat(1)])
    }

    #[test]
    fn exp_of_z() {
        let e = z(3).exp().unwrap();
        assert_eq!(e.coeffs(), &[rat(1), rat(1), frac(1, 2), frac(1, 6)]);
        assert_eq!(e, TruncatedSeries::exp_linear(&rat(1), 3));
    }

    #[test]
    fn log_inverts_exp() {
        assert_eq!(z(6).exp().unwrap().log().unwrap(), z(6));
    }

    #[test]
    fn even_to_odd_free_sequence() {
        // Oracle: enumeration of matchings without even-to-odd blocks, n <= 4.
        let n = 4;
        let ez = TruncatedSeries::exp_linear(&rat(1), n);
        let denom = TruncatedSeries::constant(rat(2), n).sub(&ez);
        let s = ez.div(&denom).unwrap().pow(&frac(1, 2)).unwrap();
        let terms: Vec<BigRat> = (0..=n).map(|k| s.egf_term(k)).collect();
        assert_eq!(terms, vec![rat(1), rat(1), rat(2), rat(7), rat(35)]);
    }

    #[test]
    fn constant_term_errors() {
        assert!(matches!(
            TruncatedSeries::one(3).exp(),
            Err(AlgebraError::BadConstantTerm { .. })
        ));
        assert!(z(3).log().is_err());
        assert!(z(3).pow(&frac(1, 2)).is_err());
        assert!(z(3).inv().is_err());
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = TruncatedSeries::one(5);
        let b = z(2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).coeffs(), &[rat(1), rat(1), rat(0)]);
    }
}
