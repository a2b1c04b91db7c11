use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BigRat, MVPoly};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(2n-1)!! = 1*3*...*(2n-1)`, the number of matchings on `[2n]`.
pub fn double_factorial_odd(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * (2 * k - 1))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(n: u32) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `N(n,k) = binom(n,k-1) binom(n,k) / n` for `n >= 1`.
pub fn narayana(n: u32, k: u32) -> BigInt {
    if n == 0 || k == 0 || k > n {
        return BigInt::zero();
    }
    binomial(n, k - 1) * binomial(n, k) / n
}

/// `q (q + c) (q + 2c) ... (q + (n-1)c)` as a polynomial in `q`.
pub fn rising_factorial(step: &BigRat, n: u32) -> MVPoly {
    let q = MVPoly::var("q");
    let mut acc = MVPoly::one();
    for i in 0..n {
        let shift = step * BigRat::from_integer(i.into());
        acc = &acc * &(&q + &MVPoly::constant(shift));
    }
    acc
}

fn triangle(n: u32, row_weight: impl Fn(u32, u32) -> u32) -> Vec<BigInt> {
    // row[k] for the current row index i.
    let mut row = alloc::vec![BigInt::zero(); n as usize + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        for k in (1..=i as usize).rev() {
            let stay = &row[k] * row_weight(i, k as u32);
            row[k] = &row[k - 1] + stay;
        }
        row[0] = BigInt::zero();
    }
    row
}

/// Unsigned Stirling numbers of the first kind, `c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`.
pub fn stirling1_unsigned(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    triangle(n, |i, _| i - 1)[k as usize].clone()
}

/// Stirling numbers of the second kind, `S(n,k) = S(n-1,k-1) + k S(n-1,k)`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    triangle(n, |_, k| k)[k as usize].clone()
}
