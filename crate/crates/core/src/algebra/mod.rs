//! Exact rational arithmetic, multivariate polynomials, structured
//! expansions and truncated power series.

mod expand;
mod monomial;
mod numbers;
pub mod parse;
mod poly;
mod series;

use alloc::string::String;

pub use expand::{esym_expand, gamma_expand, EsymExpansion, GammaExpansion};
pub use monomial::Monomial;
pub use numbers::{
    binomial, catalan, double_factorial_odd, factorial, narayana, rising_factorial, stirling1_unsigned, stirling2,
};
pub use parse::{parse_poly, ParseError};
pub use poly::MVPoly;
pub use series::TruncatedSeries;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable `{0}` has no binding")]
    UnboundVariable(String),
    #[error("polynomial is not homogeneous in the expansion variables")]
    NotHomogeneous,
    #[error("polynomial is not symmetric in the expansion variables")]
    NotSymmetric,
    #[error("variable `{0}` is outside the expansion variables")]
    ForeignVariable(String),
    #[error("series has constant term {found}, expected {expected}")]
    BadConstantTerm { expected: &'static str, found: BigRat },
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Shorthand for `n/d`. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

/// Shorthand for parsing a polynomial literal known to be well-formed.
pub fn poly(src: &str) -> MVPoly {
    parse_poly(src).unwrap_or_else(|e| panic!("bad polynomial literal {src:?}: {e}"))
}
