//! Exact enumerative combinatorics for matchings and their permutation
//! relatives.
//!
//! The crate enumerates perfect matchings on `[2n]`, matching permutations
//! (barred/unbarred words), permutations, signed permutations, Stirling
//! permutations and increasing plane trees, and tallies their statistics into
//! exact multivariate polynomials with rational coefficients. Everything here
//! is pure computation on `alloc` collections; file formats, the identity
//! registry and the command-line front end live in the `chordlab` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod grammar;
pub mod matching;
pub mod perm;
pub mod radix;
pub mod stirling;
pub mod tally;
pub mod trees;
pub mod words;

pub use algebra::{BigRat, MVPoly, Monomial, TruncatedSeries};
pub use grammar::Grammar;
pub use matching::Matching;
pub use perm::{Permutation, SignedPermutation};
pub use stirling::StirlingPermutation;
pub use words::MatchingWord;
