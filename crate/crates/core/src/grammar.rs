//! Context-free (Chen) grammars and their formal derivatives.
//!
//! A grammar maps variables to polynomials. The formal derivative `D_G` is
//! the unique linear derivation with `D_G(v) = rule(v)`; variables without a
//! rule are constants. On a monomial,
//! `D(prod v_i^e_i) = sum_i e_i v_i^(e_i - 1) rule(v_i) prod_{j != i} v_j^e_j`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::algebra::{parse::parse_poly_at, poly, BigRat, MVPoly, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrammarError {
    #[error("{0}")]
    Parse(ParseError),
    #[error("line {line}: duplicate rule for `{var}`")]
    DuplicateRule { var: String, line: usize },
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<String, MVPoly>,
}

impl Grammar {
    pub fn new() -> Self {
        Grammar::default()
    }

    /// Builds a grammar from `(variable, right-hand side)` pairs, the right
    /// sides given as polynomial literals.
    pub fn from_literals<'a>(rules: impl IntoIterator<Item = (&'a str, &'a str)>) -> Self {
        let mut g = Grammar::new();
        for (v, rhs) in rules {
            g.rules.insert(v.to_string(), poly(rhs));
        }
        g
    }

    pub fn with_rule(mut self, var: &str, rhs: MVPoly) -> Self {
        self.rules.insert(var.to_string(), rhs);
        self
    }

    pub fn rule(&self, var: &str) -> Option<&MVPoly> {
        self.rules.get(var)
    }

    pub fn rules(&self) -> impl Iterator<Item = (&str, &MVPoly)> {
        self.rules.iter().map(|(v, p)| (v.as_str(), p))
    }

    /// One application of the formal derivative.
    pub fn d_apply(&self, p: &MVPoly) -> MVPoly {
        let mut out = MVPoly::zero();
        for (m, c) in p.terms() {
            for (v, e) in m.factors() {
                let Some(rhs) = self.rules.get(v) else {
                    continue;
                };
                if rhs.is_zero() {
                    continue;
                }
                let rest = m.div_var(v, 1).expect("factor present");
                let scale = c * BigRat::from_integer(BigInt::from(e));
                out.add_assign_scaled(&rhs.mul_monomial(&rest), &scale);
            }
        }
        out
    }

    /// `D_G^n(p)`; `d_iter(p, 0) = p`.
    pub fn d_iter(&self, p: &MVPoly, n: u32) -> MVPoly {
        let mut cur = p.clone();
        for _ in 0..n {
            cur = self.d_apply(&cur);
        }
        cur
    }

    /// All iterates `D^0(p), ..., D^n(p)`.
    pub fn d_orbit(&self, p: &MVPoly, n: u32) -> Vec<MVPoly> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(p.clone());
        for i in 0..n as usize {
            let next = self.d_apply(&out[i]);
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, rhs) in &self.rules {
            writeln!(f, "{v} -> {rhs}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses the rule-file format: one `var -> polynomial` per line, `#`
/// comments, blank lines ignored.
pub fn parse_grammar(text: &str) -> Result<Grammar, GrammarError> {
    let mut g = Grammar::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if body.trim().is_empty() {
            continue;
        }
        let Some(arrow) = body.find("->") else {
            let column = body.len() - body.trim_start().len() + 1;
            return Err(GrammarError::Parse(ParseError {
                line,
                column,
                message: "expected `var -> polynomial`".into(),
            }));
        };
        let lhs = body[..arrow].trim();
        if !is_ident(lhs) {
            let column = body.len() - body.trim_start().len() + 1;
            return Err(GrammarError::Parse(ParseError {
                line,
                column,
                message: alloc::format!("invalid variable name `{lhs}`"),
            }));
        }
        let rhs_start = arrow + 2;
        let rhs_col = body[..rhs_start].chars().count() + 1;
        let rhs = parse_poly_at(&body[rhs_start..], line, rhs_col).map_err(GrammarError::Parse)?;
        if g.rules.contains_key(lhs) {
            return Err(GrammarError::DuplicateRule {
                var: lhs.to_string(),
                line,
            });
        }
        g.rules.insert(lhs.to_string(), rhs);
    }
    Ok(g)
}

impl core::str::FromStr for Grammar {
    type Err = GrammarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_grammar(s)
    }
}

/// The grammars used throughout the identity checks.
pub mod known {
    use super::Grammar;

    /// `{a -> ab, b -> b}`: `D^n(a) = a sum_k S(n,k) b^k`.
    pub fn stirling_second_kind() -> Grammar {
        Grammar::from_literals([("a", "a*b"), ("b", "b")])
    }

    /// `{a -> ab, b -> ab}`: `D^n(a) = a b^n A_n(a/b)`.
    pub fn eulerian() -> Grammar {
        Grammar::from_literals([("a", "a*b"), ("b", "a*b")])
    }

    /// `{I -> Ipq, p -> xy, x -> xy, y -> xy, q -> 0}`: `D^n(I)/I` is the
    /// (exc, drop, fix, cyc) generating polynomial over permutations.
    pub fn exc_drop_fix_cyc() -> Grammar {
        Grammar::from_literals([("I", "I*p*q"), ("p", "x*y"), ("x", "x*y"), ("y", "x*y"), ("q", "0")])
    }

    /// `{J -> Jst, s -> 2ab, a -> 2ab, b -> 2ab, t -> 0}`: `D^n(J)/J` is the
    /// (elblock, olblock, fixb, trace) generating polynomial over matchings.
    pub fn matching_blocks() -> Grammar {
        Grammar::from_literals([
            ("J", "J*s*t"),
            ("s", "2*a*b"),
            ("a", "2*a*b"),
            ("b", "2*a*b"),
            ("t", "0"),
        ])
    }

    /// Seven-letter grammar whose iterates on `I*y2*E` give the neighbor
    /// polynomials.
    pub fn neighbor() -> Grammar {
        Grammar::from_literals([
            ("I", "I*x1*y1"),
            ("x1", "x1*x2*y1"),
            ("x2", "x1*x2*y1"),
            ("x3", "x1*x3*y1"),
            ("y1", "x3*y1*y2"),
            ("y2", "x2*y1*y2"),
            ("E", "E*x3*y2"),
        ])
    }

    /// `{a -> a w1, w1 -> 2 w2, w2 -> w1 w2 + 3 w3, w3 -> 2 w1 w3}`.
    pub fn neighbor_symmetric() -> Grammar {
        Grammar::from_literals([("a", "a*w1"), ("w1", "2*w2"), ("w2", "w1*w2 + 3*w3"), ("w3", "2*w1*w3")])
    }

    /// `{x -> xyz, y -> xyz, z -> xyz}`: `D^n(x) = Q_n(x,y,z)`.
    pub fn stirling_permutations() -> Grammar {
        Grammar::from_literals([("x", "x*y*z"), ("y", "x*y*z"), ("z", "x*y*z")])
    }

    /// `{u -> 3w, v -> 2uw, w -> vw}`, the previous grammar in elementary
    /// symmetric coordinates.
    pub fn stirling_elementary() -> Grammar {
        Grammar::from_literals([("u", "3*w"), ("v", "2*u*w"), ("w", "v*w")])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterated_derivative() {
        let g = known::stirling_second_kind();
        assert_eq!(g.d_apply(&poly("a")), poly("a*b"));
        assert_eq!(g.d_apply(&poly("b")), poly("b"));
        assert_eq!(g.d_iter(&poly("a"), 2), poly("a*b + a*b^2"));
        assert_eq!(g.d_iter(&poly("a"), 0), poly("a"));
    }

    #[test]
    fn constants_have_zero_derivative() {
        let g = known::stirling_second_kind();
        assert!(g.d_apply(&poly("3*c^2 + 5")).is_zero());
    }

    #[test]
    fn explicit_zero_rule_matches_absent_rule() {
        let with = known::exc_drop_fix_cyc();
        let without = Grammar::from_literals([("I", "I*p*q"), ("p", "x*y"), ("x", "x*y"), ("y", "x*y")]);
        let seed = poly("I*q^2 + p*q");
        assert_eq!(with.d_iter(&seed, 3), without.d_iter(&seed, 3));
    }

    #[test]
    fn neighbor_first_step() {
        let g = known::neighbor();
        assert_eq!(g.d_apply(&poly("I*y2*E")), poly("I*y2*E*(x1*y1 + x2*y1 + x3*y2)"));
    }

    #[test]
    fn stirling_permutation_grammar_second_iterate() {
        let g = known::stirling_permutations();
        assert_eq!(g.d_iter(&poly("x"), 2), poly("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
    }

    #[test]
    fn symmetric_neighbor_grammar_listing() {
        let g = known::neighbor_symmetric();
        assert_eq!(g.d_iter(&poly("a"), 3), poly("a*(w1^3 + 8*w1*w2 + 6*w3)"));
    }

    #[test]
    fn eulerian_grammar() {
        let g = known::eulerian();
        assert_eq!(g.d_iter(&poly("a"), 2), poly("a*b^2 + a^2*b"));
        assert_eq!(g.d_iter(&poly("b"), 3), g.d_iter(&poly("a"), 3));
    }

    #[test]
    fn parse_rule_files() {
        let g = parse_grammar("a -> a*b\nb -> b").unwrap();
        assert_eq!(g, known::stirling_second_kind());
        let g = parse_grammar("# Q_n grammar\nx -> x*y*z\n\ny -> x*y*z  # same\nz -> x*y*z\n").unwrap();
        assert_eq!(g, known::stirling_permutations());
        let g = parse_grammar("q -> 0").unwrap();
        assert!(g.rule("q").unwrap().is_zero());
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_grammar("a -> a*b\nb -> b +") {
            Err(GrammarError::Parse(e)) => assert_eq!((e.line, e.column), (2, 9)),
            other => panic!("{other:?}"),
        }
        match parse_grammar("a -> b\n  oops") {
            Err(GrammarError::Parse(e)) => assert_eq!((e.line, e.column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_grammar("a -> b\na -> c"),
            Err(GrammarError::DuplicateRule {
                var: "a".into(),
                line: 2
            })
        );
        assert!(parse_grammar("2a -> b").is_err());
    }
}
