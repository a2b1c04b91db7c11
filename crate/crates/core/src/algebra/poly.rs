use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, BigRat, Monomial};

/// Exact multivariate polynomial over the rationals with named variables.
///
/// Terms are stored canonically: no zero coefficients, monomials in
/// graded-lex print order. Equality is term-set equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MVPoly {
    terms: BTreeMap<Monomial, BigRat>,
}

impl MVPoly {
    pub fn zero() -> Self {
        MVPoly::default()
    }

    pub fn one() -> Self {
        MVPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        MVPoly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        MVPoly::constant(BigRat::from_integer(BigInt::from(c)))
    }

    pub fn var(name: &str) -> Self {
        MVPoly::term(BigRat::one(), Monomial::var(name))
    }

    pub fn term(c: BigRat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MVPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRat)>) -> Self {
        let mut p = MVPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in print order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRat {
        self.terms.get(m).cloned().unwrap_or_else(BigRat::zero)
    }

    /// The coefficient when `self` is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &MVPoly, scale: &BigRat) {
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn scale(&self, c: &BigRat) -> MVPoly {
        if c.is_zero() {
            return MVPoly::zero();
        }
        MVPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MVPoly {
        MVPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Power by repeated squaring; `p^0 = 1` for every `p`.
    pub fn pow(&self, mut k: u32) -> MVPoly {
        let mut result = MVPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Sorted set of variable names occurring with a nonzero coefficient.
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = Vec::new();
        for m in self.terms.keys() {
            for v in m.variables() {
                if let Err(i) = vars.binary_search_by(|x| x.as_str().cmp(v)) {
                    vars.insert(i, String::from(v));
                }
            }
        }
        vars
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Formal partial derivative.
    pub fn partial(&self, var: &str) -> MVPoly {
        let mut out = MVPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let lowered = m.div_var(var, 1).expect("exponent checked");
            out.add_term(lowered, c * BigRat::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Simultaneous substitution: every variable bound in `bindings` is
    /// replaced by its image; unbound variables are left intact.
    pub fn subst(&self, bindings: &BTreeMap<String, MVPoly>) -> MVPoly {
        let mut out = MVPoly::zero();
        // Powers of the images are reused across terms.
        let mut powers: BTreeMap<(String, u32), MVPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut acc = MVPoly::constant(c.clone());
            let mut kept: Vec<(&str, u32)> = Vec::new();
            for (v, e) in m.factors() {
                match bindings.get(v) {
                    Some(image) => {
                        let key = (String::from(v), e);
                        let pw = powers.entry(key).or_insert_with(|| image.pow(e));
                        acc = &acc * &*pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            let rest = Monomial::from_pairs(kept);
            out = &out + &acc.mul_monomial(&rest);
        }
        out
    }

    /// Convenience wrapper over [`MVPoly::subst`] taking `(name, image)` pairs.
    pub fn subst_pairs<'a>(&self, pairs: impl IntoIterator<Item = (&'a str, MVPoly)>) -> MVPoly {
        let bindings: BTreeMap<String, MVPoly> = pairs.into_iter().map(|(v, p)| (String::from(v), p)).collect();
        self.subst(&bindings)
    }

    /// Exact evaluation at a point binding every variable of `self`.
    pub fn eval(&self, point: &BTreeMap<String, BigRat>) -> Result<BigRat, AlgebraError> {
        let mut total = BigRat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (name, e) in m.factors() {
                let x = point
                    .get(name)
                    .ok_or_else(|| AlgebraError::UnboundVariable(String::from(name)))?;
                v *= num_traits::pow(x.clone(), e as usize);
            }
            total += v;
        }
        Ok(total)
    }

    /// Partial evaluation: binds some variables to rationals and keeps the rest.
    pub fn eval_partial(&self, point: &BTreeMap<String, BigRat>) -> MVPoly {
        let mut out = MVPoly::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            let mut kept: Vec<(&str, u32)> = Vec::new();
            for (name, e) in m.factors() {
                match point.get(name) {
                    Some(x) => v *= num_traits::pow(x.clone(), e as usize),
                    None => kept.push((name, e)),
                }
            }
            out.add_term(Monomial::from_pairs(kept), v);
        }
        out
    }

    /// Applies a fallible monomial map term by term and re-collects.
    pub fn map_monomials<E>(&self, mut f: impl FnMut(&Monomial) -> Result<Monomial, E>) -> Result<MVPoly, E> {
        let mut out = MVPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m)?, c.clone());
        }
        Ok(out)
    }

    /// Collects terms by their monomial in `vars`, returning coefficient
    /// polynomials in the remaining variables.
    pub fn coefficients_in(&self, vars: &[&str]) -> BTreeMap<Monomial, MVPoly> {
        let mut out: BTreeMap<Monomial, MVPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (sel, rest) = m.split(vars);
            out.entry(sel).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }
}

impl Add for &MVPoly {
    type Output = MVPoly;
    fn add(self, rhs: &MVPoly) -> MVPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for MVPoly {
    type Output = MVPoly;
    fn add(mut self, rhs: MVPoly) -> MVPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for &MVPoly {
    type Output = MVPoly;
    fn sub(self, rhs: &MVPoly) -> MVPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for MVPoly {
    type Output = MVPoly;
    fn sub(self, rhs: MVPoly) -> MVPoly {
        &self - &rhs
    }
}

impl Neg for &MVPoly {
    type Output = MVPoly;
    fn neg(self) -> MVPoly {
        MVPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MVPoly {
    type Output = MVPoly;
    fn neg(self) -> MVPoly {
        -&self
    }
}

impl Mul for &MVPoly {
    type Output = MVPoly;
    fn mul(self, rhs: &MVPoly) -> MVPoly {
        let mut out = MVPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MVPoly {
    type Output = MVPoly;
    fn mul(self, rhs: MVPoly) -> MVPoly {
        &self * &rhs
    }
}

impl core::iter::Sum for MVPoly {
    fn sum<I: Iterator<Item = MVPoly>>(iter: I) -> MVPoly {
        iter.fold(MVPoly::zero(), |a, b| a + b)
    }
}

impl From<BigRat> for MVPoly {
    fn from(c: BigRat) -> Self {
        MVPoly::constant(c)
    }
}

impl From<i64> for MVPoly {
    fn from(c: i64) -> Self {
        MVPoly::int(c)
    }
}

/// Renders `c1*mono1 + c2*mono2 - ...` with unit coefficients elided,
/// fractions as `p/q` and `0` for the zero polynomial.
impl fmt::Display for MVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl core::str::FromStr for MVPoly {
    type Err = super::ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_poly(s)
    }
}
