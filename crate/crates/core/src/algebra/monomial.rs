use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A product of named variables raised to positive powers.
///
/// Factors are kept sorted by variable name and never carry a zero exponent,
/// so structural equality is monomial equality.
///
/// The `Ord` impl is the display order used everywhere in this crate: higher
/// total degree sorts first, and within a degree the exponent vectors (read
/// over variable names in ascending order) compare lexicographically with the
/// larger vector first. Iterating a `BTreeMap<Monomial, _>` therefore yields
/// terms in graded-lex print order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(String, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(name: &str) -> Self {
        Monomial::var_pow(name, 1)
    }

    pub fn var_pow(name: &str, exp: u32) -> Self {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: alloc::vec![(String::from(name), exp)],
        }
    }

    /// Builds a monomial from `(name, exponent)` pairs in any order. Repeated
    /// names have their exponents added; zero exponents are dropped.
    pub fn from_pairs<S: AsRef<str>>(pairs: impl IntoIterator<Item = (S, u32)>) -> Self {
        let mut factors: Vec<(String, u32)> = Vec::new();
        for (name, exp) in pairs {
            if exp == 0 {
                continue;
            }
            let name = name.as_ref();
            match factors.binary_search_by(|(v, _)| v.as_str().cmp(name)) {
                Ok(i) => factors[i].1 += exp,
                Err(i) => factors.insert(i, (String::from(name), exp)),
            }
        }
        Monomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        match self.factors.binary_search_by(|(v, _)| v.as_str().cmp(name)) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, u32)> {
        self.factors.iter().map(|(v, e)| (v.as_str(), *e))
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.factors.iter().map(|(v, _)| v.as_str())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|(v, e)| (v.clone(), e * k)).collect(),
        }
    }

    /// Lowers the exponent of `name` by `k`. Returns `None` when the
    /// exponent is smaller than `k`.
    pub fn div_var(&self, name: &str, k: u32) -> Option<Monomial> {
        if k == 0 {
            return Some(self.clone());
        }
        let i = self.factors.binary_search_by(|(v, _)| v.as_str().cmp(name)).ok()?;
        let e = self.factors[i].1;
        if e < k {
            return None;
        }
        let mut factors = self.factors.clone();
        if e == k {
            factors.remove(i);
        } else {
            factors[i].1 = e - k;
        }
        Some(Monomial { factors })
    }

    /// Splits off every factor whose variable is in `names`, returning
    /// `(selected, rest)`.
    pub fn split(&self, names: &[&str]) -> (Monomial, Monomial) {
        let (sel, rest): (Vec<_>, Vec<_>) = self
            .factors
            .iter()
            .cloned()
            .partition(|(v, _)| names.contains(&v.as_str()));
        (Monomial { factors: sel }, Monomial { factors: rest })
    }

    /// Renames variables through `f`. Factors that collide after renaming are
    /// merged.
    pub fn rename(&self, mut f: impl FnMut(&str) -> String) -> Monomial {
        Monomial::from_pairs(self.factors.iter().map(|(v, e)| (f(v), *e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Higher degree first.
        match other.degree().cmp(&self.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                // Same degree: if one side ran out the other has nothing left either.
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // `self` has a positive exponent where `other` has zero.
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => {
                        if ea != eb {
                            return eb.cmp(ea);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
