use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{AlgebraError, BigRat, MVPoly, Monomial};

/// `p = sum_j coeffs[j] * (xy)^j * (x+y)^(degree - 2j)`, coefficients being
/// polynomials in the remaining variables. Zero coefficients are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpansion {
    pub degree: u32,
    pub coeffs: Vec<(u32, MVPoly)>,
}

impl GammaExpansion {
    pub fn get(&self, j: u32) -> MVPoly {
        self.coeffs
            .iter()
            .find(|(k, _)| *k == j)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn reassemble(&self, x: &str, y: &str) -> MVPoly {
        let xy = Monomial::from_pairs([(x, 1), (y, 1)]);
        let sum = &MVPoly::var(x) + &MVPoly::var(y);
        let mut out = MVPoly::zero();
        for (j, c) in &self.coeffs {
            let basis = sum.pow(self.degree - 2 * j).mul_monomial(&xy.pow(*j));
            out = out + c * &basis;
        }
        out
    }
}

/// Expands a polynomial that is homogeneous and symmetric in `(x, y)` in the
/// gamma basis `(xy)^j (x+y)^(d-2j)`.
///
/// Peels the pure-`x` coefficient, subtracts its multiple of `(x+y)^m`,
/// divides the remainder by `xy` and repeats. A pure-`y` term left behind
/// means the input was not symmetric.
pub fn gamma_expand(p: &MVPoly, x: &str, y: &str) -> Result<GammaExpansion, AlgebraError> {
    let mut degree = None;
    for (m, _) in p.terms() {
        let d = m.exponent(x) + m.exponent(y);
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(AlgebraError::NotHomogeneous),
            _ => {}
        }
    }
    let Some(degree) = degree else {
        return Ok(GammaExpansion {
            degree: 0,
            coeffs: Vec::new(),
        });
    };

    let sum = &MVPoly::var(x) + &MVPoly::var(y);
    let mut rem = p.clone();
    let mut coeffs = Vec::new();
    let mut j = 0u32;
    while !rem.is_zero() {
        if 2 * j > degree {
            return Err(AlgebraError::NotSymmetric);
        }
        let m = degree - 2 * j;
        let mut lead = MVPoly::zero();
        for (mono, c) in rem.terms() {
            if mono.exponent(y) == 0 {
                let (_, rest) = mono.split(&[x]);
                lead.add_term(rest, c.clone());
            }
        }
        if !lead.is_zero() {
            rem = &rem - &(&lead * &sum.pow(m));
            coeffs.push((j, lead));
        }
        rem = rem.map_monomials(|mono| {
            mono.div_var(x, 1)
                .and_then(|q| q.div_var(y, 1))
                .ok_or(AlgebraError::NotSymmetric)
        })?;
        j += 1;
    }
    Ok(GammaExpansion { degree, coeffs })
}

/// `p = sum coeffs[(i,j,k)] * e1^i * e2^j * e3^k` over the three expansion
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsymExpansion {
    pub coeffs: Vec<((u32, u32, u32), BigRat)>,
}

impl EsymExpansion {
    pub fn get(&self, key: (u32, u32, u32)) -> BigRat {
        self.coeffs
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRat::zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        use num_traits::Signed;
        self.coeffs.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn reassemble(&self, vars: [&str; 3]) -> MVPoly {
        let [a, b, c] = vars.map(MVPoly::var);
        let e1 = &(&a + &b) + &c;
        let e2 = &(&(&a * &b) + &(&b * &c)) + &(&a * &c);
        let e3 = &(&a * &b) * &c;
        let mut out = MVPoly::zero();
        for ((i, j, k), coef) in &self.coeffs {
            let t = &(&e1.pow(*i) * &e2.pow(*j)) * &e3.pow(*k);
            out = out + t.scale(coef);
        }
        out
    }
}

type Dense3 = BTreeMap<(u32, u32, u32), BigRat>;

fn dense_mul(a: &Dense3, b: &Dense3) -> Dense3 {
    let mut out = Dense3::new();
    for ((a1, a2, a3), ca) in a {
        for ((b1, b2, b3), cb) in b {
            let e = out.entry((a1 + b1, a2 + b2, a3 + b3)).or_insert_with(BigRat::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn dense_pow(a: &Dense3, k: u32) -> Dense3 {
    let mut out = Dense3::new();
    out.insert((0, 0, 0), BigRat::from_integer(1.into()));
    for _ in 0..k {
        out = dense_mul(&out, a);
    }
    out
}

fn graded_key(k: &(u32, u32, u32)) -> (u32, u32, u32, u32) {
    (k.0 + k.1 + k.2, k.0, k.1, k.2)
}

/// Expands a polynomial symmetric in three variables in elementary symmetric
/// polynomials by repeated leading-monomial reduction (graded-lex on the
/// given variable order).
pub fn esym_expand(p: &MVPoly, vars: [&str; 3]) -> Result<EsymExpansion, AlgebraError> {
    let mut rem = Dense3::new();
    for (m, c) in p.terms() {
        for v in m.variables() {
            if !vars.contains(&v) {
                return Err(AlgebraError::ForeignVariable(String::from(v)));
            }
        }
        let key = (m.exponent(vars[0]), m.exponent(vars[1]), m.exponent(vars[2]));
        rem.insert(key, c.clone());
    }
    let one = BigRat::from_integer(1.into());
    let e1: Dense3 = [
        ((1, 0, 0), one.clone()),
        ((0, 1, 0), one.clone()),
        ((0, 0, 1), one.clone()),
    ]
    .into_iter()
    .collect();
    let e2: Dense3 = [
        ((1, 1, 0), one.clone()),
        ((0, 1, 1), one.clone()),
        ((1, 0, 1), one.clone()),
    ]
    .into_iter()
    .collect();
    let e3: Dense3 = [((1, 1, 1), one)].into_iter().collect();
    let mut pow_cache: BTreeMap<(u8, u32), Dense3> = BTreeMap::new();
    let mut coeffs = Vec::new();

    while let Some((lead, c)) = rem
        .iter()
        .max_by_key(|(k, _)| graded_key(k))
        .map(|(k, c)| (*k, c.clone()))
    {
        let (a, b, cc) = lead;
        if !(a >= b && b >= cc) {
            return Err(AlgebraError::NotSymmetric);
        }
        let (i, j, k) = (a - b, b - cc, cc);
        let mut basis = Dense3::new();
        basis.insert((0, 0, 0), BigRat::from_integer(1.into()));
        for (tag, base, e) in [(1u8, &e1, i), (2, &e2, j), (3, &e3, k)] {
            let pw = pow_cache.entry((tag, e)).or_insert_with(|| dense_pow(base, e)).clone();
            basis = dense_mul(&basis, &pw);
        }
        for (key, bc) in basis {
            let entry = rem.entry(key).or_insert_with(BigRat::zero);
            *entry -= &c * bc;
            if entry.is_zero() {
                rem.remove(&key);
            }
        }
        debug_assert!(!rem.contains_key(&lead));
        coeffs.push(((i, j, k), c));
    }
    coeffs.sort_by_key(|c| c.0);
    Ok(EsymExpansion { coeffs })
}

#[cfg(test)]
mod tests {
    use super::super::{poly, rat};
    use super::*;
    use alloc::vec;

    #[test]
    fn gamma_examples() {
        let g = gamma_expand(&poly("x + y"), "x", "y").unwrap();
        assert_eq!(g.degree, 1);
        assert_eq!(g.coeffs, vec![(0, MVPoly::one())]);

        // Leading x^3 gives 1; remainder 8x^2y + 8xy^2 = 8xy(x+y).
        let nca4_z0 = poly("x^3 + 11*x^2*y + 11*x*y^2 + y^3");
        let g = gamma_expand(&nca4_z0, "x", "y").unwrap();
        assert_eq!(g.coeffs, vec![(0, MVPoly::one()), (1, MVPoly::int(8))]);
        assert_eq!(g.reassemble("x", "y"), nca4_z0);
    }

    #[test]
    fn gamma_with_parameter_coefficients() {
        let p = poly("t*x^2 + s*x*y + t*y^2");
        let g = gamma_expand(&p, "x", "y").unwrap();
        assert_eq!(g.get(0), poly("t"));
        assert_eq!(g.get(1), poly("s - 2*t"));
        assert_eq!(g.reassemble("x", "y"), p);
    }

    #[test]
    fn gamma_errors() {
        assert_eq!(
            gamma_expand(&poly("x^2 + y"), "x", "y"),
            Err(AlgebraError::NotHomogeneous)
        );
        assert_eq!(
            gamma_expand(&poly("x^2 + 2*y^2"), "x", "y"),
            Err(AlgebraError::NotSymmetric)
        );
        assert_eq!(gamma_expand(&poly("x"), "x", "y"), Err(AlgebraError::NotSymmetric));
    }

    #[test]
    fn esym_examples() {
        let e = esym_expand(&poly("x^2 + y^2 + z^2"), ["x", "y", "z"]).unwrap();
        assert_eq!(e.coeffs, vec![((0, 1, 0), rat(-2)), ((2, 0, 0), rat(1))]);
        let e = esym_expand(&poly("x*y*z"), ["x", "y", "z"]).unwrap();
        assert_eq!(e.coeffs, vec![((0, 0, 1), rat(1))]);
        let nca3 = poly("x^2 + 4*x*y + y^2 + 4*x*z + 4*y*z + z^2");
        let e = esym_expand(&nca3, ["x", "y", "z"]).unwrap();
        assert_eq!(e.coeffs, vec![((0, 1, 0), rat(2)), ((2, 0, 0), rat(1))]);
        assert_eq!(e.reassemble(["x", "y", "z"]), nca3);
    }

    #[test]
    fn esym_errors() {
        assert_eq!(
            esym_expand(&poly("x^2 + y"), ["x", "y", "z"]),
            Err(AlgebraError::NotSymmetric)
        );
        assert!(matches!(
            esym_expand(&poly("x + w"), ["x", "y", "z"]),
            Err(AlgebraError::ForeignVariable(_))
        ));
    }
}
