//! Laurent polynomials: finite sums of integer powers of the variable with
//! exact scalar coefficients. No zero coefficients are stored.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::Poly;
use super::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(Scalar::one(), 0)
    }

    pub fn monomial(c: Scalar, exp: i64) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Scalar)>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn from_poly(p: &Poly) -> LaurentPoly {
        LaurentPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Scalar::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Highest exponent, when nonzero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, when nonzero.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: i64) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v.mul(c))).collect(),
        }
    }

    /// Multiplication by x^k.
    pub fn shift_exp(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn derivative(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (e - 1, c.mul(&Scalar::from_int(*e)))),
        )
    }

    /// Splits as x^low * (ordinary polynomial with nonzero constant term).
    pub fn split_power(&self) -> Option<(i64, Poly)> {
        let low = self.low_degree()?;
        let deg = self.degree()?;
        let mut coeffs = vec![Scalar::zero(); (deg - low + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        Some((low, Poly::from_scalars(coeffs)))
    }

    /// The ordinary-polynomial part, when no negative exponents are present.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.low_degree().map_or(false, |l| l < 0) {
            return None;
        }
        let deg = self.degree().unwrap_or(0);
        let mut coeffs = vec![Scalar::zero(); (deg + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        Some(Poly::from_scalars(coeffs))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        let inv = if self.low_degree().map_or(false, |l| l < 0) {
            Some(x.inv())
        } else {
            None
        };
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                x.pow(*e as u32)
            } else {
                inv.as_ref().unwrap().pow((-e) as u32)
            };
            acc = acc.add(&c.mul(&p));
        }
        acc
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = vec![];
        for (e, c) in self.terms.iter().rev() {
            let body = if *e == 0 {
                format!("{c}")
            } else {
                let xp = if *e == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{e}")
                };
                if c.is_one() {
                    xp
                } else if c.neg().is_one() {
                    format!("-{xp}")
                } else {
                    format!("{c}*{xp}")
                }
            };
            parts.push(body);
        }
        join_signed(&parts)
    }
}

/// Joins displayed terms, folding leading minus signs into " - " separators.
pub(crate) fn join_signed(parts: &[String]) -> String {
    let mut s = String::new();
    for (k, part) in parts.iter().enumerate() {
        if k == 0 {
            s.push_str(part);
        } else if let Some(rest) = part.strip_prefix('-') {
            s.push_str(" - ");
            s.push_str(rest);
        } else {
            s.push_str(" + ");
            s.push_str(part);
        }
    }
    s
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_normal_form() {
        let a = LaurentPoly::from_terms([(-2i64, Scalar::from_int(3)), (1, Scalar::one())]);
        let b = LaurentPoly::from_terms([(-2i64, Scalar::from_int(-3))]);
        let s = a.add(&b);
        assert_eq!(s, LaurentPoly::monomial(Scalar::one(), 1));
        assert_eq!(s.degree(), Some(1));
    }

    #[test]
    fn derivative_of_monomials() {
        let p = LaurentPoly::from_terms([(2i64, Scalar::one()), (0, Scalar::from_int(5))]);
        assert_eq!(p.derivative(), LaurentPoly::monomial(Scalar::from_int(2), 1));
        let q = LaurentPoly::monomial(Scalar::one(), -1);
        assert_eq!(q.derivative(), LaurentPoly::monomial(Scalar::from_int(-1), -2));
    }

    #[test]
    fn display_forms() {
        let p = LaurentPoly::from_terms([(2i64, Scalar::one()), (-1, Scalar::from_int(-2))]);
        assert_eq!(p.to_string(), "x^2 - 2*x^-1");
    }
}
