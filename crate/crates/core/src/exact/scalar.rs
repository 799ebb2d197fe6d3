//! Exact scalars: elements of the rationals or of one simple algebraic
//! extension Q(a) given by a monic irreducible minimal polynomial.
//!
//! A `Scalar` is either a plain `BigRational` or a residue polynomial in the
//! extension generator, reduced modulo the minimal polynomial. One extension
//! is active per session; mixing elements of two distinct extensions is a
//! programming error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A simple algebraic extension of the rationals.
///
/// `minpoly` is monic and irreducible over Q, stored in ascending degree
/// order, degree >= 2. (Degree-1 input collapses to plain Q and no field
/// handle is created for it.)
#[derive(Clone)]
pub struct NumberField {
    repr: Arc<FieldRepr>,
}

struct FieldRepr {
    /// Monic minimal polynomial, ascending coefficients, last = 1.
    minpoly: Vec<BigRational>,
    /// Generator display name, "a" by default.
    name: String,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || self.repr.minpoly == other.repr.minpoly
    }
}
impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(deg {})", self.degree())
    }
}

impl NumberField {
    /// Builds the extension defined by a monic polynomial over Q, rejecting
    /// reducible input. Returns `None` for degree 1 (the extension is Q
    /// itself and needs no handle).
    pub fn extend(minpoly: &[BigRational]) -> Result<Option<NumberField>> {
        assert!(minpoly.len() >= 2, "minimal polynomial must have degree >= 1");
        assert!(minpoly.last().unwrap().is_one(), "minimal polynomial must be monic");
        if minpoly.len() == 2 {
            return Ok(None);
        }
        if let Some(factor) = rational_factor(minpoly) {
            return Err(Error::ReducibleMinimalPolynomial(factor));
        }
        Ok(Some(NumberField {
            repr: Arc::new(FieldRepr {
                minpoly: minpoly.to_vec(),
                name: "a".to_string(),
            }),
        }))
    }

    /// Degree of the extension over Q.
    pub fn degree(&self) -> usize {
        self.repr.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[BigRational] {
        &self.repr.minpoly
    }

    pub fn generator_name(&self) -> &str {
        &self.repr.name
    }

    /// The generator as a scalar.
    pub fn generator(&self) -> Scalar {
        let mut c = vec![BigRational::zero(); self.degree()];
        c[1] = BigRational::one();
        Scalar::Ext(ExtElem {
            field: self.clone(),
            coeffs: c,
        })
    }

    /// Embeds a residue-polynomial coefficient vector (length <= degree).
    pub fn element(&self, coeffs: Vec<BigRational>) -> Scalar {
        let mut c = coeffs;
        c.resize(self.degree(), BigRational::zero());
        Scalar::Ext(ExtElem {
            field: self.clone(),
            coeffs: c,
        })
        .normalized()
    }
}

/// Irreducibility over Q via rational-root extraction plus a Kronecker-style
/// factor search for the remaining degrees. Returns a printed nontrivial
/// factor when one exists.
fn rational_factor(p: &[BigRational]) -> Option<String> {
    use super::poly::Poly;
    let poly = Poly::from_rationals(p.to_vec());
    let factors = poly.factor_over_q();
    if factors.len() == 1 && factors[0].1 == 1 {
        None
    } else {
        Some(format!("{}", factors[0].0))
    }
}

/// Element of a simple extension: residue polynomial in the generator.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtElem {
    field: NumberField,
    /// Length equals the field degree; reduced representative.
    coeffs: Vec<BigRational>,
}

/// An exact scalar: a rational number or an element of the active extension.
#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Ext(ExtElem),
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::Rat(r)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Ext(e) => e.coeffs.iter().all(|c| c.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Ext(e) => {
                e.coeffs[0].is_one() && e.coeffs[1..].iter().all(|c| c.is_zero())
            }
        }
    }

    /// The rational value, when the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Ext(e) => {
                if e.coeffs[1..].iter().all(|c| c.is_zero()) {
                    Some(&e.coeffs[0])
                } else {
                    None
                }
            }
        }
    }

    /// True when the scalar is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    /// The field of the scalar, when it is an extension element.
    pub fn field(&self) -> Option<&NumberField> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Ext(e) => Some(&e.field),
        }
    }

    fn normalized(self) -> Scalar {
        match self {
            Scalar::Ext(e) if e.coeffs[1..].iter().all(|c| c.is_zero()) => {
                Scalar::Rat(e.coeffs.into_iter().next().unwrap())
            }
            other => other,
        }
    }

    fn lift(&self, field: &NumberField) -> ExtElem {
        match self {
            Scalar::Rat(r) => {
                let mut c = vec![BigRational::zero(); field.degree()];
                c[0] = r.clone();
                ExtElem {
                    field: field.clone(),
                    coeffs: c,
                }
            }
            Scalar::Ext(e) => {
                assert!(e.field == *field, "mixed algebraic extensions");
                e.clone()
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => {
                let field = self.field().or_else(|| other.field()).unwrap().clone();
                let a = self.lift(&field);
                let b = other.lift(&field);
                let coeffs = a
                    .coeffs
                    .iter()
                    .zip(b.coeffs.iter())
                    .map(|(x, y)| x + y)
                    .collect();
                Scalar::Ext(ExtElem { field, coeffs }).normalized()
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Ext(e) => Scalar::Ext(ExtElem {
                field: e.field.clone(),
                coeffs: e.coeffs.iter().map(|c| -c).collect(),
            }),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => {
                let field = self.field().or_else(|| other.field()).unwrap().clone();
                let a = self.lift(&field);
                let b = other.lift(&field);
                let deg = field.degree();
                let mut raw = vec![BigRational::zero(); 2 * deg - 1];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        raw[i + j] += x * y;
                    }
                }
                reduce_mod_minpoly(&mut raw, field.minpoly());
                raw.truncate(deg);
                Scalar::Ext(ExtElem { field, coeffs: raw }).normalized()
            }
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Ext(e) => {
                assert!(!self.is_zero(), "inverse of zero");
                let inv = ext_inverse(&e.coeffs, e.field.minpoly());
                Scalar::Ext(ExtElem {
                    field: e.field.clone(),
                    coeffs: inv,
                })
                .normalized()
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, mut n: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Residue-polynomial coefficients in the extension generator. A plain
    /// rational yields a length-1 vector.
    pub fn ext_coeffs(&self) -> Vec<BigRational> {
        match self {
            Scalar::Rat(r) => vec![r.clone()],
            Scalar::Ext(e) => e.coeffs.clone(),
        }
    }

    /// Deterministic total order used only for tie-breaking, not a field order.
    pub fn det_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Rat(_), Scalar::Ext(_)) => Ordering::Less,
            (Scalar::Ext(_), Scalar::Rat(_)) => Ordering::Greater,
            (Scalar::Ext(a), Scalar::Ext(b)) => a.coeffs.cmp(&b.coeffs),
        }
    }
}

/// Reduces a raw coefficient vector modulo the monic minimal polynomial.
fn reduce_mod_minpoly(raw: &mut Vec<BigRational>, minpoly: &[BigRational]) {
    let deg = minpoly.len() - 1;
    while raw.len() > deg {
        let top = raw.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = raw.len() - deg;
        for (i, m) in minpoly[..deg].iter().enumerate() {
            let v = &top * m;
            raw[k + i] -= v;
        }
    }
    raw.resize(deg, BigRational::zero());
}

/// Extended Euclid in Q[t] to invert an element modulo the minimal polynomial.
fn ext_inverse(elem: &[BigRational], minpoly: &[BigRational]) -> Vec<BigRational> {
    // r0 = minpoly, r1 = elem; track t-coefficients only.
    let mut r0: Vec<BigRational> = minpoly.to_vec();
    let mut r1: Vec<BigRational> = trim(elem.to_vec());
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    // r0 is a nonzero constant gcd (minpoly irreducible).
    assert_eq!(r0.len(), 1, "element not invertible: gcd has positive degree");
    let c = r0[0].recip();
    let deg = minpoly.len() - 1;
    let mut out: Vec<BigRational> = t0.iter().map(|x| x * &c).collect();
    out.resize(deg, BigRational::zero());
    out
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let mut rem = trim(a.to_vec());
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / &b[db];
        quot[dr - db] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = &c * bc;
            rem[dr - db + i] -= v;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

impl fmt::Display for Scalar {
    /// Canonical literal: "p/q" for rationals, "(c0 + c1*a + ...)/q" with a
    /// common integer denominator q for extension elements.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Ext(e) => {
                let mut den = BigInt::one();
                for c in &e.coeffs {
                    den = num_integer::lcm(den, c.denom().clone());
                }
                let name = e.field.generator_name();
                let mut body = String::new();
                let mut first = true;
                for (i, c) in e.coeffs.iter().enumerate() {
                    let n = c.numer() * (&den / c.denom());
                    if n.is_zero() {
                        continue;
                    }
                    if first {
                        body.push_str(&format!("{n}"));
                        first = false;
                    } else if n.is_negative() {
                        body.push_str(&format!(" - {}", -&n));
                    } else {
                        body.push_str(&format!(" + {n}"));
                    }
                    if i >= 1 {
                        body.push_str(&format!("*{name}"));
                        if i >= 2 {
                            body.push_str(&format!("^{i}"));
                        }
                    }
                }
                if first {
                    body.push('0');
                }
                if den.is_one() {
                    write!(f, "({body})")
                } else {
                    write!(f, "({body})/{den}")
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sqrt2_field() -> NumberField {
        // t^2 - 2
        NumberField::extend(&[q(-2, 1), q(0, 1), q(1, 1)])
            .unwrap()
            .unwrap()
    }

    #[test]
    fn degree_one_extension_is_plain_q() {
        // t - 1 collapses to Q.
        let f = NumberField::extend(&[q(-1, 1), q(1, 1)]).unwrap();
        assert!(f.is_none());
    }

    #[test]
    fn sqrt2_defining_relation() {
        let f = sqrt2_field();
        let a = f.generator();
        assert_eq!(a.mul(&a), Scalar::from_int(2));
    }

    #[test]
    fn reducible_minpoly_rejected() {
        // t^2 - 1 = (t-1)(t+1)
        let err = NumberField::extend(&[q(-1, 1), q(0, 1), q(1, 1)]).unwrap_err();
        assert_eq!(err.code(), "ReducibleMinimalPolynomial");
    }

    #[test]
    fn inverse_in_extension() {
        let f = sqrt2_field();
        // (1 + sqrt2)^-1 = sqrt2 - 1
        let x = Scalar::one().add(&f.generator());
        let inv = x.inv();
        assert_eq!(inv, f.generator().sub(&Scalar::one()));
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn field_laws_in_qsqrt2() {
        // Associativity, distributivity and inverses on 200 pseudo-random triples.
        let f = sqrt2_field();
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut rnd = |f: &NumberField| {
            let c0 = q((next() % 19) as i64 - 9, ((next() % 4) + 1) as i64);
            let c1 = q((next() % 19) as i64 - 9, ((next() % 4) + 1) as i64);
            f.element(vec![c0, c1])
        };
        for _ in 0..200 {
            let (a, b, c) = (rnd(&f), rnd(&f), rnd(&f));
            assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                assert!(a.mul(&a.inv()).is_one());
            }
        }
    }

    #[test]
    fn display_literals() {
        assert_eq!(Scalar::from_frac(3, 4).to_string(), "3/4");
        assert_eq!(Scalar::from_int(-7).to_string(), "-7");
        let f = sqrt2_field();
        let x = f.element(vec![q(1, 2), q(-1, 3)]);
        assert_eq!(x.to_string(), "(3 - 2*a)/6");
    }
}
