//! Dense univariate polynomials over exact scalars.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and its last entry is nonzero otherwise. Factorisation
//! is exact: rational-root extraction plus a Kronecker factor search over Q,
//! and Trager's norm method over a simple extension.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{NumberField, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Scalar::one()],
        }
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::from_scalars(vec![c])
    }

    /// The indeterminate.
    pub fn var() -> Poly {
        Poly::from_scalars(vec![Scalar::zero(), Scalar::one()])
    }

    /// x - r.
    pub fn linear_root(r: &Scalar) -> Poly {
        Poly::from_scalars(vec![r.neg(), Scalar::one()])
    }

    pub fn from_scalars(coeffs: Vec<Scalar>) -> Poly {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn from_rationals(coeffs: Vec<BigRational>) -> Poly {
        Poly::from_scalars(coeffs.into_iter().map(Scalar::from_rational).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::from_scalars(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::from_scalars(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_scalars(out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_scalars(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division with remainder; the divisor may be any nonzero polynomial.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let db = div.degree().unwrap();
        let lead_inv = div.leading().unwrap().inv();
        let mut rem = self.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let c = rem.coeffs[dr].mul(&lead_inv);
            quot[dr - db] = c.clone();
            for (i, b) in div.coeffs.iter().enumerate() {
                rem.coeffs[dr - db + i] = rem.coeffs[dr - db + i].sub(&c.mul(b));
            }
            rem.normalize();
        }
        (Poly::from_scalars(quot), rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&Scalar::from_int(i as i64)));
        }
        Poly::from_scalars(out)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitution x -> x + c.
    pub fn shift(&self, c: &Scalar) -> Poly {
        let mut acc = Poly::zero();
        let shift = Poly::from_scalars(vec![c.clone(), Scalar::one()]);
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&Poly::constant(coeff.clone()));
        }
        acc
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rational().is_some())
    }

    /// Squarefree decomposition (Yun): list of (factor, multiplicity) with
    /// factors monic, pairwise coprime and squarefree.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, u32)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.degree() == Some(0) {
            return vec![];
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut b = f.divrem(&g).0;
        let mut c = df.divrem(&g).0;
        let mut d = c.sub(&b.derivative());
        let mut out = vec![];
        let mut i = 1u32;
        while b.degree().map_or(false, |deg| deg > 0) {
            let a = b.gcd(&d);
            if a.degree().map_or(false, |deg| deg > 0) {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Exact factorisation over Q into monic irreducible factors with
    /// multiplicities, sorted deterministically. Panics on non-rational input.
    pub fn factor_over_q(&self) -> Vec<(Poly, u32)> {
        assert!(self.is_rational(), "factor_over_q needs rational coefficients");
        assert!(!self.is_zero());
        let mut out: Vec<(Poly, u32)> = vec![];
        for (sf, mult) in self.squarefree_decomposition() {
            for irred in factor_squarefree_q(&sf) {
                out.push((irred, mult));
            }
        }
        sort_factors(&mut out);
        out
    }

    /// Exact factorisation over the active scalar field (Q when `field` is
    /// None) into monic irreducible factors with multiplicities.
    pub fn factor_over_field(&self, field: Option<&NumberField>) -> Vec<(Poly, u32)> {
        match field {
            None => self.factor_over_q(),
            Some(nf) => {
                let mut out: Vec<(Poly, u32)> = vec![];
                for (sf, mult) in self.squarefree_decomposition() {
                    for irred in trager_factor(&sf, nf) {
                        out.push((irred, mult));
                    }
                }
                sort_factors(&mut out);
                out
            }
        }
    }

    /// Roots lying in the scalar field, with multiplicities.
    pub fn roots_in_field(&self, field: Option<&NumberField>) -> Vec<(Scalar, u32)> {
        self.factor_over_field(field)
            .into_iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (f.coeff(0).neg(), m))
            .collect()
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = vec![];
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = if i == 0 {
                format!("{c}")
            } else if c.is_one() {
                if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                }
            } else if i == 1 {
                format!("{c}*{var}")
            } else {
                format!("{c}*{var}^{i}")
            };
            parts.push(body);
        }
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
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn sort_factors(factors: &mut [(Poly, u32)]) {
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| {
                for i in (0..a.coeffs().len()).rev() {
                    let ord = a.coeff(i).det_cmp(&b.coeff(i));
                    if ord != std::cmp::Ordering::Equal {
                        return ord;
                    }
                }
                std::cmp::Ordering::Equal
            })
    });
}

/// Primitive integer coefficients of a monic-or-not rational polynomial.
fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let rats: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| c.as_rational().expect("rational coefficients").clone())
        .collect();
    let mut den = BigInt::one();
    for r in &rats {
        den = den.lcm(r.denom());
    }
    let mut ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&den / r.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
    }
    ints
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// All divisors of |n|, positive, ascending. n must be nonzero.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = vec![];
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let mut e = 0u32;
            while (&m % &d).is_zero() {
                m = &m / &d;
                e += 1;
            }
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = vec![];
        for v in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(v * &pk);
                pk = &pk * &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Rational roots of an integer polynomial (no multiplicity; input squarefree).
fn rational_roots(p: &[BigInt]) -> Vec<BigRational> {
    let a0 = &p[0];
    let an = p.last().unwrap();
    if a0.is_zero() {
        // x = 0 plus roots of p/x.
        let mut rest = rational_roots(&p[1..]);
        rest.push(BigRational::zero());
        return rest;
    }
    let mut out = vec![];
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(&num * BigInt::from(sign), den.clone());
                let mut acc = BigRational::zero();
                for c in p.iter().rev() {
                    acc = acc * &cand + BigRational::from_integer(c.clone());
                }
                if acc.is_zero() && !out.contains(&cand) {
                    out.push(cand.clone());
                }
            }
        }
    }
    out
}

/// Factors a monic squarefree rational polynomial into monic irreducible
/// factors over Q. Rational roots first, then a Kronecker search by degree.
fn factor_squarefree_q(sf: &Poly) -> Vec<Poly> {
    let mut out = vec![];
    let mut rest = sf.monic();
    // Linear factors.
    let ints = integer_coeffs(&rest);
    for root in rational_roots(&ints) {
        let lin = Poly::linear_root(&Scalar::from_rational(root));
        let (q, r) = rest.divrem(&lin);
        debug_assert!(r.is_zero());
        out.push(lin);
        rest = q;
    }
    // Kronecker search for factors of degree >= 2.
    'outer: while rest.degree().map_or(false, |d| d >= 4) {
        let deg = rest.degree().unwrap();
        for d in 2..=deg / 2 {
            if let Some(g) = kronecker_factor(&rest, d) {
                let (q, r) = rest.divrem(&g);
                debug_assert!(r.is_zero());
                out.push(g.monic());
                rest = q;
                continue 'outer;
            }
        }
        break;
    }
    if rest.degree().map_or(false, |d| d >= 1) {
        out.push(rest.monic());
    }
    out
}

/// Kronecker interpolation search for a degree-d factor of a squarefree
/// integer polynomial without rational roots. Returns a monic rational factor.
fn kronecker_factor(p: &Poly, d: usize) -> Option<Poly> {
    let ints = integer_coeffs(p);
    // Sample points 0, 1, -1, 2, -2, ...
    let mut points: Vec<BigInt> = vec![BigInt::zero()];
    let mut k = 1i64;
    while points.len() < d + 1 {
        points.push(BigInt::from(k));
        points.push(BigInt::from(-k));
        k += 1;
    }
    points.truncate(d + 1);
    let values: Vec<BigInt> = points.iter().map(|x| eval_int(&ints, x)).collect();
    if values.iter().any(|v| v.is_zero()) {
        // An integer root survived; the caller's root extraction handles it.
        return None;
    }
    let divisor_lists: Vec<Vec<BigInt>> = values.iter().map(divisors).collect();
    // Candidate value tuples: w_0 > 0 (sign symmetry), others signed.
    let mut idx = vec![0usize; d + 1];
    let mut signs = vec![0u8; d + 1]; // 0 = +, 1 = -, slot 0 fixed +
    loop {
        let cand: Vec<BigRational> = (0..=d)
            .map(|i| {
                let v = &divisor_lists[i][idx[i]];
                let s = if signs[i] == 1 { -BigInt::one() } else { BigInt::one() };
                BigRational::from_integer(v * s)
            })
            .collect();
        if let Some(g) = interpolate(&points, &cand) {
            if g.degree() == Some(d) {
                let (_, r) = p.divrem(&g);
                if r.is_zero() {
                    return Some(g);
                }
            }
        }
        // Advance the odometer over (sign, divisor) choices.
        let mut pos = 0;
        loop {
            if pos > d {
                return None;
            }
            let sign_limit = if pos == 0 { 0 } else { 1 };
            if signs[pos] < sign_limit {
                signs[pos] += 1;
                break;
            }
            signs[pos] = 0;
            if idx[pos] + 1 < divisor_lists[pos].len() {
                idx[pos] += 1;
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Lagrange interpolation through integer points with rational values.
fn interpolate(points: &[BigInt], values: &[BigRational]) -> Option<Poly> {
    let n = points.len();
    let mut acc = Poly::zero();
    for i in 0..n {
        let mut basis = Poly::one();
        let mut denom = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            basis = basis.mul(&Poly::from_scalars(vec![
                Scalar::from_rational(BigRational::from_integer(-points[j].clone())),
                Scalar::one(),
            ]));
            denom *= BigRational::from_integer(&points[i] - &points[j]);
        }
        let w = &values[i] / denom;
        acc = acc.add(&basis.scale(&Scalar::from_rational(w)));
    }
    Some(acc)
}

/// Resultant of two rational polynomials (ascending coefficients).
fn resultant_q(a: &[BigRational], b: &[BigRational]) -> BigRational {
    fn deg(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn trim(p: &[BigRational]) -> Vec<BigRational> {
        match deg(p) {
            None => vec![],
            Some(d) => p[..=d].to_vec(),
        }
    }
    let mut a = trim(a);
    let mut b = trim(b);
    if a.is_empty() || b.is_empty() {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        if db == 0 {
            // Res(a, c) = c^da
            let mut r = BigRational::one();
            for _ in 0..da {
                r *= &b[0];
            }
            return acc * r;
        }
        if da < db {
            // Swap with sign (-1)^(da*db).
            if (da * db) % 2 == 1 {
                acc = -acc;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a = q b + r; Res(a,b) = lc(b)^(da - dr) * (-1)^(da*db) * Res(b, r)
        let mut rem = a.clone();
        let lead = b[db].clone();
        while rem.len() > db {
            let dr = rem.len() - 1;
            let c = &rem[dr] / &lead;
            for (i, bc) in b.iter().enumerate() {
                let v = &c * bc;
                rem[dr - db + i] -= v;
            }
            rem = trim(&rem);
            if rem.is_empty() {
                break;
            }
        }
        if rem.is_empty() {
            return BigRational::zero();
        }
        let dr = rem.len() - 1;
        let mut lpow = BigRational::one();
        for _ in 0..(da - dr) {
            lpow *= &lead;
        }
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= lpow;
        a = b;
        b = rem;
    }
}

/// Trager's algorithm: factors a monic squarefree polynomial over Q(alpha)
/// into monic irreducible factors.
fn trager_factor(sf: &Poly, field: &NumberField) -> Vec<Poly> {
    let g = sf.monic();
    if g.degree() == Some(1) {
        return vec![g];
    }
    let minpoly = field.minpoly();
    let dm = minpoly.len() - 1;
    let deg_g = g.degree().unwrap();
    for s in 0..=(4 * deg_g * dm) as i64 {
        // Shifted polynomial g_s(D) = g(D - s*alpha).
        let alpha = field.generator();
        let shift = alpha.mul(&Scalar::from_int(-s));
        let gs = g.shift(&shift);
        // Norm via evaluation-interpolation in D.
        let norm_deg = deg_g * dm;
        let mut points = vec![];
        let mut values = vec![];
        let mut v: i64 = 0;
        while points.len() < norm_deg + 1 {
            let vv = Scalar::from_int(v);
            // t-polynomial of gs evaluated at D = v.
            let mut tpoly = vec![BigRational::zero(); dm];
            let mut vp = Scalar::one();
            for i in 0..=deg_g {
                let c = gs.coeff(i).mul(&vp);
                for (j, cj) in c.ext_coeffs().iter().enumerate() {
                    tpoly[j] += cj;
                }
                vp = vp.mul(&vv);
            }
            let res = resultant_q(minpoly, &tpoly);
            points.push(BigInt::from(v));
            values.push(res);
            v = if v > 0 { -v } else { -v + 1 };
        }
        let norm = interpolate(&points, &values).unwrap();
        if norm.is_zero() {
            continue;
        }
        let norm = norm.monic();
        if norm.gcd(&norm.derivative()).degree() != Some(0) {
            continue; // norm not squarefree; try the next shift
        }
        let mut out = vec![];
        for (h, _) in norm.factor_over_q() {
            // Candidate factor gcd(g, h(D + s*alpha)) over the field.
            let hs = h.shift(&field.generator().mul(&Scalar::from_int(s)));
            let factor = g.gcd(&hs);
            if factor.degree().map_or(false, |d| d >= 1) {
                out.push(factor.monic());
            }
        }
        // Sanity: factors multiply back to g.
        let mut prod = Poly::one();
        for f in &out {
            prod = prod.mul(f);
        }
        if prod == g {
            return out;
        }
    }
    unreachable!("Trager factorisation found no squarefree norm");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn divrem_roundtrip() {
        let a = Poly::from_i64(&[1, 0, -3, 0, 1]); // 1 - 3x^2 + x^4
        let b = Poly::from_i64(&[-1, 1]); // x - 1
        let (quot, rem) = a.divrem(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = Poly::from_i64(&[-1, 1]); // x - 1
        let a = f.mul(&Poly::from_i64(&[2, 1]));
        let b = f.mul(&Poly::from_i64(&[5, 0, 1]));
        assert_eq!(a.gcd(&b), f.monic());
    }

    #[test]
    fn squarefree_decomposition_splits_multiplicity() {
        let f = Poly::from_i64(&[-1, 1]); // x - 1
        let g = Poly::from_i64(&[2, 1]); // x + 2
        let p = f.pow(2).mul(&g);
        let sf = p.squarefree_decomposition();
        assert_eq!(sf, vec![(g.monic(), 1), (f.monic(), 2)]);
    }

    #[test]
    fn factor_quadratics() {
        // x^2 - 1 = (x-1)(x+1)
        let p = Poly::from_i64(&[-1, 0, 1]);
        let f = p.factor_over_q();
        assert_eq!(f.len(), 2);
        // x^2 - 2 irreducible
        let p = Poly::from_i64(&[-2, 0, 1]);
        let f = p.factor_over_q();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].0, p);
    }

    #[test]
    fn factor_quartic_without_rational_roots() {
        // (x^2 - 2)(x^2 - 3): no rational roots, two quadratic factors.
        let p = Poly::from_i64(&[-2, 0, 1]).mul(&Poly::from_i64(&[-3, 0, 1]));
        let f = p.factor_over_q();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, m)| g.degree() == Some(2) && *m == 1));
        // x^4 + 1 is irreducible over Q.
        let p = Poly::from_i64(&[1, 0, 0, 0, 1]);
        let f = p.factor_over_q();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].0.degree(), Some(4));
    }

    #[test]
    fn factor_with_multiplicities_and_fractions() {
        // (x - 1/2)^2 (x + 3)
        let h = Poly::from_rationals(vec![q(-1, 2), q(1, 1)]);
        let g = Poly::from_i64(&[3, 1]);
        let p = h.mul(&h).mul(&g);
        let f = p.factor_over_q();
        assert_eq!(f, vec![(h.monic(), 2), (g.monic(), 1)]);
    }

    #[test]
    fn trager_splits_over_sqrt2() {
        let field = NumberField::extend(&[q(-2, 1), q(0, 1), q(1, 1)])
            .unwrap()
            .unwrap();
        // x^2 - 2 splits as (x - a)(x + a) over Q(a), a = sqrt(2).
        let p = Poly::from_i64(&[-2, 0, 1]);
        let f = p.factor_over_field(Some(&field));
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, _)| g.degree() == Some(1)));
        let roots = p.roots_in_field(Some(&field));
        assert_eq!(roots.len(), 2);
        let a = field.generator();
        assert!(roots.iter().any(|(r, _)| *r == a));
        assert!(roots.iter().any(|(r, _)| *r == a.neg()));
        // x^2 - 3 stays irreducible over Q(sqrt2).
        let p = Poly::from_i64(&[-3, 0, 1]);
        let f = p.factor_over_field(Some(&field));
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].0.degree(), Some(2));
    }

    #[test]
    fn shift_substitution() {
        // p(x) = x^2, p(x+1) = x^2 + 2x + 1
        let p = Poly::from_i64(&[0, 0, 1]);
        assert_eq!(p.shift(&Scalar::one()), Poly::from_i64(&[1, 2, 1]));
    }
}
