//! Dense univariate polynomials over a [`FieldSpec`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use super::field::{FieldElem, FieldSpec};
use super::ArithError;

/// Polynomial with coefficients in ascending degree. Trailing zeros are
/// stripped on construction, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(field: &FieldSpec, coeffs: Vec<FieldElem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| field.check_elem(c)));
        let mut p = UniPoly { field: field.clone(), coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(field: &FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &FieldSpec) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &FieldSpec, c: FieldElem) -> Self {
        Self::new(field, vec![c])
    }

    /// The variable itself.
    pub fn x(field: &FieldSpec) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &FieldSpec, c: FieldElem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    /// `x - root`.
    pub fn linear(field: &FieldSpec, root: &FieldElem) -> Self {
        Self::new(field, vec![field.neg(root), field.one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        self.check_field(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(f, coeffs)
    }

    pub fn neg_poly(&self) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.neg(a)).collect())
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.add_poly(&other.neg_poly())
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            base = base.mul_poly(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        self.check_field(divisor);
        let f = &self.field;
        let dl = divisor.leading().ok_or(ArithError::DivisionByZero)?;
        let dl_inv = f.inv(dl).expect("nonzero");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(&rem[i + dd], &dl_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(&rem[i + j], &f.mul(&c, d));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, ArithError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Quotient when `divisor` divides `self`, `None` otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Monic greatest common divisor (zero iff both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub_poly(&q.mul_poly(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub_poly(&q.mul_poly(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = f.inv(lc).expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
        Self::new(f, coeffs)
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(&self.field), |acc, c| {
            acc.mul_poly(other).add_poly(&Self::constant(&self.field, c.clone()))
        })
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul_poly(other).rem(modulus).expect("nonzero modulus")
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = Self::one(&self.field).rem(modulus).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, modulus);
            if e.bit(i) {
                acc = acc.mul_mod(&base, modulus);
            }
        }
        acc
    }

    /// Apply a coefficient map that may change the field.
    pub fn map_coeffs(&self, target: &FieldSpec, f: impl Fn(&FieldElem) -> FieldElem) -> Self {
        Self::new(target, self.coeffs.iter().map(f).collect())
    }

    /// Deterministic order: by degree, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                let o = self.field.cmp_elems(a, b);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    /// Render in the given variable name, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        let terms: Vec<(String, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (self.field.format_elem(c), i))
            .collect();
        join_terms(&terms, var)
    }
}

fn is_compound(s: &str) -> bool {
    s[1..].contains(" + ") || s[1..].contains(" - ")
}

fn monomial(var: &str, d: usize) -> String {
    match d {
        1 => var.to_string(),
        _ => format!("{var}^{d}"),
    }
}

/// Join `(coefficient text, degree)` pairs, highest degree first, into the
/// `a*X^k + ...` surface syntax. Compound coefficients are parenthesized and
/// a leading minus on a simple coefficient becomes a subtraction.
pub(crate) fn join_terms(terms: &[(String, usize)], var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, d)) in terms.iter().enumerate() {
        let (neg, body) = if terms.len() == 1 && *d == 0 {
            (false, c.clone())
        } else if is_compound(c) {
            let body = if *d == 0 { format!("({c})") } else { format!("({c})*{}", monomial(var, *d)) };
            (false, body)
        } else {
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, c.clone()),
            };
            let body = match (*d, mag.as_str()) {
                (0, _) => mag,
                (_, "1") => monomial(var, *d),
                _ => format!("{mag}*{}", monomial(var, *d)),
            };
            (neg, body)
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("Y"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.add_poly(rhs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.sub_poly(rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.mul_poly(rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.neg_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat;

    fn q(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(&FieldSpec::Rationals, c)
    }

    #[test]
    fn division_identity() {
        let a = q(&[1, 2, 0, 3, 5]);
        let b = q(&[2, 0, 7]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
        assert_eq!(a.div_rem(&UniPoly::zero(a.field())), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn gcd_and_bezout() {
        let a = &q(&[-1, 1]) * &q(&[2, 0, 1]);
        let b = &q(&[-1, 1]) * &q(&[3, 1]);
        assert_eq!(a.gcd(&b), q(&[-1, 1]));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn printing() {
        assert_eq!(q(&[-2, 0, 1]).to_string(), "Y^2 - 2");
        assert_eq!(q(&[0, -1, 1]).to_string(), "Y^2 - Y");
        assert_eq!(q(&[]).to_string(), "0");
        let p = UniPoly::new(&FieldSpec::Rationals, vec![rat(-2, 1), rat(9, 2), rat(-5, 2)]);
        assert_eq!(p.to_string_in("T"), "-5/2*T^2 + 9/2*T - 2");
        let f5 = FieldSpec::Prime(5);
        assert_eq!(UniPoly::from_i64s(&f5, &[-1, 1]).to_string(), "Y - 1");
    }

    #[test]
    fn pow_mod_matches_pow() {
        let f7 = FieldSpec::Prime(7);
        let a = UniPoly::from_i64s(&f7, &[3, 1, 2]);
        let m = UniPoly::from_i64s(&f7, &[1, 0, 0, 1]);
        assert_eq!(a.pow_mod(&BigUint::from(5u32), &m), a.pow(5).rem(&m).unwrap());
    }
}
