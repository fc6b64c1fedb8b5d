//! Base fields: the rationals, prime fields and their extensions.
//!
//! A [`FieldSpec`] is a cheap-to-clone descriptor; [`FieldElem`] values carry
//! no back-reference to their field and are only meaningful relative to the
//! spec that produced them. Mixing elements of different fields is a logic
//! error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

/// Largest prime accepted as a field characteristic. Keeps products of two
/// residues inside `u64` with room to spare.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    p: u64,
    degree: usize,
    /// Monic, ascending, length `degree + 1`.
    modulus: Vec<u64>,
}

impl ExtField {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Ext(Arc<ExtField>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Mod(u64),
    /// Coefficients in the generator `g`, ascending, always of length `k`.
    Ext(Vec<u64>),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Ext(e) => write!(f, "GF({})", (e.p as u128).pow(e.degree as u32)),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ArithError;

    /// Accepts `Q`, `QQ` and `GF(q)` for a prime power `q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| ArithError::InvalidField(s.to_string()))?;
        let q: u64 = inner.trim().parse().map_err(|_| ArithError::InvalidField(s.to_string()))?;
        FieldSpec::galois(q)
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Result<Self, ArithError> {
        if !is_prime_u64(p) || p >= MAX_CHARACTERISTIC {
            return Err(ArithError::InvalidField(format!("GF({p}): not a supported prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// The field with `q` elements, `q` a prime power. Extension fields use
    /// the lexicographically smallest monic irreducible modulus, comparing
    /// coefficients from `x^(k-1)` down to the constant term.
    pub fn galois(q: u64) -> Result<Self, ArithError> {
        if q < 2 {
            return Err(ArithError::InvalidField(format!("GF({q})")));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2 has a smallest divisor");
        let mut k = 0usize;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(ArithError::InvalidField(format!("GF({q}): not a prime power")));
        }
        let base = FieldSpec::prime(p)?;
        if k == 1 {
            return Ok(base);
        }
        let modulus = smallest_irreducible(p, k);
        Ok(FieldSpec::Ext(Arc::new(ExtField { p, degree: k, modulus })))
    }

    /// Extension of `GF(p)` by an explicit monic modulus (ascending).
    pub fn extension(p: u64, modulus: Vec<u64>) -> Result<Self, ArithError> {
        let base = FieldSpec::prime(p)?;
        let k = modulus.len().saturating_sub(1);
        if k < 2 || modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(ArithError::InvalidField("extension modulus must be monic of degree >= 2".into()));
        }
        let poly = super::UniPoly::new(&base, modulus.iter().map(|&c| FieldElem::Mod(c)).collect());
        if !super::factor::is_irreducible_finite(&poly) {
            return Err(ArithError::InvalidField("extension modulus is reducible".into()));
        }
        Ok(FieldSpec::Ext(Arc::new(ExtField { p, degree: k, modulus })))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
            FieldSpec::Ext(e) => e.p,
        }
    }

    /// Degree over the prime field (1 for `Q` and `GF(p)`).
    pub fn extension_degree(&self) -> usize {
        match self {
            FieldSpec::Ext(e) => e.degree,
            _ => 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, FieldSpec::Rationals)
    }

    /// Number of elements, `None` for `Q`.
    pub fn order(&self) -> Option<BigUint> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(BigUint::from(*p)),
            FieldSpec::Ext(e) => Some(BigUint::from(e.p).pow(e.degree as u32)),
        }
    }

    /// Number of elements as a machine integer, `None` for `Q` or overflow.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|q| q.to_u64())
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => FieldElem::Mod(0),
            FieldSpec::Ext(e) => FieldElem::Ext(vec![0; e.degree]),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => FieldElem::Mod(reduce_bigint(n, *p)),
            FieldSpec::Ext(e) => {
                let mut v = vec![0; e.degree];
                v[0] = reduce_bigint(n, e.p);
                FieldElem::Ext(v)
            }
        }
    }

    /// Image of a rational number; `None` when the denominator vanishes in
    /// positive characteristic.
    pub fn from_rational(&self, r: &BigRational) -> Option<FieldElem> {
        match self {
            FieldSpec::Rationals => Some(FieldElem::Rational(r.clone())),
            _ => {
                let num = self.from_bigint(r.numer());
                let den = self.from_bigint(r.denom());
                self.div(&num, &den)
            }
        }
    }

    /// The adjoined generator `g` of an extension field.
    pub fn generator(&self) -> Option<FieldElem> {
        match self {
            FieldSpec::Ext(e) => {
                let mut v = vec![0; e.degree];
                v[1] = 1;
                Some(FieldElem::Ext(v))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Mod(v) => *v == 0,
            FieldElem::Ext(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self, a: &FieldElem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (FieldSpec::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => FieldElem::Rational(x + y),
            (FieldSpec::Prime(p), FieldElem::Mod(x), FieldElem::Mod(y)) => FieldElem::Mod((x + y) % p),
            (FieldSpec::Ext(e), FieldElem::Ext(x), FieldElem::Ext(y)) => {
                FieldElem::Ext(x.iter().zip(y).map(|(u, v)| (u + v) % e.p).collect())
            }
            _ => mismatch(self, a, b),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (FieldSpec::Rationals, FieldElem::Rational(x)) => FieldElem::Rational(-x),
            (FieldSpec::Prime(p), FieldElem::Mod(x)) => FieldElem::Mod((p - x) % p),
            (FieldSpec::Ext(e), FieldElem::Ext(x)) => FieldElem::Ext(x.iter().map(|u| (e.p - u) % e.p).collect()),
            _ => mismatch(self, a, a),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (FieldSpec::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => FieldElem::Rational(x * y),
            (FieldSpec::Prime(p), FieldElem::Mod(x), FieldElem::Mod(y)) => FieldElem::Mod(x * y % p),
            (FieldSpec::Ext(e), FieldElem::Ext(x), FieldElem::Ext(y)) => FieldElem::Ext(ext_mul(e, x, y)),
            _ => mismatch(self, a, b),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (self, a) {
            (FieldSpec::Rationals, FieldElem::Rational(x)) => FieldElem::Rational(x.recip()),
            (FieldSpec::Prime(p), FieldElem::Mod(x)) => FieldElem::Mod(pow_mod(*x, p - 2, *p)),
            (FieldSpec::Ext(_), FieldElem::Ext(_)) => {
                // a^(q-2) in the multiplicative group of order q - 1
                let q = self.order().expect("finite");
                self.pow(a, &(q - 2u32))
            }
            _ => mismatch(self, a, a),
        })
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Option<FieldElem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &FieldElem, e: &BigUint) -> FieldElem {
        let mut result = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    pub fn pow_u64(&self, a: &FieldElem, e: u64) -> FieldElem {
        self.pow(a, &BigUint::from(e))
    }

    /// `x -> x^(p^j)`; the identity on `Q`.
    pub fn frobenius(&self, a: &FieldElem, j: u32) -> FieldElem {
        match self {
            FieldSpec::Rationals => a.clone(),
            _ => {
                let k = self.extension_degree() as u32;
                let j = j % k;
                let e = BigUint::from(self.characteristic()).pow(j);
                self.pow(a, &e)
            }
        }
    }

    /// The `p`-th root in a finite field (Frobenius is bijective).
    pub fn pth_root(&self, a: &FieldElem) -> FieldElem {
        match self {
            FieldSpec::Rationals => panic!("p-th roots are only defined in positive characteristic"),
            FieldSpec::Prime(_) => a.clone(),
            FieldSpec::Ext(e) => self.frobenius(a, (e.degree - 1) as u32),
        }
    }

    /// Is `a` a square in this field? Uses Euler's criterion in odd
    /// characteristic and an exact integer square test over `Q`.
    pub fn is_square(&self, a: &FieldElem) -> bool {
        if self.is_zero(a) {
            return true;
        }
        match (self, a) {
            (FieldSpec::Rationals, FieldElem::Rational(r)) => {
                if r.is_negative() {
                    return false;
                }
                let prod = r.numer() * r.denom();
                let s = prod.sqrt();
                &s * &s == prod
            }
            _ if self.characteristic() == 2 => true,
            _ => {
                let q = self.order().expect("finite");
                let e = (q - 1u32) / 2u32;
                self.is_one(&self.pow(a, &e))
            }
        }
    }

    /// Exact square root over `Q`, `None` if not a square.
    pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
        if r.is_negative() {
            return None;
        }
        let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
        if &n * &n == *r.numer() && &d * &d == *r.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    /// All elements of a finite field in index order; empty for `Q`.
    pub fn elements(&self) -> Vec<FieldElem> {
        match self.order_u64() {
            Some(q) => (0..q).map(|i| self.element_from_index(i)).collect(),
            None => Vec::new(),
        }
    }

    /// The element whose base-`p` digits (constant coefficient first) are `i`.
    pub fn element_from_index(&self, mut i: u64) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(BigInt::from(i))),
            FieldSpec::Prime(p) => FieldElem::Mod(i % p),
            FieldSpec::Ext(e) => {
                let mut v = vec![0; e.degree];
                for c in v.iter_mut() {
                    *c = i % e.p;
                    i /= e.p;
                }
                FieldElem::Ext(v)
            }
        }
    }

    /// Canonical total order used for deterministic output: numeric order on
    /// `Q`, symmetric residues `-(p-1)/2..=(p-1)/2` on `GF(p)`, and for
    /// extension fields the symmetric coefficient vectors compared from the
    /// top power of `g` down.
    pub fn cmp_elems(&self, a: &FieldElem, b: &FieldElem) -> Ordering {
        match (self, a, b) {
            (FieldSpec::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => x.cmp(y),
            (FieldSpec::Prime(p), FieldElem::Mod(x), FieldElem::Mod(y)) => symmetric(*x, *p).cmp(&symmetric(*y, *p)),
            (FieldSpec::Ext(e), FieldElem::Ext(x), FieldElem::Ext(y)) => {
                for i in (0..e.degree).rev() {
                    let o = symmetric(x[i], e.p).cmp(&symmetric(y[i], e.p));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }
            _ => mismatch(self, a, b),
        }
    }

    /// Rational value of an element of `Q`.
    pub fn as_rational<'a>(&self, a: &'a FieldElem) -> Option<&'a BigRational> {
        match a {
            FieldElem::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn check_elem(&self, a: &FieldElem) -> bool {
        match (self, a) {
            (FieldSpec::Rationals, FieldElem::Rational(_)) => true,
            (FieldSpec::Prime(p), FieldElem::Mod(x)) => x < p,
            (FieldSpec::Ext(e), FieldElem::Ext(v)) => v.len() == e.degree && v.iter().all(|c| *c < e.p),
            _ => false,
        }
    }

    /// Text form of an element, as accepted back by the polynomial parser.
    pub fn format_elem(&self, a: &FieldElem) -> String {
        match (self, a) {
            (FieldSpec::Rationals, FieldElem::Rational(r)) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            (FieldSpec::Prime(p), FieldElem::Mod(x)) => symmetric(*x, *p).to_string(),
            (FieldSpec::Ext(e), FieldElem::Ext(v)) => {
                let mut out = String::new();
                for i in (0..e.degree).rev() {
                    let c = symmetric(v[i], e.p);
                    if c == 0 {
                        continue;
                    }
                    let mag = c.unsigned_abs();
                    let mono = match i {
                        0 => mag.to_string(),
                        _ => {
                            let g = if i == 1 { "g".to_string() } else { format!("g^{i}") };
                            if mag == 1 {
                                g
                            } else {
                                format!("{mag}*{g}")
                            }
                        }
                    };
                    if out.is_empty() {
                        if c < 0 {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if c < 0 { " - " } else { " + " });
                    }
                    out.push_str(&mono);
                }
                if out.is_empty() {
                    out.push('0');
                }
                out
            }
            _ => mismatch(self, a, a),
        }
    }
}

pub(crate) fn symmetric(x: u64, p: u64) -> i64 {
    if x > p / 2 {
        x as i64 - p as i64
    } else {
        x as i64
    }
}

pub(crate) fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    match r.sign() {
        Sign::NoSign => 0,
        _ => r.to_u64().expect("residue fits"),
    }
}

fn mismatch(spec: &FieldSpec, a: &FieldElem, b: &FieldElem) -> ! {
    panic!("field element mismatch: {a:?}, {b:?} are not both elements of {spec}")
}

fn ext_mul(e: &ExtField, x: &[u64], y: &[u64]) -> Vec<u64> {
    let k = e.degree;
    let p = e.p;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + a * b) % p;
        }
    }
    // reduce by the monic modulus from the top down
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for i in 0..k {
            let m = e.modulus[i];
            prod[d - k + i] = (prod[d - k + i] + (p - c) * m) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// Lexicographically smallest monic irreducible polynomial of degree `k`
/// over `GF(p)`, ascending coefficients.
fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    let base = FieldSpec::Prime(p);
    let count = p.pow(k as u32);
    for idx in 0..count {
        // idx enumerates (c_{k-1}, ..., c_0) with c_{k-1} most significant
        let mut coeffs = vec![0u64; k + 1];
        let mut rest = idx;
        for c in coeffs.iter_mut().take(k) {
            *c = rest % p;
            rest /= p;
        }
        coeffs[k] = 1;
        let poly = super::UniPoly::new(&base, coeffs.iter().map(|&c| FieldElem::Mod(c)).collect());
        if super::factor::is_irreducible_finite(&poly) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Convenience for tests and callers: a rational from numerator/denominator.
pub fn rat(n: i64, d: i64) -> FieldElem {
    FieldElem::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

impl FieldElem {
    pub fn is_integral_rational(&self) -> bool {
        matches!(self, FieldElem::Rational(r) if r.is_integer())
    }

    pub fn is_one_rational(&self) -> bool {
        matches!(self, FieldElem::Rational(r) if r.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_strings() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("GF(5)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        let f9: FieldSpec = "GF(9)".parse().unwrap();
        assert_eq!(f9.to_string(), "GF(9)");
        assert!("GF(6)".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn smallest_moduli() {
        let FieldSpec::Ext(e4) = FieldSpec::galois(4).unwrap() else { panic!() };
        assert_eq!(e4.modulus(), &[1, 1, 1]);
        let FieldSpec::Ext(e9) = FieldSpec::galois(9).unwrap() else { panic!() };
        assert_eq!(e9.modulus(), &[1, 0, 1]);
        let FieldSpec::Ext(e8) = FieldSpec::galois(8).unwrap() else { panic!() };
        assert_eq!(e8.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn gf4_generator_has_order_three() {
        let f4 = FieldSpec::galois(4).unwrap();
        let w = f4.generator().unwrap();
        let w2 = f4.mul(&w, &w);
        assert_eq!(f4.mul(&w2, &w), f4.one());
        assert_eq!(f4.frobenius(&w, 1), w2);
        assert_eq!(f4.format_elem(&w2), "g + 1");
    }

    #[test]
    fn inverses_in_every_small_field() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 25, 27] {
            let f = FieldSpec::galois(q).unwrap();
            for a in f.elements().into_iter().skip(1) {
                let ai = f.inv(&a).unwrap();
                assert!(f.is_one(&f.mul(&a, &ai)), "GF({q})");
            }
            assert!(f.inv(&f.zero()).is_none());
        }
    }

    #[test]
    fn squares() {
        let q = FieldSpec::Rationals;
        assert!(q.is_square(&rat(49, 4)));
        assert!(!q.is_square(&rat(-108, 1)));
        assert!(!q.is_square(&rat(2, 1)));
        let f5 = FieldSpec::Prime(5);
        let sq: Vec<bool> = (0..5).map(|i| f5.is_square(&FieldElem::Mod(i))).collect();
        assert_eq!(sq, [true, true, false, false, true]);
    }

    #[test]
    fn symmetric_order() {
        let f5 = FieldSpec::Prime(5);
        assert_eq!(f5.cmp_elems(&FieldElem::Mod(4), &FieldElem::Mod(1)), Ordering::Less);
        assert_eq!(f5.format_elem(&FieldElem::Mod(4)), "-1");
    }
}
