use std::fmt;
use std::sync::Arc;

use super::ring::{format_skew, DivisionRing};
use super::SkewError;
use crate::arith::{FieldSpec, UniPoly};

/// Largest automorphism order accepted for a twist.
pub const MAX_TWIST_ORDER: usize = 64;

/// `H[T, sigma]`: coefficients in `H`, with `T a = sigma(a) T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRing<R: DivisionRing> {
    base: R,
    sigma: R::Auto,
    order: usize,
}

impl<R: DivisionRing> SkewRing<R> {
    /// Validates `sigma` on the generators of `base` (multiplicative,
    /// additive, nonvanishing) and computes its order.
    pub fn new(base: R, sigma: R::Auto) -> Result<Arc<Self>, SkewError> {
        let gens = base.generators();
        let s = |a: &R::Elem| base.apply(&sigma, a);
        if s(&base.one()) != base.one() {
            return Err(SkewError::NotAnAutomorphism(sigma.to_string()));
        }
        for x in &gens {
            if base.is_zero(&s(x)) {
                return Err(SkewError::NotAnAutomorphism(sigma.to_string()));
            }
            for y in &gens {
                let mul_ok = s(&base.mul(x, y)) == base.mul(&s(x), &s(y));
                let add_ok = s(&base.add(x, y)) == base.add(&s(x), &s(y));
                if !mul_ok || !add_ok {
                    return Err(SkewError::NotAnAutomorphism(sigma.to_string()));
                }
            }
        }
        let mut images = gens.clone();
        let mut order = None;
        for n in 1..=MAX_TWIST_ORDER {
            images = images.iter().map(&s).collect();
            if images == gens {
                order = Some(n);
                break;
            }
        }
        let order = order.ok_or_else(|| SkewError::InfiniteOrder(sigma.to_string()))?;
        Ok(Arc::new(SkewRing { base, sigma, order }))
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn sigma(&self) -> &R::Auto {
        &self.sigma
    }

    /// Smallest `n >= 1` with `sigma^n = id`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_untwisted(&self) -> bool {
        self.order == 1
    }

    /// `sigma^i(a)`, with negative `i` meaning powers of the inverse.
    pub fn twist(&self, a: &R::Elem, i: i64) -> R::Elem {
        let k = i.rem_euclid(self.order as i64);
        (0..k).fold(a.clone(), |x, _| self.base.apply(&self.sigma, &x))
    }

    /// Central in `H` and fixed by `sigma`: `h^<sigma>` membership.
    pub fn is_fixed_central(&self, a: &R::Elem) -> bool {
        let b = &self.base;
        self.twist(a, 1) == *a && b.generators().iter().all(|g| b.mul(a, g) == b.mul(g, a))
    }

    /// Elements of `h^<sigma>` when `H` is finite.
    pub fn fixed_center(&self) -> Option<Vec<R::Elem>> {
        Some(self.base.elements()?.into_iter().filter(|a| self.is_fixed_central(a)).collect())
    }
}

impl<R: DivisionRing> fmt::Display for SkewRing<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.base, self.sigma)
    }
}

/// `a_0 + a_1 T + ... + a_m T^m` in `H[T, sigma]`.
#[derive(Clone, Debug)]
pub struct SkewPoly<R: DivisionRing> {
    ring: Arc<SkewRing<R>>,
    coeffs: Vec<R::Elem>,
}

impl<R: DivisionRing> PartialEq for SkewPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.coeffs == other.coeffs
    }
}

impl<R: DivisionRing> Eq for SkewPoly<R> {}

fn same_ring<R: DivisionRing>(a: &Arc<SkewRing<R>>, b: &Arc<SkewRing<R>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<R: DivisionRing> SkewPoly<R> {
    pub fn new(ring: &Arc<SkewRing<R>>, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.base.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { ring: ring.clone(), coeffs }
    }

    pub fn zero(ring: &Arc<SkewRing<R>>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn one(ring: &Arc<SkewRing<R>>) -> Self {
        Self::constant(ring, ring.base.one())
    }

    pub fn constant(ring: &Arc<SkewRing<R>>, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c T^d`
    pub fn monomial(ring: &Arc<SkewRing<R>>, c: R::Elem, d: usize) -> Self {
        let mut coeffs = vec![ring.base.zero(); d];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    pub fn t(ring: &Arc<SkewRing<R>>) -> Self {
        Self::monomial(ring, ring.base.one(), 1)
    }

    pub fn ring(&self) -> &Arc<SkewRing<R>> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.base.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    fn assert_same(&self, other: &Self) {
        assert!(same_ring(&self.ring, &other.ring), "skew polynomials over different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        let b = &self.ring.base;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.ring, (0..n).map(|i| b.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        let b = &self.ring.base;
        Self::new(&self.ring, self.coeffs.iter().map(|c| b.neg(c)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `(sum a_i T^i)(sum b_j T^j) = sum a_i sigma^i(b_j) T^(i+j)`
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let b = &self.ring.base;
        let mut out = vec![b.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if b.is_zero(x) {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                let term = b.mul(x, &self.ring.twist(y, i as i64));
                out[i + j] = b.add(&out[i + j], &term);
            }
        }
        Self::new(&self.ring, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ring), |acc, _| acc.mul(self))
    }
}

impl<R: DivisionRing> fmt::Display for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_skew(&self.ring.base, &self.coeffs))
    }
}

impl SkewPoly<FieldSpec> {
    /// The same coefficient list read as a commutative polynomial.
    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(&self.ring.base, self.coeffs.clone())
    }

    pub fn from_unipoly(ring: &Arc<SkewRing<FieldSpec>>, f: &UniPoly) -> Self {
        Self::new(ring, f.coeffs().to_vec())
    }
}

fn check_same<R: DivisionRing>(a: &SkewPoly<R>, b: &SkewPoly<R>) -> Result<(), SkewError> {
    if same_ring(&a.ring, &b.ring) {
        Ok(())
    } else {
        Err(SkewError::RingMismatch)
    }
}

pub fn skew_mul<R: DivisionRing>(f: &SkewPoly<R>, g: &SkewPoly<R>) -> Result<SkewPoly<R>, SkewError> {
    check_same(f, g)?;
    Ok(f.mul(g))
}

/// `a = q b + r` with `deg r < deg b`.
pub fn right_divide<R: DivisionRing>(
    a: &SkewPoly<R>,
    b: &SkewPoly<R>,
) -> Result<(SkewPoly<R>, SkewPoly<R>), SkewError> {
    check_same(a, b)?;
    let m = b.degree().ok_or(SkewError::DivisionByZero)?;
    let ring = &a.ring;
    let k = &ring.base;
    let mut q = SkewPoly::zero(ring);
    let mut r = a.clone();
    while let Some(d) = r.degree().filter(|&d| d >= m) {
        // c T^(d-m) * b_m T^m = c sigma^(d-m)(b_m) T^d
        let lb = ring.twist(b.leading().unwrap(), (d - m) as i64);
        let c = k.mul(r.leading().unwrap(), &k.inv(&lb).ok_or(SkewError::DivisionByZero)?);
        let term = SkewPoly::monomial(ring, c, d - m);
        r = r.sub(&term.mul(b));
        q = q.add(&term);
    }
    Ok((q, r))
}

/// `a = b q + r` with `deg r < deg b`.
pub fn left_divide<R: DivisionRing>(a: &SkewPoly<R>, b: &SkewPoly<R>) -> Result<(SkewPoly<R>, SkewPoly<R>), SkewError> {
    check_same(a, b)?;
    let m = b.degree().ok_or(SkewError::DivisionByZero)?;
    let ring = &a.ring;
    let k = &ring.base;
    let inv_lb = k.inv(b.leading().unwrap()).ok_or(SkewError::DivisionByZero)?;
    let mut q = SkewPoly::zero(ring);
    let mut r = a.clone();
    while let Some(d) = r.degree().filter(|&d| d >= m) {
        // b_m T^m * c T^(d-m) = b_m sigma^m(c) T^d
        let c = ring.twist(&k.mul(&inv_lb, r.leading().unwrap()), -(m as i64));
        let term = SkewPoly::monomial(ring, c, d - m);
        r = r.sub(&b.mul(&term));
        q = q.add(&term);
    }
    Ok((q, r))
}

/// `(r, s)` with `x r = y s != 0`, of least degree.
///
/// Extended Euclid with left division: `r_{i-1} = r_i q_i + r_{i+1}` and
/// `r_i = x u_i + y v_i`. When the remainder vanishes,
/// `x u = y (-v)` is a least common right multiple.
pub fn ore_witness<R: DivisionRing>(x: &SkewPoly<R>, y: &SkewPoly<R>) -> Result<(SkewPoly<R>, SkewPoly<R>), SkewError> {
    check_same(x, y)?;
    if x.is_zero() || y.is_zero() {
        return Err(SkewError::ZeroInput);
    }
    let ring = &x.ring;
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut u0, mut u1) = (SkewPoly::one(ring), SkewPoly::zero(ring));
    let (mut v0, mut v1) = (SkewPoly::zero(ring), SkewPoly::one(ring));
    loop {
        let (q, rem) = left_divide(&r0, &r1)?;
        let u2 = u0.sub(&u1.mul(&q));
        let v2 = v0.sub(&v1.mul(&q));
        if rem.is_zero() {
            let (r, s) = (u2, v2.neg());
            let lhs = x.mul(&r);
            if lhs.is_zero() || lhs != y.mul(&s) {
                return Err(SkewError::WitnessCheckFailed);
            }
            return Ok((r, s));
        }
        (r0, r1) = (r1, rem);
        (u0, u1) = (u1, u2);
        (v0, v1) = (v1, v2);
    }
}

/// `f` commutes with `T` and with every generator of the coefficient ring.
pub fn center_test<R: DivisionRing>(f: &SkewPoly<R>) -> bool {
    let ring = &f.ring;
    let t = SkewPoly::t(ring);
    if f.mul(&t) != t.mul(f) {
        return false;
    }
    ring.base.generators().into_iter().all(|g| {
        let c = SkewPoly::constant(ring, g);
        f.mul(&c) == c.mul(f)
    })
}
