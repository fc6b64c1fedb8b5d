//! Helpers for polynomials with integer coefficients, ascending order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{FieldElem, FieldSpec};
use super::poly::UniPoly;

pub(crate) type IntPoly = Vec<BigInt>;

pub(crate) fn trim(mut f: IntPoly) -> IntPoly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

pub(crate) fn add_scaled(a: &[BigInt], b: &[BigInt], k: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero) * k).collect())
}

pub(crate) fn reduce_mod(a: &[BigInt], m: &BigInt) -> IntPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Representatives in `(-m/2, m/2]`.
pub(crate) fn symmetric_mod(a: &[BigInt], m: &BigInt) -> IntPoly {
    let half: BigInt = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> IntPoly {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: IntPoly = a.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|l| l.is_negative()) {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    trim(out)
}

/// Exact quotient `a / b` over the integers, `None` if `b` does not divide.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let b = trim(b.to_vec());
    let lb = b.last()?.clone();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return if rem.is_empty() { Some(Vec::new()) } else { None };
    }
    let db = b.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(&lb);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
        quot[i] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(trim(quot))
    } else {
        None
    }
}

pub(crate) fn max_abs(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

pub(crate) fn to_mod_p(a: &[BigInt], field: &FieldSpec) -> UniPoly {
    UniPoly::new(field, a.iter().map(|c| field.from_bigint(c)).collect())
}

pub(crate) fn from_mod_p(f: &UniPoly) -> IntPoly {
    f.coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Mod(v) => BigInt::from(*v),
            _ => panic!("expected a prime-field polynomial"),
        })
        .collect()
}

/// Clear denominators of a rational polynomial and take the primitive part.
pub(crate) fn from_rational(f: &UniPoly) -> IntPoly {
    let den = f.coeffs().iter().fold(BigInt::one(), |l, c| match c {
        FieldElem::Rational(r) => l.lcm(r.denom()),
        _ => panic!("expected a rational polynomial"),
    });
    let ints: IntPoly = f
        .coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Rational(r) => r.numer() * (&den / r.denom()),
            _ => unreachable!(),
        })
        .collect();
    primitive(&ints)
}

pub(crate) fn to_rational_monic(a: &[BigInt]) -> UniPoly {
    let q = FieldSpec::Rationals;
    let lc = a.last().expect("nonzero").clone();
    UniPoly::new(&q, a.iter().map(|c| FieldElem::Rational(BigRational::new(c.clone(), lc.clone()))).collect())
}
