//! Twisted polynomial rings `H[T, sigma]` over finite fields and the
//! rational quaternions, and the permutation-group calculus of normalizer
//! quotients.

mod perm;
mod poly;
mod ring;

pub use perm::{degree_bookkeeping, normalizer_quotient, NormalizerQuotient, Perm, PermGroup, MAX_GROUP_ORDER};
pub use poly::{center_test, left_divide, ore_witness, right_divide, skew_mul, SkewPoly, SkewRing, MAX_TWIST_ORDER};
pub use ring::{Conjugation, DivisionRing, Frobenius, Quaternion, RationalQuaternions};

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::parse::{evaluate, parse_expr, Evaluator, ParseError};
use crate::arith::{ArithError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error("skew polynomials belong to different rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("Ore witness requires nonzero inputs")]
    ZeroInput,
    #[error("Ore witness failed re-verification")]
    WitnessCheckFailed,
    #[error("{0} is not a ring automorphism")]
    NotAnAutomorphism(String),
    #[error("{0} has order above {MAX_TWIST_ORDER}")]
    InfiniteOrder(String),
    #[error("invalid ring descriptor: {0}")]
    BadDescriptor(String),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("group order exceeds {0}")]
    GroupTooLarge(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("{part} does not divide {total}")]
    NonDivisible { total: u64, part: u64 },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

struct SkewEval<'a, R: DivisionRing> {
    ring: &'a Arc<SkewRing<R>>,
}

impl<R: DivisionRing> Evaluator for SkewEval<'_, R> {
    type Value = SkewPoly<R>;

    fn int(&self, n: &BigInt) -> SkewPoly<R> {
        SkewPoly::constant(self.ring, self.ring.base().from_int(n))
    }

    fn var(&self, name: &str) -> Option<SkewPoly<R>> {
        match name {
            "T" | "t" => Some(SkewPoly::t(self.ring)),
            _ => self.ring.base().symbol(name).map(|c| SkewPoly::constant(self.ring, c)),
        }
    }

    fn add(&self, a: &SkewPoly<R>, b: &SkewPoly<R>) -> SkewPoly<R> {
        a.add(b)
    }

    fn sub(&self, a: &SkewPoly<R>, b: &SkewPoly<R>) -> SkewPoly<R> {
        a.sub(b)
    }

    fn mul(&self, a: &SkewPoly<R>, b: &SkewPoly<R>) -> SkewPoly<R> {
        a.mul(b)
    }

    fn neg(&self, a: &SkewPoly<R>) -> SkewPoly<R> {
        a.neg()
    }

    /// `a * c^-1` for a nonzero constant `c`.
    fn div(&self, a: &SkewPoly<R>, b: &SkewPoly<R>) -> Result<SkewPoly<R>, String> {
        match b.degree() {
            Some(0) => {
                let inv = self.ring.base().inv(&b.coeff(0)).ok_or("division by zero")?;
                Ok(a.mul(&SkewPoly::constant(self.ring, inv)))
            }
            None => Err("division by zero".into()),
            _ => Err("only division by constants is supported".into()),
        }
    }
}

/// Parse a skew polynomial; products are taken in the order written, so
/// `T*g` is `sigma(g)*T`.
pub fn parse_skew<R: DivisionRing>(ring: &Arc<SkewRing<R>>, src: &str) -> Result<SkewPoly<R>, ParseError> {
    evaluate(&parse_expr(src)?, &SkewEval { ring })
}

/// A ring from a descriptor such as `GF(4);frob`, `GF(9);frob^2`,
/// `GF(4);id` or `H;conj(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnySkewRing {
    Field(Arc<SkewRing<FieldSpec>>),
    Quaternion(Arc<SkewRing<RationalQuaternions>>),
}

impl std::str::FromStr for AnySkewRing {
    type Err = SkewError;

    fn from_str(s: &str) -> Result<Self, SkewError> {
        let bad = || SkewError::BadDescriptor(s.to_string());
        let (base, sigma) = s.split_once(';').ok_or_else(bad)?;
        let (base, sigma) = (base.trim(), sigma.trim());
        if base == "H" {
            let h = RationalQuaternions;
            let u = if sigma == "id" {
                h.one()
            } else {
                let inner = sigma.strip_prefix("conj(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
                let one = SkewRing::new(h, h.identity())?;
                let u = parse_skew(&one, inner)?;
                match u.degree() {
                    Some(0) => u.coeff(0),
                    _ => return Err(bad()),
                }
            };
            return Ok(AnySkewRing::Quaternion(SkewRing::new(h, Conjugation(u))?));
        }
        let field: FieldSpec = base.parse()?;
        if !field.is_finite() {
            return Err(bad());
        }
        let j = match sigma {
            "id" => 0,
            "frob" => 1,
            _ => sigma.strip_prefix("frob^").and_then(|e| e.parse::<u32>().ok()).ok_or_else(bad)?,
        };
        Ok(AnySkewRing::Field(SkewRing::new(field, Frobenius(j))?))
    }
}

impl std::fmt::Display for AnySkewRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnySkewRing::Field(r) => write!(f, "{r}"),
            AnySkewRing::Quaternion(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let AnySkewRing::Field(r) = "GF(4);frob".parse().unwrap() else { panic!() };
        assert_eq!(r.order(), 2);
        assert_eq!(r.to_string(), "GF(4);frob");
        let AnySkewRing::Field(r) = "GF(9);frob^2".parse().unwrap() else { panic!() };
        assert_eq!(r.order(), 1);
        let AnySkewRing::Quaternion(r) = "H;conj(i)".parse().unwrap() else { panic!() };
        assert_eq!(r.order(), 2);
        assert_eq!(r.to_string(), "H;conj(i)");
        assert!("GF(4)".parse::<AnySkewRing>().is_err());
        assert!("Q;frob".parse::<AnySkewRing>().is_err());
        assert!("H;conj(T)".parse::<AnySkewRing>().is_err());
    }

    #[test]
    fn parse_round_trip() {
        let AnySkewRing::Field(r) = "GF(4);frob".parse().unwrap() else { panic!() };
        let f = parse_skew(&r, "T*g").unwrap();
        assert_eq!(f.to_string(), "(g + 1)*T");
        assert_eq!(parse_skew(&r, &f.to_string()).unwrap(), f);
        let AnySkewRing::Quaternion(h) = "H;conj(i)".parse().unwrap() else { panic!() };
        let f = parse_skew(&h, "(1/2 + j)*T^2 - k*T + 3").unwrap();
        assert_eq!(f.to_string(), "(1/2 + j)*T^2 - k*T + 3");
        assert_eq!(parse_skew(&h, "T*j").unwrap().to_string(), "-j*T");
        let err = parse_skew(&r, "T +\n  q").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
    }
}
