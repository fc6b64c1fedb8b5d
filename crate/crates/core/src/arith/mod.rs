//! Exact field and polynomial arithmetic.

pub mod factor;
pub mod field;
pub mod interp;
pub mod param;
pub mod parse;
pub mod poly;
pub mod resultant;

mod intpoly;

pub use factor::{factor, factor_with, factor_with_seed, FactorConfig, Factorization, DEFAULT_SEED};
pub use field::{rat, FieldElem, FieldSpec};
pub use interp::lagrange_interpolate_coeffwise;
pub use param::ParamPoly;
pub use parse::ParseError;
pub use poly::UniPoly;
pub use resultant::{discriminant, discriminant_y, is_separable, resultant_y};

use num_bigint::BigInt;
use thiserror::Error;

/// Upper limit on the size of any integer produced by arithmetic, in decimal
/// digits.
pub const MAX_DECIMAL_DIGITS: u64 = 1_000_000;

/// Default cap on the degree of polynomials handed to [`factor`].
pub const DEFAULT_DEGREE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("polynomial is constant in the main variable")]
    ConstantPolynomial,
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("interpolation nodes are not pairwise distinct")]
    DuplicateNodes,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("fiber {0} is not monic")]
    NonMonicFiber(usize),
    #[error("polynomial is not monic in Y")]
    NotMonic,
    #[error("integer coefficient exceeds {MAX_DECIMAL_DIGITS} decimal digits")]
    CoefficientBlowup,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomials are defined over different fields")]
    FieldMismatch,
    #[error("factorization did not terminate within the restart schedule")]
    FactorizationFailed,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("at least two interpolation nodes are required")]
    TooFewNodes,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

// ~ log2(10) * 10^6
const MAX_BITS: u64 = 3_321_929;

pub(crate) fn guard_size(n: &BigInt) -> Result<(), ArithError> {
    if n.bits() > MAX_BITS {
        Err(ArithError::CoefficientBlowup)
    } else {
        Ok(())
    }
}

pub(crate) fn guard_poly(f: &UniPoly) -> Result<(), ArithError> {
    for c in f.coeffs() {
        if let FieldElem::Rational(r) = c {
            guard_size(r.numer())?;
            guard_size(r.denom())?;
        }
    }
    Ok(())
}
