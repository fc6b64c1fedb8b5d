//! Specialization of parametric families and Galois group certificates.

mod group;
mod specialize;
mod stem;

pub use group::{
    certify_sn, cubic_galois_group, square_class, Evidence, GroupCertificate, GroupLabel, SquareClass, SquareWitness,
};
pub use specialize::{
    frobenius_decomposition, specialize_at, specialize_at_with, unramified_at, DecompositionData, Fiber,
    SpecializationReport,
};
pub use stem::stem_field_root_count;

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("the family is inseparable over k(T): its Y-discriminant vanishes identically")]
    InseparableFamily,
    #[error("the fiber at this point is inseparable")]
    RamifiedPoint,
    #[error("operation requires {0}")]
    WrongBase(&'static str),
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be separable")]
    NotSeparable,
    #[error("polynomial must be irreducible")]
    NotIrreducible,
    #[error("expected degree {expected}, got {got}")]
    BadDegree { expected: usize, got: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
}
