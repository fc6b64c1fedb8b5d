//! Explicit constructions: the `Y^3 + (T - x)Y + (T - x)` family, split
//! trinomials `Y^3 + aY + a`, and the interpolation constructor of regular
//! `S_n` families over `Q(T)` with a prescribed fiber at `T = 0`.

mod bb;
pub mod cert;
mod trinomial;

pub use bb::{
    bb_construct, build_padded_fibers, search_sn_polynomial, verify_bb_certificate, BbBudgets, BbCertificate, BbChecks,
    Verification, GALOIS_CLOSURE_ASSUMPTION,
};
pub use trinomial::{
    is_admissible_alpha, lp_family_coprime, lp_trinomial, rational_alpha_order, split_trinomial, split_trinomial_at,
    SplitTrinomial, TrinomialFamily,
};

use thiserror::Error;

use crate::arith::ArithError;
use crate::galois::GaloisError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("characteristic {0} is not supported by this construction")]
    UnsupportedCharacteristic(u64),
    #[error("no split trinomial Y^3 + aY + a exists over {0}")]
    SplitTrinomialNotFound(String),
    #[error("alpha = {0} violates the admissibility constraints")]
    InadmissibleAlpha(String),
    #[error("stem polynomial must be irreducible")]
    NotIrreducible,
    #[error("stem polynomial must be monic")]
    NotMonic,
    #[error("construction requires coefficients in Q")]
    WrongBase,
    #[error("target degree {n} is below the stem degree {stem_degree}")]
    NTooSmall { n: usize, stem_degree: usize },
    #[error("no certified S_{n} polynomial among the first {attempts} candidates")]
    SearchBudgetExhausted { n: usize, attempts: usize },
    #[error("the supplied fiber at the third node is not certified S_{0}")]
    UncertifiedFiber(usize),
    #[error("invalid certificate document: {0}")]
    BadDocument(String),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
