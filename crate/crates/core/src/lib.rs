pub mod arith;
pub mod construct;
pub mod galois;
pub mod skew;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
