use thiserror::Error;

use crate::staircase::LSpaceFormViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor leading coefficient {0} is not a unit")]
    NonUnitLeadingCoefficient(String),
    #[error("cyclotomic index must be positive")]
    ZeroCyclotomicIndex,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("T({p},{q}) is not a torus knot with 2 <= p < q and gcd(p,q) = 1")]
    InvalidTorusKnot { p: u64, q: u64 },
    #[error("sweep needs bound_q >= 3 and bound_mult >= 1, got {bound_q} and {bound_mult}")]
    InvalidSweepBounds { bound_q: u64, bound_mult: i64 },
    #[error("polynomial is not of L-space form: {0}")]
    NotLSpaceForm(LSpaceFormViolation),
}

pub type Result<T> = std::result::Result<T, Error>;
