//! Exact concordance invariants of signed sums of positive torus knots, and
//! the obstructions they give to concordance with L-space knots.
//!
//! Everything is exact: polynomial coefficients are arbitrary-precision
//! integers and Upsilon functions are piecewise linear over the rationals.

pub mod error;
pub mod obstruction;
pub mod poly;
pub mod signature;
pub mod staircase;
pub mod torus;
pub mod upsilon;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use obstruction::{
    full_report, theorem_1_1_sweep, CheckName, CheckRecord, CheckStatus, ObstructionReport,
    Obstructor, SweepSummary, Verdict, Witness,
};
pub use poly::{cyclotomic, cyclotomic_multiplicity, DivisionResult, IntPolynomial};
pub use signature::{forced_divisor, jump_profile, JumpProfile};
pub use staircase::{lspace_form_check, LSpaceFormViolation, Staircase, ViolationKind};
pub use torus::{Semigroup, TorusKnot, TorusSum};
pub use upsilon::{
    derivative_jumps, fk_decompose, is_convex, upsilon_of_sum, FKDecomposition, Jump,
    PiecewiseLinearFn, UpsilonMethod,
};
