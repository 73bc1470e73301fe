//! Staircase shapes of L-space knot complexes, read off from the Alexander polynomial.
//!
//! An L-space knot has `Δ(t) = Σ_{i=0}^{d} (-1)^i t^{a_i}` and its complex is a
//! staircase whose step lengths are the gaps `a_i - a_{i-1}`, alternating
//! horizontal and vertical. The first step is horizontal and the stair runs from
//! `(0, g)` down to `(g, 0)`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    /// A coefficient other than `0, ±1`.
    CoefficientMagnitude,
    /// Two consecutive nonzero coefficients with the same sign.
    NonAlternating,
    /// The polynomial does not start with `1 - t`.
    BadLowestTerms,
    /// The polynomial does not end with `t^{2g} - t^{2g-1}`.
    BadHighestTerms,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::CoefficientMagnitude => "coefficient_magnitude",
            Self::NonAlternating => "non_alternating",
            Self::BadLowestTerms => "bad_lowest_terms",
            Self::BadHighestTerms => "bad_highest_terms",
        }
    }
}

/// First place where a polynomial departs from the L-space form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LSpaceFormViolation {
    pub kind: ViolationKind,
    pub exponent: usize,
}

impl fmt::Display for LSpaceFormViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at exponent {}", self.kind.as_str(), self.exponent)
    }
}

/// Returns the lowest-exponent violation of the L-space form, or `None`.
///
/// At equal exponents the kinds are ranked in declaration order of
/// [`ViolationKind`]. The constant polynomial `1` (the unknot) is accepted.
pub fn lspace_violation(p: &IntPolynomial) -> Result<Option<LSpaceFormViolation>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if p.is_one() {
        return Ok(None);
    }
    let mut found: Vec<LSpaceFormViolation> = Vec::new();
    let mut push = |kind, exponent| found.push(LSpaceFormViolation { kind, exponent });

    let mut positive_expected = true;
    let mut magnitude_seen = false;
    let mut alternation_seen = false;
    for (e, c) in p.terms() {
        if !magnitude_seen && !c.abs().is_one() {
            push(ViolationKind::CoefficientMagnitude, e);
            magnitude_seen = true;
        }
        if !alternation_seen && c.is_positive() != positive_expected {
            push(ViolationKind::NonAlternating, e);
            alternation_seen = true;
        }
        positive_expected = !c.is_positive();
    }

    let c0 = p.coeff(0);
    if c0.is_zero() {
        push(ViolationKind::BadLowestTerms, 0);
    } else if p.coeff(1).is_zero() {
        push(ViolationKind::BadLowestTerms, 1);
    }
    if !p.coeff(deg).is_positive() || deg % 2 == 1 {
        push(ViolationKind::BadHighestTerms, deg);
    } else if deg == 0 || p.coeff(deg - 1).is_zero() {
        push(ViolationKind::BadHighestTerms, deg.saturating_sub(1));
    }

    Ok(found.into_iter().min_by_key(|v| (v.exponent, v.kind)))
}

/// `Ok(())` iff `p` has L-space form; otherwise the first violation as an error.
pub fn lspace_form_check(p: &IntPolynomial) -> Result<()> {
    match lspace_violation(p)? {
        None => Ok(()),
        Some(v) => Err(Error::NotLSpaceForm(v)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    steps: Vec<u64>,
    genus: u64,
    corners: Vec<(i64, i64)>,
}

impl Staircase {
    /// Builds the staircase of an Alexander polynomial in L-space form.
    pub fn from_alexander(p: &IntPolynomial) -> Result<Self> {
        lspace_form_check(p)?;
        let exps: Vec<u64> = p.terms().map(|(e, _)| e as u64).collect();
        let steps: Vec<u64> = exps.windows(2).map(|w| w[1] - w[0]).collect();
        let genus = exps.last().copied().unwrap_or(0) / 2;
        let g = genus as i64;
        let mut corners = vec![(0, g)];
        let mut x = 0i64;
        for (k, pair) in steps.chunks(2).enumerate() {
            x += pair[0] as i64;
            let a = exps[2 * (k + 1)] as i64;
            corners.push((x, g + x - a));
        }
        Ok(Self {
            steps,
            genus,
            corners,
        })
    }

    /// Step lengths `[a_1 - a_0, ..., a_d - a_{d-1}]`; odd positions are horizontal.
    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Outer lattice points `(x_k, y_k)`, from `(0, g)` to `(g, 0)`.
    ///
    /// Coordinates are signed: a polynomial can pass the form check without
    /// being symmetric, and then the stair need not stay in the quadrant.
    pub fn corners(&self) -> &[(i64, i64)] {
        &self.corners
    }

    /// Exponents `a_0 = 0 < a_1 < ... < a_d`, the partial sums of the steps.
    pub fn exponents(&self) -> Vec<u64> {
        std::iter::once(0)
            .chain(self.steps.iter().scan(0, |acc, s| {
                *acc += s;
                Some(*acc)
            }))
            .collect()
    }
}
