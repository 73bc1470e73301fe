//! Exact Upsilon functions of torus knots and their signed sums.
//!
//! For an L-space knot with staircase corners `(x_k, y_k)`,
//!
//! ```text
//! Υ(t) = -2 · min_k [ (t/2)·y_k + (1 - t/2)·x_k ],   t ∈ [0, 2]
//! ```
//!
//! a concave piecewise-linear function. Torus-knot Upsilons also decompose over
//! the basis `Υ_{T(a,a+1)}` through the recursion
//! `Υ_{T(p,q)} = Υ_{T(p,q-p)} + Υ_{T(p,p+1)}`. All arithmetic is over `BigRational`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::staircase::Staircase;
use crate::torus::{TorusKnot, TorusSum};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Continuous piecewise-linear function on `[0, 2]` with rational breakpoints.
///
/// Stored in canonical form: breakpoints strictly increase from `0` to `2` and
/// no interior breakpoint joins two segments of equal slope, so two functions
/// are equal iff their representations are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseLinearFn {
    breakpoints: Vec<BigRational>,
    values: Vec<BigRational>,
}

impl PiecewiseLinearFn {
    pub fn zero() -> Self {
        Self {
            breakpoints: vec![int(0), int(2)],
            values: vec![int(0), int(0)],
        }
    }

    /// Builds the canonical function through `points`.
    ///
    /// Panics unless the abscissae strictly increase from `0` to `2`.
    pub fn from_points(points: Vec<(BigRational, BigRational)>) -> Self {
        assert!(points.len() >= 2, "need at least the two endpoints");
        assert!(points[0].0.is_zero(), "domain starts at 0");
        assert_eq!(points[points.len() - 1].0, int(2), "domain ends at 2");
        assert!(
            points.windows(2).all(|w| w[0].0 < w[1].0),
            "breakpoints must strictly increase"
        );
        let (breakpoints, values) = points.into_iter().unzip();
        let mut f = Self {
            breakpoints,
            values,
        };
        f.canonicalize();
        f
    }

    fn canonicalize(&mut self) {
        let n = self.breakpoints.len();
        let mut keep = vec![true; n];
        let slopes = self.slopes();
        for i in 1..n - 1 {
            keep[i] = slopes[i - 1] != slopes[i];
        }
        let mut it = keep.iter();
        self.breakpoints.retain(|_| *it.next().unwrap());
        let mut it = keep.iter();
        self.values.retain(|_| *it.next().unwrap());
    }

    pub fn breakpoints(&self) -> &[BigRational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn points(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.breakpoints.iter().zip(&self.values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Slope of each segment, left to right.
    pub fn slopes(&self) -> Vec<BigRational> {
        self.breakpoints
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(t, v)| (&v[1] - &v[0]) / (&t[1] - &t[0]))
            .collect()
    }

    /// Value at `t ∈ [0, 2]` by linear interpolation.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        assert!(!t.is_negative() && *t <= int(2), "t = {t} outside [0, 2]");
        let i = match self.breakpoints.binary_search(t) {
            Ok(i) => return self.values[i].clone(),
            Err(i) => i,
        };
        let (t0, t1) = (&self.breakpoints[i - 1], &self.breakpoints[i]);
        let (v0, v1) = (&self.values[i - 1], &self.values[i]);
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut ts: Vec<BigRational> = self
            .breakpoints
            .iter()
            .chain(&other.breakpoints)
            .cloned()
            .collect();
        ts.sort();
        ts.dedup();
        let points = ts
            .into_iter()
            .map(|t| {
                let v = self.eval(&t) + other.eval(&t);
                (t, v)
            })
            .collect();
        Self::from_points(points)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let k = BigInt::from(k);
        Self {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| v * &k).collect(),
        }
    }
}

impl fmt::Debug for PiecewiseLinearFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PL[")?;
        for (i, (t, v)) in self.points().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({t}, {v})")?;
        }
        f.write_str("]")
    }
}

impl std::iter::Sum for PiecewiseLinearFn {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, f| acc.add(&f))
    }
}

/// A slope change of a piecewise-linear function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Jump {
    pub t: BigRational,
    /// Slope after `t` minus slope before `t`; never zero.
    pub jump: BigRational,
}

impl Jump {
    pub fn is_negative(&self) -> bool {
        self.jump.is_negative()
    }
}

pub type JumpList = Vec<Jump>;

/// `(breakpoint, slope_after - slope_before)` at each interior breakpoint.
pub fn derivative_jumps(f: &PiecewiseLinearFn) -> JumpList {
    let slopes = f.slopes();
    f.breakpoints[1..f.breakpoints.len() - 1]
        .iter()
        .zip(slopes.windows(2))
        .map(|(t, s)| Jump {
            t: t.clone(),
            jump: &s[1] - &s[0],
        })
        .collect()
}

/// True iff segment slopes never decrease, i.e. the derivative is increasing.
pub fn is_convex(f: &PiecewiseLinearFn) -> bool {
    derivative_jumps(f).iter().all(|j| j.jump.is_positive())
}

/// Upsilon of an L-space knot from the corners of its staircase.
///
/// The minimum of the corner functionals is evaluated at both endpoints and at
/// every pairwise crossing inside `(0, 2)`, then reduced to canonical form.
pub fn upsilon_from_staircase(s: &Staircase) -> PiecewiseLinearFn {
    // corner k contributes x_k + t·(y_k - x_k)/2
    let lines: Vec<(BigRational, BigRational)> = s
        .corners()
        .iter()
        .map(|&(x, y)| (int(x), rat(y - x, 2)))
        .collect();
    let (lo, hi) = (int(0), int(2));
    let mut ts = vec![lo.clone(), hi.clone()];
    for (i, (xi, si)) in lines.iter().enumerate() {
        for (xj, sj) in &lines[i + 1..] {
            if si == sj {
                continue;
            }
            let t = (xj - xi) / (si - sj);
            if t > lo && t < hi {
                ts.push(t);
            }
        }
    }
    ts.sort();
    ts.dedup();
    let minus_two = BigInt::from(-2);
    let points = ts
        .into_iter()
        .map(|t| {
            let min = lines
                .iter()
                .map(|(x, s)| x + s * &t)
                .min()
                .expect("staircase has at least one corner");
            (t, min * &minus_two)
        })
        .collect();
    PiecewiseLinearFn::from_points(points)
}

/// `Υ_{T(p,q)}` computed from the staircase of its Alexander polynomial.
pub fn upsilon_of_knot(k: TorusKnot) -> PiecewiseLinearFn {
    let s = Staircase::from_alexander(&k.alexander()).expect("torus knots are L-space knots");
    upsilon_from_staircase(&s)
}

/// `Υ_{T(a,a+1)}`.
pub fn upsilon_basis(a: u64) -> PiecewiseLinearFn {
    upsilon_of_knot(TorusKnot::new(a, a + 1).expect("a >= 2"))
}

/// A signed combination `Σ c_a · Υ_{T(a,a+1)}` with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FKDecomposition {
    basis: BTreeMap<u64, i64>,
}

impl FKDecomposition {
    pub fn from_terms<I: IntoIterator<Item = (u64, i64)>>(terms: I) -> Self {
        let mut d = Self::default();
        for (a, c) in terms {
            d.add_term(a, c);
        }
        d
    }

    fn add_term(&mut self, a: u64, c: i64) {
        let e = self.basis.entry(a).or_insert(0);
        *e += c;
        if *e == 0 {
            self.basis.remove(&a);
        }
    }

    /// Aggregated, cancelled decomposition of a signed torus-knot sum.
    pub fn of_sum(s: &TorusSum) -> Self {
        let mut d = Self::default();
        for (k, m) in s.terms() {
            for (a, c) in fk_decompose(k).basis {
                d.add_term(a, c * m);
            }
        }
        d
    }

    pub fn basis(&self) -> &BTreeMap<u64, i64> {
        &self.basis
    }

    pub fn coefficient(&self, a: u64) -> i64 {
        self.basis.get(&a).copied().unwrap_or(0)
    }

    /// `(a_j, c_j)` with `c_j > 0`, ordered `a_1 > a_2 > ...`.
    pub fn positive_part(&self) -> Vec<(u64, i64)> {
        self.basis
            .iter()
            .rev()
            .filter(|(_, &c)| c > 0)
            .map(|(&a, &c)| (a, c))
            .collect()
    }

    /// `(a'_i, c'_i)` with the coefficient `-c'_i < 0`, ordered `a'_1 > a'_2 > ...`.
    pub fn negative_part(&self) -> Vec<(u64, i64)> {
        self.basis
            .iter()
            .rev()
            .filter(|(_, &c)| c < 0)
            .map(|(&a, &c)| (a, -c))
            .collect()
    }

    pub fn to_upsilon(&self) -> PiecewiseLinearFn {
        self.basis
            .iter()
            .map(|(&a, &c)| upsilon_basis(a).scale(c))
            .sum()
    }
}

impl fmt::Display for FKDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, c)) in self.basis.iter().rev().enumerate() {
            let sep = match (i, *c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 {
                String::new()
            } else {
                mag.to_string()
            };
            write!(f, "{sep}{coef}U(T({a},{}))", a + 1)?;
        }
        Ok(())
    }
}

/// Rewrites `Υ_{T(p,q)}` over the basis `Υ_{T(a,a+1)}`.
///
/// This is the subtractive Euclidean algorithm on `(p, q)`: each step peels off
/// one `T(p,p+1)` and continues with `T(p,q-p)` (reordered if `q - p < p`).
/// `T(1,·)` is the unknot and contributes nothing.
pub fn fk_decompose(k: TorusKnot) -> FKDecomposition {
    let mut out = FKDecomposition::default();
    let (mut p, mut q) = (k.p(), k.q());
    while p >= 2 {
        if q == p + 1 {
            out.add_term(p, 1);
            break;
        }
        out.add_term(p, 1);
        let r = q - p;
        (p, q) = if r < p { (r, p) } else { (p, r) };
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpsilonMethod {
    /// Per-knot staircase envelopes.
    Direct,
    /// Decompose every summand over `Υ_{T(a,a+1)}` first.
    FkBasis,
}

/// `Υ` of a signed sum; additive under `#`.
pub fn upsilon_of_sum(s: &TorusSum, method: UpsilonMethod) -> PiecewiseLinearFn {
    match method {
        UpsilonMethod::Direct => s.terms().map(|(k, m)| upsilon_of_knot(k).scale(m)).sum(),
        UpsilonMethod::FkBasis => FKDecomposition::of_sum(s).to_upsilon(),
    }
}

/// Smallest `t` at which `Υ'_{T(p,q)}` jumps.
pub fn first_jump_location(k: TorusKnot) -> BigRational {
    derivative_jumps(&upsilon_of_knot(k))
        .into_iter()
        .next()
        .expect("a nontrivial torus knot has a slope change")
        .t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem44Outcome {
    /// No negative basis coefficients remain after cancellation.
    NotApplicable,
    Pass,
    /// `a'` divides none of the positive basis indices.
    Obstructed {
        witness: u64,
    },
}

/// Divisibility test between the negative and positive parts of the basis decomposition.
///
/// The witness is the largest offending `a'`, whose jump at `2/a'` is the
/// leftmost of the negative jumps it forces.
pub fn theorem44_check(s: &TorusSum) -> Theorem44Outcome {
    let d = FKDecomposition::of_sum(s);
    let positive: Vec<u64> = d.positive_part().into_iter().map(|(a, _)| a).collect();
    let negative = d.negative_part();
    if negative.is_empty() {
        return Theorem44Outcome::NotApplicable;
    }
    negative
        .iter()
        .map(|&(a, _)| a)
        .find(|a| positive.iter().all(|aj| aj % a != 0))
        .map_or(Theorem44Outcome::Pass, |witness| {
            Theorem44Outcome::Obstructed { witness }
        })
}
