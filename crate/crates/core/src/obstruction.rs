//! Necessary conditions for a signed torus-knot sum to be concordant to an L-space knot.
//!
//! Every check is a necessary condition: an obstructed check proves that no
//! such concordance exists, while passing all of them proves nothing. The
//! verdict vocabulary reflects that asymmetry.

use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::signature::cyclotomic_multiplicities;
use crate::staircase::{lspace_violation, LSpaceFormViolation};
use crate::torus::{torus_knots_up_to, TorusKnot, TorusSum};
use crate::upsilon::{
    derivative_jumps, theorem44_check, upsilon_of_knot, Jump, PiecewiseLinearFn, Theorem44Outcome,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    Tau,
    Count,
    Upsilon,
    Theorem44,
    AlexanderDivisibility,
    LSpaceForm,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::Tau,
        CheckName::Count,
        CheckName::Upsilon,
        CheckName::Theorem44,
        CheckName::AlexanderDivisibility,
        CheckName::LSpaceForm,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Tau => "tau",
            Self::Count => "count",
            Self::Upsilon => "upsilon_convexity",
            Self::Theorem44 => "theorem44",
            Self::AlexanderDivisibility => "alexander_divisibility",
            Self::LSpaceForm => "lspace_form",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Obstructed,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Obstructed => "obstructed",
            Self::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    None,
    /// The value of `τ`.
    Tau(i64),
    /// `m` and `n`, the total multiplicities of `K⁺` and `K⁻`.
    Counts {
        positive: u64,
        negative: u64,
    },
    /// A slope change of `Υ_K`; for an obstruction, the leftmost negative one.
    Jump(Jump),
    /// A negative basis index `a'` dividing no positive one.
    BasisIndex(u64),
    /// A cyclotomic index `c` with `k⁻(c) > k⁺(c)`, so `Δ_{K⁻} ∤ Δ_{K⁺}`.
    CyclotomicExcess {
        c: u64,
        positive: u64,
        negative: u64,
    },
    /// The quotient `Δ_{K⁺} / Δ_{K⁻}`.
    Candidate(IntPolynomial),
    Violation(LSpaceFormViolation),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckRecord {
    pub name: CheckName,
    pub status: CheckStatus,
    pub witness: Witness,
}

impl CheckRecord {
    fn new(name: CheckName, status: CheckStatus, witness: Witness) -> Self {
        Self {
            name,
            status,
            witness,
        }
    }

    fn not_applicable(name: CheckName) -> Self {
        Self::new(name, CheckStatus::NotApplicable, Witness::None)
    }

    pub fn is_obstructed(&self) -> bool {
        self.status == CheckStatus::Obstructed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    /// The unknot, or a single positive torus knot: already an L-space knot.
    TrivialLSpace,
    /// At least one necessary condition fails.
    Obstructed,
    /// Every check passed or did not apply. Inconclusive.
    NoObstructionFound,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::TrivialLSpace => "TRIVIAL_LSPACE",
            Self::Obstructed => "OBSTRUCTED",
            Self::NoObstructionFound => "NO_OBSTRUCTION_FOUND",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of the Alexander quotient check: divisibility, then the form of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderOutcome {
    pub divisibility: CheckRecord,
    pub lspace_form: CheckRecord,
    /// `Δ_{K⁺} / Δ_{K⁻}`, present iff the division is exact.
    pub candidate: Option<IntPolynomial>,
}

impl AlexanderOutcome {
    pub fn status(&self) -> CheckStatus {
        match (self.divisibility.status, self.lspace_form.status) {
            (CheckStatus::Obstructed, _) | (_, CheckStatus::Obstructed) => CheckStatus::Obstructed,
            (CheckStatus::NotApplicable, _) => CheckStatus::NotApplicable,
            _ => CheckStatus::Pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub sum: TorusSum,
    /// One record per [`CheckName`], in [`CheckName::ALL`] order.
    pub checks: Vec<CheckRecord>,
    pub candidate: Option<IntPolynomial>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    pub fn check(&self, name: CheckName) -> &CheckRecord {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .expect("every check is recorded")
    }

    pub fn obstructing_checks(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.is_obstructed())
    }
}

#[derive(Clone, Debug)]
struct KnotData {
    alexander: IntPolynomial,
    upsilon: PiecewiseLinearFn,
}

impl KnotData {
    fn compute(k: TorusKnot) -> Self {
        Self {
            alexander: k.alexander(),
            upsilon: upsilon_of_knot(k),
        }
    }
}

/// Runs the checks, reusing precomputed per-knot invariants where available.
///
/// Sharing one `Obstructor` across many sums over the same knots avoids
/// recomputing Alexander polynomials and Upsilon functions.
#[derive(Clone, Debug, Default)]
pub struct Obstructor {
    knots: HashMap<TorusKnot, KnotData>,
}

impl Obstructor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_knots<I: IntoIterator<Item = TorusKnot>>(knots: I) -> Self {
        Self {
            knots: knots
                .into_iter()
                .map(|k| (k, KnotData::compute(k)))
                .collect(),
        }
    }

    fn knot(&self, k: TorusKnot) -> Cow<'_, KnotData> {
        match self.knots.get(&k) {
            Some(d) => Cow::Borrowed(d),
            None => Cow::Owned(KnotData::compute(k)),
        }
    }

    fn alexander_product(&self, s: &TorusSum) -> IntPolynomial {
        s.terms().fold(IntPolynomial::one(), |acc, (k, m)| {
            &acc * &self.knot(k).alexander.pow(m.unsigned_abs() as u32)
        })
    }

    pub fn upsilon(&self, s: &TorusSum) -> PiecewiseLinearFn {
        s.terms().map(|(k, m)| self.knot(k).upsilon.scale(m)).sum()
    }

    /// A nontrivial L-space knot has `τ > 0`. For a nonempty sum, `τ = 0` would
    /// force concordance to the unknot, which linear independence of positive
    /// torus knots rules out; so `τ <= 0` obstructs.
    pub fn check_tau(&self, s: &TorusSum) -> CheckRecord {
        if s.is_empty() {
            return CheckRecord::not_applicable(CheckName::Tau);
        }
        let tau = s.tau();
        let status = if tau <= 0 {
            CheckStatus::Obstructed
        } else {
            CheckStatus::Pass
        };
        CheckRecord::new(CheckName::Tau, status, Witness::Tau(tau))
    }

    /// With `m, n >= 1` summands on each side, the linear Alexander coefficients force `m = n + 1`.
    pub fn check_count(&self, s: &TorusSum) -> CheckRecord {
        let (m, n) = (s.positive_count(), s.negative_count());
        if m == 0 || n == 0 {
            return CheckRecord::not_applicable(CheckName::Count);
        }
        let status = if m == n + 1 {
            CheckStatus::Pass
        } else {
            CheckStatus::Obstructed
        };
        CheckRecord::new(
            CheckName::Count,
            status,
            Witness::Counts {
                positive: m,
                negative: n,
            },
        )
    }

    /// `Υ'` of an L-space knot is increasing; the witness is the leftmost negative jump.
    pub fn check_upsilon(&self, s: &TorusSum) -> CheckRecord {
        let f = self.upsilon(s);
        match derivative_jumps(&f).into_iter().find(Jump::is_negative) {
            Some(j) => CheckRecord::new(
                CheckName::Upsilon,
                CheckStatus::Obstructed,
                Witness::Jump(j),
            ),
            None => CheckRecord::new(CheckName::Upsilon, CheckStatus::Pass, Witness::None),
        }
    }

    pub fn check_theorem44(&self, s: &TorusSum) -> CheckRecord {
        match theorem44_check(s) {
            Theorem44Outcome::NotApplicable => CheckRecord::not_applicable(CheckName::Theorem44),
            Theorem44Outcome::Pass => {
                CheckRecord::new(CheckName::Theorem44, CheckStatus::Pass, Witness::None)
            }
            Theorem44Outcome::Obstructed { witness } => CheckRecord::new(
                CheckName::Theorem44,
                CheckStatus::Obstructed,
                Witness::BasisIndex(witness),
            ),
        }
    }

    /// `Δ_{K⁻}` must divide `Δ_{K⁺}` and the quotient must be an L-space Alexander polynomial.
    pub fn check_alexander(&self, s: &TorusSum) -> AlexanderOutcome {
        let plus = s.positive_part();
        if plus.is_empty() {
            return AlexanderOutcome {
                divisibility: CheckRecord::not_applicable(CheckName::AlexanderDivisibility),
                lspace_form: CheckRecord::not_applicable(CheckName::LSpaceForm),
                candidate: None,
            };
        }
        let num = self.alexander_product(&plus);
        let den = self.alexander_product(&s.negative_part());
        let quotient = num
            .exact_div(&den)
            .expect("products of cyclotomic polynomials are monic");
        let Some(candidate) = quotient else {
            let witness = cyclotomic_multiplicities(s)
                .into_iter()
                .find(|(_, (kp, km))| km > kp)
                .map_or(Witness::None, |(c, (kp, km))| Witness::CyclotomicExcess {
                    c,
                    positive: kp,
                    negative: km,
                });
            return AlexanderOutcome {
                divisibility: CheckRecord::new(
                    CheckName::AlexanderDivisibility,
                    CheckStatus::Obstructed,
                    witness,
                ),
                lspace_form: CheckRecord::not_applicable(CheckName::LSpaceForm),
                candidate: None,
            };
        };
        let divisibility = CheckRecord::new(
            CheckName::AlexanderDivisibility,
            CheckStatus::Pass,
            Witness::Candidate(candidate.clone()),
        );
        let lspace_form = match lspace_violation(&candidate).expect("quotient is nonzero") {
            Some(v) => CheckRecord::new(
                CheckName::LSpaceForm,
                CheckStatus::Obstructed,
                Witness::Violation(v),
            ),
            None => {
                debug_assert_eq!(
                    candidate.degree().map(|d| d as i64),
                    Some(2 * s.tau()),
                    "deg(Δ_K⁺/Δ_K⁻) = 2τ"
                );
                CheckRecord::new(CheckName::LSpaceForm, CheckStatus::Pass, Witness::None)
            }
        };
        AlexanderOutcome {
            divisibility,
            lspace_form,
            candidate: Some(candidate),
        }
    }

    /// Runs every check (none short-circuits) and assembles the verdict.
    pub fn report(&self, s: &TorusSum) -> ObstructionReport {
        let alexander = self.check_alexander(s);
        let checks = vec![
            self.check_tau(s),
            self.check_count(s),
            self.check_upsilon(s),
            self.check_theorem44(s),
            alexander.divisibility,
            alexander.lspace_form,
        ];
        let verdict = if checks.iter().any(CheckRecord::is_obstructed) {
            Verdict::Obstructed
        } else if s.is_trivially_lspace() {
            Verdict::TrivialLSpace
        } else {
            Verdict::NoObstructionFound
        };
        ObstructionReport {
            sum: s.clone(),
            checks,
            candidate: alexander.candidate,
            verdict,
        }
    }
}

pub fn check_tau(s: &TorusSum) -> CheckRecord {
    Obstructor::new().check_tau(s)
}

pub fn check_count(s: &TorusSum) -> CheckRecord {
    Obstructor::new().check_count(s)
}

pub fn check_upsilon(s: &TorusSum) -> CheckRecord {
    Obstructor::new().check_upsilon(s)
}

pub fn check_alexander(s: &TorusSum) -> AlexanderOutcome {
    Obstructor::new().check_alexander(s)
}

pub fn full_report(s: &TorusSum) -> ObstructionReport {
    Obstructor::new().report(s)
}

/// Why a sweep instance was flagged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationReason {
    /// The verdict differs from the one the two-knot classification requires.
    UnexpectedVerdict { expected: Verdict },
    /// The basis-divisibility check obstructed but the Upsilon convexity check did not.
    Theorem44WithoutNegativeJump,
    /// An L-space-form quotient whose degree is not `2τ`.
    CandidateDegreeMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepViolation {
    pub reason: ViolationReason,
    pub report: ObstructionReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: usize,
    pub trivial: usize,
    pub obstructed: usize,
    pub no_obstruction: usize,
    /// How many instances each check obstructed.
    pub by_check: BTreeMap<CheckName, usize>,
    /// Instances where the basis-divisibility check fired.
    pub theorem44_fired: usize,
    /// Assertion failures, sorted by instance. Empty in report-only mode.
    pub violations: Vec<SweepViolation>,
    /// Instances with verdict `NO_OBSTRUCTION_FOUND`, sorted.
    pub unobstructed: Vec<TorusSum>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Compare each verdict against the two-knot classification.
    Assert,
    /// Only tally outcomes.
    Explore,
}

fn multiplicities(bound: i64) -> Vec<i64> {
    (-bound..=bound).filter(|&m| m != 0).collect()
}

/// All sums of exactly `count` distinct knots from `knots` with `1 <= |m| <= bound_mult`.
pub fn enumerate_sums(knots: &[TorusKnot], count: usize, bound_mult: i64) -> Vec<TorusSum> {
    fn go(
        knots: &[TorusKnot],
        start: usize,
        left: usize,
        mults: &[i64],
        acc: &mut Vec<(TorusKnot, i64)>,
        out: &mut Vec<TorusSum>,
    ) {
        if left == 0 {
            out.push(TorusSum::from_terms(acc.iter().copied()));
            return;
        }
        for i in start..knots.len() {
            for &m in mults {
                acc.push((knots[i], m));
                go(knots, i + 1, left - 1, mults, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(
        knots,
        0,
        count,
        &multiplicities(bound_mult),
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn expected_verdict(s: &TorusSum) -> Verdict {
    if s.is_trivially_lspace() {
        Verdict::TrivialLSpace
    } else {
        Verdict::Obstructed
    }
}

/// Evaluates every instance (in parallel) and aggregates deterministically.
pub fn run_sweep(instances: Vec<TorusSum>, mode: SweepMode) -> SweepSummary {
    let knots: Vec<TorusKnot> = {
        let mut ks: Vec<TorusKnot> = instances
            .iter()
            .flat_map(|s| s.terms().map(|(k, _)| k))
            .collect();
        ks.sort();
        ks.dedup();
        ks
    };
    let obstructor = Obstructor::with_knots(knots);
    let reports: Vec<ObstructionReport> =
        instances.par_iter().map(|s| obstructor.report(s)).collect();

    let mut summary = SweepSummary {
        instances: reports.len(),
        ..Default::default()
    };
    for report in reports {
        match report.verdict {
            Verdict::TrivialLSpace => summary.trivial += 1,
            Verdict::Obstructed => summary.obstructed += 1,
            Verdict::NoObstructionFound => {
                summary.no_obstruction += 1;
                summary.unobstructed.push(report.sum.clone());
            }
        }
        for c in report.obstructing_checks() {
            *summary.by_check.entry(c.name).or_default() += 1;
        }
        let mut reasons = Vec::new();
        if report.check(CheckName::Theorem44).is_obstructed() {
            summary.theorem44_fired += 1;
            if !report.check(CheckName::Upsilon).is_obstructed() {
                reasons.push(ViolationReason::Theorem44WithoutNegativeJump);
            }
        }
        if report.check(CheckName::LSpaceForm).status == CheckStatus::Pass {
            let deg = report.candidate.as_ref().and_then(IntPolynomial::degree);
            if deg.map(|d| d as i64) != Some(2 * report.sum.tau()) {
                reasons.push(ViolationReason::CandidateDegreeMismatch);
            }
        }
        if mode == SweepMode::Assert {
            let expected = expected_verdict(&report.sum);
            if report.verdict != expected {
                reasons.push(ViolationReason::UnexpectedVerdict { expected });
            }
        }
        for reason in reasons {
            summary.violations.push(SweepViolation {
                reason,
                report: report.clone(),
            });
        }
    }
    summary
        .violations
        .sort_by(|a, b| (&a.report.sum, a.reason).cmp(&(&b.report.sum, b.reason)));
    summary.unobstructed.sort();
    summary
}

fn validate_bounds(bound_q: u64, bound_mult: i64) -> Result<()> {
    if bound_q < 3 || bound_mult < 1 {
        return Err(Error::InvalidSweepBounds {
            bound_q,
            bound_mult,
        });
    }
    Ok(())
}

/// Every `mT(p,q)` and `mT(p,q) # nT(r,s)` with `q, s <= bound_q` and
/// `1 <= |m|, |n| <= bound_mult`, checked against the two-knot classification:
/// only `m = 1` singletons may escape obstruction.
pub fn theorem_1_1_sweep(bound_q: u64, bound_mult: i64) -> Result<SweepSummary> {
    validate_bounds(bound_q, bound_mult)?;
    let knots = torus_knots_up_to(bound_q);
    let mut instances = enumerate_sums(&knots, 1, bound_mult);
    instances.extend(enumerate_sums(&knots, 2, bound_mult));
    Ok(run_sweep(instances, SweepMode::Assert))
}

/// Report-only enumeration of sums of exactly `count` distinct knots.
pub fn explore_sums(bound_q: u64, bound_mult: i64, count: usize) -> Result<SweepSummary> {
    validate_bounds(bound_q, bound_mult)?;
    let knots = torus_knots_up_to(bound_q);
    Ok(run_sweep(
        enumerate_sums(&knots, count, bound_mult),
        SweepMode::Explore,
    ))
}
