//! Human-readable text, JSON and CSV renderings.
//!
//! JSON objects keep their keys in insertion order and rationals are written as
//! `[numerator, denominator]` pairs. Integers that do not fit in 64 bits are
//! written as decimal strings.

use std::fmt::Write as _;

use lspace_core::obstruction::ViolationReason;
use lspace_core::staircase::Staircase;
use lspace_core::{
    derivative_jumps, jump_profile, BigInt, BigRational, CheckName, CheckRecord, FKDecomposition,
    IntPolynomial, ObstructionReport, PiecewiseLinearFn, SweepSummary, TorusSum, Verdict, Witness,
};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    json!([int_json(r.numer()), int_json(r.denom())])
}

fn polynomial_json(p: &IntPolynomial) -> Value {
    json!({
        "degree": p.degree(),
        "coefficients": p.coeffs().iter().map(int_json).collect::<Vec<_>>(),
    })
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::None => Value::Null,
        Witness::Tau(t) => json!({ "tau": t }),
        Witness::Counts { positive, negative } => {
            json!({ "positive": positive, "negative": negative })
        }
        Witness::Jump(j) => json!({ "t": rational_json(&j.t), "jump": rational_json(&j.jump) }),
        Witness::BasisIndex(a) => json!({ "basis_index": a }),
        Witness::CyclotomicExcess {
            c,
            positive,
            negative,
        } => {
            json!({ "c": c, "positive": positive, "negative": negative })
        }
        Witness::Candidate(p) => json!({ "candidate": polynomial_json(p) }),
        Witness::Violation(v) => json!({ "kind": v.kind.as_str(), "exponent": v.exponent }),
    }
}

pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::None => String::new(),
        Witness::Tau(t) => format!("tau = {t}"),
        Witness::Counts { positive, negative } => format!("m = {positive}, n = {negative}"),
        Witness::Jump(j) => format!("derivative jump {} at t = {}", j.jump, j.t),
        Witness::BasisIndex(a) => format!("a' = {a} divides no positive basis index"),
        Witness::CyclotomicExcess {
            c,
            positive,
            negative,
        } => {
            format!("phi_{c} has multiplicity {negative} in Delta(K-) but {positive} in Delta(K+)")
        }
        Witness::Candidate(p) => format!("quotient {p}"),
        Witness::Violation(v) => v.to_string(),
    }
}

fn check_json(c: &CheckRecord) -> Value {
    json!({
        "name": c.name.as_str(),
        "status": c.status.as_str(),
        "witness": witness_json(&c.witness),
    })
}

pub fn report_json(input: &str, r: &ObstructionReport) -> Value {
    json!({
        "input": input,
        "normalized": r.sum.to_string(),
        "tau": r.sum.tau(),
        "genus_sum": r.sum.genus_sum(),
        "checks": r.checks.iter().map(check_json).collect::<Vec<_>>(),
        "verdict": r.verdict.as_str(),
    })
}

pub fn report_text(input: &str, r: &ObstructionReport) -> String {
    let mut out = String::new();
    writeln!(out, "input:      {input}").unwrap();
    writeln!(out, "normalized: {}", r.sum).unwrap();
    writeln!(out, "tau:        {}", r.sum.tau()).unwrap();
    writeln!(out, "genus sum:  {}", r.sum.genus_sum()).unwrap();
    writeln!(out, "checks:").unwrap();
    for c in &r.checks {
        let w = witness_text(&c.witness);
        let line = format!("  {:<24}{:<16}{w}", c.name.as_str(), c.status.as_str());
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    writeln!(out, "verdict:    {}", r.verdict).unwrap();
    out
}

fn fk_json(d: &FKDecomposition) -> Value {
    d.basis()
        .iter()
        .rev()
        .map(|(a, c)| json!({ "a": a, "coefficient": c }))
        .collect()
}

fn profile_json(s: &TorusSum) -> Value {
    jump_profile(s)
        .jumps()
        .iter()
        .map(|(c, j)| json!({ "c": c, "jump": j }))
        .collect()
}

fn exponents(k: lspace_core::TorusKnot) -> Vec<u64> {
    Staircase::from_alexander(&k.alexander())
        .expect("torus knots are L-space knots")
        .exponents()
}

pub fn invariants_json(input: &str, s: &TorusSum) -> Value {
    let summands: Vec<Value> = s
        .terms()
        .map(|(k, m)| {
            json!({
                "knot": k.to_string(),
                "multiplicity": m,
                "tau": k.tau(),
                "genus": k.genus(),
                "alexander_exponents": exponents(k),
            })
        })
        .collect();
    json!({
        "input": input,
        "normalized": s.to_string(),
        "tau": s.tau(),
        "genus_sum": s.genus_sum(),
        "summands": summands,
        "fk_decomposition": fk_json(&FKDecomposition::of_sum(s)),
        "jump_profile": profile_json(s),
    })
}

pub fn invariants_text(input: &str, s: &TorusSum) -> String {
    let mut out = String::new();
    writeln!(out, "input:      {input}").unwrap();
    writeln!(out, "normalized: {s}").unwrap();
    writeln!(out, "tau:        {}", s.tau()).unwrap();
    writeln!(out, "genus sum:  {}", s.genus_sum()).unwrap();
    for (k, m) in s.terms() {
        let exps: Vec<String> = exponents(k).iter().map(u64::to_string).collect();
        writeln!(
            out,
            "  {m:+} {k}: tau {}, genus {}, exponents [{}]",
            k.tau(),
            k.genus(),
            exps.join(", ")
        )
        .unwrap();
    }
    writeln!(out, "upsilon:    {}", FKDecomposition::of_sum(s)).unwrap();
    let profile: Vec<String> = jump_profile(s)
        .jumps()
        .iter()
        .map(|(c, j)| format!("1/{c}: {j}"))
        .collect();
    writeln!(
        out,
        "signature jumps: {}",
        if profile.is_empty() {
            "none".into()
        } else {
            profile.join(", ")
        }
    )
    .unwrap();
    out
}

pub fn upsilon_csv(f: &PiecewiseLinearFn) -> String {
    let mut out = String::from("t_num,t_den,value_num,value_den\n");
    for (t, v) in f.points() {
        writeln!(
            out,
            "{},{},{},{}",
            t.numer(),
            t.denom(),
            v.numer(),
            v.denom()
        )
        .unwrap();
    }
    out
}

/// One row per breakpoint: the slope on the segment to its right (to its left
/// at `t = 2`) and the slope change there, which is zero at the endpoints.
pub fn derivative_csv(f: &PiecewiseLinearFn) -> String {
    let mut out = String::from("t_num,t_den,slope_num,slope_den,jump_num,jump_den\n");
    let slopes = f.slopes();
    let jumps = derivative_jumps(f);
    let zero = BigRational::from_integer(0.into());
    let last = f.breakpoints().len() - 1;
    for (i, t) in f.breakpoints().iter().enumerate() {
        let slope = &slopes[i.min(slopes.len() - 1)];
        let jump = if i == 0 || i == last {
            &zero
        } else {
            &jumps[i - 1].jump
        };
        writeln!(
            out,
            "{},{},{},{},{},{}",
            t.numer(),
            t.denom(),
            slope.numer(),
            slope.denom(),
            jump.numer(),
            jump.denom()
        )
        .unwrap();
    }
    out
}

pub fn reason_str(r: &ViolationReason) -> String {
    match r {
        ViolationReason::UnexpectedVerdict { expected } => {
            format!("unexpected_verdict (expected {expected})")
        }
        ViolationReason::Theorem44WithoutNegativeJump => "theorem44_without_negative_jump".into(),
        ViolationReason::CandidateDegreeMismatch => "candidate_degree_mismatch".into(),
    }
}

pub fn sweep_json(config: Value, mode: &str, s: &SweepSummary) -> Value {
    let by_check: serde_json::Map<String, Value> = CheckName::ALL
        .iter()
        .map(|c| {
            (
                c.as_str().to_string(),
                json!(s.by_check.get(c).copied().unwrap_or(0)),
            )
        })
        .collect();
    json!({
        "config": config,
        "mode": mode,
        "instances": s.instances,
        "verdicts": {
            Verdict::TrivialLSpace.as_str(): s.trivial,
            Verdict::Obstructed.as_str(): s.obstructed,
            Verdict::NoObstructionFound.as_str(): s.no_obstruction,
        },
        "obstructed_by": by_check,
        "theorem44_fired": s.theorem44_fired,
        "violations": s.violations.iter().map(|v| json!({
            "reason": reason_str(&v.reason),
            "report": report_json(&v.report.sum.to_string(), &v.report),
        })).collect::<Vec<_>>(),
        "unobstructed": s.unobstructed.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn sweep_text(header: &str, s: &SweepSummary) -> String {
    let mut out = String::new();
    writeln!(out, "{header}").unwrap();
    writeln!(out, "instances: {}", s.instances).unwrap();
    writeln!(out, "{}: {}", Verdict::TrivialLSpace, s.trivial).unwrap();
    writeln!(out, "{}: {}", Verdict::Obstructed, s.obstructed).unwrap();
    writeln!(out, "{}: {}", Verdict::NoObstructionFound, s.no_obstruction).unwrap();
    for c in CheckName::ALL {
        writeln!(
            out,
            "  obstructed by {}: {}",
            c,
            s.by_check.get(&c).copied().unwrap_or(0)
        )
        .unwrap();
    }
    writeln!(out, "theorem44 fired: {}", s.theorem44_fired).unwrap();
    for u in &s.unobstructed {
        writeln!(out, "unobstructed: {u}").unwrap();
    }
    for v in &s.violations {
        writeln!(
            out,
            "violation: {} for {}",
            reason_str(&v.reason),
            v.report.sum
        )
        .unwrap();
        for line in report_text(&v.report.sum.to_string(), &v.report).lines() {
            writeln!(out, "    {line}").unwrap();
        }
    }
    writeln!(out, "violations: {}", s.violations.len()).unwrap();
    out
}
