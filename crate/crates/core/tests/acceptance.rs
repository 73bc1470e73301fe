//! Acceptance gate. Runs without the libtest harness so that every criterion
//! prints its PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use lspace_core::obstruction::{check_alexander, theorem_1_1_sweep, CheckStatus, Witness};
use lspace_core::poly::divisors;
use lspace_core::signature::cyclotomic_multiplicities;
use lspace_core::torus::{
    alexander_cyclotomic, alexander_fraction, alexander_semigroup, torus_knots_up_to,
};
use lspace_core::upsilon::{first_jump_location, rat, upsilon_basis};
use lspace_core::{
    cyclotomic, cyclotomic_multiplicity, derivative_jumps, forced_divisor, full_report,
    jump_profile, BigRational, FKDecomposition, IntPolynomial, JumpProfile, LSpaceFormViolation,
    Staircase, TorusKnot, TorusSum, UpsilonMethod, Verdict, ViolationKind,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn gate(id: u32, title: &str, outcome: Result<String, String>) -> bool {
    match outcome {
        Ok(detail) => {
            println!("[PASS] criterion {id}: {title} ({detail})");
            true
        }
        Err(why) => {
            println!("[FAIL] criterion {id}: {title}: {why}");
            false
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tk(p: u64, q: u64) -> TorusKnot {
    TorusKnot::new(p, q).unwrap()
}

fn criterion_1_staircase_of_t56() -> bool {
    let alexander = tk(5, 6).alexander();
    let start = Instant::now();
    let staircase = Staircase::from_alexander(&alexander);
    let elapsed = start.elapsed();
    let outcome = (|| {
        let s = staircase.map_err(|e| e.to_string())?;
        ensure(s.steps() == [1, 4, 2, 3, 3, 2, 4, 1], || {
            format!("steps {:?}", s.steps())
        })?;
        ensure(elapsed < Duration::from_millis(1), || {
            format!("took {elapsed:?}")
        })?;
        Ok(format!("steps {:?} in {elapsed:?}", s.steps()))
    })();
    gate(
        1,
        "staircase of T(5,6) is [1,4,2,3,3,2,4,1] in < 1 ms",
        outcome,
    )
}

fn criterion_2_worked_example_upsilon() -> bool {
    let outcome = (|| {
        let k = TorusSum::from_terms([(tk(5, 6), 3), (tk(2, 5), -1), (tk(3, 5), -1)]);
        let decomposition = FKDecomposition::of_sum(&k);
        let expected = FKDecomposition::from_terms([(5, 3), (3, -1), (2, -3)]);
        ensure(decomposition == expected, || {
            format!("decomposition {decomposition}")
        })?;

        let direct = lspace_core::upsilon_of_sum(&k, UpsilonMethod::Direct);
        let basis = upsilon_basis(5)
            .scale(3)
            .add(&upsilon_basis(3).scale(-1))
            .add(&upsilon_basis(2).scale(-3));
        ensure(direct == basis, || {
            "direct Upsilon differs from basis combination".into()
        })?;

        let two_thirds = rat(2, 3);
        let jump = derivative_jumps(&direct)
            .into_iter()
            .find(|j| j.t == two_thirds)
            .ok_or("no derivative jump at t = 2/3")?;
        ensure(jump.jump < BigRational::from_integer(0.into()), || {
            format!("jump at 2/3 is {}", jump.jump)
        })?;
        Ok(format!("{decomposition}; jump {} at t = 2/3", jump.jump))
    })();
    gate(
        2,
        "worked example decomposition and negative jump at 2/3",
        outcome,
    )
}

fn criterion_3_two_knot_sweep() -> bool {
    let start = Instant::now();
    let summary = theorem_1_1_sweep(12, 3).unwrap();
    let elapsed = start.elapsed();
    let outcome = (|| {
        let knots = torus_knots_up_to(12).len();
        let expected = knots * 6 + knots * (knots - 1) / 2 * 36;
        ensure(summary.instances == expected, || {
            format!("{} instances, expected {expected}", summary.instances)
        })?;
        ensure(summary.violations.is_empty(), || {
            let first = &summary.violations[0];
            format!(
                "{} violations, first {} ({:?}, verdict {})",
                summary.violations.len(),
                first.report.sum,
                first.reason,
                first.report.verdict
            )
        })?;
        ensure(summary.trivial == knots, || {
            format!("{} trivial", summary.trivial)
        })?;
        ensure(summary.no_obstruction == 0, || {
            "inconclusive instances".into()
        })?;
        ensure(elapsed < Duration::from_secs(300), || {
            format!("took {elapsed:?}")
        })?;
        Ok(format!(
            "{} instances, {} obstructed, {} trivial, 0 violations, {elapsed:.1?}",
            summary.instances, summary.obstructed, summary.trivial
        ))
    })();
    gate(3, "two-knot sums with q,s <= 12 and |m|,|n| <= 3", outcome)
}

fn criterion_4_alexander_triple_agreement() -> bool {
    let start = Instant::now();
    let knots = torus_knots_up_to(30);
    let mismatch = knots.iter().find(|&&k| {
        let a = alexander_fraction(k);
        a != alexander_cyclotomic(k) || a != alexander_semigroup(k)
    });
    let elapsed = start.elapsed();
    let outcome = (|| {
        ensure(mismatch.is_none(), || {
            format!("formulas disagree on {}", mismatch.unwrap())
        })?;
        ensure(elapsed < Duration::from_secs(30), || {
            format!("took {elapsed:?}")
        })?;
        Ok(format!("{} pairs in {elapsed:.1?}", knots.len()))
    })();
    gate(4, "three Alexander formulas agree for q <= 30", outcome)
}

fn criterion_5_cyclotomic_identity() -> bool {
    let bad = (1..=100u64).find(|&n| {
        let prod = divisors(n)
            .into_iter()
            .fold(IntPolynomial::one(), |acc, d| {
                &acc * &cyclotomic(d).unwrap()
            });
        prod != IntPolynomial::t_pow_minus_one(n as usize)
    });
    let outcome = match bad {
        None => Ok("n = 1..100".to_string()),
        Some(n) => Err(format!("product over divisors of {n} is not t^{n} - 1")),
    };
    gate(5, "product of phi_d over d | n equals t^n - 1", outcome)
}

fn criterion_6_upsilon_cross_validation() -> bool {
    let outcome = (|| {
        let knots = torus_knots_up_to(15);
        for &k in &knots {
            let single = TorusSum::single(k, 1);
            let direct = lspace_core::upsilon_of_sum(&single, UpsilonMethod::Direct);
            let basis = lspace_core::upsilon_of_sum(&single, UpsilonMethod::FkBasis);
            ensure(direct == basis, || format!("{k}: direct and basis differ"))?;
            let tau = ((k.p() - 1) * (k.q() - 1) / 2) as i64;
            ensure(direct.slopes()[0] == rat(-tau, 1), || {
                format!("{k}: initial slope")
            })?;
            let two = rat(2, 1);
            for t in direct.breakpoints() {
                ensure(direct.eval(t) == direct.eval(&(&two - t)), || {
                    format!("{k}: asymmetric at {t}")
                })?;
            }
            ensure(first_jump_location(k) == rat(2, k.p() as i64), || {
                format!("{k}: first jump at {}", first_jump_location(k))
            })?;
        }
        Ok(format!("{} knots", knots.len()))
    })();
    gate(
        6,
        "direct and basis Upsilon agree, slope -tau, symmetric, first jump 2/p",
        outcome,
    )
}

fn criterion_7_alexander_quotient_instance() -> bool {
    let outcome = (|| {
        let k = TorusSum::from_terms([(tk(4, 5), 2), (tk(2, 5), -1)]);
        let out = check_alexander(&k);
        let cand = out.candidate.ok_or("division not exact")?;
        let lead: Vec<i64> = (0..3)
            .map(|i| i64::try_from(cand.coeff(i)).unwrap())
            .collect();
        ensure(lead == [1, -1, -1], || format!("candidate begins {lead:?}"))?;
        let violation = LSpaceFormViolation {
            kind: ViolationKind::NonAlternating,
            exponent: 2,
        };
        ensure(
            out.lspace_form.witness == Witness::Violation(violation),
            || format!("witness {:?}", out.lspace_form.witness),
        )?;
        ensure(out.lspace_form.status == CheckStatus::Obstructed, || {
            "form check passed".into()
        })?;
        let report = full_report(&k);
        ensure(report.verdict == Verdict::Obstructed, || {
            format!("verdict {}", report.verdict)
        })?;
        Ok(format!("candidate {}", cand))
    })();
    gate(
        7,
        "2T(4,5) # -T(2,5) quotient begins 1 - t - t^2 and is obstructed",
        outcome,
    )
}

fn random_sum(rng: &mut StdRng, knots: &[TorusKnot]) -> TorusSum {
    let count = rng.gen_range(1..=4);
    let chosen: Vec<_> = knots.choose_multiple(rng, count).copied().collect();
    TorusSum::from_terms(chosen.into_iter().map(|k| {
        let m = rng.gen_range(1..=3);
        (k, if rng.gen_bool(0.5) { m } else { -m })
    }))
}

fn criterion_8_signature_profiles() -> bool {
    let outcome = (|| {
        let trefoil = TorusSum::single(tk(2, 3), 1);
        ensure(
            jump_profile(&trefoil) == JumpProfile::from_jumps([(6, -2)]),
            || format!("{:?}", jump_profile(&trefoil)),
        )?;

        let knots = torus_knots_up_to(12);
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..50 {
            let a = random_sum(&mut rng, &knots);
            let b = random_sum(&mut rng, &knots);
            let joined = jump_profile(&a.connect(&b));
            ensure(
                joined == jump_profile(&a).combine(&jump_profile(&b)),
                || format!("profile of {a} # {b} is not additive"),
            )?;
        }

        for _ in 0..50 {
            let s = random_sum(&mut rng, &knots);
            let plus = s.positive_part().alexander_product();
            let minus = s.negative_part().alexander_product();
            // k± by repeated division, independent of the factorization count
            let mut shared = 0usize;
            let mut indices: BTreeMap<u64, ()> = BTreeMap::new();
            for (k, _) in s.terms() {
                for c in k.cyclotomic_indices() {
                    indices.insert(c, ());
                }
            }
            for &c in indices.keys() {
                let kp = cyclotomic_multiplicity(&plus, c).unwrap() as usize;
                let km = cyclotomic_multiplicity(&minus, c).unwrap() as usize;
                shared += kp.min(km) * cyclotomic(c).unwrap().degree().unwrap();
            }
            let total = plus.degree().unwrap() + minus.degree().unwrap();
            let forced = forced_divisor(&s).degree().unwrap();
            ensure(forced + 2 * shared == total, || {
                format!("{s}: deg forced {forced}, total {total}, shared {shared}")
            })?;
            let no_shared = cyclotomic_multiplicities(&s)
                .values()
                .all(|&(kp, km)| kp == 0 || km == 0);
            ensure(forced <= total && ((forced == total) == no_shared), || {
                format!("{s}: equality case")
            })?;
        }
        Ok("profile {6: -2}; additivity and degree identity on 50 random sums".into())
    })();
    gate(
        8,
        "signature jump profiles and forced divisor degrees",
        outcome,
    )
}

fn main() {
    let criteria: [fn() -> bool; 8] = [
        criterion_1_staircase_of_t56,
        criterion_2_worked_example_upsilon,
        criterion_3_two_knot_sweep,
        criterion_4_alexander_triple_agreement,
        criterion_5_cyclotomic_identity,
        criterion_6_upsilon_cross_validation,
        criterion_7_alexander_quotient_instance,
        criterion_8_signature_profiles,
    ];
    let failed = criteria
        .iter()
        .filter(|run| !std::panic::catch_unwind(run).unwrap_or(false))
        .count();
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
