//! Levine–Tristram signature jumps at the first root `t = 1/c` of each cyclotomic factor.
//!
//! `σ_{T(p,q)}` jumps by `-2` at `1/c` whenever `φ_c | Δ_{T(p,q)}`. For a signed
//! sum the jump at `1/c` is `-2(k⁺(c) - k⁻(c))`, where `k±(c)` is the
//! multiplicity of `φ_c` in `Δ_{K±}`. The full signature function is not modeled.

use std::collections::BTreeMap;

use crate::poly::{cyclotomic, IntPolynomial};
use crate::torus::TorusSum;

/// Total signature jump at `t = 1/c`, keyed by `c`. Zero jumps are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct JumpProfile {
    jumps: BTreeMap<u64, i64>,
}

impl JumpProfile {
    pub fn from_jumps<I: IntoIterator<Item = (u64, i64)>>(jumps: I) -> Self {
        let mut p = Self::default();
        for (c, j) in jumps {
            p.add_jump(c, j);
        }
        p
    }

    fn add_jump(&mut self, c: u64, j: i64) {
        let e = self.jumps.entry(c).or_insert(0);
        *e += j;
        if *e == 0 {
            self.jumps.remove(&c);
        }
    }

    pub fn jumps(&self) -> &BTreeMap<u64, i64> {
        &self.jumps
    }

    pub fn jump_at(&self, c: u64) -> i64 {
        self.jumps.get(&c).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    /// Pointwise sum; the profile of a connected sum.
    pub fn combine(&self, other: &JumpProfile) -> JumpProfile {
        let mut out = self.clone();
        for (&c, &j) in &other.jumps {
            out.add_jump(c, j);
        }
        out
    }
}

/// `(k⁺(c), k⁻(c))` for every `c` with `φ_c` dividing some summand.
///
/// Read off the cyclotomic factorization of each summand: `T(p,q)` contributes
/// its multiplicity once for every index `hℓ`.
pub fn cyclotomic_multiplicities(s: &TorusSum) -> BTreeMap<u64, (u64, u64)> {
    let mut out: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for (k, m) in s.terms() {
        for c in k.cyclotomic_indices() {
            let e = out.entry(c).or_default();
            if m > 0 {
                e.0 += m as u64;
            } else {
                e.1 += m.unsigned_abs();
            }
        }
    }
    out
}

pub fn jump_profile(s: &TorusSum) -> JumpProfile {
    JumpProfile::from_jumps(
        cyclotomic_multiplicities(s)
            .into_iter()
            .map(|(c, (kp, km))| (c, -2 * (kp as i64 - km as i64))),
    )
}

/// `Π_c φ_c^{|k⁺(c) - k⁻(c)|}`: any L-space knot concordant to `s` has an
/// Alexander polynomial divisible by this.
pub fn forced_divisor(s: &TorusSum) -> IntPolynomial {
    jump_profile(s)
        .jumps()
        .iter()
        .fold(IntPolynomial::one(), |acc, (&c, &j)| {
            let phi = cyclotomic(c).expect("c >= 2");
            &acc * &phi.pow((j.unsigned_abs() / 2) as u32)
        })
}
