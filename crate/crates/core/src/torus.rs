//! Positive torus knots, formal signed sums of them, and their classical invariants.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{cyclotomic, divisors, IntPolynomial};

/// The positive torus knot `T(p,q)` with `2 <= p < q` and `gcd(p,q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusKnot {
    p: u64,
    q: u64,
}

impl TorusKnot {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p < 2 || p >= q || p.gcd(&q) != 1 {
            return Err(Error::InvalidTorusKnot { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Seifert genus, `(p-1)(q-1)/2`.
    pub fn genus(&self) -> u64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    pub fn tau(&self) -> i64 {
        self.genus() as i64
    }

    pub fn semigroup(&self) -> Semigroup {
        Semigroup {
            p: self.p,
            q: self.q,
        }
    }

    /// Indices `hℓ` with `h | p`, `ℓ | q`, `h, ℓ != 1`, in increasing order.
    ///
    /// By coprimality these are pairwise distinct, and `Δ_{T(p,q)}` is the
    /// product of the corresponding cyclotomic polynomials, each to the first power.
    pub fn cyclotomic_indices(&self) -> Vec<u64> {
        let mut out: Vec<u64> = divisors(self.p)
            .into_iter()
            .skip(1)
            .flat_map(|h| divisors(self.q).into_iter().skip(1).map(move |l| h * l))
            .collect();
        out.sort_unstable();
        out
    }

    /// The Alexander polynomial; computed by the fraction formula.
    pub fn alexander(&self) -> IntPolynomial {
        alexander_fraction(*self)
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// `((t^{pq} - 1)(t - 1)) / ((t^p - 1)(t^q - 1))`.
pub fn alexander_fraction(k: TorusKnot) -> IntPolynomial {
    let (p, q) = (k.p as usize, k.q as usize);
    let num = &IntPolynomial::t_pow_minus_one(p * q) * &IntPolynomial::t_pow_minus_one(1);
    [p, q].into_iter().fold(num, |acc, d| {
        acc.exact_div(&IntPolynomial::t_pow_minus_one(d))
            .expect("t^d - 1 is monic")
            .expect("torus knot fraction divides exactly")
    })
}

/// Product of `φ_{hℓ}` over divisor pairs `h | p`, `ℓ | q`, `h, ℓ != 1`.
pub fn alexander_cyclotomic(k: TorusKnot) -> IntPolynomial {
    k.cyclotomic_indices()
        .into_iter()
        .fold(IntPolynomial::one(), |acc, c| {
            &acc * &cyclotomic(c).expect("index is positive")
        })
        .with_positive_constant_term()
}

/// `Σ_{s ∈ S_{p,q}} (t^s - t^{s+1})`, with the tail beyond `2g - 1` telescoped
/// to the single term `t^{2g}`.
pub fn alexander_semigroup(k: TorusKnot) -> IntPolynomial {
    let top = 2 * k.genus() as usize;
    let sg = k.semigroup();
    let terms = sg
        .elements_below(top as u64)
        .into_iter()
        .flat_map(|s| [(s as usize, 1), (s as usize + 1, -1)])
        .chain(std::iter::once((top, 1)));
    IntPolynomial::from_terms(terms)
}

/// The numerical semigroup `S_{p,q} = { ap + bq : a, b >= 0 }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Semigroup {
    p: u64,
    q: u64,
}

impl Semigroup {
    pub fn contains(&self, s: u64) -> bool {
        (0..=s / self.q).any(|a| (s - a * self.q).is_multiple_of(self.p))
    }

    /// Elements `s < bound`, increasing.
    pub fn elements_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&s| self.contains(s)).collect()
    }

    /// Every nonnegative integer not in the semigroup, increasing.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.p * self.q)
            .filter(|&s| !self.contains(s))
            .collect()
    }

    /// Largest gap, `pq - p - q`.
    pub fn frobenius_number(&self) -> u64 {
        self.p * self.q - self.p - self.q
    }
}

/// A formal integer combination of positive torus knots, written with `#`.
///
/// Negative multiplicities stand for mirrored summands. The empty sum is the unknot.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusSum {
    terms: BTreeMap<TorusKnot, i64>,
}

impl TorusSum {
    pub fn unknot() -> Self {
        Self::default()
    }

    pub fn single(k: TorusKnot, multiplicity: i64) -> Self {
        Self::from_terms([(k, multiplicity)])
    }

    /// Merges repeated knots and drops zero totals.
    pub fn from_terms<I: IntoIterator<Item = (TorusKnot, i64)>>(terms: I) -> Self {
        let mut sum = Self::default();
        for (k, m) in terms {
            sum.add_term(k, m);
        }
        sum
    }

    pub fn add_term(&mut self, k: TorusKnot, multiplicity: i64) {
        let entry = self.terms.entry(k).or_insert(0);
        *entry += multiplicity;
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    /// Connected sum.
    pub fn connect(&self, other: &TorusSum) -> TorusSum {
        let mut out = self.clone();
        for (&k, &m) in &other.terms {
            out.add_term(k, m);
        }
        out
    }

    pub fn mirror(&self) -> TorusSum {
        Self {
            terms: self.terms.iter().map(|(&k, &m)| (k, -m)).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (TorusKnot, i64)> + '_ {
        self.terms.iter().map(|(&k, &m)| (k, m))
    }

    pub fn multiplicity(&self, k: TorusKnot) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// `K⁺`: the summands with positive multiplicity.
    pub fn positive_part(&self) -> TorusSum {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(_, &m)| m > 0)
                .map(|(&k, &m)| (k, m))
                .collect(),
        }
    }

    /// `K⁻`: the summands with negative multiplicity, as positive multiplicities.
    pub fn negative_part(&self) -> TorusSum {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(_, &m)| m < 0)
                .map(|(&k, &m)| (k, -m))
                .collect(),
        }
    }

    /// Sum of multiplicities of `K⁺` (the count `m`).
    pub fn positive_count(&self) -> u64 {
        self.terms
            .values()
            .filter(|&&m| m > 0)
            .map(|&m| m as u64)
            .sum()
    }

    /// Sum of absolute multiplicities of `K⁻` (the count `n`).
    pub fn negative_count(&self) -> u64 {
        self.terms
            .values()
            .filter(|&&m| m < 0)
            .map(|&m| m.unsigned_abs())
            .sum()
    }

    /// `Σ m · (p-1)(q-1)/2`.
    pub fn tau(&self) -> i64 {
        self.terms.iter().map(|(k, &m)| m * k.tau()).sum()
    }

    /// `Σ |m| · g(T(p,q))`.
    pub fn genus_sum(&self) -> u64 {
        self.terms
            .iter()
            .map(|(k, &m)| m.unsigned_abs() * k.genus())
            .sum()
    }

    /// `Π Δ_{T(p,q)}^{|m|}` over all summands regardless of sign.
    ///
    /// Applied to [`positive_part`](Self::positive_part) or
    /// [`negative_part`](Self::negative_part) this gives `Δ_{K⁺}` or `Δ_{K⁻}`.
    pub fn alexander_product(&self) -> IntPolynomial {
        self.terms
            .iter()
            .fold(IntPolynomial::one(), |acc, (k, &m)| {
                &acc * &k.alexander().pow(m.unsigned_abs() as u32)
            })
    }

    /// True for the unknot and for a single positive torus knot with multiplicity one.
    pub fn is_trivially_lspace(&self) -> bool {
        self.is_empty() || (self.terms.len() == 1 && self.terms.values().all(|&m| m == 1))
    }
}

impl fmt::Display for TorusSum {
    /// Positive summands first, then negative ones, each in `(p,q)` order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("unknot");
        }
        let ordered = self
            .terms
            .iter()
            .filter(|(_, &m)| m > 0)
            .chain(self.terms.iter().filter(|(_, &m)| m < 0));
        for (i, (k, &m)) in ordered.enumerate() {
            match (i, m < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.unsigned_abs() != 1 {
                write!(f, "{}*", m.unsigned_abs())?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// All valid torus knots with `q <= max_q`, in `(p,q)` order.
pub fn torus_knots_up_to(max_q: u64) -> Vec<TorusKnot> {
    let mut out: Vec<TorusKnot> = (3..=max_q)
        .flat_map(|q| (2..q).filter_map(move |p| TorusKnot::new(p, q).ok()))
        .collect();
    out.sort();
    out
}
