//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficient `i` of the backing vector is the coefficient of `t^i`. The
//! vector never carries trailing zeros, so the zero polynomial is the empty
//! vector and structural equality is polynomial equality.
//!
//! Multiplication and division first try a machine-word kernel with checked
//! `i128` accumulation and fall back to `BigInt` arithmetic on overflow, so
//! results are exact at every size.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Outcome of dividing by a divisor whose leading coefficient is `±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: IntPolynomial,
    pub remainder: IntPolynomial,
    pub exact: bool,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Sum of signed monomials `Σ sign · t^exp`. Repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c;
        }
        Self::from_coeffs(coeffs)
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `t^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Flips the overall sign if the constant term is negative.
    pub fn with_positive_constant_term(self) -> Self {
        match self.coeffs.first() {
            Some(c) if c.is_negative() => -self,
            _ => self,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn small_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Long division by a divisor with leading coefficient `±1`.
    pub fn divmod(&self, divisor: &IntPolynomial) -> Result<DivisionResult> {
        let lead = divisor.leading_coefficient().ok_or(Error::ZeroDivisor)?;
        let lead = match lead.to_i64() {
            Some(l @ (1 | -1)) => l,
            _ => return Err(Error::NonUnitLeadingCoefficient(lead.to_string())),
        };
        let small = self
            .small_coeffs()
            .zip(divisor.small_coeffs())
            .and_then(|(a, b)| divmod_small(&a, &b, lead));
        let (quotient, remainder) = match small {
            Some(qr) => qr,
            None => divmod_big(self, divisor, lead),
        };
        let exact = remainder.is_zero();
        Ok(DivisionResult {
            quotient,
            remainder,
            exact,
        })
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<Option<IntPolynomial>> {
        let r = self.divmod(divisor)?;
        Ok(r.exact.then_some(r.quotient))
    }

    pub fn divides(&self, dividend: &IntPolynomial) -> Result<bool> {
        Ok(dividend.divmod(self)?.exact)
    }
}

fn from_i128s(v: Vec<i128>) -> IntPolynomial {
    IntPolynomial::from_coeffs(v.into_iter().map(BigInt::from).collect())
}

fn mul_small(a: &[i64], b: &[i64]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x as i128 * y as i128)?;
        }
    }
    Some(out)
}

fn divmod_small(a: &[i64], d: &[i64], lead: i64) -> Option<(IntPolynomial, IntPolynomial)> {
    let dd = d.len() - 1;
    let mut rem: Vec<i128> = a.iter().map(|&c| c as i128).collect();
    if rem.len() <= dd {
        return Some((IntPolynomial::zero(), from_i128s(rem)));
    }
    let mut quot = vec![0i128; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k] * lead as i128;
        if c == 0 {
            continue;
        }
        quot[k - dd] = c;
        for (j, &dj) in d.iter().enumerate() {
            let prod = c.checked_mul(dj as i128)?;
            rem[k - dd + j] = rem[k - dd + j].checked_sub(prod)?;
        }
    }
    Some((from_i128s(quot), from_i128s(rem)))
}

fn divmod_big(a: &IntPolynomial, d: &IntPolynomial, lead: i64) -> (IntPolynomial, IntPolynomial) {
    let dd = d.coeffs.len() - 1;
    let mut rem = a.coeffs.clone();
    if rem.len() <= dd {
        return (IntPolynomial::zero(), a.clone());
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let c = &rem[k] * lead;
        for (j, dj) in d.coeffs.iter().enumerate() {
            rem[k - dd + j] -= &c * dj;
        }
        quot[k - dd] = c;
    }
    (
        IntPolynomial::from_coeffs(quot),
        IntPolynomial::from_coeffs(rem),
    )
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        if let Some(v) = self
            .small_coeffs()
            .zip(rhs.small_coeffs())
            .and_then(|(a, b)| mul_small(&a, &b))
        {
            return from_i128s(v);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial, `(t^n - 1) / Π_{d | n, d < n} φ_d`.
///
/// Results are memoized process-wide. Concurrent callers may compute the same
/// entry twice; both insert identical values.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroCyclotomicIndex);
    }
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let mut acc = IntPolynomial::t_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            break;
        }
        acc = acc
            .exact_div(&cyclotomic(d)?)?
            .expect("cyclotomic factor of t^n - 1 divides exactly");
    }
    cyclotomic_cache().write().unwrap().insert(n, acc.clone());
    Ok(acc)
}

/// Largest `k` such that `φ_c^k` divides `p`.
pub fn cyclotomic_multiplicity(p: &IntPolynomial, c: u64) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let phi = cyclotomic(c)?;
    let mut k = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.exact_div(&phi)? {
        cur = q;
        k += 1;
    }
    Ok(k)
}
