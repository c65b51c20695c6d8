//! Sturm chains and exact real-root counting.
//!
//! For a polynomial `p` the chain is `p, p′`, then successive negated
//! Euclidean remainders until the remainder vanishes. Sturm's theorem counts
//! the distinct real roots of a square-free `p` in `(a, b)` as the drop in
//! sign variations of the chain values between `a` and `b`; limit signs extend
//! the count to the whole line without ever touching huge finite endpoints.
//!
//! The canonical chain entries are rationals, but every sign query runs on a
//! parallel table of primitive integer coefficient rows: the value of a row at
//! `x = u/v` has the sign of `Σ aᵢ·uⁱ·v^(d−i)` because the denominator is
//! positive, and the homogeneous form never leaves integers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    seq: Vec<Polynomial>,
    rows: Vec<Vec<BigInt>>,
}

/// Which end of the real line a limit-sign query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Infinity {
    Negative,
    Positive,
}

/// Open interval with exact rational endpoints, `lo < hi`.
///
/// Serialized as the endpoint pair `["lo", "hi"]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "(String, String)", try_from = "(String, String)")]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

/// Counting region for [`count_real_roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Window {
    WholeLine,
    Interval(Interval),
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidInterval)
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Strict containment, matching the open-interval reading.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

impl From<Interval> for (String, String) {
    fn from(iv: Interval) -> Self {
        (iv.lo.to_string(), iv.hi.to_string())
    }
}

impl TryFrom<(String, String)> for Interval {
    type Error = Error;

    fn try_from((lo, hi): (String, String)) -> Result<Self> {
        Self::new(parse_rational(&lo)?, parse_rational(&hi)?)
    }
}

impl SturmChain {
    /// Build the chain for a nonconstant polynomial.
    pub fn new(p: &Polynomial) -> Result<Self> {
        match p.degree() {
            None | Some(0) => Err(Error::DegreeAtLeastOne { op: "a Sturm chain" }),
            Some(_) => {
                let mut seq = vec![p.clone(), p.derivative()];
                loop {
                    let [a, b] = &seq[seq.len() - 2..] else {
                        unreachable!("chain always holds at least two entries")
                    };
                    let r = a.rem(b).expect("chain entries are nonzero");
                    if r.is_zero() {
                        break;
                    }
                    seq.push(-r);
                }
                let rows = seq.iter().map(integer_row).collect();
                Ok(Self { seq, rows })
            }
        }
    }

    /// The chain entries, starting with `p` and `p′`.
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.seq
    }

    /// Sign variations of the chain values at `x`, zeros skipped.
    ///
    /// Errors when `x` is a root of the chain head; a variation count there is
    /// meaningless and the caller must perturb.
    pub fn sign_variations_at(&self, x: &Rational) -> Result<usize> {
        let head = row_sign_at(&self.rows[0], x);
        if head == 0 {
            return Err(Error::EvaluationAtRoot);
        }
        let mut variations = 0;
        let mut last = head;
        for row in &self.rows[1..] {
            let s = row_sign_at(row, x);
            if s != 0 {
                if s != last {
                    variations += 1;
                }
                last = s;
            }
        }
        Ok(variations)
    }

    /// Sign variations of the limit signs: at `+∞` each entry contributes the
    /// sign of its leading coefficient, at `-∞` that sign times `(-1)^degree`.
    pub fn sign_variations_at_infinity(&self, at: Infinity) -> usize {
        let mut variations = 0;
        let mut last = 0i8;
        for row in &self.rows {
            let lead = row.last().expect("rows are nonzero");
            let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
            if at == Infinity::Negative && (row.len() - 1) % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                variations += 1;
            }
            last = s;
        }
        variations
    }

    /// Whether `x` is a root of the chain head.
    pub(crate) fn head_is_root(&self, x: &Rational) -> bool {
        row_sign_at(&self.rows[0], x) == 0
    }

    /// Distinct real roots of the (square-free) chain head over the whole
    /// line: `V(-∞) - V(+∞)`.
    pub(crate) fn count_whole_line(&self) -> usize {
        self.sign_variations_at_infinity(Infinity::Negative)
            .checked_sub(self.sign_variations_at_infinity(Infinity::Positive))
            .expect("sign variations never increase left to right")
    }

    /// Move a would-be endpoint off the root set, away from the interval:
    /// steps of 1, 1/2, 1/4, … downward for a lower endpoint and upward for an
    /// upper one. Roots sitting exactly on an endpoint therefore end up inside
    /// the perturbed window and are counted.
    fn nonroot_outward(&self, x: &Rational, toward: Infinity) -> Rational {
        if !self.head_is_root(x) {
            return x.clone();
        }
        let mut step = Rational::one();
        loop {
            let candidate = match toward {
                Infinity::Negative => x - &step,
                Infinity::Positive => x + &step,
            };
            if !self.head_is_root(&candidate) {
                return candidate;
            }
            step /= Rational::from_integer(BigInt::from(2));
        }
    }
}

/// Distinct real roots of `p` in the window, by Sturm's theorem on the monic
/// square-free part. Finite endpoints that are roots are perturbed outward
/// (see [`SturmChain::nonroot_outward`]), so they count as inside.
pub fn count_real_roots(p: &Polynomial, window: &Window) -> Result<usize> {
    let squarefree = p.squarefree_part().map_err(|_| Error::DegreeAtLeastOne {
        op: "root counting",
    })?;
    let chain = SturmChain::new(&squarefree)?;
    match window {
        Window::WholeLine => Ok(chain.count_whole_line()),
        Window::Interval(iv) => {
            let lo = chain.nonroot_outward(iv.lo(), Infinity::Negative);
            let hi = chain.nonroot_outward(iv.hi(), Infinity::Positive);
            let v_lo = chain
                .sign_variations_at(&lo)
                .expect("perturbed endpoint is not a root");
            let v_hi = chain
                .sign_variations_at(&hi)
                .expect("perturbed endpoint is not a root");
            Ok(v_lo
                .checked_sub(v_hi)
                .expect("sign variations never increase left to right"))
        }
    }
}

/// Cauchy bound `B = 1 + max_{i<n} |aᵢ| / |aₙ|`: every real root of `p` lies
/// strictly inside `(-B, B)`.
pub fn root_bound(p: &Polynomial) -> Result<Rational> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::DegreeAtLeastOne { op: "a root bound" }),
        Some(n) => n,
    };
    let lead = p.leading_coeff().expect("degree ≥ 1").abs();
    let mut max_ratio = Rational::zero();
    for c in &p.coeffs()[..n] {
        let ratio = c.abs() / &lead;
        if ratio > max_ratio {
            max_ratio = ratio;
        }
    }
    Ok(max_ratio + Rational::one())
}

/// Clear denominators and divide out the content: an integer coefficient row
/// that is a positive multiple of `p`, so it has `p`'s sign everywhere.
fn integer_row(p: &Polynomial) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut row: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for a in &row {
        content = content.gcd(a);
    }
    if content > BigInt::one() {
        for a in &mut row {
            *a /= &content;
        }
    }
    row
}

/// Sign of the row's polynomial at `x = u/v` via the homogeneous integer form
/// `Σ aᵢ·uⁱ·v^(d−i)`; valid because `v > 0`.
fn row_sign_at(row: &[BigInt], x: &Rational) -> i8 {
    let (u, v) = (x.numer(), x.denom());
    let d = row.len() - 1;
    let mut acc = row[d].clone();
    let mut v_pow = BigInt::one();
    for i in (0..d).rev() {
        v_pow *= v;
        acc = acc * u + &row[i] * &v_pow;
    }
    match acc.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
