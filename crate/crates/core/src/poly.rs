//! Canonical dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order: `coeffs[k]` multiplies
//! `x^k`. The zero polynomial is the empty coefficient vector; otherwise the
//! last stored coefficient is nonzero. Every constructor and operation
//! re-establishes this canonical form, so equality is plain coefficient
//! comparison.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PolyRepr", try_from = "PolyRepr")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Build a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// The monic product of the linear factors `(x - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = &p * &Self::new(vec![-r.clone(), Rational::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    ///
    /// The zero polynomial has no well-defined degree, so it is a sentinel
    /// here rather than a number that could leak into arithmetic.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Multiply every coefficient by `c`; `c = 0` yields the zero polynomial.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal derivative; constants map to the zero polynomial.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * Rational::from_integer(k.into()))
            .collect();
        Self::new(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Substitute `x -> a*x + b` and expand exactly.
    ///
    /// The reflection `x -> 1 - x` is `compose_affine(-1, 1)`. For `a != 0`
    /// the degree is preserved.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self^exp` by repeated multiplication; `exp = 0` gives 1.
    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact Euclidean division: `self = q * divisor + r` with
    /// `deg(r) < deg(divisor)` or `r = 0`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let n_deg = match self.degree() {
            None => return Ok((Self::zero(), Self::zero())),
            Some(n) if n < d_deg => return Ok((Self::zero(), self.clone())),
            Some(n) => n,
        };

        let lead = divisor.coeffs[d_deg].clone();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); n_deg - d_deg + 1];
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = &rem.coeffs[r_deg] / &lead;
            let shift = r_deg - d_deg;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem.coeffs[i + shift] = &rem.coeffs[i + shift] - &(&factor * dc);
            }
            rem.normalize();
            quot[shift] = factor;
        }
        Ok((Self::new(quot), rem))
    }

    /// Remainder of exact Euclidean division.
    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Rescale to leading coefficient 1; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Self> {
        let lead = self.leading_coeff()?;
        Some(self.scale(&lead.recip()))
    }

    /// Monic greatest common divisor. `gcd(p, 0)` is `monic(p)`;
    /// both inputs zero is an error.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeroPair);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.monic().expect("gcd loop preserves a nonzero entry"))
    }

    /// Monic `self / gcd(self, self')`: same distinct roots, all simple.
    ///
    /// Errors on zero or constant input.
    pub fn squarefree_part(&self) -> Result<Self> {
        match self.degree() {
            None | Some(0) => Err(Error::DegreeAtLeastOne {
                op: "square-free part",
            }),
            Some(_) => {
                let g = Self::gcd(self, &self.derivative())?;
                let (q, r) = self.div_rem(&g)?;
                debug_assert!(r.is_zero(), "gcd(p, p') must divide p exactly");
                Ok(q.monic().expect("p / gcd(p, p') is nonzero"))
            }
        }
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl std::ops::Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl std::ops::Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;

    /// Exact convolution of coefficients.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl std::ops::Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    /// Human-readable form, e.g. `1 - 2x + 1/2x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Wire form of the canonical text format: `{"coeffs": ["a0", "a1", ...]}`
/// with each coefficient `"p"` or `"p/q"` in lowest terms, ascending order,
/// no trailing zeros.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<String>,
}

impl From<Polynomial> for PolyRepr {
    fn from(p: Polynomial) -> Self {
        Self {
            coeffs: p.coeffs.iter().map(Rational::to_string).collect(),
        }
    }
}

impl TryFrom<PolyRepr> for Polynomial {
    type Error = Error;

    fn try_from(repr: PolyRepr) -> Result<Self> {
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn ipoly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn add_cancellation() {
        // (1 + x) + (1 - x) = 2
        assert_eq!(ipoly(&[1, 1]) + ipoly(&[1, -1]), ipoly(&[2]));
    }

    #[test]
    fn add_identity() {
        let p = ipoly(&[3, 0, 2]);
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn add_leading_cancellation_recanonicalizes() {
        // x^2 + (-x^2 + x) = x
        let sum = ipoly(&[0, 0, 1]) + ipoly(&[0, 1, -1]);
        assert_eq!(sum, Polynomial::x());
        assert_eq!(sum.degree(), Some(1));
    }

    #[test]
    fn mul_binomial_square() {
        // (1 - x)(1 - x) = 1 - 2x + x^2
        let one_minus_x = ipoly(&[1, -1]);
        assert_eq!(&one_minus_x * &one_minus_x, ipoly(&[1, -2, 1]));
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let p = ipoly(&[5, 1, 7]);
        assert_eq!(&p * &Polynomial::zero(), Polynomial::zero());
    }

    #[test]
    fn mul_expands_linear_factors() {
        // (x - 1)(x - 2) = x^2 - 3x + 2
        assert_eq!(ipoly(&[-1, 1]) * ipoly(&[-2, 1]), ipoly(&[2, -3, 1]));
    }

    #[test]
    fn mul_degree_adds() {
        let p = ipoly(&[1, 0, 0, 2]);
        let q = ipoly(&[-1, 4]);
        assert_eq!((&p * &q).degree(), Some(4));
    }

    #[test]
    fn scale_by_half() {
        let p = ipoly(&[1, -2, 1]);
        assert_eq!(p.scale(&rat(1, 2)), poly(&[(1, 2), (-1, 1), (1, 2)]));
    }

    #[test]
    fn scale_identity_and_annihilator() {
        let p = ipoly(&[4, -1, 3]);
        assert_eq!(p.scale(&rat_int(1)), p);
        assert_eq!(p.scale(&rat_int(0)), Polynomial::zero());
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(ipoly(&[2, -3, 1]).derivative(), ipoly(&[-3, 2]));
        assert_eq!(ipoly(&[0, 0, 0, 1]).derivative(), ipoly(&[0, 0, 3]));
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        assert_eq!(ipoly(&[5]).derivative(), Polynomial::zero());
    }

    #[test]
    fn eval_at_known_root() {
        let p = ipoly(&[2, -3, 1]);
        assert!(p.eval(&rat_int(1)).is_zero());
        assert!(p.eval(&rat_int(2)).is_zero());
    }

    #[test]
    fn eval_at_zero_is_constant_term() {
        let p = poly(&[(7, 3), (1, 1), (5, 2)]);
        assert_eq!(p.eval(&rat_int(0)), rat(7, 3));
    }

    #[test]
    fn eval_rational_coefficients() {
        // (1 - 2x + x^2/2)(2) = 1 - 4 + 2 = -1
        let p = poly(&[(1, 1), (-2, 1), (1, 2)]);
        assert_eq!(p.eval(&rat_int(2)), rat_int(-1));
    }

    #[test]
    fn compose_affine_reflection_squares() {
        // x^2 under x -> 1 - x gives 1 - 2x + x^2
        let p = ipoly(&[0, 0, 1]);
        assert_eq!(
            p.compose_affine(&rat_int(-1), &rat_int(1)),
            ipoly(&[1, -2, 1])
        );
    }

    #[test]
    fn compose_affine_identity() {
        let p = poly(&[(1, 3), (0, 1), (-2, 5), (1, 1)]);
        assert_eq!(p.compose_affine(&rat_int(1), &rat_int(0)), p);
    }

    #[test]
    fn compose_affine_linear() {
        // (x - 3) under x -> 1 - x gives -2 - x
        let p = ipoly(&[-3, 1]);
        assert_eq!(
            p.compose_affine(&rat_int(-1), &rat_int(1)),
            ipoly(&[-2, -1])
        );
    }

    #[test]
    fn compose_affine_preserves_degree_for_nonzero_slope() {
        let p = ipoly(&[1, 2, 3, 4]);
        let q = p.compose_affine(&rat(2, 3), &rat(-1, 7));
        assert_eq!(q.degree(), p.degree());
    }

    #[test]
    fn rem_exact_factor() {
        // rem(x^2 - 1, x - 1) = 0
        assert!(ipoly(&[-1, 0, 1]).rem(&ipoly(&[-1, 1])).unwrap().is_zero());
        assert!(ipoly(&[0, 0, 1]).rem(&Polynomial::x()).unwrap().is_zero());
    }

    #[test]
    fn rem_constant_remainder() {
        // rem(x^2 + 1, x) = 1
        assert_eq!(
            ipoly(&[1, 0, 1]).rem(&Polynomial::x()).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn rem_by_zero_is_an_error() {
        assert_eq!(
            ipoly(&[1, 1]).rem(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn div_rem_reconstructs() {
        let p = poly(&[(1, 2), (0, 1), (-3, 1), (1, 1), (2, 1)]);
        let q = ipoly(&[1, 7, 3]);
        let (quot, rem) = p.div_rem(&q).unwrap();
        assert_eq!(&(&quot * &q) + &rem, p);
        assert!(rem.degree() < q.degree());
    }

    #[test]
    fn gcd_shared_factor() {
        // gcd((x-1)^2, (x-1)(x-2)) = x - 1
        let a = ipoly(&[-1, 1]).pow(2);
        let b = ipoly(&[-1, 1]) * ipoly(&[-2, 1]);
        assert_eq!(Polynomial::gcd(&a, &b).unwrap(), ipoly(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        let p = ipoly(&[2, 2]);
        assert_eq!(
            Polynomial::gcd(&p, &Polynomial::zero()).unwrap(),
            ipoly(&[1, 1])
        );
        assert_eq!(
            Polynomial::gcd(&Polynomial::zero(), &p).unwrap(),
            ipoly(&[1, 1])
        );
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let g = Polynomial::gcd(&ipoly(&[1, 0, 1]), &ipoly(&[-1, 1])).unwrap();
        assert_eq!(g, Polynomial::one());
    }

    #[test]
    fn gcd_of_zero_pair_is_an_error() {
        assert_eq!(
            Polynomial::gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::GcdOfZeroPair)
        );
    }

    #[test]
    fn squarefree_part_drops_multiplicity() {
        assert_eq!(
            ipoly(&[-1, 1]).pow(2).squarefree_part().unwrap(),
            ipoly(&[-1, 1])
        );
        assert_eq!(
            ipoly(&[0, 0, 0, 1]).squarefree_part().unwrap(),
            Polynomial::x()
        );
    }

    #[test]
    fn squarefree_part_of_squarefree_is_monic_self() {
        let p = ipoly(&[2, -3, 1]);
        assert_eq!(p.squarefree_part().unwrap(), p);
        // non-monic input comes back monic
        assert_eq!(p.scale(&rat_int(4)).squarefree_part().unwrap(), p);
    }

    #[test]
    fn squarefree_part_rejects_constants_and_zero() {
        assert!(Polynomial::zero().squarefree_part().is_err());
        assert!(ipoly(&[3]).squarefree_part().is_err());
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = Polynomial::new(vec![rat_int(1), rat_int(2), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs().len(), 2);
    }

    #[test]
    fn zero_polynomial_degree_is_sentinel() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::new(vec![rat_int(0)]).degree(), None);
    }

    #[test]
    fn from_roots_expands() {
        let p = Polynomial::from_roots(&[rat_int(1), rat_int(2)]);
        assert_eq!(p, ipoly(&[2, -3, 1]));
        let q = Polynomial::from_roots(&[rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(q, ipoly(&[0, -1, 0, 1]));
    }

    #[test]
    fn display_matches_expected_rendering() {
        assert_eq!(poly(&[(1, 1), (-2, 1), (1, 2)]).to_string(), "1 - 2x + 1/2x^2");
        assert_eq!(ipoly(&[1, -1]).to_string(), "1 - x");
        assert_eq!(ipoly(&[-2, -1]).to_string(), "-2 - x");
        assert_eq!(Polynomial::x().to_string(), "x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(ipoly(&[0, 0, 0, 1]).to_string(), "x^3");
    }

    #[test]
    fn json_round_trip_is_byte_exact_for_canonical_input() {
        let s = r#"{"coeffs":["1","-2","1/2"]}"#;
        let p: Polynomial = serde_json::from_str(s).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), s);

        let zero = r#"{"coeffs":[]}"#;
        let z: Polynomial = serde_json::from_str(zero).unwrap();
        assert!(z.is_zero());
        assert_eq!(serde_json::to_string(&z).unwrap(), zero);
    }

    #[test]
    fn json_normalizes_noncanonical_input() {
        let p: Polynomial = serde_json::from_str(r#"{"coeffs":["2/4","0"]}"#).unwrap();
        assert_eq!(p, poly(&[(1, 2)]));
    }

    #[test]
    fn json_rejects_bad_coefficients() {
        assert!(serde_json::from_str::<Polynomial>(r#"{"coeffs":["1/0"]}"#).is_err());
        assert!(serde_json::from_str::<Polynomial>(r#"{"coeffs":["one"]}"#).is_err());
    }
}
