//! Linear operators on the monomial basis.
//!
//! A transform is stored as a finite image table: `images[k]` is the image of
//! `x^k` for `k` up to an explicit `max_degree`, and the action extends to
//! arbitrary polynomials by linearity. Materializing the table (rather than
//! keeping a closure) makes capacity explicit and composition a finite,
//! directly comparable object.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTransform {
    images: Vec<Polynomial>,
}

impl MonomialTransform {
    /// Build a transform directly from the images of `x^0 .. x^max_degree`.
    ///
    /// Panics on an empty table; even the trivial transform must say where
    /// `x^0` goes.
    pub fn from_images(images: Vec<Polynomial>) -> Self {
        assert!(!images.is_empty(), "a transform needs at least the image of x^0");
        Self { images }
    }

    /// The identity on polynomials of degree ≤ `max_degree`: `x^k -> x^k`.
    pub fn identity(max_degree: usize) -> Self {
        Self {
            images: (0..=max_degree)
                .map(|k| Polynomial::monomial(Rational::one(), k))
                .collect(),
        }
    }

    /// The operator `T` with `T(x^k) = x^k / k!`.
    pub fn factorial(max_degree: usize) -> Self {
        let mut images = Vec::with_capacity(max_degree + 1);
        let mut k_factorial = BigInt::one();
        for k in 0..=max_degree {
            if k > 0 {
                k_factorial *= BigInt::from(k);
            }
            let inv = Rational::new(BigInt::one(), k_factorial.clone());
            images.push(Polynomial::monomial(inv, k));
        }
        Self { images }
    }

    /// The substitution `x -> 1 - x` as a monomial transform: `x^k -> (1-x)^k`.
    pub fn reflection(max_degree: usize) -> Self {
        let one_minus_x = Polynomial::new(vec![
            Rational::one(),
            -Rational::one(),
        ]);
        let mut images = Vec::with_capacity(max_degree + 1);
        let mut power = Polynomial::one();
        for _ in 0..=max_degree {
            images.push(power.clone());
            power = &power * &one_minus_x;
        }
        Self { images }
    }

    /// The map `x^n -> L_n(x)` onto the Laguerre polynomials.
    pub fn laguerre(max_degree: usize) -> Self {
        Self {
            images: (0..=max_degree).map(laguerre_sum).collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.images.len() - 1
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// The image of `x^k`, or `None` beyond the table.
    pub fn image(&self, k: usize) -> Option<&Polynomial> {
        self.images.get(k)
    }

    /// Apply by linearity: `Σ c_k x^k  ->  Σ c_k · images[k]`.
    ///
    /// The zero polynomial is always in range; otherwise the input degree must
    /// fit the table.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let Some(degree) = p.degree() else {
            return Ok(Polynomial::zero());
        };
        if degree > self.max_degree() {
            return Err(Error::TransformCapacity {
                degree,
                max_degree: self.max_degree(),
            });
        }
        let mut acc = Polynomial::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            acc = &acc + &self.images[k].scale(c);
        }
        Ok(acc)
    }

    /// The composite operator `outer ∘ inner` on the monomial basis:
    /// `images[k] = outer(inner.images[k])`, capacity taken from `inner`.
    ///
    /// Fails if some inner image is too large for `outer`, naming the
    /// offending basis index.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        let images = inner
            .images
            .iter()
            .enumerate()
            .map(|(k, image)| {
                outer.apply(image).map_err(|e| match e {
                    Error::TransformCapacity { degree, max_degree } => Error::ComposeCapacity {
                        index: k,
                        degree,
                        max_degree,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { images })
    }
}

/// `L_n(x) = Σ_{k=0}^{n} (-1)^k · C(n,k) · x^k / k!` (so `L_n(0) = 1`).
pub fn laguerre_sum(n: usize) -> Polynomial {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut binom = BigInt::one(); // C(n, 0)
    let mut k_factorial = BigInt::one(); // 0!
    for k in 0..=n {
        if k > 0 {
            // C(n, k) = C(n, k-1) · (n - k + 1) / k, exact at every step
            binom = binom * BigInt::from(n - k + 1) / BigInt::from(k);
            k_factorial *= BigInt::from(k);
        }
        let numer = if k % 2 == 0 { binom.clone() } else { -binom.clone() };
        coeffs.push(Rational::new(numer, k_factorial.clone()));
    }
    Polynomial::new(coeffs)
}

/// `L_n(x)` via the three-term recurrence
/// `(n+1)·L_{n+1} = (2n+1 - x)·L_n - n·L_{n-1}`, `L_0 = 1`, `L_1 = 1 - x`.
///
/// Independent of [`laguerre_sum`] by construction; the two are cross-checked
/// in tests rather than assumed equal.
pub fn laguerre_recurrence(n: usize) -> Polynomial {
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut curr = Polynomial::new(vec![Rational::one(), -Rational::one()]);
    for m in 1..n {
        let two_m_plus_one_minus_x = Polynomial::new(vec![
            Rational::from_integer(BigInt::from(2 * m + 1)),
            -Rational::one(),
        ]);
        let scaled_prev = prev.scale(&Rational::from_integer(BigInt::from(m)));
        let next = (&(&two_m_plus_one_minus_x * &curr) - &scaled_prev)
            .scale(&Rational::new(BigInt::one(), BigInt::from(m + 1)));
        prev = curr;
        curr = next;
    }
    curr
}
