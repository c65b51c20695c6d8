//! Exact real-rootedness certification for linear transforms on the monomial
//! basis of univariate polynomials.
//!
//! The crate revolves around one fact: the map sending `x^n` to the Laguerre
//! polynomial `L_n(x)` preserves real-rootedness, because it factors as the
//! substitution `x -> 1 - x` followed by the operator `T(x^k) = x^k / k!`.
//! Everything here exists to make that statement mechanically checkable:
//!
//! - [`Rational`] and [`Polynomial`]: exact arbitrary-precision arithmetic;
//!   no floating point anywhere.
//! - [`MonomialTransform`]: linear operators given by their images of `x^k`,
//!   with [`laguerre_sum`]/[`laguerre_recurrence`] as two independent
//!   generators of the `L_n` family and [`MonomialTransform::compose`] to
//!   state the factorization as an exact operator equality.
//! - [`SturmChain`], [`count_real_roots`], [`certify_real_rooted`],
//!   [`isolate_roots`]: Sturm's theorem on the square-free part, producing a
//!   [`RootCertificate`] with isolating intervals.
//! - [`run_laguerre_trials`], [`run_factorial_trials`],
//!   [`run_identity_check`]: seeded, parallel, bit-reproducible verification
//!   campaigns over randomly generated real-rooted inputs.
//!
//! ```
//! use polycert::{certify_real_rooted, MonomialTransform, Polynomial, rat_int};
//!
//! // x^2 - 3x + 2 = (x - 1)(x - 2) is real-rooted; so is its Laguerre image.
//! let p = Polynomial::new(vec![rat_int(2), rat_int(-3), rat_int(1)]);
//! let image = MonomialTransform::laguerre(2).apply(&p).unwrap();
//! assert!(certify_real_rooted(&image).unwrap().is_real_rooted);
//! ```

mod certify;
mod error;
mod harness;
mod poly;
mod rational;
mod sturm;
mod transform;

pub use certify::{certify_real_rooted, isolate_roots, RootCertificate};
pub use error::{Error, Result};
pub use harness::{
    random_real_rooted, run_factorial_trials, run_identity_check, run_laguerre_trials, run_trials,
    trial_polynomial, IdentityReport, TrialConfig, TrialFailure, TrialReport,
};
pub use poly::Polynomial;
pub use rational::{parse_rational, rat, rat_int, Rational};
pub use sturm::{
    count_real_roots, root_bound, Infinity, Interval, SturmChain, Window,
};
pub use transform::{laguerre_recurrence, laguerre_sum, MonomialTransform};
