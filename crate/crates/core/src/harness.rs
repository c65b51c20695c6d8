//! Randomized verification campaigns.
//!
//! A campaign draws real-rooted polynomials (built as products of rational
//! linear factors, so the hypothesis is true by construction), pushes each
//! through a transform, and certifies every image. Each trial derives its own
//! RNG stream from the campaign seed and the trial index, which makes reports
//! reproducible bit for bit no matter how many worker threads run the trials.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{certify_real_rooted, RootCertificate};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::rat;
use crate::transform::{laguerre_recurrence, laguerre_sum, MonomialTransform};

/// Campaign parameters. Roots are drawn with numerators in
/// `[-root_range, root_range]` and denominators in `[1, max_denominator]`.
#[derive(Clone, Debug)]
pub struct TrialConfig {
    pub trials: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub root_range: i64,
    pub max_denominator: i64,
    pub seed: u64,
    pub allow_repeated_roots: bool,
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if self.min_degree == 0 {
            return Err(Error::InvalidConfig("min_degree must be at least 1".into()));
        }
        if self.min_degree > self.max_degree {
            return Err(Error::InvalidConfig(format!(
                "min_degree {} exceeds max_degree {}",
                self.min_degree, self.max_degree
            )));
        }
        if self.root_range < 1 {
            return Err(Error::InvalidConfig("root_range must be at least 1".into()));
        }
        if self.max_denominator < 1 {
            return Err(Error::InvalidConfig(
                "max_denominator must be at least 1".into(),
            ));
        }
        // keep rejection sampling of distinct roots guaranteed to terminate:
        // the integers alone already provide 2·root_range + 1 distinct values
        if !self.allow_repeated_roots && self.max_degree > 2 * self.root_range as usize {
            return Err(Error::InvalidConfig(format!(
                "cannot draw {} distinct roots with root_range {}; \
                 raise the range or allow repeats",
                self.max_degree, self.root_range
            )));
        }
        Ok(())
    }
}

/// One failed trial with everything needed to reproduce it.
///
/// `certificate` describes `output`. A trial can fail in two ways: the
/// transformed image fails certification (the property under test), or the
/// generated input itself fails its pre-transform self-check — in that case
/// the input is recorded as its own output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub input: Polynomial,
    pub output: Polynomial,
    pub certificate: RootCertificate,
}

/// Campaign outcome; `failures` is empty exactly when the campaign passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub trials: u64,
    pub failures: Vec<TrialFailure>,
    pub per_degree: BTreeMap<usize, u64>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of checking `laguerre_sum(n) = T((1-x)^n) = laguerre_recurrence(n)`
/// for every `n ≤ max_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub max_n: usize,
    pub passed: bool,
    pub first_failure: Option<usize>,
}

/// Spread seed and trial index into independent RNG seeds (splitmix64-style
/// finalizer, so neighboring trial indices land far apart).
fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Monic product of `degree` linear factors `(x - r)` with roots drawn from
/// the configured range: real-rooted by construction.
pub fn random_real_rooted<R: Rng>(config: &TrialConfig, degree: usize, rng: &mut R) -> Polynomial {
    assert!(degree >= 1, "a root product needs at least one factor");
    let mut roots = Vec::with_capacity(degree);
    while roots.len() < degree {
        let numer = rng.random_range(-config.root_range..=config.root_range);
        let denom = rng.random_range(1..=config.max_denominator);
        let root = rat(numer, denom);
        if config.allow_repeated_roots || !roots.contains(&root) {
            roots.push(root);
        }
    }
    Polynomial::from_roots(&roots)
}

/// The input polynomial of one trial, reproducible from the config alone.
pub fn trial_polynomial(config: &TrialConfig, trial: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(config.seed, trial));
    let degree = rng.random_range(config.min_degree..=config.max_degree);
    random_real_rooted(config, degree, &mut rng)
}

struct Outcome {
    degree: usize,
    failure: Option<TrialFailure>,
}

fn run_one(config: &TrialConfig, transform: &MonomialTransform, trial: u64) -> Outcome {
    let input = trial_polynomial(config, trial);
    let degree = input.degree().expect("generated inputs are nonzero");

    let input_cert = certify_real_rooted(&input).expect("generated inputs are nonzero");
    if !input_cert.is_real_rooted {
        return Outcome {
            degree,
            failure: Some(TrialFailure {
                trial,
                input: input.clone(),
                output: input,
                certificate: input_cert,
            }),
        };
    }

    let output = transform
        .apply(&input)
        .expect("config degree bound fits the transform table");
    let certificate = certify_real_rooted(&output).expect("images of nonzero inputs are nonzero");
    let failure = (!certificate.is_real_rooted).then_some(TrialFailure {
        trial,
        input,
        output,
        certificate,
    });
    Outcome { degree, failure }
}

/// Run a full campaign of `config.trials` independent trials through
/// `transform`. Trials execute in parallel; the report is identical for any
/// worker count.
pub fn run_trials(config: &TrialConfig, transform: &MonomialTransform) -> Result<TrialReport> {
    config.validate()?;
    if config.max_degree > transform.max_degree() {
        return Err(Error::InvalidConfig(format!(
            "campaign max_degree {} exceeds transform capacity {}",
            config.max_degree,
            transform.max_degree()
        )));
    }

    let start = Instant::now();
    let outcomes: Vec<Outcome> = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_one(config, transform, trial))
        .collect();

    let mut per_degree = BTreeMap::new();
    let mut failures = Vec::new();
    for outcome in outcomes {
        *per_degree.entry(outcome.degree).or_insert(0u64) += 1;
        if let Some(failure) = outcome.failure {
            failures.push(failure);
        }
    }
    Ok(TrialReport {
        trials: config.trials,
        failures,
        per_degree,
        seed: config.seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Campaign through the Laguerre map `x^n -> L_n(x)`.
pub fn run_laguerre_trials(config: &TrialConfig) -> Result<TrialReport> {
    run_trials(config, &MonomialTransform::laguerre(config.max_degree))
}

/// Campaign through the factorial map `T(x^k) = x^k / k!`.
pub fn run_factorial_trials(config: &TrialConfig) -> Result<TrialReport> {
    run_trials(config, &MonomialTransform::factorial(config.max_degree))
}

/// Verify the three-way equality `laguerre_sum(n) = T((1-x)^n) =
/// laguerre_recurrence(n)` for all `n ≤ max_n`, reporting the first failing
/// `n` if any.
pub fn run_identity_check(max_n: usize) -> IdentityReport {
    let t = MonomialTransform::factorial(max_n);
    let one_minus_x = Polynomial::new(vec![rat(1, 1), rat(-1, 1)]);
    let mut reflected_power = Polynomial::one(); // (1-x)^n
    for n in 0..=max_n {
        let sum = laguerre_sum(n);
        let through_t = t
            .apply(&reflected_power)
            .expect("(1-x)^n has degree n ≤ max_n");
        let recurrence = laguerre_recurrence(n);
        if sum != through_t || sum != recurrence {
            return IdentityReport {
                max_n,
                passed: false,
                first_failure: Some(n),
            };
        }
        reflected_power = &reflected_power * &one_minus_x;
    }
    IdentityReport {
        max_n,
        passed: true,
        first_failure: None,
    }
}
