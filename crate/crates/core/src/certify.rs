//! Real-rootedness certificates and root isolation.
//!
//! A polynomial of degree `n ≥ 1` is real-rooted when all `n` roots, counted
//! with multiplicity, are real — equivalently, when its square-free part has
//! as many distinct real roots as its degree. The certifier therefore works
//! on the monic square-free part throughout: Sturm counting decides the
//! distinct-root total exactly, and bisection on Sturm counts produces one
//! isolating interval per distinct real root.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sturm::{Infinity, Interval, SturmChain};

/// Verdict for one polynomial: degrees, distinct-real-root count, the
/// real-rootedness flag, and isolating intervals for the square-free part.
///
/// Nonzero constants are vacuously real-rooted with zero roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCertificate {
    pub degree: usize,
    pub squarefree_degree: usize,
    pub distinct_real_roots: usize,
    #[serde(rename = "real_rooted")]
    pub is_real_rooted: bool,
    #[serde(rename = "intervals")]
    pub isolating_intervals: Vec<Interval>,
}

/// Certify whether `p` is real-rooted; errors only on the zero polynomial.
pub fn certify_real_rooted(p: &Polynomial) -> Result<RootCertificate> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Ok(RootCertificate {
            degree: 0,
            squarefree_degree: 0,
            distinct_real_roots: 0,
            is_real_rooted: true,
            isolating_intervals: Vec::new(),
        }),
        Some(degree) => {
            let squarefree = p.squarefree_part()?;
            let squarefree_degree = squarefree
                .degree()
                .expect("square-free part of a nonconstant polynomial is nonconstant");
            let chain = SturmChain::new(&squarefree)?;
            let isolating_intervals = isolate_squarefree(&chain);
            let distinct_real_roots = isolating_intervals.len();
            Ok(RootCertificate {
                degree,
                squarefree_degree,
                distinct_real_roots,
                is_real_rooted: distinct_real_roots == squarefree_degree,
                isolating_intervals,
            })
        }
    }
}

/// Disjoint open intervals, in ascending order, each holding exactly one
/// distinct real root of `p`, together covering all of them.
pub fn isolate_roots(p: &Polynomial) -> Result<Vec<Interval>> {
    certify_real_rooted(p).map(|c| c.isolating_intervals)
}

/// Isolate every real root of the chain's (square-free) head polynomial.
///
/// The search window is found by doubling `W` until the variation counts at
/// `±W` match the limit counts at `∓∞` — a power-of-two window keeps all the
/// bisection midpoints dyadic and small, which matters once coefficient ratios
/// (and hence the Cauchy bound) get large.
fn isolate_squarefree(chain: &SturmChain) -> Vec<Interval> {
    let total = chain.count_whole_line();
    if total == 0 {
        return Vec::new();
    }
    let two = Rational::from_integer(BigInt::from(2));
    let v_neg = chain.sign_variations_at_infinity(Infinity::Negative);
    let v_pos = chain.sign_variations_at_infinity(Infinity::Positive);
    let mut w = Rational::one();
    let (lo, v_lo, hi, v_hi) = loop {
        let (lo, hi) = (-w.clone(), w.clone());
        if !chain.head_is_root(&lo) && !chain.head_is_root(&hi) {
            let v_lo = chain.sign_variations_at(&lo).expect("not a root");
            let v_hi = chain.sign_variations_at(&hi).expect("not a root");
            if v_lo == v_neg && v_hi == v_pos {
                break (lo, v_lo, hi, v_hi);
            }
        }
        w *= &two;
    };
    let mut intervals = Vec::with_capacity(total);
    bisect(chain, lo, v_lo, hi, v_hi, &mut intervals);
    debug_assert_eq!(intervals.len(), total);
    intervals
}

/// Split `(lo, hi)` until every piece holds exactly one root. Endpoints are
/// always non-roots with their variation counts already known, so each level
/// costs one midpoint query. A midpoint that lands exactly on a root is
/// handled by carving out `(m-ε, m+ε)` with ε halved until that window
/// isolates the midpoint root alone.
fn bisect(
    chain: &SturmChain,
    lo: Rational,
    v_lo: usize,
    hi: Rational,
    v_hi: usize,
    out: &mut Vec<Interval>,
) {
    let count = v_lo
        .checked_sub(v_hi)
        .expect("sign variations never increase left to right");
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(Interval::new(lo, hi).expect("bisection keeps lo < hi"));
        return;
    }
    let two = Rational::from_integer(BigInt::from(2));
    let mid = (&lo + &hi) / &two;
    if chain.head_is_root(&mid) {
        let mut eps = (&hi - &lo) / Rational::from_integer(BigInt::from(4));
        loop {
            let a = &mid - &eps;
            let b = &mid + &eps;
            if !chain.head_is_root(&a) && !chain.head_is_root(&b) {
                let v_a = chain.sign_variations_at(&a).expect("not a root");
                let v_b = chain.sign_variations_at(&b).expect("not a root");
                if v_a - v_b == 1 {
                    bisect(chain, lo, v_lo, a.clone(), v_a, out);
                    out.push(Interval::new(a, b.clone()).expect("ε-window is nonempty"));
                    bisect(chain, b, v_b, hi, v_hi, out);
                    return;
                }
            }
            eps /= &two;
        }
    }
    let v_mid = chain.sign_variations_at(&mid).expect("not a root");
    bisect(chain, lo, v_lo, mid.clone(), v_mid, out);
    bisect(chain, mid, v_mid, hi, v_hi, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::sturm::{count_real_roots, Window};
    use crate::transform::laguerre_sum;
    use num_traits::Zero;

    fn ipoly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    fn assert_sound_isolation(p: &Polynomial, intervals: &[Interval]) {
        for pair in intervals.windows(2) {
            assert!(
                pair[0].hi() <= pair[1].lo(),
                "intervals out of order or overlapping: {pair:?}"
            );
        }
        for iv in intervals {
            assert_eq!(
                count_real_roots(p, &Window::Interval(iv.clone())).unwrap(),
                1,
                "interval {iv:?} does not hold exactly one root"
            );
        }
    }

    #[test]
    fn certifies_laguerre_two() {
        // roots are 2 ± √2
        let cert = certify_real_rooted(&laguerre_sum(2)).unwrap();
        assert!(cert.is_real_rooted);
        assert_eq!(cert.degree, 2);
        assert_eq!(cert.squarefree_degree, 2);
        assert_eq!(cert.distinct_real_roots, 2);
        assert_sound_isolation(&laguerre_sum(2), &cert.isolating_intervals);
    }

    #[test]
    fn rejects_x_squared_plus_one() {
        let cert = certify_real_rooted(&ipoly(&[1, 0, 1])).unwrap();
        assert!(!cert.is_real_rooted);
        assert_eq!(cert.distinct_real_roots, 0);
        assert!(cert.isolating_intervals.is_empty());
    }

    #[test]
    fn repeated_root_collapses_to_squarefree_count() {
        let cert = certify_real_rooted(&ipoly(&[1, -2, 1])).unwrap();
        assert!(cert.is_real_rooted);
        assert_eq!(cert.degree, 2);
        assert_eq!(cert.squarefree_degree, 1);
        assert_eq!(cert.distinct_real_roots, 1);
    }

    #[test]
    fn mixed_factors_fail_certification() {
        // (x-1)^2 (x^2+1): only one distinct real root out of squarefree degree 3
        let p = ipoly(&[1, -2, 1]) * ipoly(&[1, 0, 1]);
        let cert = certify_real_rooted(&p).unwrap();
        assert!(!cert.is_real_rooted);
        assert_eq!(cert.degree, 4);
        assert_eq!(cert.squarefree_degree, 3);
        assert_eq!(cert.distinct_real_roots, 1);
    }

    #[test]
    fn constants_are_vacuously_real_rooted() {
        let cert = certify_real_rooted(&ipoly(&[5])).unwrap();
        assert!(cert.is_real_rooted);
        assert_eq!(cert.degree, 0);
        assert_eq!(cert.distinct_real_roots, 0);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(
            certify_real_rooted(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(isolate_roots(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn isolates_two_known_roots() {
        let p = ipoly(&[2, -3, 1]);
        let intervals = isolate_roots(&p).unwrap();
        assert_eq!(intervals.len(), 2);
        assert!(intervals[0].contains(&rat_int(1)));
        assert!(intervals[1].contains(&rat_int(2)));
        assert_sound_isolation(&p, &intervals);
    }

    #[test]
    fn isolates_nothing_for_definite_quadratic() {
        assert!(isolate_roots(&ipoly(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn isolates_origin_for_x() {
        let intervals = isolate_roots(&Polynomial::x()).unwrap();
        assert_eq!(intervals.len(), 1);
        assert!(intervals[0].contains(&rat_int(0)));
    }

    #[test]
    fn midpoint_root_gets_an_epsilon_window() {
        // roots -1, 0, 1: the first bisection midpoint is the root 0
        let p = ipoly(&[0, -1, 0, 1]);
        let intervals = isolate_roots(&p).unwrap();
        assert_eq!(intervals.len(), 3);
        assert!(intervals[0].contains(&rat_int(-1)));
        assert!(intervals[1].contains(&rat_int(0)));
        assert!(intervals[2].contains(&rat_int(1)));
        assert_sound_isolation(&p, &intervals);
    }

    #[test]
    fn isolation_sees_through_multiplicity() {
        let p = ipoly(&[0, 0, 0, 1]); // x^3
        let intervals = isolate_roots(&p).unwrap();
        assert_eq!(intervals.len(), 1);
        assert!(intervals[0].contains(&rat_int(0)));
    }

    #[test]
    fn isolation_intervals_show_a_sign_change() {
        // simple roots of the square-free part flip the sign across the interval
        let p = ipoly(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        for iv in isolate_roots(&p).unwrap() {
            let product = p.eval(iv.lo()) * p.eval(iv.hi());
            assert!(product < Rational::zero());
        }
    }

    #[test]
    fn spread_out_roots_are_isolated() {
        let roots: Vec<_> = [-20, -7, 0, 3, 19].iter().map(|&r| rat_int(r)).collect();
        let p = Polynomial::from_roots(&roots);
        let intervals = isolate_roots(&p).unwrap();
        assert_eq!(intervals.len(), roots.len());
        for (iv, r) in intervals.iter().zip(&roots) {
            assert!(iv.contains(r), "{iv:?} should contain {r}");
        }
        assert_sound_isolation(&p, &intervals);
    }

    #[test]
    fn close_rational_roots_are_separated() {
        let roots = [rat(1, 3), rat(3, 8), rat(2, 5)]; // within 1/15 of each other
        let p = Polynomial::from_roots(&roots);
        let intervals = isolate_roots(&p).unwrap();
        assert_eq!(intervals.len(), 3);
        for (iv, r) in intervals.iter().zip(&roots) {
            assert!(iv.contains(r), "{iv:?} should contain {r}");
        }
        assert_sound_isolation(&p, &intervals);
    }

    #[test]
    fn certificate_json_shape() {
        let cert = certify_real_rooted(&ipoly(&[1, 0, 1])).unwrap();
        assert_eq!(
            serde_json::to_string(&cert).unwrap(),
            r#"{"degree":2,"squarefree_degree":2,"distinct_real_roots":0,"real_rooted":false,"intervals":[]}"#
        );

        let cert = certify_real_rooted(&Polynomial::x()).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: RootCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
