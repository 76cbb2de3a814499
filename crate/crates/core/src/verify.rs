//! Exact verification sweeps over sampled points, plus the deterministic
//! sample generator feeding them.
//!
//! A covering is checked by data, never by tolerance: equivariance of the
//! lifted map with the deck actions, preimage counts and distinctness with
//! the map-back identity, and fiber degree one off the central fiber. Any
//! violated identity becomes a counted failure with the offending point
//! attached, so corrupted specs produce evidence rather than panics.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::covering::{CoverSpec, UCPoint};
use crate::exact::Rational;

/// Which identity a failing sample violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Equivariance,
    PreimageCount,
    FiberDegree,
}

/// One failing sample: the identity it broke, the point, and what went wrong.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailureDetail {
    pub check: CheckKind,
    pub point: UCPoint,
    pub message: String,
}

/// Only this many failing inputs are retained in a report; the counts always
/// cover everything.
const DETAIL_CAP: usize = 25;

/// Tally of a verification sweep. A covering passes when every failure count
/// is zero; `details` keeps the first [`DETAIL_CAP`] failing inputs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub samples_checked: u64,
    pub equivariance_failures: u64,
    pub preimage_count_failures: u64,
    pub fiber_degree_failures: u64,
    pub details: Vec<FailureDetail>,
}

impl VerificationReport {
    fn empty() -> Self {
        VerificationReport {
            samples_checked: 0,
            equivariance_failures: 0,
            preimage_count_failures: 0,
            fiber_degree_failures: 0,
            details: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.equivariance_failures == 0
            && self.preimage_count_failures == 0
            && self.fiber_degree_failures == 0
    }

    fn merge(mut self, other: VerificationReport) -> Self {
        self.samples_checked += other.samples_checked;
        self.equivariance_failures += other.equivariance_failures;
        self.preimage_count_failures += other.preimage_count_failures;
        self.fiber_degree_failures += other.fiber_degree_failures;
        self.details.extend(other.details);
        self.details.truncate(DETAIL_CAP);
        self
    }

    fn fail(&mut self, check: CheckKind, point: &UCPoint, message: String) {
        match check {
            CheckKind::Equivariance => self.equivariance_failures += 1,
            CheckKind::PreimageCount => self.preimage_count_failures += 1,
            CheckKind::FiberDegree => self.fiber_degree_failures += 1,
        }
        if self.details.len() < DETAIL_CAP {
            self.details.push(FailureDetail {
                check,
                point: point.clone(),
                message,
            });
        }
    }
}

impl CoverSpec {
    /// Checks the equivariance identity f̃∘τ₁ = τ₂^{t_mult}∘f̃ at each sample,
    /// by exact comparison of both sides.
    pub fn verify_equivariance(&self, samples: &[UCPoint]) -> VerificationReport {
        self.run_checks(samples, false)
    }

    /// Full verification at each sample: equivariance, preimage counts with
    /// distinctness and map-back, and fiber degree one off the central fiber.
    pub fn verify(&self, samples: &[UCPoint]) -> VerificationReport {
        self.run_checks(samples, true)
    }

    fn run_checks(&self, samples: &[UCPoint], full: bool) -> VerificationReport {
        samples
            .par_iter()
            .map(|p| self.check_sample(p, full))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(VerificationReport::empty(), VerificationReport::merge)
    }

    fn check_sample(&self, p: &UCPoint, full: bool) -> VerificationReport {
        let mut report = VerificationReport::empty();
        report.samples_checked = 1;
        let d1 = self.deck1();
        let d2 = self.deck2();

        let lhs = self.lifted_apply(&d1.apply(p, &BigInt::one()));
        let rhs = d2.apply(&self.lifted_apply(p), self.t_mult());
        if lhs != rhs {
            report.fail(
                CheckKind::Equivariance,
                p,
                format!("lifted map after one source deck step gives {lhs:?}, target deck power after lifted map gives {rhs:?}"),
            );
        }
        if !full {
            return report;
        }

        let y = d2.canonical_rep(p);
        let pre = self.preimages(&y);
        let expected = if p.r().is_zero() {
            self.t_mult().clone()
        } else {
            self.k().clone()
        };
        if BigInt::from(pre.len()) != expected {
            report.fail(
                CheckKind::PreimageCount,
                p,
                format!("expected {expected} preimages, found {}", pre.len()),
            );
        } else {
            let distinct: HashSet<&UCPoint> = pre.iter().map(|x| x.rep()).collect();
            if distinct.len() != pre.len() {
                report.fail(
                    CheckKind::PreimageCount,
                    p,
                    "preimages are not pairwise distinct".into(),
                );
            } else if let Some(stray) = pre
                .iter()
                .find(|x| self.quotient_map_apply(x).rep() != y.rep())
            {
                report.fail(
                    CheckKind::PreimageCount,
                    p,
                    format!("preimage {:?} does not map back to the target", stray.rep()),
                );
            }
        }

        if !p.r().is_zero() {
            match self.fiber_degree(&d1.canonical_rep(p)) {
                Ok(deg) if deg.is_one() => {}
                Ok(deg) => report.fail(
                    CheckKind::FiberDegree,
                    p,
                    format!("fiber degree is {deg}, not 1"),
                ),
                Err(err) => report.fail(CheckKind::FiberDegree, p, err.to_string()),
            }
        }
        report
    }
}

/// Deterministic pseudo-random test points: r ∈ (0, 1], θ ∈ [0, 1),
/// t ∈ [−3, 3], every coordinate a rational with denominator at most
/// `denominator_bound`.
///
/// The first point always sits on the boundary (r = 1) and the second, when
/// present, on the central fiber (r = 0), so each batch exercises both
/// strata. Identical arguments yield identical lists.
pub fn sample_points(seed: u64, count: usize, denominator_bound: u64) -> Vec<UCPoint> {
    assert!(count >= 1, "count must be at least 1");
    assert!(denominator_bound >= 2, "denominator bound must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let r = match i {
                0 => Rational::one(),
                1 => Rational::zero(),
                _ => {
                    // r in (0, 1]
                    let d = rng.gen_range(2..=denominator_bound);
                    let n = rng.gen_range(1..=d);
                    Rational::new(n, d).expect("denominator is positive")
                }
            };
            // theta in [0, 1)
            let d = rng.gen_range(2..=denominator_bound);
            let n = rng.gen_range(0..d);
            let theta = Rational::new(n, d).expect("denominator is positive");
            // t in [-3, 3]
            let d = rng.gen_range(1..=denominator_bound) as i128;
            let n = rng.gen_range(-3 * d..=3 * d);
            let t = Rational::new(n, d).expect("denominator is positive");
            UCPoint::new(r, theta, t).expect("sampled coordinates are in range")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::BezoutPair;
    use crate::homology::SeifertInvariant;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn inv(a: i64, b: i64) -> SeifertInvariant {
        SeifertInvariant::new(a, b).unwrap()
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let a = sample_points(0, 100, 10);
        let b = sample_points(0, 100, 10);
        assert_eq!(a, b);
        let c = sample_points(1, 100, 10);
        assert_ne!(a, c);
        assert_eq!(sample_points(0, 1, 10).len(), 1);
    }

    #[test]
    fn sampled_points_respect_all_bounds() {
        let pts = sample_points(7, 300, 12);
        assert_eq!(pts[0].r(), &Rational::one());
        assert!(pts[1].r().is_zero());
        let three = Rational::from_integer(3);
        for p in &pts {
            assert!(!p.r().is_negative() && p.r() <= &Rational::one());
            assert!(!p.theta().value().is_negative() && p.theta().value() < &Rational::one());
            assert!(p.t() >= &(-&three) && p.t() <= &three);
            for den in [p.r().denom(), p.theta().value().denom(), p.t().denom()] {
                assert!(den <= &int(12));
            }
        }
        assert!(pts[2..].iter().all(|p| p.r() > &Rational::zero()));
    }

    #[test]
    fn valid_specs_verify_cleanly() {
        let samples = sample_points(0, 200, 50);
        for spec in [
            CoverSpec::build(&inv(2, 3), &inv(2, 1), &int(3)).unwrap(),
            CoverSpec::build(&inv(2, 3), &inv(4, 3), &int(2)).unwrap(),
            CoverSpec::build(&inv(1, 0), &inv(1, 0), &int(5)).unwrap(),
            CoverSpec::build(&inv(3, -2), &inv(3, -1), &int(2)).unwrap(),
        ] {
            let report = spec.verify(&samples);
            assert!(report.passed(), "{spec:?}: {report:?}");
            assert_eq!(report.samples_checked, 200);
            assert!(report.details.is_empty());
        }
    }

    #[test]
    fn corrupted_multiplier_fails_at_every_generic_sample() {
        let good = CoverSpec::build(&inv(2, 3), &inv(2, 1), &int(3)).unwrap();
        let bad = CoverSpec::new_unchecked(
            good.k().clone(),
            good.inv1().clone(),
            good.inv2().clone(),
            good.bez1().clone(),
            good.bez2().clone(),
            good.theta_mult() + 1,
            good.t_mult().clone(),
        );
        let samples = sample_points(0, 120, 40);
        let generic = samples.iter().filter(|p| !p.r().is_zero()).count() as u64;
        let report = bad.verify_equivariance(&samples);
        assert!(!report.passed());
        // The corrupted angle multiplier shifts one side by alpha1'/alpha1,
        // which is never an integer here, so every r > 0 sample fails.
        assert_eq!(report.equivariance_failures, generic);
        assert_eq!(report.details.len(), DETAIL_CAP);

        let full = bad.verify(&samples);
        assert!(full.preimage_count_failures > 0);
    }

    #[test]
    fn corrupted_bezout_pair_is_caught_as_data() {
        let good = CoverSpec::build(&inv(2, 3), &inv(4, 3), &int(2)).unwrap();
        let bad = CoverSpec::new_unchecked(
            good.k().clone(),
            good.inv1().clone(),
            good.inv2().clone(),
            good.bez1().clone(),
            BezoutPair::new(2, 1),
            good.theta_mult().clone(),
            good.t_mult().clone(),
        );
        assert!(bad.validate().is_err());
        let report = bad.verify_equivariance(&sample_points(3, 80, 30));
        assert!(report.equivariance_failures > 0);
    }

    #[test]
    fn report_serializes_with_counts_and_details() {
        let spec = CoverSpec::build(&inv(2, 3), &inv(2, 1), &int(3)).unwrap();
        let report = spec.verify(&sample_points(0, 10, 10));
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["samples_checked"], 10);
        assert_eq!(value["equivariance_failures"], 0);
        assert!(value["details"].as_array().unwrap().is_empty());
    }
}
