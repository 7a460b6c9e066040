//! Semi-decision certification that an integer is congruent.
//!
//! A bounded scan over Euclid seeds looks for `improper_area(m,n) =
//! target · k²`; a hit gives an explicit witness triangle, a miss only
//! means "unknown up to bound". This is the independent ground truth the
//! generator and audit modules are checked against.

use alloc::vec::Vec;

use crate::error::Result;
use crate::factor::sqrt_exact;
use crate::generators::improper_area;
use crate::rational::RationalTriangle;
use crate::triples::{check_seed, euclid_triple};

/// An exact witness that `value` is congruent: the seed triple scaled by
/// `1/k` has area `value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub value: u128,
    pub seed_m: u128,
    pub seed_n: u128,
    pub scale_k: u128,
    pub triangle: RationalTriangle,
}

/// Outcome of a bounded certification scan. Never "not congruent".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    Certified(Certificate),
    UnknownUpToBound { max_m: u128 },
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CertifyOutcome::Certified(c) => Some(c),
            CertifyOutcome::UnknownUpToBound { .. } => None,
        }
    }
}

/// Scans seeds with `m <= max_m` in ascending `(m, n)` order and returns
/// the first certificate found, if any.
pub fn certify(target: u128, max_m: u128) -> Result<CertifyOutcome> {
    for m in 2..=max_m {
        for n in 1..m {
            if check_seed(m, n).is_err() {
                continue;
            }
            let area = improper_area(m, n)?;
            if area % target != 0 {
                continue;
            }
            let (k, exact) = sqrt_exact(area / target);
            if !exact {
                continue;
            }
            let triple = euclid_triple(m, n)?;
            let triangle = RationalTriangle::from_scaled_triple(&triple, k)?;
            debug_assert_eq!(
                triangle.area(),
                crate::rational::Rational::from_u128(target)
            );
            return Ok(CertifyOutcome::Certified(Certificate {
                value: target,
                seed_m: m,
                seed_n: n,
                scale_k: k,
                triangle,
            }));
        }
    }
    Ok(CertifyOutcome::UnknownUpToBound { max_m })
}

/// Per-power outcome of the powers-of-two scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOfTwoOutcome {
    pub power: u32,
    pub target: u128,
    pub outcome: CertifyOutcome,
}

/// Runs `certify(2^j, max_m)` for `j = 1..=max_power`.
///
/// A certificate for any power would refute the conjecture that powers of
/// two are never congruent; none appearing means "consistent up to bound".
pub fn audit_conjecture31(max_power: u32, max_m: u128) -> Result<Vec<PowerOfTwoOutcome>> {
    let mut out = Vec::new();
    for j in 1..=max_power {
        let target = 1u128 << j;
        out.push(PowerOfTwoOutcome {
            power: j,
            target,
            outcome: certify(target, max_m)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{triangle_from_strs, Rational};

    #[test]
    fn certify_six() {
        let c = certify(6, 10).unwrap();
        let cert = c.certificate().expect("6 is congruent");
        assert_eq!((cert.seed_m, cert.seed_n, cert.scale_k), (2, 1, 1));
        assert_eq!(cert.triangle, triangle_from_strs("3", "4", "5").unwrap());
    }

    #[test]
    fn certify_five_finds_fibonacci_triangle() {
        let c = certify(5, 10).unwrap();
        let cert = c.certificate().expect("5 is congruent");
        assert_eq!((cert.seed_m, cert.seed_n, cert.scale_k), (5, 4, 6));
        assert_eq!(
            cert.triangle,
            triangle_from_strs("3/2", "20/3", "41/6").unwrap()
        );
        assert_eq!(cert.triangle.area(), Rational::from_u128(5));
    }

    #[test]
    fn certify_seven() {
        let c = certify(7, 20).unwrap();
        let cert = c.certificate().expect("7 is congruent");
        assert_eq!((cert.seed_m, cert.seed_n, cert.scale_k), (16, 9, 60));
        assert_eq!(cert.triangle.area(), Rational::from_u128(7));
    }

    #[test]
    fn certify_unknown_stays_unknown() {
        // 1 is famously non-congruent; the scan can only say "unknown"
        assert_eq!(
            certify(1, 30).unwrap(),
            CertifyOutcome::UnknownUpToBound { max_m: 30 }
        );
    }

    #[test]
    fn conjecture_scan_shapes() {
        let report = audit_conjecture31(1, 50).unwrap();
        assert_eq!(report.len(), 1);
        assert_eq!(report[0].target, 2);
        assert!(report[0].outcome.certificate().is_none());

        assert!(audit_conjecture31(0, 50).unwrap().is_empty());

        let report = audit_conjecture31(5, 200).unwrap();
        assert_eq!(report.len(), 5);
        assert!(report.iter().all(|r| r.outcome.certificate().is_none()));
    }

    #[test]
    fn generator_values_are_certifiable() {
        use crate::generators::distinct_values_from_seed;
        use crate::triples::check_seed;
        for m in 2u128..=12 {
            for n in 1..m {
                if check_seed(m, n).is_err() {
                    continue;
                }
                for v in distinct_values_from_seed(m, n).unwrap() {
                    let outcome = certify(v, m).unwrap();
                    let cert = outcome.certificate().expect("generator value certifiable");
                    assert_eq!(cert.triangle.area(), Rational::from_u128(v));
                }
            }
        }
    }
}
