//! Bounded exact searches for the quartic equation `ax⁴ + by⁴ = z²` and
//! its relatives, and congruent-number constructions from their solutions.
//!
//! Every search takes explicit bounds and an empty result means "no
//! solution within bounds", never "no solution".

use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::factor::{is_perfect_square, is_prime, sqrt_exact};
use crate::rational::{Rational, RationalTriangle};

/// An exact solution of `a·x⁴ + b·y⁴ = z²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarticSolution {
    pub a: u128,
    pub b: u128,
    pub x: u128,
    pub y: u128,
    pub z: u128,
}

impl QuarticSolution {
    pub fn verify(&self) -> bool {
        let x4 = self.x * self.x * self.x * self.x;
        let y4 = self.y * self.y * self.y * self.y;
        self.a * x4 + self.b * y4 == self.z * self.z
    }
}

/// All solutions with `1 <= x, y <= max_xy`, in `(x, y)` order.
pub fn search_quartic(a: u128, b: u128, max_xy: u128) -> Vec<QuarticSolution> {
    let mut out = Vec::new();
    for x in 1..=max_xy {
        let ax4 = a * x * x * x * x;
        for y in 1..=max_xy {
            let s = ax4 + b * y * y * y * y;
            let (z, exact) = sqrt_exact(s);
            if exact {
                out.push(QuarticSolution { a, b, x, y, z });
            }
        }
    }
    out
}

/// A pair `(a, b)` where the quartic has a bounded solution but `a + b`
/// is not a perfect square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareSumCounterexample {
    pub a: u128,
    pub b: u128,
    pub witness: QuarticSolution,
}

/// Scans coprime `1 < a, b <= max_ab` for counterexamples to the claim
/// that `ax⁴ + by⁴ = z²` is solvable only when `a + b` is a square.
pub fn audit_thm41(max_ab: u128, max_xy: u128) -> Vec<SquareSumCounterexample> {
    let mut out = Vec::new();
    for a in 2..=max_ab {
        for b in 2..=max_ab {
            if a.gcd(&b) != 1 {
                continue;
            }
            if is_perfect_square(a + b) {
                continue;
            }
            if let Some(&witness) = search_quartic(a, b, max_xy).first() {
                out.push(SquareSumCounterexample { a, b, witness });
            }
        }
    }
    out
}

/// Which of the two prime-criterion equations a solution satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeEquation {
    /// `x⁴ + 4p²y⁴ = z²` (the divisor-1 split of `2p`)
    XQuarticPlusFourPSquared,
    /// `4x⁴ + p²y⁴ = z²` (the divisor-2 split of `2p`)
    FourXQuarticPlusPSquared,
}

impl core::fmt::Display for PrimeEquation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            PrimeEquation::XQuarticPlusFourPSquared => "x4+4p2y4",
            PrimeEquation::FourXQuarticPlusPSquared => "4x4+p2y4",
        })
    }
}

/// Searches `x⁴ + 4p²y⁴ = z²` then `4x⁴ + p²y⁴ = z²` within bounds.
///
/// On success the congruent value `½(dx/y)((2p/d)y/x)` is reconstructed in
/// exact rational arithmetic and checked to equal `p`.
pub fn prime_criterion_search(
    p: u128,
    max_xy: u128,
) -> Result<Option<(PrimeEquation, QuarticSolution, u128)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let equations = [
        (PrimeEquation::XQuarticPlusFourPSquared, 1, 4 * p * p, 1u128),
        (PrimeEquation::FourXQuarticPlusPSquared, 4, p * p, 2u128),
    ];
    for (tag, a, b, d) in equations {
        if let Some(&sol) = search_quartic(a, b, max_xy).first() {
            // value = ½ · (d·x / y) · ((2p/d)·y / x)
            let leg1 = &Rational::from_u128(d * sol.x) / &Rational::from_u128(sol.y);
            let leg2 = &Rational::from_u128((2 * p / d) * sol.y) / &Rational::from_u128(sol.x);
            let value = (&leg1 * &leg2).half();
            if value != Rational::from_u128(p) {
                return Err(Error::Contract("reconstructed congruent value is not p"));
            }
            return Ok(Some((tag, sol, p)));
        }
    }
    Ok(None)
}

/// Finds `(k, l)` with `k² - 64p² = l²` and `l > 1`, by factoring
/// `64p² = (k-l)(k+l)` over complementary even divisor pairs. Exhaustive,
/// so `None` really means no solution. Returns the smallest `k`.
pub fn pell_like_search(p: u128) -> Result<Option<(u128, u128)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    // k - l = 2s, k + l = 2t with s·t = 16p²; k = s + t, l = t - s
    let target = 16 * p * p;
    let mut best: Option<(u128, u128)> = None;
    let mut s = 1;
    while s * s <= target {
        if target % s == 0 {
            let t = target / s;
            let (k, l) = (s + t, t - s);
            if l > 1 && best.map_or(true, |(bk, _)| k < bk) {
                best = Some((k, l));
            }
        }
        s += 1;
    }
    Ok(best)
}

/// Totals and violations from the unit-fraction scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitFractionReport {
    /// Coprime triples with `1/a + 1/b = 1/c` that were checked.
    pub checked: u64,
    /// Triples whose `a + b` is not a perfect square.
    pub violations: Vec<(u128, u128, u128)>,
}

/// For all `1 <= a, b <= max_abc` with `1/a + 1/b = 1/c` exact,
/// `c <= max_abc`, and `gcd(a,b,c) = 1`: checks `a + b` is a perfect square.
pub fn unit_fraction_audit(max_abc: u128) -> UnitFractionReport {
    let mut report = UnitFractionReport {
        checked: 0,
        violations: Vec::new(),
    };
    for a in 1..=max_abc {
        for b in 1..=max_abc {
            // 1/a + 1/b = 1/c  ⟺  c = ab/(a+b)
            let (c, rem) = (a * b).div_rem(&(a + b));
            if rem != 0 || c > max_abc || a.gcd(&b).gcd(&c) != 1 {
                continue;
            }
            report.checked += 1;
            if !is_perfect_square(a + b) {
                report.violations.push((a, b, c));
            }
        }
    }
    report
}

/// From a solution of `x² + a²y⁴ = z²` with `a > 1`, builds the semi-proper
/// congruent number `n = ax/2` with witness triangle `(x/y, ay, z/y)`.
pub fn semi_proper_from_solution(a: u128, x: u128, y: u128, z: u128) -> Result<u128> {
    if x * x + a * a * y * y * y * y != z * z {
        return Err(Error::Contract("x² + a²y⁴ = z² does not hold"));
    }
    if a <= 1 {
        return Err(Error::Domain("requires a > 1"));
    }
    if (a * x) % 2 != 0 {
        return Err(Error::Domain("a·x must be even for an integer area"));
    }
    let n = a * x / 2;
    let yy = Rational::from_u128(y);
    let triangle = RationalTriangle::new(
        &Rational::from_u128(x) / &yy,
        Rational::from_u128(a * y),
        &Rational::from_u128(z) / &yy,
    )?;
    if triangle.area() != Rational::from_u128(n) {
        return Err(Error::Contract("witness triangle area does not equal n"));
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_unit_solution() {
        let sols = search_quartic(2, 7, 5);
        assert!(sols.contains(&QuarticSolution { a: 2, b: 7, x: 1, y: 1, z: 3 }));
        assert!(sols.iter().all(QuarticSolution::verify));
    }

    #[test]
    fn quartic_counterexample_solution() {
        // 2·2⁴ + 17·1⁴ = 49 = 7², yet 2 + 17 = 19 is not a square
        let sols = search_quartic(2, 17, 5);
        assert!(sols.contains(&QuarticSolution { a: 2, b: 17, x: 2, y: 1, z: 7 }));
    }

    #[test]
    fn quartic_for_prime_five() {
        // 1·3⁴ + 100·2⁴ = 1681 = 41²
        let sols = search_quartic(1, 100, 5);
        assert!(sols.contains(&QuarticSolution { a: 1, b: 100, x: 3, y: 2, z: 41 }));
    }

    #[test]
    fn thm41_counterexamples() {
        let found = audit_thm41(20, 5);
        assert!(found
            .iter()
            .any(|c| (c.a, c.b) == (2, 17)
                && c.witness == QuarticSolution { a: 2, b: 17, x: 2, y: 1, z: 7 }));

        // with x = y = 1 the equation IS a + b = z², so nothing can refute it
        assert!(audit_thm41(5, 1).is_empty());

        let wide = audit_thm41(50, 10);
        assert!(!wide.is_empty());
        assert!(wide.iter().all(|c| c.witness.verify()
            && !is_perfect_square(c.a + c.b)));
    }

    #[test]
    fn prime_criterion_five() {
        let (tag, sol, value) = prime_criterion_search(5, 10).unwrap().unwrap();
        assert_eq!(tag, PrimeEquation::XQuarticPlusFourPSquared);
        assert_eq!((sol.x, sol.y, sol.z), (3, 2, 41));
        assert_eq!(value, 5);
    }

    #[test]
    fn prime_criterion_rejects_composite() {
        assert!(matches!(prime_criterion_search(6, 5), Err(Error::NotPrime(6))));
    }

    #[test]
    fn prime_criterion_unknown_for_two() {
        assert_eq!(prime_criterion_search(2, 5).unwrap(), None);
    }

    #[test]
    fn pell_like_cases() {
        assert_eq!(pell_like_search(5).unwrap(), Some((41, 9)));
        // smallest k for 64·9: (18)(32) halves to s=9, t=16
        assert_eq!(pell_like_search(3).unwrap(), Some((25, 7)));
        assert_eq!(pell_like_search(2).unwrap(), Some((20, 12)));
        assert!(pell_like_search(4).is_err());
        for p in [2u128, 3, 5, 7, 11, 13] {
            let (k, l) = pell_like_search(p).unwrap().unwrap();
            assert_eq!(k * k - 64 * p * p, l * l);
            assert!(l > 1);
        }
    }

    #[test]
    fn unit_fraction_instances() {
        let report = unit_fraction_audit(12);
        assert!(report.checked > 0);
        assert!(report.violations.is_empty());
        // hand-checkable instances: (3,6,2) and (4,12,3)
        let small = unit_fraction_audit(12);
        assert_eq!(small.violations, alloc::vec![]);
    }

    #[test]
    fn semi_proper_constructions() {
        // 21² + 20²·1⁴ = 29²
        assert_eq!(semi_proper_from_solution(20, 21, 1, 29).unwrap(), 210);
        // 8² + 6²·1⁴ = 10² (scaled (3,4,5))
        assert_eq!(semi_proper_from_solution(6, 8, 1, 10).unwrap(), 24);
        assert!(matches!(
            semi_proper_from_solution(1, 1, 1, 2),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            semi_proper_from_solution(3, 1, 1, 2),
            Err(Error::Contract(_))
        ));
    }
}
