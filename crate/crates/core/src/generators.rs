//! Congruent-number candidates from a primitive triple by square-divisor
//! redistribution.
//!
//! A seed `(m, n)` has improper area `A = mn(m-n)(m+n)`. Dividing the
//! triple's sides by `σ₁σ₂`, where `σ₁² | m²-n²` and `σ₂² | mn`, keeps the
//! area integral (the two factors of `A` are coprime) and yields the
//! candidate `A/(σ₁σ₂)²` with an explicit witness triangle.

use alloc::vec::Vec;

use crate::error::Result;
use crate::factor::{self, Factorization};
use crate::rational::{CongruenceClass, RationalTriangle};
use crate::triples::{check_seed, euclid_triple};

/// A congruent-number candidate with its generating parameters and the
/// exact witness triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruentWitness {
    pub value: u128,
    pub seed_m: u128,
    pub seed_n: u128,
    pub sigma1: u128,
    pub sigma2: u128,
    pub triangle: RationalTriangle,
    pub klass: CongruenceClass,
}

/// `m·n·(m-n)·(m+n)`: the area of the triple seeded by `(m, n)`.
///
/// Identical to `m³n - n³m`.
pub fn improper_area(m: u128, n: u128) -> Result<u128> {
    check_seed(m, n)?;
    Ok(m * n * (m - n) * (m + n))
}

/// All witnesses for the seed, over every `σ₁ ∈ square_divisors(m²-n²)` and
/// `σ₂ ∈ square_divisors(mn)`, in ascending `(σ₁, σ₂)` order.
pub fn candidates_from_seed(m: u128, n: u128) -> Result<Vec<CongruentWitness>> {
    let triple = euclid_triple(m, n)?;
    let area = improper_area(m, n)?;
    let sigma1s = factor::square_divisors(&triple.a)?;
    let sigma2s = factor::square_divisors(&(m * n))?;
    let mut out = Vec::with_capacity(sigma1s.len() * sigma2s.len());
    for &s1 in &sigma1s {
        for &s2 in &sigma2s {
            let scale = s1 * s2;
            debug_assert_eq!(area % (scale * scale), 0);
            let value = area / (scale * scale);
            let triangle = RationalTriangle::from_scaled_triple(&triple, scale)?;
            let klass = triangle.classify();
            debug_assert_eq!(triangle.area(), crate::rational::Rational::from_u128(value));
            out.push(CongruentWitness {
                value,
                seed_m: m,
                seed_n: n,
                sigma1: s1,
                sigma2: s2,
                triangle,
                klass,
            });
        }
    }
    Ok(out)
}

/// Sorted distinct witness values for the seed.
pub fn distinct_values_from_seed(m: u128, n: u128) -> Result<Vec<u128>> {
    let mut values: Vec<u128> = candidates_from_seed(m, n)?
        .into_iter()
        .map(|w| w.value)
        .collect();
    values.sort_unstable();
    values.dedup();
    Ok(values)
}

/// The claimed count `Σ ⌊(e_i + e_i')/2⌋` over index-paired exponent lists,
/// padded with zeros to equal length.
///
/// The pairing across different primes is one documented interpretation of
/// an ambiguous formula; this exists solely to be compared against the
/// enumeration counts by the audit registry, never to be trusted.
pub fn thm74_count(alpha: &Factorization<u128>, beta: &Factorization<u128>) -> u64 {
    let len = alpha.factors.len().max(beta.factors.len());
    let mut total = 0u64;
    for i in 0..len {
        let e = alpha.factors.get(i).map_or(0, |&(_, e)| e) as u64;
        let e_prime = beta.factors.get(i).map_or(0, |&(_, e)| e) as u64;
        total += (e + e_prime) / 2;
    }
    total
}
