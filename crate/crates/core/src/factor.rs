//! Exact integer arithmetic: factorization, gcd, squarefree testing, the
//! squarefree indicator, and the square-part map.
//!
//! Operations are generic over the integer type so the same code runs on
//! `u64`/`u128` for bulk scans and on `BigUint` when values outgrow them.

use alloc::vec::Vec;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};

/// Integer types the factorization routines work over.
pub trait UInt: Integer + Roots + Clone + From<u32> + core::fmt::Debug + core::fmt::Display {}
impl<T> UInt for T where T: Integer + Roots + Clone + From<u32> + core::fmt::Debug + core::fmt::Display
{}

/// Canonical prime factorization of a positive integer.
///
/// Primes are strictly increasing, every exponent is at least 1, and the
/// product of `prime^exponent` recomposes `value` exactly. `value = 1` has
/// an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<T: UInt> {
    pub value: T,
    pub factors: Vec<(T, u32)>,
}

impl<T: UInt> Factorization<T> {
    /// Multiplies the factorization back together.
    pub fn recompose(&self) -> T {
        let mut out = T::one();
        for (p, e) in &self.factors {
            for _ in 0..*e {
                out = out * p.clone();
            }
        }
        out
    }
}

/// Deterministic trial division up to `√n`.
pub fn factorize<T: UInt>(n: &T) -> Result<Factorization<T>> {
    if n.is_zero() {
        return Err(Error::Domain("factorize requires n >= 1"));
    }
    let mut rest = n.clone();
    let mut factors = Vec::new();
    let two = T::from(2u32);
    let mut d = two.clone();
    while d.clone() * d.clone() <= rest {
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&d);
            if r.is_zero() {
                rest = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d = if d == two {
            T::from(3u32)
        } else {
            d + two.clone()
        };
    }
    if rest > T::one() {
        factors.push((rest, 1));
    }
    Ok(Factorization {
        value: n.clone(),
        factors,
    })
}

/// Greatest common divisor on signed inputs; `gcd(0, 0) = 0`.
pub fn gcd(a: i128, b: i128) -> u128 {
    a.unsigned_abs().gcd(&b.unsigned_abs())
}

/// True iff no prime square divides `n`.
pub fn is_squarefree<T: UInt>(n: &T) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::Domain("is_squarefree requires n >= 1"));
    }
    Ok(factorize(n)?.factors.iter().all(|(_, e)| *e == 1))
}

/// The squarefree indicator: 1 if `n` is squarefree, 0 otherwise.
///
/// This is deliberately NOT the classical Möbius function (which takes
/// values in {-1, 0, 1}); the name keeps the two from being confused.
pub fn mobius_indicator<T: UInt>(n: &T) -> Result<u8> {
    Ok(if is_squarefree(n)? { 1 } else { 0 })
}

/// The largest `d` with `d² | n`, i.e. `∏ p^⌊e/2⌋` over the factorization.
///
/// `square_part(n) = 1` exactly when `n` is squarefree, and
/// `n / square_part(n)²` is always squarefree.
pub fn square_part<T: UInt>(n: &T) -> Result<T> {
    if n.is_zero() {
        return Err(Error::Domain("square_part requires n >= 1"));
    }
    let f = factorize(n)?;
    let mut out = T::one();
    for (p, e) in &f.factors {
        for _ in 0..(e / 2) {
            out = out * p.clone();
        }
    }
    Ok(out)
}

/// All `d ≥ 1` with `d² | n`, in increasing order.
///
/// These are exactly the divisors of `square_part(n)`.
pub fn square_divisors<T: UInt>(n: &T) -> Result<Vec<T>> {
    let sp = square_part(n)?;
    let f = factorize(&sp)?;
    let mut divisors = alloc::vec![T::one()];
    for (p, e) in &f.factors {
        let base = divisors.clone();
        let mut power = T::one();
        for _ in 0..*e {
            power = power * p.clone();
            for d in &base {
                divisors.push(d.clone() * power.clone());
            }
        }
    }
    divisors.sort();
    Ok(divisors)
}

/// Deterministic primality by trial division; fine at desk scale.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d: u128 = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Floor square root with an exactness flag.
pub fn sqrt_exact(n: u128) -> (u128, bool) {
    let s = n.sqrt();
    (s, s * s == n)
}

/// True iff `n` is a perfect square.
pub fn is_perfect_square(n: u128) -> bool {
    sqrt_exact(n).1
}
