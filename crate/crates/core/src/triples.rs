//! Euclid's parametrization of primitive Pythagorean triples.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A primitive Pythagorean triple together with its Euclid seed.
///
/// Legs keep their parametrized roles: `a = m² - n²` (odd leg),
/// `b = 2mn` (even leg), `c = m² + n²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimitiveTriple {
    pub m: u128,
    pub n: u128,
    pub a: u128,
    pub b: u128,
    pub c: u128,
}

/// Checks that `(m, n)` is a valid Euclid seed.
pub fn check_seed(m: u128, n: u128) -> Result<()> {
    if n < 1 || m <= n {
        return Err(Error::InvalidSeed {
            m,
            n,
            reason: "requires m > n >= 1",
        });
    }
    if m.gcd(&n) != 1 {
        return Err(Error::InvalidSeed {
            m,
            n,
            reason: "m and n must be coprime",
        });
    }
    if (m - n) % 2 == 0 {
        return Err(Error::InvalidSeed {
            m,
            n,
            reason: "m and n must have opposite parity",
        });
    }
    Ok(())
}

/// The primitive triple seeded by `(m, n)`.
pub fn euclid_triple(m: u128, n: u128) -> Result<PrimitiveTriple> {
    check_seed(m, n)?;
    Ok(PrimitiveTriple {
        m,
        n,
        a: m * m - n * n,
        b: 2 * m * n,
        c: m * m + n * n,
    })
}

/// `gcd(m - n, m + n)` for coprime `m > n`; always 1 or 2.
///
/// It is 1 whenever `m` and `n` have opposite parity, and whenever
/// `|m - n| = 1`.
pub fn sum_diff_gcd(m: u128, n: u128) -> Result<u128> {
    if n < 1 || m <= n {
        return Err(Error::InvalidSeed {
            m,
            n,
            reason: "requires m > n >= 1",
        });
    }
    if m.gcd(&n) != 1 {
        return Err(Error::InvalidSeed {
            m,
            n,
            reason: "m and n must be coprime",
        });
    }
    Ok((m - n).gcd(&(m + n)))
}

/// Every primitive triple with `c <= max_c`, each exactly once, in
/// ascending `(m, n)` order.
pub fn enumerate_triples(max_c: u128) -> TripleIter {
    TripleIter { max_c, m: 2, n: 0 }
}

pub struct TripleIter {
    max_c: u128,
    m: u128,
    n: u128,
}

impl Iterator for TripleIter {
    type Item = PrimitiveTriple;

    fn next(&mut self) -> Option<PrimitiveTriple> {
        loop {
            // smallest c for this m is m² + 1
            if self.m * self.m + 1 > self.max_c {
                return None;
            }
            self.n += 1;
            if self.n >= self.m {
                self.m += 1;
                self.n = 0;
                continue;
            }
            let (m, n) = (self.m, self.n);
            if check_seed(m, n).is_err() {
                continue;
            }
            if m * m + n * n > self.max_c {
                continue;
            }
            return Some(euclid_triple(m, n).expect("seed already validated"));
        }
    }
}
