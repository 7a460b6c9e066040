//! Exact-arithmetic toolkit for congruent numbers.
//!
//! Everything here is exact: integers are `u128` or arbitrary-precision,
//! fractions are reduced `BigInt` ratios, and no floating point appears
//! anywhere. The crate splits into:
//!
//! - [`factor`]: factorization, squarefree tests, and the square-part map
//! - [`triples`]: Euclid's parametrization of primitive Pythagorean triples
//! - [`rational`]: exact rational right triangles and their classification
//! - [`generators`]: congruent-number candidates by square-divisor redistribution
//! - [`diophantine`]: bounded searches for quartic equations `ax⁴+by⁴=z²`
//! - [`oracle`]: semi-decision certification that a number is congruent
//! - [`audit`]: a registry of executable bounded checks with structured reports
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod audit;
pub mod diophantine;
pub mod error;
pub mod factor;
pub mod generators;
pub mod oracle;
pub mod rational;
pub mod triples;

pub use error::{Error, Result};
pub use factor::Factorization;
pub use generators::CongruentWitness;
pub use oracle::Certificate;
pub use rational::{CongruenceClass, Rational, RationalTriangle};
pub use triples::PrimitiveTriple;
