//! Exact reduced fractions and rational right triangles.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::triples::PrimitiveTriple;

/// An exact fraction in lowest terms with a positive denominator.
///
/// Construction always reduces; the laws in this module (`f = bd`,
/// `e² = (da)² + (bc)²`) are only true for reduced forms, so canonical
/// form is enforced rather than assumed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<BigInt>);

impl Rational {
    /// Builds `num/den`, reduced. The denominator must be positive as given.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den <= BigInt::zero() {
            return Err(Error::InvalidRational(alloc::format!(
                "denominator must be positive, got {den}"
            )));
        }
        Ok(Rational(Ratio::new(num, den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(Ratio::from_integer(n.into()))
    }

    pub fn from_u128(n: u128) -> Self {
        Self::from_integer(BigInt::from(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }

    /// Halves the value exactly.
    pub fn half(&self) -> Rational {
        Rational(&self.0 / Ratio::from_integer(BigInt::from(2)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"num"` or `"num/den"` decimal strings.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |s: &str| Error::InvalidRational(s.to_string());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad(s))?;
                Ok(Rational::from_integer(n))
            }
            Some((num, den)) => {
                let n = BigInt::from_str(num.trim()).map_err(|_| bad(s))?;
                let d = BigInt::from_str(den.trim()).map_err(|_| bad(s))?;
                Rational::new(n, d)
            }
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

/// Three-way classification of a congruent-number triangle by its reduced
/// leg denominators: both integral, exactly one integral, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CongruenceClass {
    Improper,
    SemiProper,
    Proper,
}

impl fmt::Display for CongruenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CongruenceClass::Improper => "improper",
            CongruenceClass::SemiProper => "semi-proper",
            CongruenceClass::Proper => "proper",
        })
    }
}

/// A right triangle with exactly Pythagorean rational sides.
///
/// Legs are stored in ascending order; two triangles are equal iff their
/// exact side lists are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalTriangle {
    leg1: Rational,
    leg2: Rational,
    hyp: Rational,
}

impl RationalTriangle {
    /// Validates positivity and `leg1² + leg2² = hyp²` in exact arithmetic.
    pub fn new(leg1: Rational, leg2: Rational, hyp: Rational) -> Result<Self> {
        if !leg1.is_positive() || !leg2.is_positive() || !hyp.is_positive() {
            return Err(Error::Domain("triangle sides must be positive"));
        }
        let residual = &(&leg1.square() + &leg2.square()) - &hyp.square();
        if !residual.is_zero() {
            return Err(Error::NonPythagorean { residual });
        }
        let (leg1, leg2) = if leg1 <= leg2 { (leg1, leg2) } else { (leg2, leg1) };
        Ok(RationalTriangle { leg1, leg2, hyp })
    }

    /// The primitive triple `(a, b, c)` scaled by `1/k`.
    pub fn from_scaled_triple(t: &PrimitiveTriple, k: u128) -> Result<Self> {
        let k = BigInt::from(k);
        RationalTriangle::new(
            Rational::new(BigInt::from(t.a), k.clone())?,
            Rational::new(BigInt::from(t.b), k.clone())?,
            Rational::new(BigInt::from(t.c), k)?,
        )
    }

    pub fn leg1(&self) -> &Rational {
        &self.leg1
    }

    pub fn leg2(&self) -> &Rational {
        &self.leg2
    }

    pub fn hyp(&self) -> &Rational {
        &self.hyp
    }

    pub fn sides(&self) -> [&Rational; 3] {
        [&self.leg1, &self.leg2, &self.hyp]
    }

    /// Exact area `leg1 · leg2 / 2`.
    pub fn area(&self) -> Rational {
        (&self.leg1 * &self.leg2).half()
    }

    /// Classification by reduced leg denominators. Symmetric in the legs.
    pub fn classify(&self) -> CongruenceClass {
        match (self.leg1.is_integer(), self.leg2.is_integer()) {
            (true, true) => CongruenceClass::Improper,
            (false, false) => CongruenceClass::Proper,
            _ => CongruenceClass::SemiProper,
        }
    }

    /// True iff the hypotenuse denominator is the product of the leg
    /// denominators. This is the `f = bd` law (with `f = d` and `f = 1`
    /// as the semi-proper and improper special cases).
    pub fn hyp_denominator_law(&self) -> bool {
        self.hyp.denom() == &(self.leg1.denom() * self.leg2.denom())
    }

    /// With legs `a/b`, `c/d` and hypotenuse `e/f`, returns `(d·a, b·c, e)`
    /// and checks `e² = (da)² + (bc)²` exactly.
    pub fn to_integer_triple(&self) -> Result<(BigInt, BigInt, BigInt)> {
        if !self.hyp_denominator_law() {
            return Err(Error::Contract(
                "hypotenuse denominator is not the product of the leg denominators",
            ));
        }
        let da = self.leg2.denom() * self.leg1.numer();
        let bc = self.leg1.denom() * self.leg2.numer();
        let e = self.hyp.numer().clone();
        if &e * &e != &da * &da + &bc * &bc {
            return Err(Error::Contract("e² = (da)² + (bc)² failed"));
        }
        Ok((da, bc, e))
    }
}

impl fmt::Display for RationalTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.leg1, self.leg2, self.hyp)
    }
}

/// Parses a triangle from three side strings.
pub fn triangle_from_strs(leg1: &str, leg2: &str, hyp: &str) -> Result<RationalTriangle> {
    RationalTriangle::new(leg1.parse()?, leg2.parse()?, hyp.parse()?)
}

pub fn rational_str(s: &str) -> Result<Rational> {
    s.parse()
}

fn _assert_rational_to_string(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_is_canonical_and_idempotent() {
        let x = Rational::new(BigInt::from(40), BigInt::from(6)).unwrap();
        assert_eq!(x, r("20/3"));
        let again = Rational::new(x.numer().clone(), x.denom().clone()).unwrap();
        assert_eq!(again, x);
    }

    #[test]
    fn rejects_bad_denominators() {
        assert!(Rational::new(BigInt::from(1), BigInt::from(0)).is_err());
        assert!(Rational::new(BigInt::from(1), BigInt::from(-2)).is_err());
    }

    #[test]
    fn parse_and_display_roundtrip() {
        assert_eq!(r("3/2").to_string(), "3/2");
        assert_eq!(r("6/2").to_string(), "3");
        assert_eq!(r("7").to_string(), "7");
        assert!("3/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn integer_triangle_is_valid() {
        let t = triangle_from_strs("3", "4", "5").unwrap();
        assert_eq!(t.area(), r("6"));
        assert_eq!(t.classify(), CongruenceClass::Improper);
        assert!(t.hyp_denominator_law());
    }

    #[test]
    fn fibonacci_triangle() {
        let t = triangle_from_strs("3/2", "20/3", "41/6").unwrap();
        assert_eq!(t.area(), r("5"));
        assert_eq!(t.classify(), CongruenceClass::Proper);
        assert!(t.hyp_denominator_law());
        let (da, bc, e) = t.to_integer_triple().unwrap();
        assert_eq!((da, bc, e), (BigInt::from(9), BigInt::from(40), BigInt::from(41)));
    }

    #[test]
    fn non_pythagorean_carries_residual() {
        let err = triangle_from_strs("1", "1", "3/2").unwrap_err();
        match err {
            Error::NonPythagorean { residual } => assert_eq!(residual, r("-1/4")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn pre_reduction_sides_give_same_triangle() {
        let t1 = triangle_from_strs("9/6", "40/6", "41/6").unwrap();
        let t2 = triangle_from_strs("3/2", "20/3", "41/6").unwrap();
        assert_eq!(t1, t2);
        assert_eq!(t1.area(), r("5"));
    }

    #[test]
    fn semi_proper_classification() {
        // (3,4,5) scaled by 1/2: legs 3/2 and 2
        let t = triangle_from_strs("3/2", "2", "5/2").unwrap();
        assert_eq!(t.classify(), CongruenceClass::SemiProper);
        // symmetric in legs
        let t2 = triangle_from_strs("2", "3/2", "5/2").unwrap();
        assert_eq!(t2.classify(), CongruenceClass::SemiProper);
        assert_eq!(t, t2);
    }

    #[test]
    fn integer_triple_identity_on_integers() {
        let t = triangle_from_strs("3", "4", "5").unwrap();
        let (da, bc, e) = t.to_integer_triple().unwrap();
        assert_eq!((da, bc, e), (BigInt::from(3), BigInt::from(4), BigInt::from(5)));
    }

    #[test]
    fn area_scales_inverse_quadratically() {
        for k in 1u128..=20 {
            let kk = BigInt::from(k);
            let t = RationalTriangle::new(
                Rational::new(BigInt::from(3), kk.clone()).unwrap(),
                Rational::new(BigInt::from(4), kk.clone()).unwrap(),
                Rational::new(BigInt::from(5), kk.clone()).unwrap(),
            )
            .unwrap();
            let expected = &Rational::from_u128(6)
                / &Rational::from_integer(&kk * &kk);
            assert_eq!(t.area(), expected);
        }
    }
}
