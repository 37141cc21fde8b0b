//! Scalar fields used by the exact linear algebra.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;

/// An exact field. Elements are small `Copy` values.
pub trait Field:
    Copy
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;
}

/// Rational numbers with 128-bit numerator and denominator.
pub type Rational = Ratio<i128>;

impl Field for Rational {
    fn zero() -> Self {
        Ratio::from_integer(0)
    }

    fn one() -> Self {
        Ratio::from_integer(1)
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }

    fn is_zero(&self) -> bool {
        *self.numer() == 0
    }

    fn characteristic() -> u64 {
        0
    }
}

/// The prime field `GF(P)`. `P` must be prime; this is checked on first use
/// of [`Fp::new`] in debug builds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        debug_assert!(is_prime(P), "GF({P}) requires a prime modulus");
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in GF({P})");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp::new(1)
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn characteristic() -> u64 {
        P
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_inverses() {
        for v in 1..7 {
            let x = F7::new(v);
            assert_eq!(x * (F7::one() / x), F7::one());
        }
        assert_eq!(F7::from_i64(-1), F7::new(6));
        assert_eq!(-F7::new(3) + F7::new(3), F7::zero());
    }

    #[test]
    fn rational_basics() {
        let half = Rational::new(1, 2);
        assert_eq!(half + half, Rational::one());
        assert!(Rational::zero().is_zero());
        assert_eq!(Rational::characteristic(), 0);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(101) && is_prime(32003));
        assert!(!is_prime(1) && !is_prime(91));
    }
}
