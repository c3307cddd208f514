//! Coefficient rings.
//!
//! Everything in the crate is generic over [`Ring`]; the exact-rational
//! instantiation is what the engine uses, `f64` is kept for quick numeric
//! sanity checks in tests.

use std::fmt::Debug;
use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A commutative ring with unit.
///
/// The `*_ref` hooks exist so polynomial types can avoid cloning large
/// coefficients; the defaults fall back to cloning.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs + rhs.clone();
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs - rhs.clone();
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.mul_ref(&Self::from_i64(n))
    }
}

/// A ring containing the rationals.
pub trait QAlgebra: Ring {
    fn from_rational(q: &Rational) -> Self;

    fn scale_rational(&self, q: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(q))
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

impl QAlgebra for BigRational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn scale_rational(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Ring for Ratio<i64> {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(n)
    }
}

impl QAlgebra for Ratio<i64> {
    fn from_rational(q: &Rational) -> Self {
        let n = q.numer().to_i64().expect("numerator overflows i64");
        let d = q.denom().to_i64().expect("denominator overflows i64");
        Ratio::new(n, d)
    }
}

macro_rules! impl_float_ring {
    ($f:ty) => {
        impl Ring for $f {
            fn from_i64(n: i64) -> Self {
                n as $f
            }
        }

        impl QAlgebra for $f {
            fn from_rational(q: &Rational) -> Self {
                q.numer().to_f64().unwrap_or(f64::NAN) as $f
                    / q.denom().to_f64().unwrap_or(f64::NAN) as $f
            }
        }
    };
}

impl_float_ring!(f32);
impl_float_ring!(f64);

/// Builds an exact rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

pub fn factorial(n: u64) -> u64 {
    (2..=n).product()
}

pub fn big_factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Renders a rational as the canonical `"num/den"` string (den is always
/// emitted, including `1`).
pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or a bare integer. The result is reduced.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Ratio::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Ratio::from_integer),
    }
}

/// Returns the integer value of `q` if its denominator is one.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// `true` when `q`'s reduced denominator divides `n`.
pub fn denominator_divides(q: &Rational, n: &BigInt) -> bool {
    n.is_multiple_of(q.denom())
}
