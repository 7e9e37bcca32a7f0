//! Scalar abstraction: the engine is generic over the number type.
//!
//! The verification pipeline runs on exact rationals ([`Rational`]); the same
//! code also instantiates at `f32`/`f64` for quick approximate tables. Exact
//! types never round; float types are best-effort and excluded from every
//! acceptance comparison.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational: always in lowest terms with a positive
/// denominator (both guaranteed by the backing implementation's constructor).
pub type Rational = BigRational;

/// Field scalar the whole engine is generic over.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Embed a machine integer.
    fn from_int(n: i64) -> Self;

    /// The exact fraction n/d. Panics if d = 0.
    fn frac(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }

    /// Nearest `f64`, used only for optional approximate output.
    fn to_f64_approx(&self) -> f64;
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn frac(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn to_f64_approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64_approx(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }

    fn to_f64_approx(&self) -> f64 {
        f64::from(*self)
    }
}

/// Parse a rational written as `"p/q"`, `"p"`, with optional sign.
/// The result is reduced and has a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    match Rational::from_str(s) {
        Ok(r) => Ok(r),
        Err(e) => Err(format!("cannot parse {s:?} as a rational p/q: {e}")),
    }
}

/// Render a rational as `"p"` or `"p/q"` (lowest terms, q > 0).
pub fn format_rational(r: &Rational) -> String {
    // BigRational's Display already prints lowest-terms p or p/q, but make
    // the sign placement explicit for denominators just in case.
    debug_assert!(r.denom().is_positive() || r.is_zero());
    r.to_string()
}
