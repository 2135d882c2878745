//! Coefficient types.
//!
//! Every algorithm in this crate is written against [`Scalar`], a field with
//! exact zero testing. The decision procedures are only meaningful over
//! [`Rational`](crate::Rational); the floating-point impls exist so that the
//! polynomial machinery can be reused for numerical experiments.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, ToPrimitive};

/// A field usable as a polynomial coefficient.
pub trait Scalar: Signed + Clone + fmt::Debug + fmt::Display {
    fn from_i64(n: i64) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_usize(n: usize) -> Self {
        Self::from_i64(i64::try_from(n).expect("integer too large for i64"))
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Scalar for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Rational64::from_integer(n.to_i64().expect("integer does not fit in i64"))
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
}
