use std::fmt;

use thiserror::Error;

use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("a linear polynomial needs a nonzero slope")]
pub struct ZeroSlope;

/// `slope·x + intercept` with `slope ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearPoly<T> {
    slope: T,
    intercept: T,
}

impl<T: Scalar> LinearPoly<T> {
    pub fn new(slope: T, intercept: T) -> Result<Self, ZeroSlope> {
        if slope.is_zero() {
            return Err(ZeroSlope);
        }
        Ok(LinearPoly { slope, intercept })
    }

    pub fn identity() -> Self {
        LinearPoly { slope: T::one(), intercept: T::zero() }
    }

    /// `x + shift`.
    pub fn translation(shift: T) -> Self {
        LinearPoly { slope: T::one(), intercept: shift }
    }

    /// Reads a degree-one polynomial.
    pub fn from_poly(p: &Poly<T>) -> Option<Self> {
        (p.degree() == Some(1)).then(|| LinearPoly { slope: p.coeff(1), intercept: p.coeff(0) })
    }

    pub fn slope(&self) -> &T {
        &self.slope
    }

    pub fn intercept(&self) -> &T {
        &self.intercept
    }

    pub fn is_identity(&self) -> bool {
        self.slope.is_one() && self.intercept.is_zero()
    }

    pub fn to_poly(&self) -> Poly<T> {
        Poly::from_terms([(1, self.slope.clone()), (0, self.intercept.clone())])
    }

    pub fn eval(&self, x: &T) -> T {
        self.slope.clone() * x.clone() + self.intercept.clone()
    }

    /// `self ∘ inner`.
    pub fn then_after(&self, inner: &Self) -> Self {
        LinearPoly {
            slope: self.slope.clone() * inner.slope.clone(),
            intercept: self.slope.clone() * inner.intercept.clone() + self.intercept.clone(),
        }
    }

    /// `(x - intercept) / slope`.
    pub fn inverse(&self) -> Self {
        let slope = T::one() / self.slope.clone();
        let intercept = -(self.intercept.clone() * slope.clone());
        LinearPoly { slope, intercept }
    }
}

impl<T: Scalar> fmt::Display for LinearPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

impl<T: Scalar> fmt::Debug for LinearPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QLinear, QPoly, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn zero_slope_rejected() {
        assert_eq!(QLinear::new(q(0, 1), q(3, 1)), Err(ZeroSlope));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let mu = QLinear::new(q(-3, 2), q(5, 7)).unwrap();
        assert!(mu.then_after(&mu.inverse()).is_identity());
        assert!(mu.inverse().then_after(&mu).is_identity());
        let as_poly = mu.to_poly().compose(&mu.inverse().to_poly());
        assert_eq!(as_poly, QPoly::x());
    }

    #[test]
    fn display() {
        assert_eq!(QLinear::new(q(1, 1), q(-1, 1)).unwrap().to_string(), "x - 1");
        assert_eq!(QLinear::new(q(2, 1), q(0, 1)).unwrap().to_string(), "2x");
    }
}
