//! Sparse univariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
}

/// A univariate polynomial stored as a map from exponent to nonzero
/// coefficient. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    terms: BTreeMap<usize, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, exponent: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Poly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (usize, T)>>(terms: I) -> Self {
        let mut map: BTreeMap<usize, T> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly { terms: map }
    }

    /// `coeffs[i]` is the coefficient of `x^i`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate())
    }

    /// Builds a polynomial from integer coefficients listed in ascending order.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Degree with the zero polynomial mapped to 0. Handy where callers have
    /// already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, exponent: usize) -> T {
        self.terms.get(&exponent).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn lowest_exponent(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms, the constant included.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Number of nonzero terms of positive degree.
    pub fn num_nonconstant_terms(&self) -> usize {
        self.terms.len() - usize::from(self.terms.contains_key(&0))
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &T)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().rev().copied()
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * s.clone())).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        Poly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&(T::one() / lc.clone())),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        let mut prev: Option<usize> = None;
        for (e, c) in self.terms() {
            if let Some(p) = prev {
                acc = acc * pow_scalar(x, p - e);
            }
            acc = acc + c.clone();
            prev = Some(e);
        }
        if let Some(p) = prev {
            acc = acc * pow_scalar(x, p);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c.clone() * T::from_usize(*e)))
                .collect(),
        }
    }

    /// The `k`-th derivative.
    pub fn nth_derivative(&self, k: usize) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e >= k)
                .map(|(e, c)| {
                    let falling = (e - k + 1..=*e).fold(T::one(), |acc, j| acc * T::from_usize(j));
                    (e - k, c.clone() * falling)
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut n: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Functional composition `self ∘ inner`, i.e. `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        let mut prev: Option<usize> = None;
        for (e, c) in self.terms() {
            if let Some(p) = prev {
                acc = &acc * &inner.pow(p - e);
            }
            acc = &acc + &Self::constant(c.clone());
            prev = Some(e);
        }
        if let Some(p) = prev {
            acc = &acc * &inner.pow(p);
        }
        acc
    }

    /// Euclidean division: returns `(q, r)` with `self = q·divisor + r` and
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let (dd, dlc) = match (divisor.degree(), divisor.leading_coeff()) {
            (Some(d), Some(lc)) => (d, lc.clone()),
            _ => return Err(PolyError::DivisionByZero),
        };
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&e, c)) = rem.iter().next_back() {
            if e < dd {
                break;
            }
            let factor = c.clone() / dlc.clone();
            let shift = e - dd;
            for (de, dc) in divisor.terms.iter() {
                let slot = rem.entry(de + shift).or_insert_with(T::zero);
                *slot = slot.clone() - factor.clone() * dc.clone();
                if slot.is_zero() {
                    rem.remove(&(de + shift));
                }
            }
            // Guard against inexact scalars leaving a residue at the top.
            rem.remove(&e);
            quot.insert(shift, factor);
        }
        Ok((Poly { terms: quot }, Poly { terms: rem }))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Multiplicity of `root` as a root of `self` (0 when it is not a root).
    /// The zero polynomial yields 0.
    pub fn root_multiplicity(&self, root: &T) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = synthetic_division(&p, root);
            if !r.is_zero() {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    /// Whether all exponents are odd (and there is no constant term).
    pub fn is_odd(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|e| e % 2 == 1)
    }

    /// Renders with a chosen variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, T> {
        PolyDisplay { poly: self, var }
    }
}

/// Divides by `x - root`, returning quotient and remainder value.
fn synthetic_division<T: Scalar>(p: &Poly<T>, root: &T) -> (Poly<T>, T) {
    let Some(d) = p.degree() else {
        return (Poly::zero(), T::zero());
    };
    let mut quot = Vec::with_capacity(d);
    let mut acc = T::zero();
    for e in (0..=d).rev() {
        acc = acc * root.clone() + p.coeff(e);
        if e > 0 {
            quot.push(acc.clone());
        }
    }
    quot.reverse();
    (Poly::from_coeffs(quot), acc)
}

pub(crate) fn pow_scalar<T: Scalar>(x: &T, mut n: usize) -> T {
    let mut base = x.clone();
    let mut acc = T::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base.clone();
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let mut terms = self.terms.clone();
        for (e, c) in rhs.terms.iter() {
            let slot = terms.entry(*e).or_insert_with(T::zero);
            *slot = slot.clone() + c.clone();
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        Poly { terms }
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        let mut terms: BTreeMap<usize, T> = BTreeMap::new();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                let slot = terms.entry(e1 + e2).or_insert_with(T::zero);
                *slot = slot.clone() + c1.clone() * c2.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

pub struct PolyDisplay<'a, T> {
    poly: &'a Poly<T>,
    var: &'a str,
}

impl<T: Scalar> fmt::Display for PolyDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if e == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => f.write_str(self.var)?,
                _ => write!(f, "{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Rational};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn cube_of_linear() {
        let l = p(&[-1, 1]);
        let cube = &(&l * &l) * &l;
        assert_eq!(cube, p(&[-1, 3, -3, 1]));
    }

    #[test]
    fn second_derivative() {
        let f = p(&[0, 0, 3, 2]);
        assert_eq!(f.nth_derivative(2), p(&[6, 12]));
        assert_eq!(f.derivative().derivative(), f.nth_derivative(2));
        assert!(f.nth_derivative(4).is_zero());
    }

    #[test]
    fn monic_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, -2, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let scaled = a.scale(&q(7, 3));
        assert_eq!(scaled.gcd(&b.scale(&q(-2, 1))), p(&[-1, 1]));
        assert!(QPoly::zero().gcd(&QPoly::zero()).is_zero());
        assert_eq!(QPoly::zero().gcd(&p(&[2, 4])), QPoly::from_coeffs(vec![q(1, 2), q(1, 1)]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(p(&[1, 1]).div_rem(&QPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, 0, -3, 0, 0, 2]);
        let b = p(&[1, 2, 3]);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert!(r.deg() < 2);
        assert_eq!(&(&qq * &b) + &r, a);
    }

    #[test]
    fn composition_examples() {
        assert_eq!(p(&[1, 0, 1]).compose(&p(&[0, 1, 0, 1])), p(&[1, 0, 1, 0, 2, 0, 1]));
        let f = p(&[3, 0, -1, 7]);
        assert_eq!(f.compose(&QPoly::x()), f);
        assert_eq!(p(&[-2, 0, 1]).compose(&p(&[0, -3, 0, 1])), p(&[-2, 0, 9, 0, -6, 0, 1]));
    }

    #[test]
    fn root_multiplicity_counts() {
        let f = p(&[-1, 3, -3, 1]);
        assert_eq!(f.root_multiplicity(&q(1, 1)), 3);
        assert_eq!(f.root_multiplicity(&q(2, 1)), 0);
        assert_eq!(QPoly::zero().root_multiplicity(&q(1, 1)), 0);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p(&[0, -3, 0, 1]).to_string(), "x^3 - 3x");
        assert_eq!(p(&[1, 0, -3, 2]).to_string(), "2x^3 - 3x^2 + 1");
        let f = QPoly::from_terms([(6, q(-1, 64)), (4, q(3, 8)), (0, q(2, 1))]);
        assert_eq!(f.to_string(), "-1/64x^6 + 3/8x^4 + 2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }

    #[test]
    fn generic_over_floats() {
        let f: Poly<f64> = Poly::from_i64s(&[1, 0, 1]);
        let h: Poly<f64> = Poly::from_i64s(&[0, 1, 0, 1]);
        let c = f.compose(&h);
        assert_eq!(c.eval(&2.0), f.eval(&h.eval(&2.0)));
        assert_eq!(c.degree(), Some(6));
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec((-4i64..=4, 1i64..=3), 1..=7)
            .prop_map(|cs| QPoly::from_coeffs(cs.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn compose_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn compose_degree_multiplies(g in arb_poly(), h in arb_poly()) {
            prop_assume!(!g.is_constant() && !h.is_constant());
            prop_assert_eq!(g.compose(&h).degree(), Some(g.deg() * h.deg()));
        }

        #[test]
        fn eval_commutes_with_compose(g in arb_poly(), h in arb_poly(), x in -5i64..=5) {
            let x = q(x, 2);
            prop_assert_eq!(g.compose(&h).eval(&x), g.eval(&h.eval(&x)));
        }
    }
}
