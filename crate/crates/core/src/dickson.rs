//! Dickson polynomials `D_n(x, a)` and detection of the shape
//! `e₁·D_n(c₁x + c₀, a) + e₀`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::lacunary::LacunaryProfile;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DicksonError {
    #[error("{0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("expansion has {0} nonconstant terms, need at least 2")]
    TooFewTerms(usize),
    #[error("gap check failed: exponents {exponents:?}, gaps {gaps:?}")]
    GapViolation { exponents: Vec<usize>, gaps: Vec<usize> },
}

/// `n/(n−j)·C(n−j, j)`, always an integer.
fn sum_weight(n: usize, j: usize) -> BigInt {
    let b: BigInt = num_integer::binomial(BigInt::from(n - j), BigInt::from(j));
    b * BigInt::from(n) / BigInt::from(n - j)
}

/// `D_n(x, a) = Σ_{j ≤ n/2} n/(n−j)·C(n−j, j)·(−a)^j·x^{n−2j}`, with `D₀ = 2`.
pub fn dickson<T: Scalar>(n: usize, a: &T) -> Poly<T> {
    if n == 0 {
        return Poly::constant(T::from_i64(2));
    }
    let neg_a = -a.clone();
    let mut power = T::one();
    let mut terms = Vec::with_capacity(n / 2 + 1);
    for j in 0..=n / 2 {
        terms.push((n - 2 * j, T::from_bigint(&sum_weight(n, j)) * power.clone()));
        power = power * neg_a.clone();
    }
    Poly::from_terms(terms)
}

/// `D_n` from `D_n = x·D_{n−1} − a·D_{n−2}`, `D₀ = 2`, `D₁ = x`.
pub fn dickson_recurrence<T: Scalar>(n: usize, a: &T) -> Poly<T> {
    let x = Poly::x();
    let (mut prev, mut cur) = (Poly::constant(T::from_i64(2)), x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `e₁·D_n(c₁x + c₀, a) + e₀` with `e₁c₁a ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicksonForm<T: Scalar> {
    n: usize,
    a: T,
    e1: T,
    e0: T,
    c1: T,
    c0: T,
}

impl<T: Scalar> DicksonForm<T> {
    pub fn new(n: usize, a: T, e1: T, e0: T, c1: T, c0: T) -> Result<Self, DicksonError> {
        if n == 0 {
            return Err(DicksonError::ZeroDegree);
        }
        for (value, name) in [(&a, "a"), (&e1, "e1"), (&c1, "c1")] {
            if value.is_zero() {
                return Err(DicksonError::ZeroParameter(name));
            }
        }
        Ok(DicksonForm { n, a, e1, e0, c1, c0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn a(&self) -> &T {
        &self.a
    }
    pub fn e1(&self) -> &T {
        &self.e1
    }
    pub fn e0(&self) -> &T {
        &self.e0
    }
    pub fn c1(&self) -> &T {
        &self.c1
    }
    pub fn c0(&self) -> &T {
        &self.c0
    }

    pub fn expand(&self) -> Poly<T> {
        let inner = Poly::from_terms([(1, self.c1.clone()), (0, self.c0.clone())]);
        &dickson(self.n, &self.a).compose(&inner).scale(&self.e1) + &Poly::constant(self.e0.clone())
    }

    /// The same polynomial with `c₁` multiplied by `λ`, using
    /// `D_n(λy, λ²a) = λⁿ·D_n(y, a)`.
    pub fn with_slope(&self, lambda: &T) -> Result<Self, DicksonError> {
        if lambda.is_zero() {
            return Err(DicksonError::ZeroParameter("lambda"));
        }
        let mut lambda_n = T::one();
        for _ in 0..self.n {
            lambda_n = lambda_n * lambda.clone();
        }
        DicksonForm::new(
            self.n,
            self.a.clone() * lambda.clone() * lambda.clone(),
            self.e1.clone() / lambda_n,
            self.e0.clone(),
            self.c1.clone() * lambda.clone(),
            self.c0.clone() * lambda.clone(),
        )
    }
}

pub type QDicksonForm = DicksonForm<Rational>;

/// Finds `f = e₁·D_n(x + c₀, a) + e₀` with `a ≠ 0` and `n = deg f ≥ 2`.
///
/// `D_n` has no `x^{n−1}` term and `−n·a` at `x^{n−2}`, so `e₁`, `c₀` and `a`
/// are read off the top three coefficients and `e₀` off the constant; the
/// candidate is verified by expansion. For `n = 2` the parameter `a` only
/// shifts the constant, and `a = 1` is reported.
pub fn detect_dickson_form<T: Scalar>(f: &Poly<T>) -> Option<DicksonForm<T>> {
    let n = f.degree().filter(|&n| n >= 2)?;
    let e1 = f.leading_coeff()?.clone();
    let nt = T::from_usize(n);
    let c0 = f.coeff(n - 1) / (nt.clone() * e1.clone());
    let back = Poly::from_terms([(1, T::one()), (0, -c0.clone())]);
    let reduced = f.compose(&back).scale(&(T::one() / e1.clone()));
    let a = if n == 2 { T::one() } else { -reduced.coeff(n - 2) / nt };
    if a.is_zero() {
        return None;
    }
    let e0 = (reduced.constant_term() - dickson(n, &a).constant_term()) * e1.clone();
    let form = DicksonForm::new(n, a, e1, e0, T::one(), c0).ok()?;
    (form.expand() == *f).then_some(form)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub exponents: Vec<usize>,
    /// Consecutive exponent differences, the last one down to 0.
    pub gaps: Vec<usize>,
    pub ell: usize,
    pub degree: usize,
}

/// Checks that the expansion has every exponent gap at most 2 and degree at
/// most `2ℓ`. A violation is returned as an error carrying the profile.
pub fn dicksoni_gap_check<T: Scalar>(form: &DicksonForm<T>) -> Result<GapReport, DicksonError> {
    let prof = LacunaryProfile::of(&form.expand()).map_err(|_| DicksonError::TooFewTerms(0))?;
    if prof.ell < 2 {
        return Err(DicksonError::TooFewTerms(prof.ell));
    }
    let report = GapReport { degree: prof.degree(), ell: prof.ell, exponents: prof.exponents, gaps: prof.gaps };
    if report.gaps.iter().any(|&g| g > 2) || report.degree > 2 * report.ell {
        return Err(DicksonError::GapViolation { exponents: report.exponents, gaps: report.gaps });
    }
    Ok(report)
}
