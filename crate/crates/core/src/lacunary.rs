//! Term-structure analysis of lacunary polynomials.
//!
//! A polynomial is written `a₁x^{n₁} + … + a_ℓx^{n_ℓ} + a_{ℓ+1}` with
//! `n₁ > … > n_ℓ ≥ 1` and all `a_i ≠ 0` for `i ≤ ℓ`. Two different counts
//! matter: `ℓ`, the number of nonconstant terms, and the total number of
//! nonzero terms (which counts the constant when it is nonzero). Root
//! multiplicity bounds are stated in terms of the latter.

use thiserror::Error;

use crate::poly::{Poly, PolyError};
use crate::rational::gcd_all;
use crate::scalar::Scalar;
use crate::squarefree::MultiplicityProfile;
use crate::LinearPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LacunaryError {
    #[error("constant polynomials have no lacunary profile")]
    Constant,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("f is not g composed with the given linear polynomial")]
    CompositionMismatch,
    #[error("the linear polynomial must not vanish at 0")]
    ZeroIntercept,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LacunaryProfile<T: Scalar> {
    /// `n₁ > n₂ > … > n_ℓ ≥ 1`.
    pub exponents: Vec<usize>,
    pub coefficients: Vec<T>,
    /// `a_{ℓ+1}`, possibly zero.
    pub constant: T,
    pub ell: usize,
    pub total_terms: usize,
    /// `n_{i-1} - n_i` for `i = 2..=ℓ+1`, with `n_{ℓ+1} = 0`.
    pub gaps: Vec<usize>,
    pub exponent_gcd: usize,
}

impl<T: Scalar> LacunaryProfile<T> {
    pub fn of(f: &Poly<T>) -> Result<Self, LacunaryError> {
        if f.is_constant() {
            return Err(LacunaryError::Constant);
        }
        let (exponents, coefficients): (Vec<usize>, Vec<T>) =
            f.terms().filter(|(e, _)| *e > 0).map(|(e, c)| (e, c.clone())).unzip();
        let gaps =
            exponents.iter().zip(exponents.iter().skip(1).chain(std::iter::once(&0))).map(|(hi, lo)| hi - lo).collect();
        Ok(LacunaryProfile {
            ell: exponents.len(),
            exponent_gcd: gcd_all(exponents.iter().copied()),
            total_terms: f.num_terms(),
            constant: f.constant_term(),
            exponents,
            coefficients,
            gaps,
        })
    }

    pub fn degree(&self) -> usize {
        self.exponents[0]
    }

    /// `a_2`, the coefficient of the second-highest term, if `ℓ ≥ 2`.
    pub fn second_coefficient(&self) -> Option<&T> {
        self.coefficients.get(1)
    }

    pub fn reconstruct(&self) -> Poly<T> {
        Poly::from_terms(
            self.exponents
                .iter()
                .copied()
                .zip(self.coefficients.iter().cloned())
                .chain(std::iter::once((0, self.constant.clone()))),
        )
    }
}

pub fn profile<T: Scalar>(f: &Poly<T>) -> Result<LacunaryProfile<T>, LacunaryError> {
    LacunaryProfile::of(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HajosReport {
    pub max_multiplicity: usize,
    pub total_terms: usize,
    pub holds: bool,
}

/// Compares the largest multiplicity of a nonzero root with the number of
/// terms. A polynomial with a nonzero root of multiplicity `m` has at least
/// `m + 1` terms, so `holds` is always expected to be true.
pub fn hajos_check<T: Scalar>(f: &Poly<T>) -> Result<HajosReport, LacunaryError> {
    let prof = MultiplicityProfile::of(f)?;
    let max_multiplicity = prof.max_nonzero_root_multiplicity();
    let total_terms = f.num_terms();
    Ok(HajosReport { max_multiplicity, total_terms, holds: total_terms > max_multiplicity })
}

/// One gap `n_{i-1} - n_i` of `f = g ∘ μ` and what it forces on `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapStep {
    pub index: usize,
    pub exponent: usize,
    pub gap: usize,
    /// Terms of the `n_i`-th derivative of `g`; must be at least `gap`.
    pub derivative_terms: usize,
    /// Multiplicity of `μ(0)` as a root of the `(n_i + 1)`-st derivative of
    /// `g`; must equal `gap - 1`.
    pub root_multiplicity: usize,
}

impl GapStep {
    pub fn holds(&self) -> bool {
        self.derivative_terms >= self.gap && self.root_multiplicity + 1 == self.gap
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChooseReport {
    pub steps: Vec<GapStep>,
    pub degree: usize,
    /// Nonconstant terms of `g`.
    pub k: usize,
    /// Nonconstant terms of `f`.
    pub ell: usize,
    /// `deg f ≤ k + ℓ`.
    pub degree_bound_holds: bool,
    /// When `n_i ≥ m_i` for every `i ≤ k`: whether `n₁ − n_{k+1} ≤ k(k+1)/2`,
    /// with `n_{ℓ+1} = 0`. This is `n₁ ≤ k(k+1)/2` exactly when `ℓ ≤ k`.
    pub triangular_bound: Option<bool>,
}

impl ChooseReport {
    pub fn holds(&self) -> bool {
        self.degree_bound_holds && self.triangular_bound.unwrap_or(true) && self.steps.iter().all(GapStep::holds)
    }
}

/// Checks the gap constraints that `f = g ∘ μ` with `μ(0) ≠ 0` imposes on the
/// derivatives of `g`, together with the degree bounds `deg f ≤ k + ℓ` and,
/// when the exponents of `f` dominate those of `g`, the summed gap bound
/// `n₁ − n_{k+1} ≤ k(k+1)/2`. For `ℓ > k` the plain `n₁ ≤ k(k+1)/2` can fail:
/// `(x + 1)²` has `k = 1`, `ℓ = 2`.
pub fn verify_choose<T: Scalar>(f: &Poly<T>, g: &Poly<T>, mu: &LinearPoly<T>) -> Result<ChooseReport, LacunaryError> {
    if mu.intercept().is_zero() {
        return Err(LacunaryError::ZeroIntercept);
    }
    if g.compose(&mu.to_poly()) != *f {
        return Err(LacunaryError::CompositionMismatch);
    }
    let fp = LacunaryProfile::of(f)?;
    let gp = LacunaryProfile::of(g)?;
    let beta = mu.intercept();

    let mut lower = fp.exponents.clone();
    lower.push(0);
    let steps = (1..lower.len())
        .map(|idx| {
            let exponent = lower[idx];
            let gap = lower[idx - 1] - exponent;
            GapStep {
                index: idx + 1,
                exponent,
                gap,
                derivative_terms: g.nth_derivative(exponent).num_terms(),
                root_multiplicity: g.nth_derivative(exponent + 1).root_multiplicity(beta),
            }
        })
        .collect();

    let degree = fp.degree();
    let dominated = (0..gp.ell).all(|i| fp.exponents.get(i).copied().unwrap_or(0) >= gp.exponents[i]);
    Ok(ChooseReport {
        steps,
        degree,
        k: gp.ell,
        ell: fp.ell,
        degree_bound_holds: degree <= gp.ell + fp.ell,
        triangular_bound: dominated.then(|| {
            let floor = fp.exponents.get(gp.ell).copied().unwrap_or(0);
            degree - floor <= gp.ell * (gp.ell + 1) / 2
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::{QLinear, QPoly};

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn profile_of_cubic() {
        let prof = profile(&p(&[1, 0, -3, 2])).unwrap();
        assert_eq!(prof.ell, 2);
        assert_eq!(prof.exponents, vec![3, 2]);
        assert_eq!(prof.constant, int(1));
        assert_eq!(prof.gaps, vec![1, 2]);
        assert_eq!(prof.exponent_gcd, 1);
        assert_eq!(prof.total_terms, 3);
    }

    #[test]
    fn profile_even() {
        let prof = profile(&p(&[0, 0, 1, 0, 2, 0, 1])).unwrap();
        assert_eq!((prof.ell, prof.exponent_gcd, prof.gaps.clone()), (3, 2, vec![2, 2, 2]));
        assert_eq!(prof.total_terms, 3);
    }

    #[test]
    fn profile_wide_gaps() {
        let f = QPoly::from_terms([(13, int(1)), (11, int(1)), (2, int(1))]);
        let prof = profile(&f).unwrap();
        assert_eq!((prof.ell, prof.exponent_gcd, prof.gaps.clone()), (3, 1, vec![2, 9, 2]));
        assert_eq!(prof.reconstruct(), f);
    }

    #[test]
    fn constant_rejected() {
        assert_eq!(profile(&p(&[5])), Err(LacunaryError::Constant));
    }

    #[test]
    fn hajos_examples() {
        let r = hajos_check(&p(&[-1, 3, -3, 1])).unwrap();
        assert_eq!((r.max_multiplicity, r.total_terms, r.holds), (3, 4, true));
        let r = hajos_check(&QPoly::monomial(int(1), 5)).unwrap();
        assert_eq!((r.max_multiplicity, r.total_terms, r.holds), (0, 1, true));
        let r = hajos_check(&p(&[0, 0, 4, 0, -3, 1])).unwrap();
        assert_eq!((r.max_multiplicity, r.total_terms, r.holds), (2, 3, true));
        assert!(hajos_check(&QPoly::zero()).is_err());
    }

    #[test]
    fn choose_on_shifted_cubic() {
        let f = p(&[1, 0, -3, 2]);
        let g = p(&[0, 0, 3, 2]);
        let mu = QLinear::new(int(1), int(-1)).unwrap();
        let report = verify_choose(&f, &g, &mu).unwrap();
        assert!(report.holds(), "{report:?}");
        // g'' = 12x + 6 has 2 terms against a gap of 1; g has 2 against 2.
        assert_eq!(report.steps[0].derivative_terms, 2);
        assert_eq!(report.steps[0].gap, 1);
        assert_eq!(report.steps[1].derivative_terms, 2);
        assert_eq!(report.steps[1].gap, 2);
        assert_eq!((report.degree, report.k, report.ell), (3, 2, 2));
        assert!(report.degree_bound_holds);
    }

    #[test]
    fn choose_with_more_terms_than_g() {
        // (x + 1)^2: k = 1, l = 2, and only the first gap is summed
        let report = verify_choose(&p(&[1, 2, 1]), &p(&[0, 0, 1]), &QLinear::new(int(1), int(1)).unwrap()).unwrap();
        assert_eq!(report.triangular_bound, Some(true));
        assert!(report.degree > report.k * (report.k + 1) / 2);
    }

    #[test]
    fn choose_preconditions() {
        let g = p(&[0, 1, 1]);
        assert_eq!(verify_choose(&g, &g, &QLinear::identity()), Err(LacunaryError::ZeroIntercept));
        let mu = QLinear::new(int(2), int(0)).unwrap();
        assert_eq!(verify_choose(&g, &g, &mu), Err(LacunaryError::ZeroIntercept));
        let mu = QLinear::new(int(1), int(1)).unwrap();
        assert_eq!(verify_choose(&g, &g, &mu), Err(LacunaryError::CompositionMismatch));
    }
}
