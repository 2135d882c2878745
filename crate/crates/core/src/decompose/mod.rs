//! Functional decomposition `f = g ∘ h`.
//!
//! Splits are normalized so that the inner factor is monic with zero constant
//! term. With that normalization the inner factor of a given degree is unique
//! and can be read off the top coefficients of `f` as an approximate root,
//! so deciding decomposability needs no search over coefficients.

mod bounds;
mod indecomposable;
mod symmetry;

pub use bounds::{verify_zannier_bound, BoundCheck, ZannierReport};
pub use indecomposable::{
    certify_indecomposable, fast_path, gcd_criterion, is_indecomposable, GcdTranscript, GcdVerdict,
    IndecomposabilityCertificate, Reason,
};
pub use symmetry::{detect_cyclic, rational_automorphisms, CyclicForm};

use thiserror::Error;

use crate::poly::Poly;
use crate::rational::divisors;
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecomposeError {
    #[error("expected degree at least {required}, got {actual:?}")]
    DegreeTooSmall { required: usize, actual: Option<usize> },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("fast path {reason} claims indecomposable but {witness_outer} ∘ {witness_inner} decomposes it")]
    FastPathDisagreement { reason: String, witness_outer: String, witness_inner: String },
}

/// `outer ∘ inner` with `inner` monic, `inner(0) = 0`, both of degree ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<T: Scalar> {
    pub outer: Poly<T>,
    pub inner: Poly<T>,
}

impl<T: Scalar> Decomposition<T> {
    pub fn recompose(&self) -> Poly<T> {
        self.outer.compose(&self.inner)
    }
}

pub(crate) fn require_degree<T: Scalar>(f: &Poly<T>, required: usize) -> Result<usize, DecomposeError> {
    match f.degree() {
        Some(d) if d >= required => Ok(d),
        actual => Err(DecomposeError::DegreeTooSmall { required, actual }),
    }
}

/// Digits of `f` in base `h`: `g₀, g₁, …` with `deg gᵢ < deg h` and
/// `f = Σ gᵢ hⁱ`. The zero polynomial has no digits.
pub fn h_adic_expand<T: Scalar>(f: &Poly<T>, h: &Poly<T>) -> Result<Vec<Poly<T>>, DecomposeError> {
    require_degree(h, 1)?;
    let mut digits = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(h).expect("h is nonzero");
        digits.push(r);
        rest = q;
    }
    Ok(digits)
}

/// The `g` with `f = g ∘ h`, if `f` lies in the subring generated by `h`.
pub fn outer_for<T: Scalar>(f: &Poly<T>, h: &Poly<T>) -> Result<Option<Poly<T>>, DecomposeError> {
    let digits = h_adic_expand(f, h)?;
    if digits.iter().any(|d| !d.is_constant()) {
        return Ok(None);
    }
    Ok(Some(Poly::from_terms(digits.into_iter().enumerate().map(|(i, d)| (i, d.constant_term())))))
}

/// The unique monic `h` of degree `d` with `h(0) = 0` whose `(n/d)`-th power
/// agrees with `f / lc(f)` in the top `d` coefficients.
///
/// Works on the reversed series `F(t) = tⁿ f(1/t) / lc(f)` and extracts the
/// `r`-th root `G = F^{1/r}` from `r·F·G' = G·F'`, which gives
/// `r·k·g_k = Σ_{j=1..k} (j − r(k−j)) f_j g_{k−j}`.
pub fn approximate_root<T: Scalar>(f: &Poly<T>, d: usize) -> Poly<T> {
    let n = f.deg();
    debug_assert!(d >= 1 && n.is_multiple_of(d));
    let r = n / d;
    let lc = f.leading_coeff().expect("nonzero polynomial").clone();
    let fs: Vec<T> = (0..d).map(|k| f.coeff(n - k) / lc.clone()).collect();
    let rt = T::from_usize(r);
    let mut gs: Vec<T> = vec![T::one()];
    for k in 1..d {
        let mut acc = T::zero();
        for j in 1..=k {
            // j − r(k−j), kept signed
            let weight = T::from_usize(j) - rt.clone() * T::from_usize(k - j);
            acc = acc + weight * fs[j].clone() * gs[k - j].clone();
        }
        gs.push(acc / (rt.clone() * T::from_usize(k)));
    }
    Poly::from_terms(gs.into_iter().enumerate().map(|(k, g)| (d - k, g)))
}

/// The normalized split with an inner factor of degree `d`, if one exists.
pub fn split_with_inner_degree<T: Scalar>(f: &Poly<T>, d: usize) -> Option<Decomposition<T>> {
    let n = f.degree()?;
    if d < 2 || d >= n || n % d != 0 {
        return None;
    }
    let inner = approximate_root(f, d);
    let outer = outer_for(f, &inner).ok()??;
    Some(Decomposition { outer, inner })
}

/// Every two-factor split of `f`, ordered by inner degree. An empty result
/// means `f` is indecomposable.
pub fn full_decompose<T: Scalar>(f: &Poly<T>) -> Result<Vec<Decomposition<T>>, DecomposeError> {
    let n = require_degree(f, 2)?;
    Ok(divisors(n).into_iter().filter(|&d| d > 1 && d < n).filter_map(|d| split_with_inner_degree(f, d)).collect())
}

/// Rational specialization used by the decision procedures.
pub type QDecomposition = Decomposition<Rational>;
