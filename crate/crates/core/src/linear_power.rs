use crate::poly::Poly;
use crate::scalar::Scalar;

/// `f = scale·(x + shift)^n + offset`, i.e. `e₁(c₁x + c₀)ⁿ + e₀` with the
/// slope `c₁` normalized to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPower<T> {
    pub scale: T,
    pub shift: T,
    pub n: usize,
    pub offset: T,
}

impl<T: Scalar> LinearPower<T> {
    /// Always one: the normalization of this representation.
    pub fn slope(&self) -> T {
        T::one()
    }

    pub fn expand(&self) -> Poly<T> {
        let base = Poly::from_terms([(1, T::one()), (0, self.shift.clone())]);
        &base.pow(self.n).scale(&self.scale) + &Poly::constant(self.offset.clone())
    }
}

/// Finds `f = e₁(x + c₀)ⁿ + e₀` with `n = deg f` if such a representation
/// exists over the coefficient field.
///
/// `e₁` is the leading coefficient and `c₀` is forced by the `x^{n-1}`
/// coefficient; the candidate is then checked by expansion. Degree one
/// polynomials are reported with `c₀ = 0`.
pub fn linear_power_detect<T: Scalar>(f: &Poly<T>) -> Option<LinearPower<T>> {
    let n = f.degree().filter(|&n| n >= 1)?;
    let scale = f.leading_coeff()?.clone();
    if n == 1 {
        return Some(LinearPower { scale, shift: T::zero(), n, offset: f.constant_term() });
    }
    let shift = f.coeff(n - 1) / (T::from_usize(n) * scale.clone());
    let probe = LinearPower { scale, shift, n, offset: T::zero() };
    let residue = f - &probe.expand();
    if !residue.is_constant() {
        return None;
    }
    Some(LinearPower { offset: residue.constant_term(), ..probe })
}
