use num_traits::Zero;

use crate::lacunary::LacunaryProfile;
use crate::rational::binomial;
use crate::{QPoly, Rational};

use super::{require_degree, DecomposeError};

/// One exact comparison `lhs < rhs` (or `lhs == rhs` when `strict` is false).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: u64,
    pub rhs: u64,
    pub strict: bool,
}

impl BoundCheck {
    fn less(name: &'static str, lhs: u64, rhs: u64) -> Self {
        BoundCheck { name, lhs, rhs, strict: true }
    }

    fn equal(name: &'static str, lhs: u64, rhs: u64) -> Self {
        BoundCheck { name, lhs, rhs, strict: false }
    }

    pub fn holds(&self) -> bool {
        if self.strict {
            self.lhs < self.rhs
        } else {
            self.lhs == self.rhs
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZannierReport {
    /// `h = a·x^k + b`, where no bound on `deg g` is claimed.
    NotApplicable {
        ell: usize,
    },
    Checked {
        ell: usize,
        checks: Vec<BoundCheck>,
    },
}

impl ZannierReport {
    pub fn holds(&self) -> bool {
        match self {
            ZannierReport::NotApplicable { .. } => true,
            ZannierReport::Checked { checks, .. } => checks.iter().all(BoundCheck::holds),
        }
    }

    pub fn ell(&self) -> usize {
        match self {
            ZannierReport::NotApplicable { ell } | ZannierReport::Checked { ell, .. } => *ell,
        }
    }

    pub fn checks(&self) -> &[BoundCheck] {
        match self {
            ZannierReport::NotApplicable { .. } => &[],
            ZannierReport::Checked { checks, .. } => checks,
        }
    }
}

/// Degree bounds on the outer factor of `f = g ∘ h` in terms of the number
/// `ℓ` of nonconstant terms of `f`.
///
/// Unless `h = a·xᵏ + b`: `deg g < 2ℓ(ℓ−1)` for `ℓ ≥ 2`, and `deg g = 1` for
/// `ℓ = 1`. Independently, if `g = b₁x^{m₁} + b₂x^{m₂}`, `ℓ ≥ 3` and the
/// exponents of `f` are coprime, then `m₁ < C(ℓ+2, 2) + ℓ − 1`, sharpened to
/// `m₁ < C(ℓ+2, 2) + 2` when `f(0) ≠ 0`.
pub fn verify_zannier_bound(g: &QPoly, h: &QPoly) -> Result<ZannierReport, DecomposeError> {
    let m1 = require_degree(g, 1)? as u64;
    require_degree(h, 1)?;
    let f = g.compose(h);
    let fp: LacunaryProfile<Rational> =
        LacunaryProfile::of(&f).map_err(|_| DecomposeError::Precondition("g ∘ h is constant"))?;
    let ell = fp.ell;
    let l = ell as u64;

    let mut checks = Vec::new();
    let monomial_inner = h.num_nonconstant_terms() == 1;
    if !monomial_inner {
        checks.push(if ell >= 2 {
            BoundCheck::less("deg g < 2l(l-1)", m1, 2 * l * (l - 1))
        } else {
            BoundCheck::equal("deg g = 1", m1, 1)
        });
    }

    let binomial_outer = g.num_terms() == 2 && g.constant_term().is_zero();
    if binomial_outer && ell >= 3 && fp.exponent_gcd == 1 {
        let c = binomial(l + 2, 2);
        checks.push(BoundCheck::less("m1 < C(l+2,2) + l - 1", m1, c + l - 1));
        if !fp.constant.is_zero() {
            checks.push(BoundCheck::less("m1 < C(l+2,2) + 2", m1, c + 2));
        }
    }

    Ok(if monomial_inner && checks.is_empty() {
        ZannierReport::NotApplicable { ell }
    } else {
        ZannierReport::Checked { ell, checks }
    })
}
