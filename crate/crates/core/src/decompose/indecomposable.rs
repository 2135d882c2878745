use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{full_decompose, require_degree, DecomposeError, QDecomposition};
use crate::lacunary::LacunaryProfile;
use crate::rational::{clear_denominators, divisors, gcd_all, is_prime};
use crate::QPoly;

/// Record of the divisor search behind the gcd criterion, run on `f` scaled
/// to integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdTranscript {
    /// Factor that cleared the denominators.
    pub scale: BigInt,
    pub leading_exponent: usize,
    /// Integer coefficient of the second-highest term after scaling.
    pub second_coefficient: BigInt,
    /// Each `t ≥ 2` dividing the degree, with whether it also divides the
    /// second coefficient.
    pub divisors: Vec<(usize, bool)>,
}

impl GcdTranscript {
    pub fn witness(&self) -> Option<usize> {
        self.divisors.iter().find(|(_, hit)| *hit).map(|(t, _)| *t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GcdVerdict {
    Indecomposable(GcdTranscript),
    Inconclusive(GcdTranscript),
}

/// Decomposability test through the second coefficient.
///
/// If `f = g ∘ h` with `h` monic, `h(0) = 0` and not a monomial, then over
/// the integers `deg g` divides both `n₁` and `a₂`. With coprime exponents
/// `h` cannot be a monomial, so no common divisor `t ≥ 2` of `n₁` and `a₂`
/// proves indecomposability. Rational inputs are first scaled to integer
/// coefficients, which does not change decomposability.
pub fn gcd_criterion(f: &QPoly) -> Result<GcdVerdict, DecomposeError> {
    let prof = LacunaryProfile::of(f).map_err(|_| DecomposeError::Precondition("constant polynomial"))?;
    if prof.ell < 2 {
        return Err(DecomposeError::Precondition("gcd criterion needs at least two nonconstant terms"));
    }
    if prof.exponent_gcd != 1 {
        return Err(DecomposeError::Precondition("gcd criterion needs coprime exponents"));
    }
    let (terms, scale) = clear_denominators(f);
    let second_coefficient = terms[1].1.clone();
    let leading_exponent = prof.degree();
    let transcript = GcdTranscript {
        divisors: divisors(leading_exponent)
            .into_iter()
            .filter(|&t| t >= 2)
            .map(|t| (t, second_coefficient.is_multiple_of(&BigInt::from(t))))
            .collect(),
        scale,
        leading_exponent,
        second_coefficient,
    };
    Ok(if transcript.witness().is_some() {
        GcdVerdict::Inconclusive(transcript)
    } else {
        GcdVerdict::Indecomposable(transcript)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    PrimeDegree,
    /// `a₁x^{n₁} + a₂x^{n₂} + a₃` with `gcd(n₁, n₂) = 1`.
    TrinomialCoprime,
    GcdCriterion(GcdTranscript),
    /// Integer coefficients with `n₂ = n₁ − 1`, or an odd polynomial with
    /// `n₂ = n₁ − 2`, and in both cases `gcd(n₁, a₂) = 1`.
    NearConsecutive,
    /// No inner factor of any admissible degree exists.
    Exhaustive,
}

impl Reason {
    pub fn label(&self) -> &'static str {
        match self {
            Reason::PrimeDegree => "prime-degree",
            Reason::TrinomialCoprime => "trinomial-coprime",
            Reason::GcdCriterion(_) => "gcd-criterion",
            Reason::NearConsecutive => "near-consecutive",
            Reason::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndecomposabilityCertificate {
    Indecomposable(Reason),
    Decomposable(QDecomposition),
}

impl IndecomposabilityCertificate {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, IndecomposabilityCertificate::Indecomposable(_))
    }
}

fn near_consecutive(f: &QPoly, prof: &LacunaryProfile<crate::Rational>) -> bool {
    if prof.ell < 2 {
        return false;
    }
    let (n1, n2) = (prof.exponents[0], prof.exponents[1]);
    let shape = n2 + 1 == n1 || (f.is_odd() && n2 + 2 == n1);
    if !shape {
        return false;
    }
    let (terms, _) = clear_denominators(f);
    terms[1].1.abs().gcd(&BigInt::from(n1)) == BigInt::from(1)
}

/// The first cheap sufficient condition for indecomposability that applies.
pub fn fast_path(f: &QPoly) -> Result<Option<Reason>, DecomposeError> {
    let n = require_degree(f, 2)?;
    if is_prime(n) {
        return Ok(Some(Reason::PrimeDegree));
    }
    let prof = LacunaryProfile::of(f).expect("degree at least 2");
    if prof.ell == 2 && gcd_all(prof.exponents.iter().copied()) == 1 {
        return Ok(Some(Reason::TrinomialCoprime));
    }
    if prof.ell >= 2 && prof.exponent_gcd == 1 {
        if let Ok(GcdVerdict::Indecomposable(t)) = gcd_criterion(f) {
            return Ok(Some(Reason::GcdCriterion(t)));
        }
    }
    if near_consecutive(f, &prof) {
        return Ok(Some(Reason::NearConsecutive));
    }
    Ok(None)
}

/// Tries the cheap sufficient conditions in order, then falls back to
/// exhaustive decomposition.
pub fn is_indecomposable(f: &QPoly) -> Result<IndecomposabilityCertificate, DecomposeError> {
    use IndecomposabilityCertificate::*;
    if let Some(reason) = fast_path(f)? {
        return Ok(Indecomposable(reason));
    }
    Ok(match full_decompose(f)?.into_iter().next() {
        Some(split) => Decomposable(split),
        None => Indecomposable(Reason::Exhaustive),
    })
}

/// [`is_indecomposable`], with every fast-path answer re-checked by
/// exhaustive decomposition. A disagreement is reported as an error.
pub fn certify_indecomposable(f: &QPoly) -> Result<IndecomposabilityCertificate, DecomposeError> {
    let cert = is_indecomposable(f)?;
    if let IndecomposabilityCertificate::Indecomposable(reason) = &cert {
        if *reason != Reason::Exhaustive {
            if let Some(split) = full_decompose(f)?.into_iter().next() {
                return Err(DecomposeError::FastPathDisagreement {
                    reason: reason.to_string(),
                    witness_outer: split.outer.to_string(),
                    witness_inner: split.inner.to_string(),
                });
            }
        }
    }
    debug_assert!(match &cert {
        IndecomposabilityCertificate::Decomposable(d) => d.recompose() == *f && !d.outer.is_zero(),
        _ => true,
    });
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn sparse(terms: &[(usize, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn prime_degree() {
        let cert = is_indecomposable(&sparse(&[(7, 1), (2, 3), (0, 1)])).unwrap();
        assert_eq!(cert, IndecomposabilityCertificate::Indecomposable(Reason::PrimeDegree));
    }

    #[test]
    fn coprime_trinomial() {
        let cert = is_indecomposable(&sparse(&[(9, 1), (4, 1), (0, 2)])).unwrap();
        assert_eq!(cert, IndecomposabilityCertificate::Indecomposable(Reason::TrinomialCoprime));
    }

    #[test]
    fn decomposable_quartic() {
        let cert = is_indecomposable(&sparse(&[(4, 1), (2, 2)])).unwrap();
        match cert {
            IndecomposabilityCertificate::Decomposable(d) => {
                assert_eq!(d.outer, sparse(&[(2, 1), (1, 2)]));
                assert_eq!(d.inner, sparse(&[(2, 1)]));
            }
            other => panic!("expected a split, got {other:?}"),
        }
    }

    #[test]
    fn gcd_criterion_examples() {
        let f = sparse(&[(6, 1), (5, 5), (1, 1)]);
        match gcd_criterion(&f).unwrap() {
            GcdVerdict::Indecomposable(t) => {
                assert_eq!(t.divisors, vec![(2, false), (3, false), (6, false)]);
            }
            other => panic!("{other:?}"),
        }
        assert!(full_decompose(&f).unwrap().is_empty());

        match gcd_criterion(&sparse(&[(6, 1), (5, 3), (0, 1)])).unwrap() {
            GcdVerdict::Inconclusive(t) => assert_eq!(t.witness(), Some(3)),
            other => panic!("{other:?}"),
        }
        match gcd_criterion(&sparse(&[(4, 1), (3, 2), (1, 1)])).unwrap() {
            GcdVerdict::Inconclusive(t) => assert_eq!(t.witness(), Some(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gcd_criterion_preconditions() {
        assert!(gcd_criterion(&sparse(&[(6, 1), (4, 1), (2, 1)])).is_err());
        assert!(gcd_criterion(&sparse(&[(6, 1), (0, 1)])).is_err());
    }

    #[test]
    fn gcd_criterion_scales_rationals() {
        // x^6 + x^5/2 + 1 scales to 2x^6 + x^5 + 2
        let f = QPoly::from_terms([(6, int(1)), (5, crate::rational::frac(1, 2)), (0, int(1))]);
        match gcd_criterion(&f).unwrap() {
            GcdVerdict::Indecomposable(t) => {
                assert_eq!(t.scale, BigInt::from(2));
                assert_eq!(t.second_coefficient, BigInt::from(1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn exhaustive_fallback() {
        // x^4 + 2x^3 + x has gcd-criterion witness t = 2 and is still
        // indecomposable
        let f = sparse(&[(4, 1), (3, 2), (1, 1)]);
        let cert = certify_indecomposable(&f).unwrap();
        assert_eq!(cert, IndecomposabilityCertificate::Indecomposable(Reason::Exhaustive));
    }

    #[test]
    fn low_degree_rejected() {
        assert!(is_indecomposable(&sparse(&[(1, 1), (0, 1)])).is_err());
    }
}
