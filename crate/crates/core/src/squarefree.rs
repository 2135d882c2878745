//! Square-free decomposition by Yun's gcd chain.
//!
//! In characteristic zero the multiplicities found over the coefficient field
//! are the multiplicities over any extension, so the maximum multiplicity of a
//! nonzero root can be read off without factoring.

use crate::poly::{Poly, PolyError};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityProfile<T: Scalar> {
    pub leading: T,
    pub zero_root_multiplicity: usize,
    /// Monic, square-free, pairwise coprime parts not divisible by `x`,
    /// with strictly increasing multiplicities.
    pub parts: Vec<(Poly<T>, usize)>,
}

impl<T: Scalar> MultiplicityProfile<T> {
    pub fn of(f: &Poly<T>) -> Result<Self, PolyError> {
        let leading = f.leading_coeff().ok_or(PolyError::ZeroPolynomial)?.clone();
        let zero_root_multiplicity = f.lowest_exponent().unwrap_or(0);
        let stripped = Poly::from_terms(f.terms().map(|(e, c)| (e - zero_root_multiplicity, c.clone()))).monic();
        Ok(MultiplicityProfile { leading, zero_root_multiplicity, parts: yun(&stripped) })
    }

    pub fn max_nonzero_root_multiplicity(&self) -> usize {
        self.parts.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }

    pub fn reconstruct(&self) -> Poly<T> {
        self.parts
            .iter()
            .fold(Poly::monomial(self.leading.clone(), self.zero_root_multiplicity), |acc, (p, m)| &acc * &p.pow(*m))
    }
}

/// Yun's algorithm on a monic polynomial.
fn yun<T: Scalar>(g: &Poly<T>) -> Vec<(Poly<T>, usize)> {
    let mut parts = Vec::new();
    if g.is_constant() {
        return parts;
    }
    let dg = g.derivative();
    let a = g.gcd(&dg);
    let mut b = exact(g, &a);
    let mut c = exact(&dg, &a);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            parts.push((a.clone(), i));
        }
        b = exact(&b, &a);
        c = exact(&d, &a);
        d = &c - &b.derivative();
        i += 1;
    }
    parts
}

fn exact<T: Scalar>(num: &Poly<T>, den: &Poly<T>) -> Poly<T> {
    num.div_rem(den).expect("gcd of a nonzero polynomial is nonzero").0
}

/// Convenience wrapper around [`MultiplicityProfile::of`].
pub fn multiplicity_profile<T: Scalar>(f: &Poly<T>) -> Result<MultiplicityProfile<T>, PolyError> {
    MultiplicityProfile::of(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn cube() {
        let prof = multiplicity_profile(&p(&[-1, 3, -3, 1])).unwrap();
        assert_eq!(prof.max_nonzero_root_multiplicity(), 3);
        assert_eq!(prof.parts, vec![(p(&[-1, 1]), 3)]);
    }

    #[test]
    fn pure_power_of_x() {
        let prof = multiplicity_profile(&QPoly::monomial(Rational::from_integer(1.into()), 5)).unwrap();
        assert_eq!(prof.zero_root_multiplicity, 5);
        assert_eq!(prof.max_nonzero_root_multiplicity(), 0);
    }

    #[test]
    fn mixed_multiplicities() {
        // x^5 - 3x^4 + 4x^2 = x^2 (x - 2)^2 (x + 1)
        let f = p(&[0, 0, 4, 0, -3, 1]);
        let prof = multiplicity_profile(&f).unwrap();
        assert_eq!(prof.zero_root_multiplicity, 2);
        assert_eq!(prof.max_nonzero_root_multiplicity(), 2);
        assert_eq!(prof.parts, vec![(p(&[1, 1]), 1), (p(&[-2, 1]), 2)]);
        assert_eq!(prof.reconstruct(), f);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(multiplicity_profile(&QPoly::zero()), Err(PolyError::ZeroPolynomial));
    }

    proptest! {
        #[test]
        fn reconstruction_is_exact(
            roots in proptest::collection::vec((-3i64..=3, 1usize..=3), 0..=4),
            lead in prop_oneof![-3i64..=-1, 1i64..=3],
            zmult in 0usize..=3,
            extra in proptest::collection::vec(-3i64..=3, 0..=4),
        ) {
            let mut f = QPoly::monomial(Rational::from_integer(lead.into()), zmult);
            for (r, m) in &roots {
                f = &f * &p(&[-*r, 1]).pow(*m);
            }
            let mut e = extra.clone();
            e.push(1);
            f = &f * &p(&e);
            prop_assume!(!f.is_zero());
            let prof = multiplicity_profile(&f).unwrap();
            prop_assert_eq!(prof.reconstruct(), f);
            for (part, _) in &prof.parts {
                prop_assert!(part.gcd(&part.derivative()).is_constant());
                prop_assert!(!part.constant_term().is_zero());
            }
        }
    }
}
