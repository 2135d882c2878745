#![allow(dead_code)]

use lacunary::rational::frac;
use lacunary::{QLinear, QPoly, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4, any::<bool>()).prop_map(|(n, d, neg)| frac(if neg { -n } else { n }, d))
}

/// Dense polynomial of exact degree within `degrees`.
pub fn poly(degrees: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = QPoly> {
    degrees.prop_flat_map(|d| {
        (prop::collection::vec(rational(), d), nonzero_rational()).prop_map(|(mut cs, lead)| {
            cs.push(lead);
            QPoly::from_coeffs(cs)
        })
    })
}

/// Polynomial with up to `terms` nonzero terms and exponents below `max_exp`.
pub fn sparse(terms: usize, max_exp: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::btree_map(0..max_exp, nonzero_rational(), 1..=terms).prop_map(QPoly::from_terms)
}

pub fn linear() -> impl Strategy<Value = QLinear> {
    (nonzero_rational(), rational()).prop_map(|(a, b)| QLinear::new(a, b).unwrap())
}

pub fn shift_linear() -> impl Strategy<Value = QLinear> {
    (nonzero_rational(), nonzero_rational()).prop_map(|(a, b)| QLinear::new(a, b).unwrap())
}
