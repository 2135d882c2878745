mod common;

use common::{linear, poly, sparse};
use lacunary::rational::{frac, int};
use lacunary::{multiplicity_profile, parse_poly, QLinear, QPoly};
use proptest::prelude::*;

#[test]
fn canonical_display() {
    assert_eq!(QPoly::from_i64s(&[1, 0, -3, 2]).to_string(), "2x^3 - 3x^2 + 1");
    assert_eq!(QPoly::from_terms([(5, int(1)), (1, frac(1, 2))]).to_string(), "x^5 + 1/2x");
    assert_eq!(QPoly::zero().to_string(), "0");
}

#[test]
fn zero_polynomial_has_no_degree() {
    assert_eq!(QPoly::zero().degree(), None);
    assert_eq!(QPoly::from_i64s(&[0, 0, 0]).num_terms(), 0);
}

#[test]
fn profile_of_repeated_root() {
    // 3x^2 (x - 1)^3 (x + 2)
    let f = &(&QPoly::monomial(int(3), 2) * &QPoly::from_i64s(&[-1, 1]).pow(3)) * &QPoly::from_i64s(&[2, 1]);
    let prof = multiplicity_profile(&f).unwrap();
    assert_eq!(prof.zero_root_multiplicity, 2);
    assert_eq!(prof.leading, int(3));
    assert_eq!(prof.max_nonzero_root_multiplicity(), 3);
    assert_eq!(prof.reconstruct(), f);
}

proptest! {
    #[test]
    fn compose_is_associative(a in poly(0..=6), b in poly(0..=6), c in poly(0..=6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn degree_is_multiplicative(g in poly(1..=6), h in poly(1..=6)) {
        prop_assert_eq!(g.compose(&h).deg(), g.deg() * h.deg());
    }

    #[test]
    fn multiplicity_profile_reconstructs(q in poly(1..=5), r in poly(1..=3), k in 1usize..4) {
        let f = &q * &r.pow(k);
        let prof = multiplicity_profile(&f).unwrap();
        prop_assert_eq!(prof.reconstruct(), f.clone());
        for (part, _) in &prof.parts {
            prop_assert!(part.coeff(0) != int(0));
            prop_assert_eq!(part.gcd(&part.derivative()).deg(), 0);
        }
    }

    #[test]
    fn linear_inverse(mu in linear(), p in poly(0..=5)) {
        let back = mu.inverse();
        prop_assert_eq!(p.compose(&mu.to_poly()).compose(&back.to_poly()), p);
        prop_assert!(mu.then_after(&back).is_identity());
    }

    #[test]
    fn parse_print_identity(p in sparse(6, 40)) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(parse_poly(&p.display_in("y").to_string()).unwrap(), p);
    }

    #[test]
    fn division_identity(a in poly(0..=8), b in poly(1..=4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert!(r.is_zero() || r.deg() < b.deg());
        prop_assert_eq!(&(&q * &b) + &r, a);
    }
}

#[test]
fn linear_rejects_zero_slope() {
    assert!(QLinear::new(int(0), int(1)).is_err());
}
