mod common;

use common::{linear, nonzero_rational, poly};
use lacunary::dickson::dickson;
use lacunary::pairs::{linear_equiv, linear_equiv_all, make_specific_pair, make_standard_pair, PairKind, StandardPair};
use lacunary::rational::{frac, int};
use lacunary::QPoly;
use proptest::prelude::*;

#[test]
fn table_rows() {
    let (f, g) =
        make_standard_pair(&StandardPair::First { m: 3, r: 1, a: int(2), p: QPoly::from_i64s(&[1, 1]) }).unwrap();
    assert_eq!(f, QPoly::monomial(int(1), 3));
    assert_eq!(g, &QPoly::from_i64s(&[0, 2]) * &QPoly::from_i64s(&[1, 1]).pow(3));

    let (f, g) = make_standard_pair(&StandardPair::Third { m: 2, n: 3, a: int(1) }).unwrap();
    assert_eq!((f, g), (dickson(2, &int(1)), dickson(3, &int(1))));

    let (f, g) = make_standard_pair(&StandardPair::Fifth { a: int(1) }).unwrap();
    assert_eq!(f, QPoly::from_i64s(&[-1, 0, 1]).pow(3));
    assert_eq!(g, QPoly::from_i64s(&[0, 0, 0, -4, 3]));
}

#[test]
fn restrictions() {
    let bad = [
        StandardPair::First { m: 4, r: 2, a: int(1), p: QPoly::x() },
        StandardPair::First { m: 3, r: 0, a: int(1), p: QPoly::one() },
        StandardPair::Second { a: int(0), b: int(1), p: QPoly::one() },
        StandardPair::Third { m: 2, n: 4, a: int(1) },
        StandardPair::Fourth { m: 3, n: 5, a: int(1), b: int(1) },
        StandardPair::Fifth { a: int(0) },
        StandardPair::Specific { m: 5, n: 10, a: int(1) },
    ];
    for pair in &bad {
        let err = make_standard_pair(pair).unwrap_err();
        assert!(err.to_string().starts_with(pair.kind().label()), "{err}");
    }
}

#[test]
fn specific_pairs() {
    for (m, n) in [(3, 6), (4, 8), (6, 12), (9, 3)] {
        let (f, g) = make_specific_pair(m, n, &frac(2, 3)).unwrap();
        assert_eq!((f.deg(), g.deg()), (m, n));
    }
    // d = 3 uses cos(pi/3) = 1/2: -D_3(x/2, 1) = -(x^3/8 - 3x/2)
    let (_, g) = make_specific_pair(3, 3, &int(1)).unwrap();
    assert_eq!(g, QPoly::from_terms([(3, frac(-1, 8)), (1, frac(3, 2))]));
    assert_eq!(make_standard_pair(&StandardPair::Specific { m: 3, n: 3, a: int(1) }).unwrap().1, g);
    assert_eq!(StandardPair::Specific { m: 3, n: 3, a: int(1) }.kind(), PairKind::Specific);
}

proptest! {
    #[test]
    fn equivalence_complete(g in poly(1..=12), mu in linear()) {
        let f = g.compose(&mu.to_poly());
        let found = linear_equiv(&f, &g).unwrap();
        prop_assert_eq!(g.compose(&found.to_poly()), f);
    }

    #[test]
    fn equivalence_sound(f in poly(1..=6), g in poly(1..=6)) {
        for mu in linear_equiv_all(&f, &g) {
            prop_assert_eq!(g.compose(&mu.to_poly()), f.clone());
        }
    }

    #[test]
    fn third_kind_restrictions(m in 1usize..=8, n in 1usize..=8, a in nonzero_rational()) {
        let built = make_standard_pair(&StandardPair::Third { m, n, a });
        prop_assert_eq!(built.is_ok(), num_integer::gcd(m, n) == 1);
    }

    #[test]
    fn fourth_kind_restrictions(m in 1usize..=10, n in 1usize..=10, a in nonzero_rational(), b in nonzero_rational()) {
        let built = make_standard_pair(&StandardPair::Fourth { m, n, a, b });
        prop_assert_eq!(built.is_ok(), num_integer::gcd(m, n) == 2);
    }
}
