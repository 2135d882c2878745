//! Helpers specific to rational coefficients.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{QPoly, Rational};

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// All rational `r` with `rⁿ = value`, in ascending order. `n = 0` has no
/// meaningful answer and yields nothing.
pub fn rational_nth_roots(value: &Rational, n: usize) -> Vec<Rational> {
    if n == 0 {
        return Vec::new();
    }
    if value.is_zero() {
        return vec![Rational::zero()];
    }
    let n32 = u32::try_from(n).expect("root order fits in u32");
    let negative = value.is_negative();
    if negative && n.is_multiple_of(2) {
        return Vec::new();
    }
    let (Some(num), Some(den)) = (exact_int_root(&value.numer().abs(), n32), exact_int_root(value.denom(), n32)) else {
        return Vec::new();
    };
    let root = Rational::new(num, den);
    if negative {
        vec![-root]
    } else if n.is_multiple_of(2) {
        vec![-root.clone(), root]
    } else {
        vec![root]
    }
}

fn exact_int_root(v: &BigInt, n: u32) -> Option<BigInt> {
    let r = v.nth_root(n);
    (num_traits::pow::Pow::pow(&r, n) == *v).then_some(r)
}

/// Least common multiple of the coefficient denominators (one for zero).
pub fn denominator_lcm(f: &QPoly) -> BigInt {
    f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
}

/// `f · lcm(denominators)` as integer coefficients, descending exponents.
pub fn clear_denominators(f: &QPoly) -> (Vec<(usize, BigInt)>, BigInt) {
    let l = denominator_lcm(f);
    let terms = f.terms().map(|(e, c)| (e, (c * Rational::from_integer(l.clone())).to_integer())).collect();
    (terms, l)
}

/// Orders rationals by numerator magnitude, then denominator, then sign
/// (positive first). Used to pick deterministic representatives.
pub fn magnitude_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.numer()
        .magnitude()
        .cmp(b.numer().magnitude())
        .then_with(|| a.denom().cmp(b.denom()))
        .then_with(|| sign_rank(a).cmp(&sign_rank(b)))
}

fn sign_rank(r: &Rational) -> u8 {
    match r.numer().sign() {
        Sign::NoSign => 0,
        Sign::Plus => 1,
        Sign::Minus => 2,
    }
}

pub fn gcd_all<I: IntoIterator<Item = usize>>(values: I) -> usize {
    values.into_iter().fold(0, |acc, v| acc.gcd(&v))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert_eq!(rational_nth_roots(&int(8192), 13), vec![int(2)]);
        assert_eq!(rational_nth_roots(&frac(16, 81), 4), vec![frac(-2, 3), frac(2, 3)]);
        assert_eq!(rational_nth_roots(&frac(-1, 8), 3), vec![frac(-1, 2)]);
        assert!(rational_nth_roots(&int(-4), 2).is_empty());
        assert!(rational_nth_roots(&int(2), 2).is_empty());
        assert!(rational_nth_roots(&int(1), 0).is_empty());
    }

    #[test]
    fn magnitude_order() {
        let mut v = vec![int(-1), frac(1, 2), int(1), int(2), int(0)];
        v.sort_by(magnitude_cmp);
        assert_eq!(v, vec![int(0), int(1), int(-1), frac(1, 2), int(2)]);
    }

    #[test]
    fn small_number_theory() {
        assert_eq!(gcd_all([13, 11, 2]), 1);
        assert_eq!(gcd_all([6, 4, 2]), 2);
        assert_eq!(binomial(5, 2), 10);
        assert!(is_prime(13) && !is_prime(9) && !is_prime(1));
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn clearing() {
        let f = QPoly::from_terms([(5, int(1)), (1, frac(1, 2)), (0, frac(2, 3))]);
        let (terms, l) = clear_denominators(&f);
        assert_eq!(l, BigInt::from(6));
        assert_eq!(terms, vec![(5, BigInt::from(6)), (1, BigInt::from(3)), (0, BigInt::from(4))]);
    }
}
