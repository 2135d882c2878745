//! Brute-force search for solutions of `f(x) = g(y)` on the grid
//! `x, y ∈ (1/δ)ℤ`, `|x|, |y| ≤ H`.

use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::classify::EquationInstance;
use crate::rational::denominator_lcm;
use crate::{QPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("height must be at least 1")]
    Height,
    #[error("denominator bound must be at least 1")]
    Denominator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    height: u64,
    denominator: u64,
}

impl SearchConfig {
    pub fn new(height: u64, denominator: u64) -> Result<Self, SearchError> {
        if height == 0 {
            return Err(SearchError::Height);
        }
        if denominator == 0 {
            return Err(SearchError::Denominator);
        }
        Ok(SearchConfig { height, denominator })
    }

    pub fn height(&self) -> u64 {
        self.height
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    fn range(&self) -> std::ops::RangeInclusive<i64> {
        let r = i64::try_from(self.height * self.denominator).expect("grid fits in i64");
        -r..=r
    }
}

/// Dense integer coefficients of `k ↦ scale·δᴺ·p(k/δ)`, ascending.
fn grid_coeffs(p: &QPoly, scale: &BigInt, delta: &BigInt, top: usize) -> Vec<BigInt> {
    let d = denominator_lcm(p);
    (0..=p.deg())
        .map(|e| {
            let c = p.coeff(e) * Rational::from_integer(&d * scale * num_traits::pow(delta.clone(), top - e));
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

fn horner(coeffs: &[BigInt], k: i64) -> BigInt {
    let k = BigInt::from(k);
    coeffs.iter().rev().fold(BigInt::from(0), |acc, c| acc * &k + c)
}

/// All grid solutions in ascending order. Values of `g` are hashed once and
/// probed with the values of `f`; every hit is re-checked exactly.
pub fn solutions(inst: &EquationInstance, cfg: &SearchConfig) -> Vec<(Rational, Rational)> {
    let (f, g) = (inst.lhs(), inst.rhs());
    let delta = BigInt::from(cfg.denominator);
    let top = f.deg().max(g.deg());
    // f(k/δ) = g(j/δ)  ⇔  D_g·[D_f δᴺ f(k/δ)] = D_f·[D_g δᴺ g(j/δ)]
    let fc = grid_coeffs(f, &denominator_lcm(g), &delta, top);
    let gc = grid_coeffs(g, &denominator_lcm(f), &delta, top);

    let mut table: HashMap<BigInt, Vec<i64>> = HashMap::new();
    for j in cfg.range() {
        table.entry(horner(&gc, j)).or_default().push(j);
    }
    let to_q = |k: i64| Rational::new(BigInt::from(k), delta.clone());
    let mut out = Vec::new();
    for k in cfg.range() {
        if let Some(js) = table.get(&horner(&fc, k)) {
            let x = to_q(k);
            for &j in js {
                let y = to_q(j);
                if inst.satisfied_by(&x, &y) {
                    out.push((x.clone(), y));
                }
            }
        }
    }
    out.sort();
    out
}
