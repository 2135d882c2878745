//! Standard and specific pairs, and the linear-equivalence solver
//! `f = g ∘ μ`.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::dickson::dickson;
use crate::poly::pow_scalar;
use crate::rational::{frac, int, magnitude_cmp, rational_nth_roots};
use crate::{QLinear, QPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("{kind} pair: restriction violated: {restriction}")]
    Restriction { kind: PairKind, restriction: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    First,
    Second,
    Third,
    Fourth,
    Fifth,
    Specific,
}

impl PairKind {
    pub fn label(self) -> &'static str {
        match self {
            PairKind::First => "first",
            PairKind::Second => "second",
            PairKind::Third => "third",
            PairKind::Fourth => "fourth",
            PairKind::Fifth => "fifth",
            PairKind::Specific => "specific",
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One row of the standard-pair table, or a specific pair. Components are
/// produced in table order; the switched pair is obtained by swapping them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardPair {
    /// `(xᵐ, a·xʳ·p(x)ᵐ)`
    First { m: usize, r: usize, a: Rational, p: QPoly },
    /// `(x², (a·x² + b)·p(x)²)`
    Second { a: Rational, b: Rational, p: QPoly },
    /// `(D_m(x, aⁿ), D_n(x, aᵐ))`
    Third { m: usize, n: usize, a: Rational },
    /// `(a^{−m/2}·D_m(x, a), −b^{−n/2}·D_n(x, b))`
    Fourth { m: usize, n: usize, a: Rational, b: Rational },
    /// `((a·x² − 1)³, 3x⁴ − 4x³)`
    Fifth { a: Rational },
    /// `(D_m(x, a^{n/d}), −D_n(x·cos(π/d), a^{m/d}))` with `d = gcd(m, n)`
    Specific { m: usize, n: usize, a: Rational },
}

impl StandardPair {
    pub fn kind(&self) -> PairKind {
        match self {
            StandardPair::First { .. } => PairKind::First,
            StandardPair::Second { .. } => PairKind::Second,
            StandardPair::Third { .. } => PairKind::Third,
            StandardPair::Fourth { .. } => PairKind::Fourth,
            StandardPair::Fifth { .. } => PairKind::Fifth,
            StandardPair::Specific { .. } => PairKind::Specific,
        }
    }

    pub fn build(&self) -> Result<(QPoly, QPoly), PairError> {
        make_standard_pair(self)
    }
}

fn require(kind: PairKind, ok: bool, restriction: &'static str) -> Result<(), PairError> {
    if ok {
        Ok(())
    } else {
        Err(PairError::Restriction { kind, restriction })
    }
}

pub fn make_standard_pair(pair: &StandardPair) -> Result<(QPoly, QPoly), PairError> {
    let kind = pair.kind();
    let x = QPoly::x();
    match pair {
        StandardPair::First { m, r, a, p } => {
            require(kind, *m >= 1, "m >= 1")?;
            require(kind, !a.is_zero(), "a != 0")?;
            require(kind, !p.is_zero(), "p != 0")?;
            require(kind, r < m, "r < m")?;
            require(kind, r.gcd(m) == 1, "gcd(r, m) = 1")?;
            require(kind, r + p.deg() > 0, "r + deg p > 0")?;
            let g = &QPoly::monomial(a.clone(), *r) * &p.pow(*m);
            Ok((QPoly::monomial(int(1), *m), g))
        }
        StandardPair::Second { a, b, p } => {
            require(kind, !a.is_zero() && !b.is_zero(), "a, b != 0")?;
            require(kind, !p.is_zero(), "p != 0")?;
            let quad = QPoly::from_terms([(2, a.clone()), (0, b.clone())]);
            Ok((x.pow(2), &quad * &p.pow(2)))
        }
        StandardPair::Third { m, n, a } => {
            require(kind, *m >= 1 && *n >= 1, "m, n >= 1")?;
            require(kind, !a.is_zero(), "a != 0")?;
            require(kind, m.gcd(n) == 1, "gcd(m, n) = 1")?;
            Ok((dickson(*m, &pow_scalar(a, *n)), dickson(*n, &pow_scalar(a, *m))))
        }
        StandardPair::Fourth { m, n, a, b } => {
            require(kind, !a.is_zero() && !b.is_zero(), "a, b != 0")?;
            require(kind, m.gcd(n) == 2, "gcd(m, n) = 2")?;
            // gcd 2 makes both m and n even, so the prefactors are rational
            let fa = pow_scalar(&a.recip(), m / 2);
            let fb = -pow_scalar(&b.recip(), n / 2);
            Ok((dickson(*m, a).scale(&fa), dickson(*n, b).scale(&fb)))
        }
        StandardPair::Fifth { a } => {
            require(kind, !a.is_zero(), "a != 0")?;
            let base = QPoly::from_terms([(2, a.clone()), (0, int(-1))]);
            Ok((base.pow(3), QPoly::from_i64s(&[0, 0, 0, -4, 3])))
        }
        StandardPair::Specific { m, n, a } => make_specific_pair(*m, *n, a),
    }
}

/// `(D_m(x, a^{n/d}), −D_n(x·cos(π/d), a^{m/d}))` for `d = gcd(m, n)`.
///
/// `cos(2π/d)` is rational only for `d ∈ {3, 4, 6}` once `d ≥ 3`. The term of
/// degree `e` in `D_n(x·cos(π/d), ·)` carries `cos(π/d)ᵉ`; for `d = 3` the
/// cosine is `1/2`, and for `d ∈ {4, 6}` the degree `n` is even, so only even
/// powers occur and `cos²(π/d) ∈ {1/2, 3/4}` suffices.
pub fn make_specific_pair(m: usize, n: usize, a: &Rational) -> Result<(QPoly, QPoly), PairError> {
    let kind = PairKind::Specific;
    require(kind, m >= 1 && n >= 1, "m, n >= 1")?;
    require(kind, !a.is_zero(), "a != 0")?;
    let d = m.gcd(&n);
    let (cos, cos_sq) = match d {
        3 => (Some(frac(1, 2)), frac(1, 4)),
        4 => (None, frac(1, 2)),
        6 => (None, frac(3, 4)),
        _ => return Err(PairError::Restriction { kind, restriction: "gcd(m, n) in {3, 4, 6}" }),
    };
    let f1 = dickson(m, &pow_scalar(a, n / d));
    let inner = dickson(n, &pow_scalar(a, m / d));
    let mut terms = Vec::new();
    for (e, c) in inner.terms() {
        let weight = if e % 2 == 0 {
            pow_scalar(&cos_sq, e / 2)
        } else {
            let cos = cos.clone().expect("odd degrees only occur for d = 3");
            pow_scalar(&cos_sq, e / 2) * cos
        };
        terms.push((e, -(c * weight)));
    }
    Ok((f1, QPoly::from_terms(terms)))
}

/// Every `μ = αx + β` over ℚ with `g ∘ μ = f`, ordered by magnitude of
/// `(α, β)`.
///
/// `αⁿ = lc(f)/lc(g)` leaves at most two candidates for `α`, and matching the
/// `x^{n−1}` coefficients forces `β`; each candidate is checked by
/// composition.
pub fn linear_equiv_all(f: &QPoly, g: &QPoly) -> Vec<QLinear> {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return Vec::new();
    };
    if n != m || n == 0 {
        return Vec::new();
    }
    let (fl, gl) = (f.leading_coeff().unwrap(), g.leading_coeff().unwrap());
    let nq = Rational::from_integer(n.into());
    let mut found: Vec<QLinear> = rational_nth_roots(&(fl / gl), n)
        .into_iter()
        .filter_map(|alpha| {
            let beta = if n == 1 {
                (f.constant_term() - g.constant_term()) / gl
            } else {
                let an1 = pow_scalar(&alpha, n - 1);
                (f.coeff(n - 1) - g.coeff(n - 1) * &an1) / (&nq * gl * &an1)
            };
            let mu = QLinear::new(alpha, beta).ok()?;
            (g.compose(&mu.to_poly()) == *f).then_some(mu)
        })
        .collect();
    found.sort_by(|p, q| magnitude_cmp(p.slope(), q.slope()).then_with(|| magnitude_cmp(p.intercept(), q.intercept())));
    found
}

/// The first solution of [`linear_equiv_all`], if any.
pub fn linear_equiv(f: &QPoly, g: &QPoly) -> Option<QLinear> {
    linear_equiv_all(f, g).into_iter().next()
}
