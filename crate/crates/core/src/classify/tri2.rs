use num_integer::Integer;
use num_traits::Zero;

use super::{binomial_rhs, Certificate, ClassifyError, EquationInstance, Outcome, Tri2Cert, Verdict};
use crate::pairs::linear_equiv_all;
use crate::poly::pow_scalar;
use crate::rational::{int, rational_nth_roots};
use crate::Rational;

/// Which branch of `a₁xⁿ¹ + a₂xⁿ² + a₃ = (b₁x^{m₁} + b₂x^{m₂}) ∘ μ` applies.
/// The shift cases have `μ(0) ≠ 0` and `n₁ = m₁ = 3`; the digits give
/// `(n₂, m₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri2Case {
    ShiftCase22,
    ShiftCase21,
    ShiftCase12,
    ScaleCase,
}

impl Tri2Case {
    pub fn label(self) -> &'static str {
        match self {
            Tri2Case::ShiftCase22 => "shift-2-2",
            Tri2Case::ShiftCase21 => "shift-2-1",
            Tri2Case::ShiftCase12 => "shift-1-2",
            Tri2Case::ScaleCase => "scale",
        }
    }
}

/// Outcome of the explicit coefficient relations, independent of any
/// search for `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationVerdict {
    pub case: Option<Tri2Case>,
    /// Each relation evaluated at the instance; all zero in the matching case.
    pub values: Vec<(&'static str, Rational)>,
    pub zeta: Option<Rational>,
}

struct Coeffs {
    n1: usize,
    n2: usize,
    m1: usize,
    m2: usize,
    a1: Rational,
    a2: Rational,
    a3: Rational,
    b1: Rational,
    b2: Rational,
}

fn coeffs(inst: &EquationInstance) -> Result<Coeffs, ClassifyError> {
    let (m1, m2) = binomial_rhs(inst)?;
    let fp = inst.lhs_profile();
    if fp.ell != 2 {
        return Err(ClassifyError::Shape("lhs must be a1 x^n1 + a2 x^n2 + a3"));
    }
    let g = inst.rhs();
    Ok(Coeffs {
        n1: fp.exponents[0],
        n2: fp.exponents[1],
        m1,
        m2,
        a1: fp.coefficients[0].clone(),
        a2: fp.coefficients[1].clone(),
        a3: fp.constant.clone(),
        b1: g.coeff(m1),
        b2: g.coeff(m2),
    })
}

fn p(r: &Rational, e: usize) -> Rational {
    pow_scalar(r, e)
}

/// Evaluates the coefficient relations that characterize when a linear `μ`
/// exists.
///
/// With `μ(0) ≠ 0` this forces `n₁ = m₁ = 3` and one of
/// - `(n₂, m₂) = (2, 2)`: `a₁²b₂³ + a₂³b₁² = 0`, `27a₁²a₃ + 4a₂³ = 0`;
/// - `(n₂, m₂) = (2, 1)`: `27a₁⁴b₂³ + a₂⁶b₁ = 0`, `a₂³a₃b₁ − 2a₁²b₂³ = 0`;
/// - `(n₂, m₂) = (1, 2)`: `27b₁⁴a₂³ + a₁b₂⁶ = 0`, `27b₁²a₃ − 2b₂³ = 0`.
///
/// With `μ(0) = 0`: matching exponents, `a₃ = 0` and a rational `ζ` with
/// `a₁ = b₁ζ^{m₁}`, `a₂ = b₂ζ^{m₂}`.
pub fn tri2_relations(inst: &EquationInstance) -> Result<RelationVerdict, ClassifyError> {
    let c = coeffs(inst)?;
    let (a1, a2, a3, b1, b2) = (&c.a1, &c.a2, &c.a3, &c.b1, &c.b2);
    let k27 = int(27);

    if c.n1 == c.m1 && c.n2 == c.m2 && a3.is_zero() {
        let zeta = rational_nth_roots(&(a1 / b1), c.m1).into_iter().find(|z| *a2 == b2 * p(z, c.m2));
        if let Some(z) = zeta {
            return Ok(RelationVerdict { case: Some(Tri2Case::ScaleCase), values: Vec::new(), zeta: Some(z) });
        }
    }

    let shift = if c.n1 == 3 && c.m1 == 3 {
        match (c.n2, c.m2) {
            (2, 2) => Some((
                Tri2Case::ShiftCase22,
                [
                    ("a1^2 b2^3 + a2^3 b1^2", p(a1, 2) * p(b2, 3) + p(a2, 3) * p(b1, 2)),
                    ("27 a1^2 a3 + 4 a2^3", &k27 * p(a1, 2) * a3 + int(4) * p(a2, 3)),
                ],
            )),
            (2, 1) => Some((
                Tri2Case::ShiftCase21,
                [
                    ("27 a1^4 b2^3 + a2^6 b1", &k27 * p(a1, 4) * p(b2, 3) + p(a2, 6) * b1),
                    ("a2^3 a3 b1 - 2 a1^2 b2^3", p(a2, 3) * a3 * b1 - int(2) * p(a1, 2) * p(b2, 3)),
                ],
            )),
            (1, 2) => Some((
                Tri2Case::ShiftCase12,
                [
                    ("27 b1^4 a2^3 + a1 b2^6", &k27 * p(b1, 4) * p(a2, 3) + a1 * p(b2, 6)),
                    ("27 b1^2 a3 - 2 b2^3", &k27 * p(b1, 2) * a3 - int(2) * p(b2, 3)),
                ],
            )),
            _ => None,
        }
    } else {
        None
    };

    Ok(match shift {
        Some((case, values)) => {
            let holds = values.iter().all(|(_, v)| v.is_zero());
            RelationVerdict { case: holds.then_some(case), values: values.to_vec(), zeta: None }
        }
        None => RelationVerdict { case: None, values: Vec::new(), zeta: None },
    })
}

/// Trinomial against binomial. Decided constructively by linear
/// equivalence and cross-checked against [`tri2_relations`]; a disagreement
/// is an error.
pub fn classify_tri2(inst: &EquationInstance) -> Result<Verdict, ClassifyError> {
    let c = coeffs(inst)?;
    let mut failed = Vec::new();
    if c.n1.gcd(&c.n2) != 1 || c.m1.gcd(&c.m2) != 1 {
        failed.push("gcd-condition");
    }
    if c.n1 < 3 || c.m1 < 3 {
        failed.push("degree-bound");
    }
    if !failed.is_empty() {
        return Ok(Verdict::new(Outcome::HypothesesNotMet(failed)));
    }

    let rel = tri2_relations(inst)?;
    let mu = linear_equiv_all(inst.lhs(), inst.rhs()).into_iter().next();
    let notes: Vec<String> = rel.values.iter().map(|(n, v)| format!("{n} = {v}")).collect();
    let details =
        format!("case {:?}, mu {:?}, relations [{}]", rel.case, mu.as_ref().map(|m| m.to_string()), notes.join(", "));
    if rel.case.is_some() != mu.is_some() {
        return Err(ClassifyError::CrossValidation {
            relations: rel.case.is_some(),
            constructive: mu.is_some(),
            details,
        });
    }
    let (Some(case), Some(mu)) = (rel.case, mu) else {
        return Ok(Verdict::with_notes(Outcome::FinitelyMany, notes));
    };
    let scale = mu.intercept().is_zero();
    if scale != (case == Tri2Case::ScaleCase) {
        return Err(ClassifyError::CrossValidation { relations: true, constructive: true, details });
    }
    let zeta = scale.then(|| mu.slope().clone());
    let cert = Certificate::Tri2(Tri2Cert { case, mu, zeta });
    cert.verify(inst)?;
    Ok(Verdict::with_notes(Outcome::InfinitelyMany(cert), notes))
}
