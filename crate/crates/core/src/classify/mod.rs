//! Decision procedures for `f(x) = g(y)` with lacunary `f` and `g`: whether
//! the equation has infinitely many rational solutions with bounded
//! denominator, with a certificate and a solution family when it does.
//!
//! Three engines cover three hypothesis ranges. [`classify_main`] handles
//! `g` with at least three terms and large degree, [`classify_main2`] a
//! binomial `g`, and [`classify_tri2`] a trinomial `f` against a binomial
//! `g`. Outside its range an engine answers
//! [`Outcome::HypothesesNotMet`] and lists every failed hypothesis.

mod family;
mod tri2;

pub use family::{solution_family, FamilyKind, FamilyMember, SolutionFamily};
pub use tri2::{classify_tri2, tri2_relations, RelationVerdict, Tri2Case};

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::decompose::{self, DecomposeError, IndecomposabilityCertificate};
use crate::lacunary::LacunaryProfile;
use crate::linear_power::linear_power_detect;
use crate::pairs::linear_equiv;
use crate::rational::binomial;
use crate::{QLinear, QPoly, Rational};

/// Above this degree, indecomposability of the right-hand side is only
/// established through the fast paths.
pub const EXHAUSTIVE_DEGREE_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error("both sides must be nonconstant")]
    Constant,
    #[error("input shape: {0}")]
    Shape(&'static str),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error("relation check says {relations}, linear equivalence says {constructive}: {details}")]
    CrossValidation { relations: bool, constructive: bool, details: String },
    #[error("certificate does not verify: {0}")]
    Unverified(&'static str),
    #[error("no solution family: {0}")]
    NoFamily(&'static str),
}

/// `lhs(x) = rhs(y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationInstance {
    lhs: QPoly,
    rhs: QPoly,
    lhs_profile: LacunaryProfile<Rational>,
    rhs_profile: LacunaryProfile<Rational>,
}

impl EquationInstance {
    pub fn new(lhs: QPoly, rhs: QPoly) -> Result<Self, ClassifyError> {
        let lhs_profile = LacunaryProfile::of(&lhs).map_err(|_| ClassifyError::Constant)?;
        let rhs_profile = LacunaryProfile::of(&rhs).map_err(|_| ClassifyError::Constant)?;
        Ok(EquationInstance { lhs, rhs, lhs_profile, rhs_profile })
    }

    pub fn lhs(&self) -> &QPoly {
        &self.lhs
    }

    pub fn rhs(&self) -> &QPoly {
        &self.rhs
    }

    pub fn lhs_profile(&self) -> &LacunaryProfile<Rational> {
        &self.lhs_profile
    }

    pub fn rhs_profile(&self) -> &LacunaryProfile<Rational> {
        &self.rhs_profile
    }

    /// Whether `(x, y)` solves the equation exactly.
    pub fn satisfied_by(&self, x: &Rational, y: &Rational) -> bool {
        self.lhs.eval(x) == self.rhs.eval(y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainCert {
    pub mu: QLinear,
}

/// `rhs = e₁c(d₁x + d₀)x^{m₁−1}` and `lhs = e₁(c₁x + c₀)^{n₁}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Main2Cert {
    pub e1: Rational,
    pub c: Rational,
    pub c1: Rational,
    pub c0: Rational,
    pub d1: Rational,
    pub d0: Rational,
    pub n1: usize,
    pub m1: usize,
}

impl Main2Cert {
    pub fn lhs(&self) -> QPoly {
        QPoly::from_terms([(1, self.c1.clone()), (0, self.c0.clone())]).pow(self.n1).scale(&self.e1)
    }

    pub fn rhs(&self) -> QPoly {
        QPoly::from_terms([(self.m1, self.d1.clone()), (self.m1 - 1, self.d0.clone())]).scale(&(&self.e1 * &self.c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tri2Cert {
    pub case: Tri2Case,
    pub mu: QLinear,
    /// The scaling `ζ` with `a_i = b_i·ζ^{m_i}`, in the scale case.
    pub zeta: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Main(MainCert),
    Main2(Box<Main2Cert>),
    Tri2(Tri2Cert),
}

impl Certificate {
    /// Recomputes the defining identities against `inst` from scratch.
    pub fn verify(&self, inst: &EquationInstance) -> Result<(), ClassifyError> {
        match self {
            Certificate::Main(MainCert { mu }) => {
                if inst.rhs.compose(&mu.to_poly()) != inst.lhs {
                    return Err(ClassifyError::Unverified("lhs is not rhs composed with mu"));
                }
            }
            Certificate::Main2(cert) => {
                let params = [&cert.e1, &cert.c, &cert.c1, &cert.c0, &cert.d1, &cert.d0];
                if params.iter().any(|v| v.is_zero()) {
                    return Err(ClassifyError::Unverified("a parameter is zero"));
                }
                if cert.m1 < 2 || cert.lhs() != inst.lhs || cert.rhs() != inst.rhs {
                    return Err(ClassifyError::Unverified("the two identities do not both hold"));
                }
            }
            Certificate::Tri2(cert) => {
                if inst.rhs.compose(&cert.mu.to_poly()) != inst.lhs {
                    return Err(ClassifyError::Unverified("lhs is not rhs composed with mu"));
                }
                let rel = tri2_relations(inst)?;
                if rel.case.as_ref() != Some(&cert.case) {
                    return Err(ClassifyError::Unverified("coefficient relations do not match the case"));
                }
                if let Some(z) = &cert.zeta {
                    if cert.mu.slope() != z || !cert.mu.intercept().is_zero() {
                        return Err(ClassifyError::Unverified("zeta is not the slope of mu"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    InfinitelyMany(Certificate),
    FinitelyMany,
    HypothesesNotMet(Vec<&'static str>),
    IndecomposabilityUnknown,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::InfinitelyMany(_) => "infinitely-many",
            Outcome::FinitelyMany => "finitely-many",
            Outcome::HypothesesNotMet(_) => "hypotheses-not-met",
            Outcome::IndecomposabilityUnknown => "indecomposability-unknown",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(outcome: Outcome) -> Self {
        Verdict { outcome, notes: Vec::new() }
    }

    fn with_notes(outcome: Outcome, notes: Vec<String>) -> Self {
        Verdict { outcome, notes }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::InfinitelyMany(c) => Some(c),
            _ => None,
        }
    }
}

fn coprime(exps: &[usize]) -> bool {
    crate::rational::gcd_all(exps.iter().copied()) == 1
}

enum Indecomposability {
    Yes,
    No,
    Unknown,
}

fn rhs_indecomposable(rhs: &QPoly) -> Result<Indecomposability, ClassifyError> {
    if rhs.deg() < 2 {
        return Ok(Indecomposability::Yes);
    }
    if rhs.deg() > EXHAUSTIVE_DEGREE_LIMIT {
        return Ok(match decompose::fast_path(rhs)? {
            Some(_) => Indecomposability::Yes,
            None => Indecomposability::Unknown,
        });
    }
    Ok(match decompose::certify_indecomposable(rhs)? {
        IndecomposabilityCertificate::Indecomposable(_) => Indecomposability::Yes,
        IndecomposabilityCertificate::Decomposable(_) => Indecomposability::No,
    })
}

/// Three or more terms on each side, `g` indecomposable and of large degree:
/// infinitely many solutions exactly when `f = g ∘ μ` for a linear `μ`.
pub fn classify_main(inst: &EquationInstance) -> Result<Verdict, ClassifyError> {
    let (fp, gp) = (&inst.lhs_profile, &inst.rhs_profile);
    let (ell, k) = (fp.ell, gp.ell);
    let (n1, m1) = (fp.degree(), gp.degree());
    let mut failed = Vec::new();
    if ell < 3 || k < 3 {
        failed.push("term-count");
    }
    if !coprime(&fp.exponents) || !coprime(&gp.exponents) {
        failed.push("gcd-condition");
    }
    let indecomposable = rhs_indecomposable(&inst.rhs)?;
    if matches!(indecomposable, Indecomposability::No) {
        failed.push("indecomposable");
    }
    if m1 < 2 * ell * ell.saturating_sub(1) {
        failed.push("degree-bound");
    }
    if m1 == k {
        failed.push("m1-ne-k");
    }
    if n1 == ell {
        failed.push("n1-ne-ell");
    }
    if m1 < 2 * k + 1 && n1 < 2 * ell + 1 {
        failed.push("gap-growth");
    }
    if !failed.is_empty() {
        return Ok(Verdict::new(Outcome::HypothesesNotMet(failed)));
    }
    if matches!(indecomposable, Indecomposability::Unknown) {
        return Ok(Verdict::with_notes(
            Outcome::IndecomposabilityUnknown,
            vec![format!("rhs degree {m1} exceeds the exhaustive limit and no fast path applies")],
        ));
    }
    let Some(mu) = linear_equiv(&inst.lhs, &inst.rhs) else {
        return Ok(Verdict::new(Outcome::FinitelyMany));
    };
    let mut notes = Vec::new();
    if mu.intercept().is_zero() {
        notes.push(format!("mu(0) = 0: a_i = b_i * {}^m_i for every i", mu.slope()));
    } else {
        notes.push(format!("mu(0) != 0: n1 = m1 = {n1} <= k + l = {}", k + ell));
    }
    Ok(Verdict::with_notes(Outcome::InfinitelyMany(Certificate::Main(MainCert { mu })), notes))
}

fn binomial_rhs(inst: &EquationInstance) -> Result<(usize, usize), ClassifyError> {
    let gp = &inst.rhs_profile;
    if gp.ell != 2 || !gp.constant.is_zero() {
        return Err(ClassifyError::Shape("rhs must be b1 y^m1 + b2 y^m2 with zero constant"));
    }
    Ok((gp.exponents[0], gp.exponents[1]))
}

/// The certificate for `rhs = e₁c(d₁x + d₀)x^{m₁−1}`,
/// `lhs = e₁(c₁x + c₀)^{n₁}` with all parameters nonzero, normalized to
/// `c₁ = d₁ = 1`.
pub fn main2_certificate(lhs: &QPoly, rhs: &QPoly) -> Option<Main2Cert> {
    let m1 = rhs.degree()?;
    if m1 < 2 || rhs.num_terms() != 2 || rhs.coeff(m1 - 1).is_zero() {
        return None;
    }
    let lp = linear_power_detect(lhs)?;
    if !lp.offset.is_zero() || lp.shift.is_zero() {
        return None;
    }
    let (b1, b2) = (rhs.coeff(m1), rhs.coeff(m1 - 1));
    let cert = Main2Cert {
        c: &b1 / &lp.scale,
        d0: &b2 / &b1,
        e1: lp.scale,
        c1: Rational::one(),
        c0: lp.shift,
        d1: Rational::one(),
        n1: lp.n,
        m1,
    };
    debug_assert!(cert.lhs() == *lhs && cert.rhs() == *rhs);
    Some(cert)
}

/// Binomial right-hand side of large degree: infinitely many solutions when
/// `f` is a shifted power and `g = e₁c(d₁y + d₀)y^{m₁−1}`, provided
/// additionally that `n₁` divides `m₁ − 1`.
pub fn classify_main2(inst: &EquationInstance) -> Result<Verdict, ClassifyError> {
    let (m1, m2) = binomial_rhs(inst)?;
    let fp = &inst.lhs_profile;
    let (ell, n1) = (fp.ell, fp.degree());
    let mut failed = Vec::new();
    if ell < 3 {
        failed.push("term-count");
    }
    if !coprime(&fp.exponents) || m1.gcd(&m2) != 1 {
        failed.push("gcd-condition");
    }
    let l = ell as u64;
    if (m1 as u64) < binomial(l + 2, 2) + l.saturating_sub(1) {
        failed.push("m1-bound");
    }
    if n1 < 3 {
        failed.push("n1-bound");
    }
    if !failed.is_empty() {
        return Ok(Verdict::new(Outcome::HypothesesNotMet(failed)));
    }
    let Some(cert) = main2_certificate(&inst.lhs, &inst.rhs) else {
        return Ok(Verdict::new(Outcome::FinitelyMany));
    };
    if (m1 - 1) % n1 != 0 {
        return Ok(Verdict::with_notes(
            Outcome::FinitelyMany,
            vec![format!(
                "the shape identities hold but n1 = {n1} does not divide m1 - 1 = {}; \
                 the curve then has three places at infinity, so this engine reports \
                 finitely many solutions",
                m1 - 1
            )],
        ));
    }
    let notes = vec![format!("n1 = {n1} divides m1 - 1 = {}", m1 - 1)];
    Ok(Verdict::with_notes(Outcome::InfinitelyMany(Certificate::Main2(Box::new(cert))), notes))
}

/// A certificate of infinitely many solutions that ignores every theorem
/// hypothesis: a linear equivalence, or the shifted-power shape with
/// `n₁ | m₁ − 1`.
pub fn find_certificate(inst: &EquationInstance) -> Option<Certificate> {
    if let Some(mu) = linear_equiv(&inst.lhs, &inst.rhs) {
        return Some(Certificate::Main(MainCert { mu }));
    }
    let cert = main2_certificate(&inst.lhs, &inst.rhs)?;
    ((cert.m1 - 1) % cert.n1 == 0).then_some(Certificate::Main2(Box::new(cert)))
}
