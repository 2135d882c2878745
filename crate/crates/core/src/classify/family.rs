use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{Certificate, ClassifyError, EquationInstance, Main2Cert, MainCert, Tri2Cert};
use crate::poly::pow_scalar;
use crate::{QLinear, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    /// `(t, μ(t))`.
    Graph { mu: QLinear },
    /// `y = (c^s·uⁿ¹ − d₀)/d₁`, `x = (c^q·u·y^t − c₀)/c₁` with
    /// `t = (m₁ − 1)/n₁` and `q·n₁ = s + 1`.
    Parametric { cert: Box<Main2Cert>, q: usize, s: usize, t: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub parameter: BigInt,
    pub x: Rational,
    pub y: Rational,
}

/// An infinite set of solutions indexed by an integer parameter. Every
/// member has `δx` and `δy` integral.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionFamily {
    kind: FamilyKind,
    delta: BigInt,
    inst: EquationInstance,
}

fn den(r: &Rational) -> BigInt {
    r.denom().clone()
}

impl SolutionFamily {
    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    fn unchecked(&self, u: &Rational) -> (Rational, Rational) {
        match &self.kind {
            FamilyKind::Graph { mu } => (u.clone(), mu.eval(u)),
            FamilyKind::Parametric { cert, q, s, t } => {
                let y = (pow_scalar(&cert.c, *s) * pow_scalar(u, cert.n1) - &cert.d0) / &cert.d1;
                let x = (pow_scalar(&cert.c, *q) * u * pow_scalar(&y, *t) - &cert.c0) / &cert.c1;
                (x, y)
            }
        }
    }

    /// The member at `parameter`, checked against the equation.
    pub fn member(&self, parameter: &BigInt) -> Result<FamilyMember, ClassifyError> {
        let (x, y) = self.unchecked(&Rational::from_integer(parameter.clone()));
        if !self.inst.satisfied_by(&x, &y) {
            return Err(ClassifyError::Unverified("family member does not solve the equation"));
        }
        if !self.delta.is_multiple_of(x.denom()) || !self.delta.is_multiple_of(y.denom()) {
            return Err(ClassifyError::Unverified("family member exceeds the denominator bound"));
        }
        Ok(FamilyMember { parameter: parameter.clone(), x, y })
    }

    /// The first `count` members for parameters `0, 1, −1, 2, −2, …`.
    pub fn members(&self, count: usize) -> Result<Vec<FamilyMember>, ClassifyError> {
        (0..count as i64)
            .map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -i / 2 })
            .map(|u| self.member(&BigInt::from(u)))
            .collect()
    }
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FamilyKind::Graph { mu } => write!(f, "x = t, y = {}", mu.to_poly().display_in("t")),
            FamilyKind::Parametric { cert, q, s, t } => {
                let (c, d0, d1, c0, c1) = (&cert.c, &cert.d0, &cert.d1, &cert.c0, &cert.c1);
                write!(f, "y = (({c})^{s} u^{} - ({d0})) / ({d1}), x = (({c})^{q} u y^{t} - ({c0})) / ({c1})", cert.n1)
            }
        }
    }
}

fn graph(mu: &QLinear, inst: &EquationInstance) -> SolutionFamily {
    SolutionFamily {
        delta: den(mu.slope()).lcm(&den(mu.intercept())),
        kind: FamilyKind::Graph { mu: mu.clone() },
        inst: inst.clone(),
    }
}

/// The family attached to a verified certificate.
pub fn solution_family(cert: &Certificate, inst: &EquationInstance) -> Result<SolutionFamily, ClassifyError> {
    cert.verify(inst)?;
    match cert {
        Certificate::Main(MainCert { mu }) | Certificate::Tri2(Tri2Cert { mu, .. }) => Ok(graph(mu, inst)),
        Certificate::Main2(cert) => {
            let n1 = cert.n1;
            if (cert.m1 - 1) % n1 != 0 {
                return Err(ClassifyError::NoFamily("n1 does not divide m1 - 1"));
            }
            let (t, q, s) = ((cert.m1 - 1) / n1, 1, n1 - 1);
            // denominators of y and x at integer u
            let dy = den(&(pow_scalar(&cert.c, s) / &cert.d1)).lcm(&den(&(&cert.d0 / &cert.d1)));
            let dx_scale = den(&(pow_scalar(&cert.c, q) / &cert.c1)) * num_traits::pow(dy.clone(), t);
            let dx = dx_scale.lcm(&den(&(&cert.c0 / &cert.c1)));
            let delta = dy.lcm(&dx);
            debug_assert!(delta >= BigInt::one());
            Ok(SolutionFamily {
                kind: FamilyKind::Parametric { cert: cert.clone(), q, s, t },
                delta,
                inst: inst.clone(),
            })
        }
    }
}
