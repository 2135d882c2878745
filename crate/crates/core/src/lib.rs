//! Exact analysis of lacunary polynomials over the rationals and of the
//! separated-variable equations `f(x) = g(y)` they define.
//!
//! The polynomial layer ([`Poly`], [`LinearPoly`], square-free analysis,
//! Dickson polynomials, decomposition) is generic over [`Scalar`]; the
//! decision procedures in [`classify`] and [`pairs`] work over [`Rational`].

pub mod classify;
pub mod decompose;
pub mod dickson;
pub mod lacunary;
pub mod linear;
pub mod linear_power;
pub mod pairs;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod search;
pub mod squarefree;

pub use classify::{EquationInstance, Outcome, Verdict};
pub use linear::{LinearPoly, ZeroSlope};
pub use linear_power::{linear_power_detect, LinearPower};
pub use parse::{parse_poly, ParseError};
pub use poly::{Poly, PolyError};
pub use scalar::Scalar;
pub use squarefree::{multiplicity_profile, MultiplicityProfile};

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Polynomials with rational coefficients.
pub type QPoly = Poly<Rational>;
/// Linear polynomials with rational coefficients.
pub type QLinear = LinearPoly<Rational>;
