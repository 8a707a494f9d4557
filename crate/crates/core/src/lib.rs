//! Exact tools for Descartes' rule of signs: sign patterns, admissible root
//! counts, certified witness polynomials, and verification of the symbolic
//! computations behind nonrealizability results.

pub mod catalog;
pub mod certificate;
pub mod criteria;
pub mod error;
pub mod interval;
pub mod mpoly;
pub mod oracle;
pub mod poly;
pub mod prop3_verifier;
pub mod scalar;
pub mod signpat;
pub mod sturm;
pub mod witness;

pub use error::{Error, Result};
pub use mpoly::{IntMPoly, Var};
pub use poly::{Poly, RootSpec};
pub use scalar::Scalar;

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Univariate polynomial with exact rational coefficients.
pub type RatPoly = Poly<Rational>;
pub type F64Poly = Poly<f64>;
pub type F32Poly = Poly<f32>;
