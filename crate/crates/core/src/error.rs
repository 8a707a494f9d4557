use thiserror::Error;

use crate::mpoly::IntMPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("complex pair (z = {z}, y = {y}) has real roots: z^2 >= 4y")]
    RealQuadratic { z: String, y: String },

    #[error("polynomial has a zero constant term; reversal would drop the degree")]
    ZeroConstantTerm,

    #[error("endpoint {0} is a root; nudge the endpoint and retry")]
    EndpointIsRoot(String),

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("empty interval: lower endpoint is not below the upper endpoint")]
    EmptyInterval,

    #[error("not a sign-pattern polynomial: coefficient of x^{0} is zero")]
    ZeroCoefficient(usize),

    #[error("sign pattern must start with '+' and have at least two entries")]
    BadPattern,

    #[error("({pos}, {neg}) is not an admissible pair for {pattern}")]
    Inadmissible { pattern: String, pos: usize, neg: usize },

    #[error("invalid three-block pattern S({m},{n},{q})")]
    BadBlocks { m: usize, n: usize, q: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable sets differ: {0} vs {1}")]
    VariableMismatch(String, String),

    #[error("polynomial is constant in {0}; resultant is undefined")]
    ConstantInVariable(String),

    #[error("certificate does not sum to the target; residual = {residual}")]
    CertificateMismatch { residual: IntMPoly },

    #[error("certificate piece {index} is not nonnegative: {reason}")]
    CertificatePiece { index: usize, reason: String },

    #[error("certificate remainder has a negative coefficient: {0}")]
    NegativeRemainder(IntMPoly),

    #[error("certificate factor is not all-positive: {0}")]
    FactorNotPositive(IntMPoly),

    #[error("no epsilon found within {halvings} halvings")]
    EpsilonExhausted { halvings: u32 },

    #[error("perturbation budget exhausted after {halvings} halvings")]
    PerturbationExhausted { halvings: u32 },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("requested root count out of range: {0}")]
    OutOfRange(String),

    #[error("discriminant is not positive at the sample point")]
    NonPositiveDiscriminant,

    #[error("witness failed re-certification: {0}")]
    Certification(String),

    #[error("inconsistent criteria for {0}: both a realizability and a nonrealizability criterion fire")]
    Inconsistent(String),
}
