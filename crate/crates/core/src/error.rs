//! Error types shared across the engine.

use thiserror::Error;

/// Dimension of a germ at the origin. `Empty` follows the convention that the
/// empty set has dimension minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GermDim {
    Empty,
    Dim(usize),
}

impl std::fmt::Display for GermDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GermDim::Empty => write!(f, "-infinity"),
            GermDim::Dim(d) => write!(f, "{}", d),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("reduction step budget exhausted")]
    ResourceLimit,

    #[error("not a curve at the origin (dimension {dim}){}", context.as_ref().map(|c| format!(": {c}")).unwrap_or_default())]
    NotACurve { dim: GermDim, context: Option<String> },

    #[error("precision exhausted at truncation order {order}")]
    PrecisionExhausted { order: u32 },

    #[error("non-proper intersection: `{poly}` vanishes on component with prime ({prime})")]
    NonProperIntersection { poly: String, prime: String },

    #[error("function is constant on stratum `{0}`")]
    ConstantOnStratum(String),

    #[error("genericity sampling failed after {tries} attempts{}", detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default())]
    GenericityFailure { tries: usize, detail: Option<String> },

    #[error("coefficient ring is not an integral domain")]
    RingNotIntegralDomain,

    #[error("hypothesis violated: polar component(s) inside V(f): {0}")]
    HypothesisViolated(String),

    #[error("isolation check failed: {0}")]
    IsolationCheckFailed(String),

    #[error("projection degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
