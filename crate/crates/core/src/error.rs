use thiserror::Error;

/// Errors surfaced by the library API.
#[derive(Debug, Error)]
pub enum SpiralError {
    #[error("epsilon has length {got}, expected p - 1 = {expected}")]
    EpsilonLength { got: usize, expected: usize },

    #[error("epsilon entries must be +1 or -1 (found {0})")]
    EpsilonEntry(i8),

    #[error("parameters out of range: need p >= 2 and q >= 1 (got p = {p}, q = {q})")]
    ParamRange { p: usize, q: usize },

    #[error("prefix length {k} out of range 0..={len}")]
    PrefixRange { k: usize, len: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("resultant requires deg_x f >= 1 and nonzero inputs")]
    ResultantDegree,

    #[error("torus closed form needs coprime p, q >= 2 (got {p}, {q})")]
    NotCoprime { p: usize, q: usize },

    #[error("diagram has {crossings} crossings, over the state-sum cap {cap}")]
    CrossingCap { crossings: usize, cap: usize },

    #[error("matrix-power engine capped at (p-1)(q-1) <= {cap} (got {dim})")]
    MolinariCap { dim: usize, cap: usize },

    #[error("census invariant violated for S({p},{q},{eps}): {what}")]
    InvariantViolation { p: usize, q: usize, eps: String, what: String },

    #[error("bad match-table row {row}: {what}")]
    MatchTable { row: usize, what: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, SpiralError>;
