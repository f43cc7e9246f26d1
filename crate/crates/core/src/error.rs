use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid omega `{input}`: {reason}")]
    InvalidOmega { input: String, reason: &'static str },

    #[error("invalid word `{0}`: letters must be in {{a, b, c, d}}")]
    InvalidWord(String),

    #[error("invalid ray `{0}`: expected a binary string or `0inf`")]
    InvalidRay(String),

    #[error("invalid cube vertex `{0}`")]
    InvalidVertex(String),

    #[error("elements over different sequences ({left} and {right}) cannot be compared")]
    OmegaMismatch { left: String, right: String },

    #[error("unsupported configuration: omega {0} has a repetition (omega_i = omega_i+1)")]
    NotRepetitionFree(String),

    #[error("cube of dimension {dimension} exceeds the cap of {cap}")]
    DimensionCap { dimension: usize, cap: usize },

    #[error("cube labels are not distinct")]
    DuplicateLabels,

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
}
