use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("square root of a negative value: approximation {approx} at precision {precision}")]
    NegativeSqrt { precision: u32, approx: String },

    #[error("space mismatch: expected space {expected}, found space {found}")]
    SpaceMismatch { expected: u64, found: u64 },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    /// A tail bound could not be certified from the data at hand.
    #[error("precision exhausted after {terms} terms: {detail}")]
    PrecisionExhausted { terms: usize, detail: String },

    #[error("spectral hypothesis violated: {0}")]
    SpectralViolation(String),

    #[error("unsupported scalar field: {0}")]
    UnsupportedField(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn exhausted(terms: usize, detail: impl Into<String>) -> Self {
        Error::PrecisionExhausted {
            terms,
            detail: detail.into(),
        }
    }

    pub fn is_precision_exhausted(&self) -> bool {
        matches!(self, Error::PrecisionExhausted { .. })
    }
}
