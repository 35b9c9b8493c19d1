use thiserror::Error;

/// Failures surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("matrix is not unitary (max ||lambda|-1| = {residual:e})")]
    NotUnitary { residual: f64 },

    #[error("S-matrix has a pole at k = {k}: resolvent factor is singular")]
    SingularResolvent { k: f64 },

    #[error("A/B reduction undefined: {0}")]
    ReductionUndefined(&'static str),

    #[error("no root bracketed on [{lo}, {hi}]")]
    BracketNotFound { lo: f64, hi: f64 },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// Whether the failure stems from bad input rather than numerics.
    pub fn is_invalid_input(&self) -> bool {
        matches!(self, Error::InvalidParameter { .. } | Error::ReductionUndefined(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
