//! Crate-wide error type.
//!
//! Domain violations (non-positive lengths, out-of-range fractions,
//! unnormalized packets) are reported through [`Error`]; numeric payloads
//! are formatted into the message so the type stays independent of the
//! scalar parameter.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A parameter failed its validity requirement.
    #[error("{name} must be {requirement} (got {value})")]
    Domain {
        name: &'static str,
        requirement: &'static str,
        value: String,
    },

    /// A wave packet's weighted norm is not 1.
    #[error("wave packet is not normalized: sum of weight * |amplitude|^2 is {norm}")]
    NotNormalized { norm: String },

    /// A collection that must hold data is empty or too short.
    #[error("{what}: need at least {min} entries, got {got}")]
    TooFewEntries {
        what: &'static str,
        min: usize,
        got: usize,
    },
}

impl Error {
    pub(crate) fn domain<V: std::fmt::Display>(
        name: &'static str,
        requirement: &'static str,
        value: V,
    ) -> Self {
        Error::Domain {
            name,
            requirement,
            value: value.to_string(),
        }
    }
}

/// Requires `value` to be finite and strictly positive.
pub(crate) fn ensure_positive<T: crate::scalar::Real>(
    name: &'static str,
    value: T,
) -> Result<()> {
    if !(value.is_finite() && value > T::zero()) {
        return Err(Error::domain(name, "finite and > 0", value));
    }
    Ok(())
}

/// Requires `value` to be finite (any sign).
pub(crate) fn ensure_finite<T: crate::scalar::Real>(name: &'static str, value: T) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::domain(name, "finite", value));
    }
    Ok(())
}
