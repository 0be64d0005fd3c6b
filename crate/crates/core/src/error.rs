use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("failed to converge: {0}")]
    Convergence(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("series diverges: {0}")]
    Divergence(String),

    #[error("summation unstable: spread {spread:e} exceeds limit {limit:e}")]
    Instability { spread: f64, limit: f64 },
}

impl Error {
    pub(crate) fn pole(s: Complex64) -> Self {
        Error::Pole { re: s.re, im: s.im }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Rejects values that are not finite, so no NaN/∞ escapes an operation.
pub(crate) fn finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(format!("{what} is not representable")))
    }
}

