use thiserror::Error;

use crate::polyring::BiLaurent;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A division left a nonzero remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("unsupported operation: {0}")]
    UnsupportedOperation(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// Parameters outside the range where the moduli space is non-empty.
    #[error("empty moduli space: {0}")]
    EmptyModuli(String),

    #[error("sigma = {0} is a critical value")]
    CriticalValue(String),

    /// A hypothesis of the closed formula does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A parity case for which no formula is available.
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    /// Flip and large-sigma formulas exist only when d1 + d2 is odd.
    #[error("d1 + d2 = {0} is even; wall-crossing formulas require an odd degree sum")]
    EvenDegreeSum(i64),

    /// Two independent routes to the same polynomial disagree.
    #[error("consistency failure in {check}: nonzero residual {residual}")]
    Consistency { check: String, residual: BiLaurent },
}

impl Error {
    /// Internal failures (as opposed to rejected inputs).
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InexactDivision(_) | Error::DivisionByZero | Error::Consistency { .. }
        )
    }
}
