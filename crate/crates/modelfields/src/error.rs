//! Error type shared by the symbolic and numeric operations.

use std::fmt;

/// Errors raised when an operation's input is outside its domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A weight system needs at least one variable and all `m_j > 0`.
    InvalidWeightSystem(String),
    /// The polynomial is not real-valued.
    NotReal,
    /// The polynomial contains antiholomorphic or boundary variables.
    NotHolomorphic,
    /// The polynomial is not weighted-homogeneous of the required weight.
    NotHomogeneous(String),
    /// A polynomial was used in the wrong variable context.
    ContextMismatch(String),
    /// Operand variable counts disagree.
    VariableCountMismatch { left: usize, right: usize },
    /// A substitution or field had the wrong weight.
    WrongWeight(String),
    /// A coordinate change could not be inverted exactly.
    NotInvertible(String),
    /// The vector field is outside the scope of the requested normalization.
    UnsupportedField(String),
    /// Evaluation hit a singular point of the transform.
    SingularPoint,
    /// A direction vector must be nonzero.
    ZeroDirection,
    /// Anything else with a one-line description.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWeightSystem(s) => write!(f, "invalid weight system: {s}"),
            Error::NotReal => write!(f, "polynomial is not real-valued"),
            Error::NotHolomorphic => write!(f, "polynomial is not holomorphic"),
            Error::NotHomogeneous(s) => write!(f, "not weighted-homogeneous: {s}"),
            Error::ContextMismatch(s) => write!(f, "variable context mismatch: {s}"),
            Error::VariableCountMismatch { left, right } => {
                write!(f, "variable counts disagree: {left} vs {right}")
            }
            Error::WrongWeight(s) => write!(f, "wrong weight: {s}"),
            Error::NotInvertible(s) => write!(f, "substitution is not invertible: {s}"),
            Error::UnsupportedField(s) => write!(f, "unsupported vector field: {s}"),
            Error::SingularPoint => write!(f, "singular point of the transform"),
            Error::ZeroDirection => write!(f, "direction vector must be nonzero"),
            Error::Invalid(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for Error {}
