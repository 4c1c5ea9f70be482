use fibhess::claims::{TableError, VerifyError};
use fibhess::{DetError, MatrixError};

pub const EXIT_MISMATCH: i32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("cannot use OEIS file: {0}")]
    Oeis(String),
    #[error("engines disagree: {0}")]
    EngineDisagreement(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownFamily(_) | CliError::UnknownClaim(_) => 3,
            CliError::OutOfRange(_) => 4,
            CliError::Oeis(_) => 5,
            CliError::EngineDisagreement(_) => 6,
            CliError::Other(_) => 7,
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::EmptyOrder | MatrixError::ColumnOutOfRange { .. } => {
                CliError::OutOfRange(e.to_string())
            }
            MatrixError::NotSubstitutable { .. } => CliError::UnknownFamily(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<DetError> for CliError {
    fn from(e: DetError) -> Self {
        match e {
            DetError::OrderTooLarge { .. } => CliError::OutOfRange(e.to_string()),
            DetError::Matrix(m) => m.into(),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        if e.is_engine_disagreement() {
            return CliError::EngineDisagreement(e.to_string());
        }
        match e {
            VerifyError::UnknownClaim(id) => CliError::UnknownClaim(id),
            VerifyError::EmptySamples | VerifyError::RangeBelowStart { .. } => {
                CliError::OutOfRange(e.to_string())
            }
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        match e {
            TableError::Fault(fault) => CliError::Other(fault.to_string()),
            other => CliError::OutOfRange(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}
