use thiserror::Error;

/// Domain errors raised by the algebraic and geometric operations.
///
/// Parse errors live in [`crate::termlang::ParseError`]; they carry a
/// position and are reported differently by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("x must be positive")]
    NonPositiveDilation,
    #[error("centralizer is everything")]
    CentralInput,
    #[error("degenerate pair")]
    DegeneratePair,
    #[error("degenerate line parameters (0,0)")]
    DegenerateLine,
    #[error("auxiliary point lies on the axis")]
    AuxOnAxis,
    #[error("{0} is not in C([0,0,0,2])")]
    NotInDilationCentralizer(String),
    #[error("{0} is not a representative [0,b,0,1]")]
    NotARepresentative(String),
    #[error("construction degenerated: {0}")]
    Construction(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
