use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a complete-intersection Hilbert function: {0:?}")]
    NotCiShape(Vec<usize>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("diagonal lengths {found:?} differ from {expected:?}")]
    DiagonalMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("invalid branch label: {0}")]
    InvalidLabel(String),
    #[error("partition {0} is not a CI Jordan type")]
    NotCijt(String),
    #[error("partition {0} is not a CI Jordan type with d parts")]
    NotCijtWithDParts(String),
    #[error("invalid Hessian subset {0:?}")]
    InvalidSubset(Vec<usize>),
    #[error("the top generic Jordan type needs k >= 2")]
    TopRequiresKGe2,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("zero linear form")]
    ZeroForm,
    #[error("quotient is not Artinian")]
    NotArtinian,
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),
    #[error("Hessian order {0} out of range")]
    OrderOutOfRange(usize),
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
