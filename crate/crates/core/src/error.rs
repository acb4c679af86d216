use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("wedge of two vector-valued forms ({0} and {1} components)")]
    ValueDimMismatch(usize, usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("group element leaves the unipotent radical")]
    NotInU,
    #[error("value does not lie in the span of the Lie algebra basis")]
    NotInSpan,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("basis is not closed under the bracket: [X{0}, X{1}] leaves the span")]
    NotClosed(usize, usize),
    #[error("differential does not preserve the invariant subspace in degree {0}")]
    NotPreserved(usize),
    #[error("operators do not commute: {0} and {1}")]
    NonCommuting(usize, usize),
    #[error("monodromy does not commute with the Koszul differential in degree {0}")]
    NotEquivariant(usize),
    #[error("odd dimension {0}: no nondegenerate 2-form exists")]
    OddDimension(usize),
    #[error("certificate is not symplectic: {0}")]
    NotSymplectic(String),
    #[error("operation requires the trivial one-dimensional module")]
    RequiresTrivialModule,
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable variant name, used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Inconsistent => "Inconsistent",
            Error::ValueDimMismatch(..) => "ValueDimMismatch",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NotUnipotent => "NotUnipotent",
            Error::NotNilpotent => "NotNilpotent",
            Error::NotInU => "NotInU",
            Error::NotInSpan => "NotInSpan",
            Error::InvalidPresentation(_) => "InvalidPresentation",
            Error::NotClosed(..) => "NotClosed",
            Error::NotPreserved(_) => "NotPreserved",
            Error::NonCommuting(..) => "NonCommuting",
            Error::NotEquivariant(_) => "NotEquivariant",
            Error::OddDimension(_) => "OddDimension",
            Error::NotSymplectic(_) => "NotSymplectic",
            Error::RequiresTrivialModule => "RequiresTrivialModule",
            Error::Singular => "Singular",
            Error::Parse(_) => "Parse",
        }
    }
}
