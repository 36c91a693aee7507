use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// `Parse` and `Format` are input problems; everything else is a domain error
/// raised by a well-formed input that violates a mathematical precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vector is not in the image of the matrix")]
    NotInImage,

    #[error("shape mismatch at degree {degree}: {detail}")]
    ShapeMismatch { degree: usize, detail: String },

    #[error("boundary composite d_{}∘d_{} is nonzero", degree - 1, degree)]
    NotAComplex { degree: usize },

    #[error("complex has homology in degree {degree} but no homology basis was supplied")]
    MissingHomologyBasis { degree: usize },

    #[error("bad homology basis in degree {degree}: {reason}")]
    BadHomologyBasis { degree: usize, reason: String },

    #[error("torsion changed between choices: {first} vs {second}")]
    IndependenceViolated { first: String, second: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("letter exponent must be nonzero (generator `{0}`)")]
    ZeroExponent(String),

    #[error("representation does not send relator {relator} to the identity")]
    RelatorNotKilled { relator: usize },

    #[error("image of generator `{0}` is not invertible")]
    SingularImage(String),

    #[error("specialized complex fails d∘d = 0 at degree {degree}")]
    NotAComplexAfterSpecialization { degree: usize },

    #[error("conjugating matrix is singular")]
    SingularConjugator,

    #[error("exterior classes have genus {left} and {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("class has a nonzero degree-0 part and is not nilpotent")]
    NonNilpotentInput,

    #[error("Euler degree n = 0 is excluded from this computation")]
    EulerDegreeZero,

    #[error("level must be at least 1, got {0}")]
    InvalidLevel(i64),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonSquare { .. } => "NonSquare",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotInImage => "NotInImage",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::NotAComplex { .. } => "NotAComplex",
            Error::MissingHomologyBasis { .. } => "MissingHomologyBasis",
            Error::BadHomologyBasis { .. } => "BadHomologyBasis",
            Error::IndependenceViolated { .. } => "IndependenceViolated",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::ZeroExponent(_) => "ZeroExponent",
            Error::RelatorNotKilled { .. } => "RelatorNotKilled",
            Error::SingularImage(_) => "SingularImage",
            Error::NotAComplexAfterSpecialization { .. } => "NotAComplexAfterSpecialization",
            Error::SingularConjugator => "SingularConjugator",
            Error::GenusMismatch { .. } => "GenusMismatch",
            Error::NonNilpotentInput => "NonNilpotentInput",
            Error::EulerDegreeZero => "EulerDegreeZero",
            Error::InvalidLevel(_) => "InvalidLevel",
            Error::Parse(_) => "Parse",
        }
    }

    /// True for malformed input, as opposed to a domain failure.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
