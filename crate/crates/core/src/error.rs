use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("binomial top argument must be non-negative, got {0}")]
    NegativeArgument(String),

    #[error("{what} must be positive")]
    NonPositive { what: &'static str },

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("constant term must be 1, got {0}")]
    ConstantTermNotOne(String),

    #[error("coefficient {index} is negative ({value})")]
    NegativeCoefficient { index: usize, value: String },

    #[error("coefficient {index} must be strictly positive, got {value}")]
    NonPositiveCoefficient { index: usize, value: String },

    #[error("malformed vector: {0}")]
    MalformedVector(String),

    #[error("dimension mismatch: expected at most {expected} entries, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cannot parse token '{token}' in '{input}'")]
    Parse { token: String, input: String },

    #[error("oracle bound exceeded: {value} > {bound}")]
    OracleBoundExceeded { value: String, bound: u64 },

    #[error("vector fails the Kruskal-Katona condition at index {index}")]
    NotKruskalKatona { index: usize },

    #[error("face {0} uses a label outside the ground set")]
    LabelNotInGround(String),

    #[error("{0} is not a face of the complex")]
    FaceNotInComplex(String),

    #[error("complex is not closed under taking subsets: {0}")]
    NotDownwardClosed(String),

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid triangle spec: {0}")]
    InvalidTriangleSpec(String),

    #[error("unknown triangle '{0}'")]
    UnknownTriangle(String),

    #[error("unknown campaign '{0}'")]
    UnknownCampaign(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
