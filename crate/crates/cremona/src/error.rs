use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by field, polynomial, and map operations.
///
/// Parse failures carry a byte offset into the offending input; everything
/// else is a contract violation detected by an operation.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime modulus {0} out of supported range (2 <= p < 2^31)")]
    PrimeOutOfRange(u64),

    #[error("operands belong to different coefficient fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,

    #[error("operands have different variable counts ({0} vs {1})")]
    NvarsMismatch(usize, usize),

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("division is not exact")]
    NonExactDivision,

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("components have mixed degrees ({0} vs {1})")]
    MixedDegrees(usize, usize),

    #[error("all components are zero")]
    ZeroTuple,

    #[error("target degree {target} is smaller than the degree {degree} of the polynomial")]
    DegreeTooSmall { target: usize, degree: usize },

    #[error("polynomial involves x0 and therefore is not an affine-chart polynomial")]
    NonAffinePolynomial,

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("ambient dimensions differ ({0} vs {1})")]
    DimensionMismatch(usize, usize),

    #[error("substitution produced the all-zero tuple (the right factor maps into the indeterminacy locus of the left)")]
    AllZeroSubstitution,

    #[error("component 0 vanishes identically: the map contracts the affine chart x0 = 1")]
    ChartContracted,

    #[error("the supplied pair is not a valid inverse pair")]
    InvalidInversePair,

    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLengthMismatch { expected: usize, got: usize },

    #[error("window {window} exceeds the sequence length {len}")]
    WindowTooLarge { window: usize, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("conjugator factors collide in characteristic {p}: |k| = {k} is not smaller than p")]
    FactorCollision { k: u64, p: u64 },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
