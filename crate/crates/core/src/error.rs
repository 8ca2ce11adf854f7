use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants fall into three groups: malformed input (the data does not even
/// describe an object of the right shape), failed mathematical preconditions
/// (well-formed data that is not, say, a torsion pair), and resource bounds.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size must be at least 1, got {0}")]
    ZeroSize(u32),

    #[error("quiver is not a disjoint union of linearly oriented A-type paths")]
    NotLinear,

    #[error("quiver must be acyclic for the Euler form")]
    Cyclic,

    #[error("vertex {0} is not in the quiver")]
    UnknownVertex(u32),

    #[error("object {0} does not belong to the category")]
    UnknownObject(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("partition fails the {kind} conditions: {reason}")]
    InvalidPartition { kind: String, reason: String },

    #[error("not a torsion pair: {0}")]
    NotTorsionPair(String),

    #[error("not an n-torsion pair: {0}")]
    NotNTorsionPair(String),

    #[error("torsion classes are not nested at position {0}")]
    NotNested(usize),

    #[error("part index {index} out of range for {len} parts")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("residual is not in the stable class of its support: {0}")]
    ResidualNotStable(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),

    #[error("length cap must be positive")]
    ZeroCap,

    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u64,
        bound: u64,
    },

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("invalid tube classification datum: {0}")]
    InvalidTubeDatum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
