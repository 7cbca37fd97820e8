use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word, tree or partition does not have the shape an operation requires.
    #[error("structural error: {0}")]
    Structural(String),

    /// The input is well formed but violates an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{what} = {value} is out of range ({bound})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        bound: String,
    },

    #[error("no vertex labeled {0}")]
    UnknownLabel(u32),

    /// Enumeration size beyond the configured bound; see [`crate::limits::Limits`].
    #[error("{what} with n = {n} exceeds the capacity bound {limit}")]
    Capacity {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("h-vector {0:?} is not palindromic")]
    NotPalindromic(Vec<String>),

    #[error("the zero polynomial has no well-defined root structure")]
    ZeroPolynomial,

    #[error("invalid building set: {reason} (witness {witness:?})")]
    BuildingSet {
        reason: String,
        witness: Vec<Vec<u32>>,
    },

    #[error("building set is not chordal; its h-vector needs B-trees, which are not supported")]
    NotChordal,

    #[error("building set is not connected")]
    NotConnected,
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
