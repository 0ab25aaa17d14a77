use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("{what} requires {min} or more, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("invalid edge {{{0}, {1}}}")]
    InvalidEdge(usize, usize),

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("generator {0} is out of range for a group of order {1}")]
    GeneratorOutOfRange(usize, usize),

    #[error("generating set contains the identity")]
    IdentityGenerator,

    #[error("generating set is not closed under inverses: {0} has inverse {1}")]
    AsymmetricGenerators(usize, usize),

    #[error("eigenvalue iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("tolerance must be positive and finite")]
    BadTolerance,

    #[error("materialized graph would have {required} vertices, above the cap of {cap}")]
    CapExceeded { required: usize, cap: usize },

    #[error("regular degree of the expression is unknown")]
    UnknownDegree,

    #[error("operator kind {0} needs a positive regular degree")]
    ZeroDegree(&'static str),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Byte offset into the expression text.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("repeat count must be positive")]
    ZeroRepeat,
    #[error("number too large")]
    NumberOverflow,
    #[error("invalid atom parameter: {0}")]
    BadParameter(String),
    #[error("cannot load literal {path:?}: {reason}")]
    Literal { path: String, reason: String },
}
