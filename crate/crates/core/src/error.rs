use thiserror::Error;

/// Errors raised by the algebra, rewriting and analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word `{0}` is not a regular (Lyndon-Shirshov) word")]
    NotRegular(String),

    #[error("invalid occurrence: {0}")]
    InvalidOccurrence(String),

    #[error("input set contains a zero element")]
    ZeroElementInInput,

    #[error("input is not homogeneous: {0}")]
    NonHomogeneousInput(String),

    #[error("basis is complete only to degree {complete_to}, degree {requested} requested")]
    IncompleteBasis { complete_to: u32, requested: u32 },

    #[error("f_n is only defined for even n >= 2, got {0}")]
    OddN(u32),

    #[error("quotient still has basis elements in degree {degree} (bound {bound})")]
    NotNilpotentWithinBound { degree: u32, bound: u32 },

    #[error("derivation action does not preserve the relator ideal: {0}")]
    ActionNotWellDefined(String),

    #[error("unsupported nilpotency class {0} (only 2 and 3 are supported)")]
    UnsupportedClass(u32),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
