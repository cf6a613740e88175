use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not strictly decreasing positive integers")]
    NotStrict(Vec<u32>),

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("letter value {value} outside alphabet 1..={n}")]
    LetterOutOfRange { value: u32, n: u8 },

    #[error("word is not in canonical form: first occurrence of {0} is primed")]
    NotCanonical(u8),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operator index {index} outside 1..{n}")]
    InvalidIndex { index: u8, n: u8 },

    #[error("operator produced a non-semistandard filling: {0}")]
    BrokenSemistandard(String),

    #[error("the {{{index},{index}'}}-component of vertex {vertex} is neither a separated nor a collapsed string")]
    NotAString { vertex: usize, index: u8 },

    #[error("component has {0} highest weight vertices")]
    NotUnique(usize),

    #[error("highest weight {0:?} is not a strict partition padded with zeros")]
    NotStrictWeight(Vec<u32>),

    #[error("vertex {vertex} lacks the arrows needed for delta at index {index}")]
    MissingArrow { vertex: usize, index: u8 },

    #[error("malformed graph: {0}")]
    MalformedGraph(String),
}
