use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} requires a nonnegative argument, got {value}")]
    NegativeArgument { what: &'static str, value: i64 },

    #[error("{dividend} is not divisible by {divisor} in Z[q, q^-1]")]
    NotDivisible { dividend: String, divisor: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("cannot evaluate a Laurent polynomial at q = 0")]
    EvaluateAtZero,

    #[error("word has {0} letters; at most {max} are supported", max = crate::freealg::Word::MAX_LEN)]
    WordTooLong(usize),

    #[error("{op}: word {word} {reason}")]
    StripLetter {
        op: &'static str,
        word: String,
        reason: &'static str,
    },

    #[error("{0} is not a Catalan word")]
    NotCatalan(String),

    #[error("{0} is not a Catalan profile")]
    NotCatalanProfile(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
