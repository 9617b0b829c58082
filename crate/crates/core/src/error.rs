use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("value too large: {0}")]
    ValueTooLarge(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero in the field")]
    DivisionByZero,

    #[error("invalid group: {0}")]
    InvalidSpec(String),

    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    #[error("ppd({p},{m}) is empty{}", if (*.p, *.m) == (2, 6) { " (the Zsigmondy exception)" } else { "" })]
    EmptyPpd { p: u64, m: u32 },

    #[error("{r} is not in ppd({p},{m})")]
    NotPpd { r: u128, p: u64, m: u32 },

    #[error("retry budget exhausted after {0} draws")]
    RetryBudgetExhausted(usize),

    #[error("the pair does not generate the group")]
    NotGenerating,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("empty experiment")]
    EmptyExperiment,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("comparison could not be decided at the available precision")]
    Undecided,

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
