use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when constructing or combining automata.
///
/// Errors fall into two families: precondition violations (bad letters,
/// out-of-range states, malformed input) and resource exhaustion
/// ([`Error::BudgetExceeded`]). The CLI maps the former to exit code 2 and
/// the latter to exit code 3.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate letter '{0}' in alphabet")]
    DuplicateLetter(char),

    #[error("letter '{0}' is not in the alphabet")]
    UnknownLetter(char),

    #[error("letter index {index} out of range for alphabet of {len} letters")]
    LetterIndexOutOfRange { index: usize, len: usize },

    #[error("automaton must have at least one state")]
    NoStates,

    #[error("state {state} out of range for {n} states")]
    StateOutOfRange { state: usize, n: usize },

    #[error("duplicate state {0} in state list")]
    DuplicateState(usize),

    #[error("transformations act on different state counts ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("witness requires at least {min} states, got {n}")]
    TooFewStates { n: usize, min: usize },

    #[error("dialect maps two letters to '{0}'")]
    DialectNotInjective(char),

    #[error("letter '{0}' is outside the master alphabet a-d")]
    OutsideMasterAlphabet(char),

    #[error("dialect has {len} entries but the master alphabet has only {max}")]
    DialectTooLong { len: usize, max: usize },

    #[error("empty dialect string")]
    EmptyDialect,

    #[error("epsilon transitions are not enabled on this NFA")]
    EpsilonNotEnabled,

    #[error("{what} budget of {budget} exceeded ({reached} reached)")]
    BudgetExceeded {
        what: &'static str,
        budget: usize,
        reached: usize,
    },

    #[error("subset {subset} at state {state} matches no expected product shape: {detail}")]
    CensusShapeViolation {
        state: usize,
        subset: String,
        detail: String,
    },

    #[error("invalid JSON automaton: {0}")]
    Json(String),

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors caused by exhausting a configured resource budget
    /// rather than by bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
