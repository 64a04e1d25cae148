use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter {0:?}")]
    UnknownLetter(char),

    #[error("invalid generator name {0:?} (expected a lowercase ASCII letter)")]
    InvalidGeneratorName(char),

    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(char),

    #[error("too many generators: {0} (the text format supports at most 26)")]
    TooManyGenerators(usize),

    #[error("presentation line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("rule {index} ({rule}): {reason}")]
    InvalidRule {
        index: usize,
        rule: String,
        reason: &'static str,
    },

    #[error("rewriting model requires an explicit confluence assertion")]
    NotConfluentAsserted,

    #[error("relator {0} does not rewrite to the empty word")]
    RelatorNotTrivial(String),

    #[error("rewriting smoke test failed: {inserted} and {plain} have different normal forms")]
    RelatorInsertionMismatch { inserted: String, plain: String },

    #[error("capacity exceeded: more than {limit} entries")]
    CapacityExceeded { limit: usize },

    #[error("element lies outside the ball of radius {radius}")]
    RadiusExceeded { radius: usize },

    #[error("word {0} is not geodesic")]
    NotGeodesic(String),

    #[error("automaton rejects {0}, so it is not a geodesic input")]
    NotGeodesicInput(String),

    #[error("no letter decreases the length at descent step {step}")]
    NoDescentLetter { step: usize },

    #[error("search budget exhausted at prefix position {position}")]
    BudgetExhausted { position: usize },

    #[error("inconsistent oracle: {0}")]
    InconsistentOracle(String),

    #[error("invalid model selector {0:?}")]
    InvalidModel(String),
}
