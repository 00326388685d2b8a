use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed {what}: {input:?} ({reason})")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("cyclic factor Z{0} is too small (every factor must be at least 2)")]
    FactorTooSmall(u64),

    #[error("element {element} does not belong to group {group}")]
    NotInGroup { element: String, group: String },

    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },

    #[error("connection set is not inverse-closed: {element} is present but its inverse {inverse} is not")]
    NotInverseClosed { element: String, inverse: String },

    #[error("connection set is not power-closed")]
    NotPowerClosed,

    #[error("{group} has no unique element of order two")]
    NoInvolution { group: String },

    #[error("{group} has no unique pair of elements of order four")]
    NoOrderFourPair { group: String },

    #[error("{group} has a non-cyclic Sylow-2-subgroup")]
    NonCyclicSylow2 { group: String },

    #[error("operation requires a group of order 4m with m odd, got {group}")]
    NotOrderFourM { group: String },

    #[error("{element} lies outside the order-4m subgroup")]
    OutsideSubgroup { element: String },

    #[error("non-integral eigenvalue {re}{im:+}i at character {character} (connection set is not power-closed)")]
    NonIntegral { character: String, re: f64, im: f64 },

    #[error("{what} size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("ambiguous state transfer: {targets:?} all have near-unit amplitude (tolerance too loose)")]
    AmbiguousPst { targets: Vec<String> },

    #[error("cross-validation mismatch for {set}: algebraic verdict {algebraic}, numeric verdict {numeric}")]
    CrossValidationMismatch {
        set: String,
        algebraic: bool,
        numeric: bool,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
