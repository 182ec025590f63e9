use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // diagram construction
    #[error("odd number of passes ({0})")]
    OddLength(usize),
    #[error("crossing {0} must occur exactly twice, once over and once under")]
    IdNotPairedOnceOverOnceUnder(u32),
    #[error("crossing {0} carries two different signs")]
    SignMismatch(u32),
    #[error("crossing ids must be positive")]
    ZeroId,
    #[error("operation needs at least one crossing")]
    ZeroCrossings,
    #[error("no crossing with id {0}")]
    UnknownCrossing(u32),
    #[error("edge {edge} out of range (diagram has {edges} edges)")]
    EdgeOutOfRange { edge: usize, edges: usize },

    // polynomials
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("upper degree {udeg} exceeds {c}")]
    DegreeExceedsC { udeg: usize, c: usize },
    #[error("cannot shift down by {by}: lower degree is {ldeg}")]
    ShiftBelowZero { by: usize, ldeg: usize },

    // warping
    #[error("labeling does not close up: {0}")]
    InconsistentClosure(String),

    // transforms
    #[error("no edge labeled {0}")]
    NoSuchLabel(usize),
    #[error("connected sum needs both summands to have crossings")]
    EmptySummand,

    // characterization
    #[error("one-bridge diagrams need l >= 1")]
    NonPositiveL,
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("witness verification failed: expected {expected}, got {got}")]
    VerificationFailed { expected: String, got: String },

    // notation
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("negative coefficient")]
    NegativeCoefficient,
    #[error("negative degree")]
    NegativeDegree,
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("braid closure has more than one component")]
    NotAKnot,

    // search
    #[error("crossing count {c} exceeds bound {bound}")]
    BoundExceeded { c: usize, bound: usize },
    #[error("{c} crossings is too many for subset search (limit {limit})")]
    TooLarge { c: usize, limit: usize },
    #[error("no set of crossing changes makes this code alternating")]
    NotAlternatable,
    #[error("no recipe builds a diagram with {c} crossings and span {s}")]
    NotConstructible { c: usize, s: usize },
}
