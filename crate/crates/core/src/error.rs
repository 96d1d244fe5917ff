use thiserror::Error;

/// Crate-wide error type. Domain errors carry the offending identifier so the
/// CLI can forward messages verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("duplicate arrow `{0} -> {1}` (use the valuation field for multiplicity)")]
    DuplicateArrow(String, String),
    #[error("non-composable relation path: {0}")]
    NonComposable(String),
    #[error("translation defined on projective vertex `{0}`")]
    TauOnProjective(String),
    #[error("translation image `{0}` assigned twice")]
    TauNotInjective(String),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("loop present")]
    LoopPresent,
    #[error("disconnected input")]
    Disconnected,
    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("not a closed slice: {0}")]
    NotAClosedSlice(String),
    #[error("non-Euclidean input: {0}")]
    NotEuclidean(String),
    #[error("no defect exponent d <= {0} found")]
    DefectNotFound(u32),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("not a coray vertex: `{0}`")]
    NotCorayVertex(String),
    #[error("not a ray vertex: `{0}`")]
    NotRayVertex(String),
    #[error("not a translation quiver: {0}")]
    NotTranslationQuiver(String),
    #[error("inconsistent seeds: {0}")]
    InconsistentSeeds(String),
    #[error("schedule references unknown label `{0}`")]
    UnknownScheduleLabel(String),
    #[error("dimension arithmetic overflow")]
    Overflow,
    #[error("empty range")]
    EmptyRange,
    #[error("subgraph is not full")]
    NonFullSubgraph,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
