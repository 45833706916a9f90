use thiserror::Error;

/// Errors produced by graph loading, analysis, and bound evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("r = {r} does not divide the index of imprimitivity h = {h}")]
    NotADivisor { r: u64, h: u64 },

    #[error("cyclic partition verification failed: arc {from} -> {to} does not advance one block")]
    PartitionInvalid { from: String, to: String },

    #[error("walk budget exceeded: need counts up to order {needed}, table holds {kmax}")]
    BudgetExceeded { needed: usize, kmax: usize },

    #[error("vertex {label} has no outgoing walk of order {k}; trim sinks first or use k = 0")]
    ZeroCount { label: String, k: usize },

    #[error("graph has sinks ({0} of them); trim sinks first or use k = 0")]
    SinkPresent(usize),

    #[error("weight vector must be strictly positive (entry {index} is {value})")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("A^{m} has no nonzero entry: the adjacency matrix is nilpotent at that power")]
    NilpotentPower { m: usize },

    #[error("reachability pattern is for walk length {got}, expected {expected}")]
    PatternMismatch { expected: usize, got: usize },

    #[error("graph is not average {kappa}-outdegree {r}-quasiregular")]
    NotQuasiregular { kappa: usize, r: u64 },

    #[error("exact characteristic polynomial limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },

    #[error("zero denominator in exact ratio comparison")]
    ZeroDenominator,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
