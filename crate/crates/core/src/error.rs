use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("sequential join needs at least one part")]
    EmptyJoin,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable")]
    NotEquitable,

    #[error("no real root in [{lo}, {hi}]")]
    NoRealRoot { lo: f64, hi: f64 },

    #[error("order {n} and k = {k} differ in parity")]
    Parity { n: usize, k: usize },

    #[error("order {n} is below the required minimum {min} for k = {k}")]
    OrderTooSmall { n: usize, k: usize, min: usize },

    #[error("{what}: order {n} exceeds the guard {guard}")]
    GuardExceeded { what: &'static str, n: usize, guard: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
