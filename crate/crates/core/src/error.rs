use thiserror::Error;

/// Errors raised by constructors, deciders and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("no {t}-regular graph on {n} vertices")]
    NoRegularGraph { n: usize, t: usize },

    #[error("cannot delete every vertex of the graph")]
    DeleteAll,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("power iteration did not reach the residual tolerance within {0} iterations")]
    NoConvergence(usize),

    #[error("characteristic polynomial root could not be bracketed: {0}")]
    Bracket(String),
}

pub type Result<T> = std::result::Result<T, Error>;
