use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("degree sequence is not graphical")]
    NotGraphical,
    #[error("degree sequence has no connected realization")]
    NoConnectedRealization,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0}")]
    Invalid(String),
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("hull oracle refuses graphs with {n} vertices (guard is {guard}); override to force")]
    OracleRefused { n: usize, guard: usize },
    #[error("no connected sample after {attempts} attempts")]
    RejectionLimit { attempts: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Errors that stem from a resource guard rather than bad input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::BudgetExhausted { .. }
                | Error::OracleRefused { .. }
                | Error::RejectionLimit { .. }
        )
    }
}
