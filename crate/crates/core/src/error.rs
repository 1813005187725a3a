use thiserror::Error;

/// Errors raised by graph, transit-function and claim operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("input error: {0}")]
    Input(String),
    /// Malformed graph6 text; `offset` is the byte position of the problem.
    #[error("graph6 error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    /// The operation is only defined on connected graphs.
    #[error("graph is disconnected ({n} vertices); this operation requires a connected graph")]
    Disconnected { n: usize },
    /// The operation is exponential and refuses inputs above its size guard.
    #[error("{operation} is a desk-scale operation limited to n <= {limit}, got n = {n}")]
    Capability {
        operation: &'static str,
        limit: usize,
        n: usize,
    },
    /// A claim was used with the wrong kind of instance.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
