use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands or arguments outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Division by zero and similar arithmetic faults.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// A parameter tuple that cannot belong to any strongly regular graph.
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    /// A desk-scale guard was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// An identity case that does not clear to a polynomial.
    #[error("specification error: {0}")]
    Specification(String),
    /// A mathematical invariant was found broken at runtime.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
