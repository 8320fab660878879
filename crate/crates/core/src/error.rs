use std::time::Duration;

use thiserror::Error;

/// Snapshot of a Buchberger run at the moment a resource limit was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetLog {
    pub limit: String,
    pub basis_size: usize,
    pub pairs_processed: usize,
    pub pairs_pending: usize,
    pub max_degree_seen: u32,
    pub elapsed: Duration,
}

impl std::fmt::Display for BudgetLog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} (basis {}, pairs done {}, pending {}, max degree {}, {:.1}s)",
            self.limit,
            self.basis_size,
            self.pairs_processed,
            self.pairs_pending,
            self.max_degree_seen,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("leading term of the zero polynomial")]
    EmptyPolynomial,
    #[error("out of bounds: {0}")]
    Bounds(String),
    #[error("not a c-chain: {0}")]
    Chain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("row order violated: {0}")]
    Ordering(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource budget exceeded: {0}")]
    Budget(Box<BudgetLog>),
    #[error("rule not applicable")]
    NotApplicable,
    #[error("no admissible position for value {0}")]
    Infeasible(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
