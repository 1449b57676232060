use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected; components: {components:?}")]
    Disconnected { components: Vec<Vec<usize>> },

    #[error("vertex {vertex} out of range (n = {n})")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("search space of {required} exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("an embedding exists at the cap; result is at least {lower_bound}")]
    CapReached { lower_bound: usize },

    #[error("cover layer {layer} would hold {size} vertices, above the cap {cap}")]
    RadiusTooLarge { layer: usize, size: usize, cap: usize },

    #[error("no diagonal-extension fixpoint within {cap} rounds")]
    RankDiverges { cap: usize },

    #[error("not a closed walk: {0}")]
    NotAClosedWalk(String),

    /// A guarantee that should hold by theory was observed to fail.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for budget and cap style guards.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. }
                | Error::CapReached { .. }
                | Error::RadiusTooLarge { .. }
                | Error::RankDiverges { .. }
        )
    }
}
