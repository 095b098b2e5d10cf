use std::fmt;

/// Which bound was missing when a poset failed to be a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Meet,
    Join,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Meet => f.write_str("greatest lower bound"),
            Bound::Join => f.write_str("least upper bound"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("cover relation is not acyclic: cycle through `{0}`")]
    CycleDetected(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("not a lattice: `{x}` and `{y}` have no {bound}")]
    NotALattice { x: String, y: String, bound: Bound },
    #[error("not distributive: {x} ∧ ({y} ∨ {z}) ≠ ({x} ∧ {y}) ∨ ({x} ∧ {z})")]
    NotDistributive { x: String, y: String, z: String },
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("invalid frame map: {0}")]
    InvalidMap(String),
    #[error("frame is degenerate (0 = 1)")]
    DegenerateFrame,
    #[error("{what} exceeds the budget of {limit} elements")]
    BudgetExceeded { what: String, limit: usize },
    #[error("no separating arrow found")]
    NotFound,
    #[error("incompatible arrows: {0}")]
    Mismatch(String),
    #[error("frame spec: {0}")]
    Spec(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
