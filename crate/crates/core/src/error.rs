use thiserror::Error;

use crate::cartan::RootVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("reducible Cartan matrix A({m},{n}): off-diagonal entries must both be nonzero")]
    Reducible { m: u32, n: u32 },

    #[error("invalid simple-root index {0}: expected 1 or 2")]
    InvalidSimpleIndex(usize),

    #[error("{0} is not a real root")]
    NotARealRoot(Box<RootVector>),

    #[error("A({m},{n}) is of finite type; the operation needs an infinite dihedral Weyl group")]
    FiniteType { m: u32, n: u32 },

    #[error("roots {} and {} are not prenilpotent", .0.0, .0.1)]
    NotPrenilpotent(Box<(RootVector, RootVector)>),

    #[error("bracket support needs two distinct roots, got {0} twice")]
    EqualRoots(Box<RootVector>),

    #[error("wrong matrix shape A({m},{n}): expected A(k,1) or A(1,k) with k > 4")]
    WrongShape { m: u32, n: u32 },

    #[error("window must be at least {min}, got {got}")]
    InvalidWindow { got: u32, min: u32 },

    #[error("q = {0} is not a prime power >= 2")]
    NotPrimePower(u64),

    #[error("{0}")]
    MissingData(&'static str),

    #[error("group of order {order} exceeds the size budget {budget}")]
    BudgetExceeded { order: u128, budget: usize },

    #[error("the shift acts trivially on F wr Z/1; need at least 2 copies")]
    TrivialShift,

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("i/o error: {0}")]
    Io(String),

    /// An internal consistency check failed. Never caused by user input.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures of internal invariants (orbit-growth guard, post-condition checks).
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
