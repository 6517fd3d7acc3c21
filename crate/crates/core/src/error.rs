use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set of {0} elements exceeds the supported maximum of 62")]
    TooManyElements(usize),

    #[error("invalid ground order: {0}")]
    InvalidOrder(String),

    #[error("set {0} is not contained in the ground set")]
    OutOfGround(Subset),

    #[error("matroid axiom violated: {0}")]
    MatroidAxiom(String),

    #[error("undefined input: {0}")]
    Undefined(String),

    #[error("deletion set {delete} and contraction set {contract} overlap")]
    MinorOverlap { delete: Subset, contract: Subset },

    #[error("{0} is not independent")]
    NotIndependent(Subset),

    #[error("{0} is not feasible")]
    NotFeasible(Subset),

    #[error("{0} is the minimum of the external order and has no lower cover")]
    EmptyPassiveSet(Subset),

    #[error("not an antimatroid: {0}")]
    NotAntimatroid(String),

    #[error("not a clutter: {0} contains {1}")]
    NotClutter(Subset, Subset),

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("lattice is not join-distributive: {0}")]
    NotJoinDistributive(String),

    #[error("lattice is not matroidal: {0}")]
    NotMatroidal(String),

    #[error("invalid input at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
