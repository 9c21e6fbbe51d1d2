use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("operands live on different quivers")]
    QuiverMismatch,
    #[error("quiver contains a directed cycle")]
    CyclicQuiver,
    #[error("quiver is not connected")]
    Disconnected,
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("subspace tuple is not stable under arrow `{0}`")]
    NotASubmodule(String),
    #[error("maps do not intertwine at arrow `{0}`")]
    NotAMorphism(String),
    #[error("enumeration budget exceeded: {what} needs {needed} steps, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u64,
    },
    #[error("exhaustive enumeration needs a prime field")]
    NeedsPrimeField,
    #[error("isomorphism test inconclusive after exhausting all budgets")]
    Inconclusive,
    #[error("operation undefined on the zero representation")]
    ZeroRepresentation,
    #[error("representation is not a brick")]
    NotABrick,
    #[error("quiver is not a Kronecker quiver{0}")]
    NotKronecker(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("vertex `{0}` is not a source")]
    NotASource(String),
    #[error("pair is not a pair of orthogonal bricks")]
    NotOrthogonalBricks,
    #[error("Ext^1(Y, X) vanishes")]
    ZeroExt,
    #[error("module is not reduced")]
    NotReduced,
    #[error("scalars must be pairwise distinct and non-zero")]
    DistinctnessViolated,
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
