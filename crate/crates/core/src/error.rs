use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge:?} repeats a vertex")]
    RepeatedVertex { edge: Vec<usize> },
    #[error("edge {edge:?} has fewer than 2 vertices")]
    EdgeTooSmall { edge: Vec<usize> },
    #[error("hypergraph is not {expected}-uniform")]
    NotUniform { expected: usize },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid star forest degrees: {0}")]
    InvalidSpec(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("infeasible construction: {0}")]
    Infeasible(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("invalid forbidden family: {0}")]
    InvalidFamily(String),
    #[error("every branch of the maximum is vacuous")]
    VacuousBound,
    #[error("star Turán oracle is {0}")]
    OracleViolation(String),
    #[error("search space of {candidates} candidate edges exceeds budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
