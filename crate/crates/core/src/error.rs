use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("permutation acts on {found} points, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("no kink map: x -> x over x is not a bijection")]
    NoKinkMap,

    #[error("not a group: {0}")]
    NotAGroup(String),

    /// A ring relation of the Alexander bikei presentation fails.
    #[error("{0}")]
    RingRelation(String),

    #[error("{0}")]
    ConstantAction(String),

    #[error("map value {value} at {index} is outside 1..{bound}")]
    MapOutOfRange { index: usize, value: usize, bound: usize },

    #[error("diagram line {line}: {msg}")]
    DiagramSyntax { line: usize, msg: String },

    #[error("{0}")]
    InvalidDiagram(String),

    #[error("component index {index} out of range ({count} components)")]
    ComponentOutOfRange { index: usize, count: usize },

    #[error("unknown semiarc {0}")]
    UnknownSemiarc(String),

    #[error("brute-force search space {size} exceeds cap {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("bad polynomial {0:?}")]
    Polynomial(String),

    #[error("{0} is not a good involution of this table")]
    NotGoodInvolution(String),

    #[error("table fails the involutory virtual birack axioms")]
    AxiomsFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
