//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by exact arithmetic, mutation dynamics and the
/// verification machinery.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("zero value raised to a negative power")]
    ZeroToNegativePower,

    #[error("substitution produced an identically zero denominator")]
    ZeroDenominator,

    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),

    #[error("node index {node} out of range (mutable nodes are 1..={n_mutable})")]
    NodeOutOfRange { node: usize, n_mutable: usize },

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("singular mutation at node {node} (step {step}): cluster entry is zero")]
    SingularMutation { node: usize, step: usize },

    #[error("zero denominator in the exchange rule at node {node} (step {step})")]
    RuleDenominator { node: usize, step: usize },

    #[error("mutation word does not leave the exchange matrix invariant")]
    WordNotInvariant,

    #[error("exchange matrix is singular; reduce via kernel/image instead")]
    SingularMatrix,

    #[error("projection exponent rows do not lie in the image of the exchange matrix")]
    ProjectionNotInImage,

    #[error("zero cluster entry at step {step} cannot be projected")]
    ZeroOrbitEntry { step: usize },

    #[error("map is not periodic with period {period}: pullback {kind} is not invariant")]
    PeriodMismatch { period: usize, kind: String },

    #[error("monomial ansatz has empty support")]
    EmptyAnsatz,

    #[error("all sample points were singular")]
    AllSamplesSingular,

    #[error("bilinear system error: {0}")]
    Bilinear(String),

    #[error("zero divisor in bilinear equation {equation} at index {index}")]
    BilinearZeroDivisor { equation: usize, index: i64 },

    #[error("expression-swell budget exceeded ({terms} terms at depth {depth})")]
    SwellBudget { terms: usize, depth: usize },

    #[error("unknown scenario id {0:?}")]
    UnknownScenario(String),

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error("tau/cluster mismatch at node {node}, block {block}")]
    TauClusterMismatch { node: usize, block: usize },

    #[error("nonconstant integral expected")]
    ConstantIntegral,

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
