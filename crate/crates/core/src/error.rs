//! Error types, one enum per subsystem.

use thiserror::Error;

/// Errors from group construction, loading, and subgroup closure.
#[derive(Debug, Clone, Error)]
pub enum GroupError {
    #[error("group order {order} out of range (1..={max})")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("element 0 is not a two-sided identity: fails at element {witness}")]
    MissingIdentity { witness: usize },
    #[error("no two-sided inverse for element {element}")]
    NoInverse { element: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("subgroup closure exceeded cap {cap}")]
    ClosureOverflow { cap: usize },
    #[error("unknown builtin group name {0:?} (expected s2..s6, cN, dN, or z2^N)")]
    UnknownBuiltin(String),
    #[error("bad parameter for {family}: {reason}")]
    BadParameter { family: String, reason: String },
    #[error("group file {path}: {reason}")]
    FileFormat { path: String, reason: String },
    #[error("generator index {index} out of range for group of order {order}")]
    GeneratorOutOfRange { index: usize, order: usize },
}

/// Errors from character table construction and character-level operations.
#[derive(Debug, Clone, Error)]
pub enum CharError {
    #[error(
        "failed to separate characters after {attempts} attempts; \
         colliding eigenvalue cluster of size {cluster_size} supported on classes {classes:?}"
    )]
    SplitFailure {
        attempts: usize,
        cluster_size: usize,
        classes: Vec<usize>,
    },
    #[error("character table validation failed: {0}")]
    Validation(String),
    #[error("restriction multiplicity {value} is not a nonnegative integer within tolerance {tol}")]
    NonIntegerMultiplicity { value: f64, tol: f64 },
    #[error("set of {size} elements is not a subgroup (not closed or missing identity/inverse)")]
    NotASubgroup { size: usize },
}

/// Errors from the direct-power machinery.
#[derive(Debug, Clone, Error)]
pub enum ProductError {
    #[error("generator {index} has length {got}, expected {expected}")]
    GeneratorLengthMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("need at least one generator")]
    NoGenerators,
    #[error("operation requires a fully enumerated closure, but it overflowed (size >= {size_reached})")]
    Overflowed { size_reached: usize },
    #[error("min_support is undefined on the trivial subgroup")]
    TrivialSubgroup,
    #[error("irrep has {irrep_len} factors but the ambient power has n = {n}")]
    ArityMismatch { irrep_len: usize, n: usize },
    #[error("coordinate value {value} out of range for base group of order {order}")]
    CoordinateOutOfRange { value: usize, order: usize },
    #[error("X_H numerator sum {sum} is not divisible by |H| = {subgroup_order}; H is not a subgroup or the character data is invalid")]
    NotDivisible { sum: String, subgroup_order: usize },
    #[error("X_H numerator {value} is not a nonnegative integer within scaled tolerance {tol}")]
    NonIntegerNumerator { value: f64, tol: f64 },
    #[error("outside the exact regime: {0}")]
    FeasibilityExceeded(String),
    #[error("theorem hypothesis violated: 2|K|^t = {lhs} > alpha*sqrt(n) = {rhs}")]
    HypothesisViolated { lhs: f64, rhs: f64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Errors from explicit unitary representation matrices.
#[derive(Debug, Clone, Error)]
pub enum RepsError {
    #[error("failed to split the isotypic component of irrep {irrep} after {attempts} attempts")]
    SplittingFailure { irrep: usize, attempts: usize },
    #[error("irrep matrices for irrep {irrep} violate {what} (residual {residual:.3e})")]
    InvariantViolation {
        irrep: usize,
        what: String,
        residual: f64,
    },
    #[error("product dimension {dim} exceeds guard {max}")]
    DimensionGuard { dim: u128, max: u64 },
    #[error("trace {value} is not an integer within tolerance {tol}")]
    RoundingResidual { value: f64, tol: f64 },
    #[error("power iteration did not converge after {iterations} iterations; last gap {gap:.3e}")]
    NonConvergence { iterations: usize, gap: f64 },
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// Errors from the experiment drivers.
#[derive(Debug, Clone, Error)]
pub enum ExperimentError {
    #[error("experiment requires a centerless base group, but {group} has center of size {center_size}")]
    NontrivialCenter { group: String, center_size: usize },
    #[error("invalid regime: {0}")]
    InvalidRegime(String),
    #[error("experiment requires an elementary abelian 2-group base, but {group} is not one")]
    WrongGroupFamily { group: String },
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Reps(#[from] RepsError),
}

/// Crate-wide error, for callers that do not care which layer failed.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Reps(#[from] RepsError),
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
}
