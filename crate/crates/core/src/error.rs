use thiserror::Error;

/// Failures raised while constructing or checking finite structures.
///
/// Element indices in every variant refer to the carrier of the structure
/// under examination; for semilattice systems, `alpha`/`beta`/`gamma` are
/// indices into the semilattice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("malformed map: {0}")]
    MalformedMap(String),

    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),

    #[error("element {0} has no completely regular inverse")]
    NotCompletelyRegular(usize),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a semilattice: {0}")]
    NotSemilattice(String),

    #[error("map is not a homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),

    #[error("left semi-brace identity fails at (a, b, c) = ({0}, {1}, {2})")]
    KeyIdentityFailed(usize, usize, usize),

    #[error("additive semigroup is not completely simple: {0}")]
    NotCompletelySimple(String),

    #[error("{0} is not an idempotent endomorphism of the group")]
    NotIdempotentEndomorphism(&'static str),

    #[error("f and g do not commute at element {0}")]
    NonCommutingPair(usize),

    #[error("actions do not form a matched pair: {0}")]
    NotMatchedPair(String),

    #[error("phi does not send the identity of G to the identity of H")]
    PhiIdentityViolated,

    #[error("multiplicative semigroup is not Clifford: idempotent {0} does not commute with {1}")]
    NotClifford(usize, usize),

    #[error("identity condition fails: phi({alpha},{alpha}) is not the identity map")]
    IdentityConditionFailed { alpha: usize },

    #[error("transitivity fails: phi({beta},{gamma}) . phi({alpha},{beta}) != phi({alpha},{gamma})")]
    TransitivityFailed { alpha: usize, beta: usize, gamma: usize },

    #[error("equivariance fails: phi({alpha},{beta}) is not equivariant at ({x}, {y})")]
    EquivarianceFailed {
        alpha: usize,
        beta: usize,
        x: usize,
        y: usize,
    },

    #[error("phi({alpha},{beta}) is not a homomorphism of {operation} at ({a}, {b})")]
    PhiNotHomomorphism {
        alpha: usize,
        beta: usize,
        a: usize,
        b: usize,
        operation: &'static str,
    },

    #[error("component {0} is not a solution")]
    ComponentNotSolution(usize),

    #[error("malformed semilattice system: {0}")]
    SystemMalformed(String),

    #[error("component {0} fails the solution condition")]
    ConditionFailed(usize),

    #[error(
        "index/period formula gives ({predicted_index}, {predicted_period}) \
         but iteration gives ({index}, {period})"
    )]
    TheoremMismatch {
        predicted_index: usize,
        predicted_period: usize,
        index: usize,
        period: usize,
    },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
