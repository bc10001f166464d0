use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Variants fall into three families: invalid input (caller bug or bad
/// instance file), verified negatives (the mathematics says no), and
/// numerical trouble (the computation could not decide).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {0} lies outside the closed unit disk")]
    Domain(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("ill-conditioned Euclid step: relative leading coefficient {0:.3e} inside the ambiguity band")]
    IllConditioned(f64),

    #[error("cannot certify nonvanishing on the closed disk: {0}")]
    Certification(String),

    #[error("invalid Blaschke data: {0}")]
    InvalidSpec(String),

    #[error("nodes {0} and {1} are closer than the separation tolerance")]
    NodeCollision(usize, usize),

    #[error("not a member of the algebra: {0}")]
    NotAMember(String),

    #[error("singular linear system")]
    SingularSystem,

    #[error("vectors are not orthogonal in the bilinear pairing (relative pairing {0:.3e})")]
    NotOrthogonal(f64),

    #[error("pivot vector norm {0:.3e} is below the admissible minimum")]
    NearZeroPivot(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("orthogonality precondition violated at node {node}, order {order}: |pairing| = {pairing:.3e}")]
    OrthogonalityViolated { node: usize, order: usize, pairing: f64 },

    #[error("every constant term f_k(a_1) vanishes")]
    AllConstantsZero,

    #[error("reduction search exhausted (best margin {best_margin:.3e}); this is not a disproof")]
    SearchExhausted { best_margin: f64 },

    #[error("reduction rejected: {0}")]
    Rejection(String),

    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
