use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual operations; callers usually match on the variant rather
/// than the message.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point or edge outside the configuration window")]
    OutOfWindow,
    #[error("override interval has empty intersection with the value set")]
    EmptyIntersection,
    #[error("constraint override lies outside the window")]
    CoverageError,
    #[error("value set invalid: {0}")]
    InvalidValueSet(String),
    #[error("negative weights present; use the negative-mode operations")]
    NegativeWeights,
    #[error("operation requires strictly positive weights")]
    NonPositiveWeight,
    #[error("epsilon must satisfy 0 < epsilon < cheap value")]
    InvalidEpsilon,
    #[error("window too small to certify the claim: {0}")]
    UncertifiedWindow(String),
    #[error("empty point set")]
    EmptySet,
    #[error("voxel resolution too coarse: in-shape grid graph disconnected")]
    ResolutionTooCoarse,
    #[error("no grid refinement up to the cap satisfies the tolerance")]
    NoValidN,
    #[error("sup A must exceed 5 inf A for the corridor construction")]
    RatioTooSmall,
    #[error("constraint edges do not fit inside the inner box")]
    ConstraintTooLarge,
    #[error("no member of A exceeds the required expensive threshold")]
    NoSuitableA,
    #[error("lambda lies outside (a, b)")]
    LambdaOutOfRange,
    #[error("tolerance index too small for the constraint cost: {0}")]
    ToleranceInfeasible(String),
    #[error("value set contains no negative member")]
    NoNegativeValue,
    #[error("negative-mode construction requires dimension at least 2")]
    DimensionTooLow,
    #[error("segment [x,y] is parallel to a coordinate axis")]
    AxisAligned,
    #[error("value set has isolated points; uniqueness refinement unavailable")]
    IsolatedPoints,
    #[error("value set does not match the requested construction case")]
    CaseMismatch,
    #[error("shape fails the class check required by this case: {0}")]
    ShapeNotInClass(String),
    #[error("rendering supports d = 2 only")]
    DimensionUnsupported,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
