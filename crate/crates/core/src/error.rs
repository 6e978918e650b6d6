use thiserror::Error;

/// Every failure the library reports.
///
/// Variants fall in two groups: input/precondition violations, and
/// verified negative answers (`NoSolution`, `NotInE`, `WitnessUnsatisfiable`,
/// `NoFiniteMesh`). [`Error::is_negative_result`] separates them; the CLI
/// maps the first group to exit code 2 and the second to exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    Invalid(String),

    // exact core
    #[error("linear system has no solution")]
    NoSolution,
    #[error("zero vector at index {0}")]
    ZeroVector(usize),
    #[error("point {0} lies outside the ambient subspace")]
    PointOutsideAmbient(usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("directions of an affine subspace must be linearly independent")]
    DependentDirections,
    #[error("empty point list")]
    EmptyInput,

    // sphere geometry
    #[error("spheres are concentric")]
    ConcentricError,
    #[error("sphere centers are not in general position")]
    CentersNotGeneralPosition,
    #[error("{spheres} spheres exceed the ambient dimension {dim}")]
    TooManySpheres { spheres: usize, dim: usize },
    #[error("{centers} centers leave no room for a nondegenerate chain in dimension {dim}")]
    TooManyCenters { centers: usize, dim: usize },
    #[error("extra center is not in the affine span of the chain centers")]
    CenterNotInSpan,
    #[error("sphere quadrance must be nonnegative for a pairwise intersection")]
    NegativeQuadrance,
    #[error("hyperplane is not a hyperplane of the sphere's ambient subspace")]
    NotAHyperplaneOfAmbient,
    #[error("spheres do not share an ambient subspace")]
    AmbientMismatch,
    #[error("the points are in general position")]
    PointsActuallyInGeneralPosition,
    #[error(
        "no infinite witness: the centers span dimension {span_dim} in dimension {dim}; \
         {span_dim} + 1 affinely independent centers force a finite intersection unless span_dim <= dim - 2"
    )]
    WitnessUnsatisfiable { span_dim: usize, dim: usize },
    #[error("no finite mesh up to {0} families")]
    NoFiniteMesh(usize),

    // duality
    #[error("radii vector is not in the image E^d")]
    NotInE,
    #[error("vector is not in U(q)")]
    NotInUSpace,
    #[error("vectors are linearly dependent")]
    DependentVectors,
    #[error("centers are not well-placed in the base hyperplane")]
    CentersNotWellPlaced,
    #[error("derived directions failed the general-position certificate")]
    GeneralPositionCertificateFailed,
    #[error("point is not on the base hyperplane")]
    NotOnBaseHyperplane,
    #[error("direction has zero coordinate sum and no center on the base hyperplane")]
    DirectionWithoutCenter,

    // covering
    #[error("direction stream exhausted after {0} directions")]
    StreamExhausted(usize),
    #[error("disjointness precondition failed: {0}")]
    DisjointnessPreconditionFailed(String),
    #[error("escape direction must satisfy v1 = 1, v_d = 0, v2 != 0")]
    InvalidEscapeDirection,
    #[error("no escape plan for these directions: {0}")]
    NoEscapePlan(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for verified mathematical negatives, as opposed to bad input.
    pub fn is_negative_result(&self) -> bool {
        matches!(
            self,
            Error::NoSolution
                | Error::NotInE
                | Error::WitnessUnsatisfiable { .. }
                | Error::NoFiniteMesh(_)
        )
    }

    /// Variant name, e.g. `"NotInE"`.
    pub fn kind(&self) -> String {
        let dbg = format!("{self:?}");
        dbg.split(|c: char| !c.is_alphanumeric())
            .next()
            .unwrap_or_default()
            .to_string()
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
