use thiserror::Error;

/// Errors reported by the construction, evaluation and certification routines.
///
/// Diagnostic payloads are carried as `f64` regardless of the scalar the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Chebyshev arguments must satisfy `0 < theta < pi` so the trigonometric
    /// forms are defined.
    #[error("chebyshev argument theta = {theta} outside the open interval (0, pi)")]
    ThetaOutOfRange { theta: f64 },

    /// A polynomial needs at least one term.
    #[error("polynomial must have at least one term")]
    EmptyPolynomial,

    /// The symmetry order T of a T-fold symmetric polynomial must be >= 1.
    #[error("symmetry order must be at least 1")]
    ZeroSymmetryOrder,

    /// Evaluation is supported on the closed unit disc only.
    #[error("evaluation point outside the closed unit disc: |z| = {modulus}")]
    OutsideUnitDisc { modulus: f64 },

    /// The closed-form evaluator refuses to divide by a denominator close to
    /// its boundary zeros; callers fall back to the power form.
    #[error("closed form near-singular at this point: |q(z)| = {modulus} < {threshold}")]
    NearSingularity { modulus: f64, threshold: f64 },

    /// A sampling grid was below the documented minimum.
    #[error("grid size {got} below minimum {min}")]
    GridTooSmall { got: usize, min: usize },

    /// A boundary trace was given samples that are not strictly increasing in
    /// the parameter, or no samples at all.
    #[error("boundary trace samples must be nonempty and strictly increasing in t")]
    InvalidTrace,

    /// Horner evaluation and the rational boundary forms disagreed beyond the
    /// cross-check tolerance.
    #[error("boundary cross-check failed at t = {t}: |difference| = {diff}")]
    BoundaryCrossCheck { t: f64, diff: f64 },

    /// Two consecutive boundary samples coincide, so the polygon test would
    /// see a degenerate segment.
    #[error("degenerate boundary segment near t = {t}")]
    DegenerateSegment { t: f64 },

    /// The oracle problem has no free ratio variables for a single-term
    /// polynomial; J_1 = 1 is handled by the caller.
    #[error("oracle linear program needs n >= 2")]
    OracleTooSmall,

    /// The simplex routine exceeded its pivot budget, which signals
    /// degeneracy; retry with a perturbed grid.
    #[error("simplex iteration limit of {limit} pivots exceeded")]
    IterationLimit { limit: usize },

    /// The simplex answer failed its own post-checks (feasibility, duality
    /// gap, or the gamma_1 range).
    #[error("simplex solution failed verification: {reason}")]
    SolverInconsistent { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
