use thiserror::Error;

/// Errors raised across the library.
///
/// Variants are grouped by the layer that produces them; the CLI maps every
/// variant except [`Error::TheoremCheck`] to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} lies outside the validity disk of radius {radius}")]
    Domain { point: String, radius: f64 },
    #[error("pole encountered at {point}: |Q| = {modulus:e}")]
    Pole { point: String, modulus: f64 },
    #[error("adaptive quadrature did not reach tolerance {tol:e} within depth {depth}")]
    Tolerance { tol: f64, depth: usize },
    #[error("denominator vanishes inside the disk of radius {radius} (winding {winding:.3})")]
    PoleInDomain { radius: f64, winding: f64 },
    #[error("invalid rational function: {0}")]
    InvalidRational(String),

    #[error("ambient mismatch: expected {expected:?}, found {found:?}")]
    AmbientMismatch {
        expected: crate::lorentz::Ambient,
        found: crate::lorentz::Ambient,
    },
    #[error("|z| = 1 is the equator of the stereographic chart (z = {0})")]
    Equator(String),
    #[error("point is off the hyperboloid <x,x> = -1 (defect {0:e})")]
    OffHyperboloid(f64),
    #[error("north pole (0,0,1) has no stereographic image")]
    NorthPole,

    #[error("Weierstrass data have a common zero in the domain ({0})")]
    CommonZero(String),
    #[error("Weierstrass data violate the maximal-graph condition |g| > 1: min |g| = {0}")]
    NotGraphDatum(f64),
    #[error("isotropy residual {0:e} exceeds tolerance")]
    NotIsotropic(f64),

    #[error("degenerate mask: {0}")]
    DegenerateMask(String),
    #[error("field is not spacelike: max |Df| = {0}")]
    NotSpacelike(f64),
    #[error("dual field is not closed: max |curl| = {curl:e} exceeds {threshold:e}")]
    Curl { curl: f64, threshold: f64 },
    #[error("mask is not simply connected ({0})")]
    NotSimplyConnected(String),
    #[error("grid metadata mismatch: {0}")]
    GridMismatch(String),

    #[error("invalid mesh: {0}")]
    InvalidMesh(String),
    #[error("degenerate projected triangle {index} (area {area:e})")]
    DegenerateTriangle { index: usize, area: f64 },
    #[error("Newton continuation diverged at t = {t}: {reason}")]
    NewtonDivergence { t: f64, reason: String },
    #[error("resampled domains do not overlap")]
    OverlapEmpty,

    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("theorem check failed: {0}")]
    TheoremCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "DomainError",
            Error::Pole { .. } => "PoleError",
            Error::Tolerance { .. } => "ToleranceError",
            Error::PoleInDomain { .. } => "PoleInDomain",
            Error::InvalidRational(_) => "InvalidRational",
            Error::AmbientMismatch { .. } => "AmbientMismatch",
            Error::Equator(_) => "EquatorError",
            Error::OffHyperboloid(_) => "OffHyperboloid",
            Error::NorthPole => "NorthPole",
            Error::CommonZero(_) => "CommonZeroError",
            Error::NotGraphDatum(_) => "NotGraphDatum",
            Error::NotIsotropic(_) => "NotIsotropic",
            Error::DegenerateMask(_) => "DegenerateMask",
            Error::NotSpacelike(_) => "NotSpacelike",
            Error::Curl { .. } => "CurlError",
            Error::NotSimplyConnected(_) => "NotSimplyConnected",
            Error::GridMismatch(_) => "GridMismatch",
            Error::InvalidMesh(_) => "InvalidMesh",
            Error::DegenerateTriangle { .. } => "DegenerateTriangle",
            Error::NewtonDivergence { .. } => "NewtonDivergence",
            Error::OverlapEmpty => "OverlapEmpty",
            Error::InvalidInput(_) => "InvalidInput",
            Error::TheoremCheck(_) => "TheoremCheck",
            Error::Io(_) => "IoError",
            Error::Json(_) => "JsonError",
            Error::Csv(_) => "CsvError",
        }
    }
}
