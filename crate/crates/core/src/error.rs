use alloc::string::String;
use core::fmt;

/// Errors reported by the toolkit.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two vectors (or a vector and an ambient space) disagree on dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A dimension outside the supported desk-scale range was requested.
    DeskScaleLimit { dim: usize, max: usize },
    /// An operation requiring timelike input received something else.
    NotTimelike,
    /// Two timelike vectors lie in opposite timelike cones.
    OppositeTimelikeCones,
    /// An arccosh argument fell below 1 by more than the rounding window,
    /// which indicates a bug rather than rounding noise.
    AngleArgumentBelowOne { argument: f64 },
    /// A graph operation hit a point where the gradient is not strictly
    /// inside the light cone.
    NonSpacelike { slack: f64 },
    /// A frame handed to the calibration form is not orthonormal spacelike.
    FrameNotOrthonormal { defect: f64 },
    /// Closed-form and finite-difference mean curvature disagree beyond
    /// the cross-check tolerance.
    CurvatureCrossCheck { closed: f64, finite_difference: f64 },
    /// An input parameter is out of range (non-positive radius, empty grid, ...).
    InvalidParameter(String),
    /// A graph handed to an experiment is not f-maximal to working precision.
    NotFMaximal { max_residual: f64 },
    /// A bounded-gradient certificate was absent or failed verification.
    GradientCertificate { measured_sup: f64, required: f64 },
    /// The graph leaves the slab containing the truncated hypersphere.
    ExitsSlab { height: f64, limit: f64 },
    /// One-dimensional adaptive quadrature did not reach its tolerance.
    AdaptiveQuadrature { best_error: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::DeskScaleLimit { dim, max } => {
                write!(f, "dimension {dim} exceeds the desk-scale limit {max}")
            }
            Error::NotTimelike => write!(f, "input vector is not timelike"),
            Error::OppositeTimelikeCones => {
                write!(f, "timelike vectors lie in opposite cones")
            }
            Error::AngleArgumentBelowOne { argument } => {
                write!(f, "arccosh argument {argument} below 1 beyond rounding")
            }
            Error::NonSpacelike { slack } => {
                write!(f, "non-spacelike point: 1 - |grad u|^2 = {slack}")
            }
            Error::FrameNotOrthonormal { defect } => {
                write!(f, "frame is not orthonormal spacelike (defect {defect})")
            }
            Error::CurvatureCrossCheck { closed, finite_difference } => write!(
                f,
                "mean-curvature routes disagree: closed form {closed}, finite differences {finite_difference}"
            ),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotFMaximal { max_residual } => {
                write!(f, "graph is not f-maximal: max residual {max_residual}")
            }
            Error::GradientCertificate { measured_sup, required } => write!(
                f,
                "gradient certificate failed: measured sup {measured_sup} exceeds {required}"
            ),
            Error::ExitsSlab { height, limit } => {
                write!(f, "graph height {height} exits the slab |t| <= {limit}")
            }
            Error::AdaptiveQuadrature { best_error } => {
                write!(f, "adaptive quadrature stalled at error {best_error}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
