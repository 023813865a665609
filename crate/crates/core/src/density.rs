//! The Gaussian–Euclidean density on 𝔾ⁿ × ℝ₁.
//!
//! f(x,t) = |x|²/2 − c with c = log((2π)^{−n/2}), so the weight e^{−f} is the
//! standard Gaussian probability density on the spatial factor and does not
//! depend on the time coordinate.

use crate::error::{Error, Result};
use crate::lorentz::SpacetimeVector;
use crate::math;

/// Gaussian density of a fixed spatial dimension, with the log-normalization
/// constant stored once so every consumer uses bit-identical values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianDensity {
    dim: usize,
    c: f64,
}

impl GaussianDensity {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        let c = -0.5 * (dim as f64) * math::ln(2.0 * core::f64::consts::PI);
        Ok(Self { dim, c })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The constant c = log((2π)^{−n/2}).
    pub fn log_normalization(&self) -> f64 {
        self.c
    }

    /// f(x, t) = |x|²/2 − c; independent of t.
    pub fn f_value(&self, x: &[f64], _t: f64) -> Result<f64> {
        self.check_dim(x)?;
        Ok(0.5 * math::norm_sq(x) - self.c)
    }

    /// e^{−f} = e^{c − |x|²/2}; integrates to 1 over ℝⁿ.
    pub fn weight(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        Ok(math::exp(self.c - 0.5 * math::norm_sq(x)))
    }

    /// Weight evaluated on a sphere |x| = radius, where it is constant.
    pub fn weight_at_radius(&self, radius: f64) -> f64 {
        math::exp(self.c - 0.5 * radius * radius)
    }

    /// Ambient gradient ∇f = (x, 0): spatial part x, temporal part zero.
    pub fn f_gradient(&self, x: &[f64]) -> Result<SpacetimeVector> {
        self.check_dim(x)?;
        SpacetimeVector::from_parts(x, 0.0)
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        Ok(())
    }
}
