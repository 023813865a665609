//! Scalar fields u : ℝⁿ → ℝ with value, gradient and Hessian access.
//!
//! A field either carries closed-form derivative closures or falls back to
//! central finite differences of the value. The finite-difference steps use
//! the standard optimal scalings h₁ = ε^{1/3}·max(1,|xᵢ|) for gradients and
//! h₂ = ε^{1/4}·max(1,|xᵢ|) for Hessians.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::math;

type ValueFn = dyn Fn(&[f64]) -> f64 + Send + Sync;
type GradientFn = dyn Fn(&[f64], &mut [f64]) + Send + Sync;
type HessianFn = dyn Fn(&[f64], &mut [f64]) + Send + Sync;

pub struct ScalarField {
    dim: usize,
    value: Box<ValueFn>,
    gradient: Option<Box<GradientFn>>,
    hessian: Option<Box<HessianFn>>,
}

impl ScalarField {
    /// Field with closed-form gradient and Hessian (row-major n×n).
    pub fn with_derivatives(
        dim: usize,
        value: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        gradient: impl Fn(&[f64], &mut [f64]) + Send + Sync + 'static,
        hessian: impl Fn(&[f64], &mut [f64]) + Send + Sync + 'static,
    ) -> Self {
        Self {
            dim,
            value: Box::new(value),
            gradient: Some(Box::new(gradient)),
            hessian: Some(Box::new(hessian)),
        }
    }

    /// Field whose derivatives are taken by central finite differences.
    pub fn finite_difference(
        dim: usize,
        value: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self { dim, value: Box::new(value), gradient: None, hessian: None }
    }

    /// The constant field u ≡ c (a slice when used as a graph).
    pub fn constant(dim: usize, c: f64) -> Self {
        Self::with_derivatives(
            dim,
            move |_| c,
            |_, g| g.fill(0.0),
            |_, h| h.fill(0.0),
        )
    }

    /// The linear field u(x) = a · x.
    pub fn linear(coefficients: Vec<f64>) -> Self {
        let dim = coefficients.len();
        let grad_coeffs = coefficients.clone();
        Self::with_derivatives(
            dim,
            move |x| math::dot(&coefficients, x),
            move |_, g| g.copy_from_slice(&grad_coeffs),
            |_, h| h.fill(0.0),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_closed_form(&self) -> bool {
        self.gradient.is_some()
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        (self.value)(x)
    }

    /// Gradient ∇u(x), closed form when available.
    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        match &self.gradient {
            Some(g) => {
                let mut out = vec![0.0; self.dim];
                g(x, &mut out);
                out
            }
            None => self.gradient_fd(x),
        }
    }

    /// Hessian of u at x, row-major n×n, closed form when available.
    pub fn hessian(&self, x: &[f64]) -> Vec<f64> {
        match &self.hessian {
            Some(h) => {
                let mut out = vec![0.0; self.dim * self.dim];
                h(x, &mut out);
                out
            }
            None => self.hessian_fd(x),
        }
    }

    /// Central-difference gradient, always available (independent route).
    pub fn gradient_fd(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        let mut p = x.to_vec();
        for i in 0..self.dim {
            let h = grad_step(x[i]);
            p[i] = x[i] + h;
            let fp = (self.value)(&p);
            p[i] = x[i] - h;
            let fm = (self.value)(&p);
            p[i] = x[i];
            out[i] = (fp - fm) / (2.0 * h);
        }
        out
    }

    /// Central-difference Hessian, symmetrized, always available.
    pub fn hessian_fd(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        let mut p = x.to_vec();
        let f0 = (self.value)(x);
        for i in 0..n {
            let hi = hess_step(x[i]);
            p[i] = x[i] + hi;
            let fp = (self.value)(&p);
            p[i] = x[i] - hi;
            let fm = (self.value)(&p);
            p[i] = x[i];
            out[i * n + i] = (fp - 2.0 * f0 + fm) / (hi * hi);
            for j in (i + 1)..n {
                let hj = hess_step(x[j]);
                let mut quad = 0.0;
                for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                    p[i] = x[i] + si * hi;
                    p[j] = x[j] + sj * hj;
                    quad += si * sj * (self.value)(&p);
                }
                p[i] = x[i];
                p[j] = x[j];
                let mixed = quad / (4.0 * hi * hj);
                out[i * n + j] = mixed;
                out[j * n + i] = mixed;
            }
        }
        out
    }

    /// Shifts the field by a constant height offset, keeping derivatives.
    pub fn translated(self, offset: f64) -> Self {
        let ScalarField { dim, value, gradient, hessian } = self;
        Self {
            dim,
            value: Box::new(move |x: &[f64]| value(x) + offset),
            gradient,
            hessian,
        }
    }
}

fn grad_step(xi: f64) -> f64 {
    const CBRT_EPS: f64 = 6.055454452393343e-6; // eps^(1/3)
    CBRT_EPS * math::max(1.0, math::abs(xi))
}

fn hess_step(xi: f64) -> f64 {
    const QTRT_EPS: f64 = 1.220703125e-4; // eps^(1/4)
    QTRT_EPS * math::max(1.0, math::abs(xi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic() -> ScalarField {
        // u = x1^2 + 3 x1 x2 - x2^3
        ScalarField::finite_difference(2, |x| x[0] * x[0] + 3.0 * x[0] * x[1] - x[1] * x[1] * x[1])
    }

    #[test]
    fn fd_gradient_matches_calculus() {
        let f = quadratic();
        let x = [0.7, -1.3];
        let g = f.gradient(&x);
        assert!((g[0] - (2.0 * x[0] + 3.0 * x[1])).abs() < 1e-9);
        assert!((g[1] - (3.0 * x[0] - 3.0 * x[1] * x[1])).abs() < 1e-9);
    }

    #[test]
    fn fd_hessian_matches_calculus_and_is_symmetric() {
        let f = quadratic();
        let x = [0.7, -1.3];
        let h = f.hessian(&x);
        assert!((h[0] - 2.0).abs() < 1e-6);
        assert!((h[1] - 3.0).abs() < 1e-6);
        assert!((h[3] - (-6.0 * x[1])).abs() < 1e-5);
        assert_eq!(h[1], h[2]);
    }

    #[test]
    fn constant_and_linear_fields() {
        let c = ScalarField::constant(3, 4.5);
        assert_eq!(c.value(&[1.0, 2.0, 3.0]), 4.5);
        assert_eq!(c.gradient(&[1.0, 2.0, 3.0]), vec![0.0, 0.0, 0.0]);

        let l = ScalarField::linear(vec![0.5, -2.0]);
        assert_eq!(l.value(&[2.0, 1.0]), -1.0);
        assert_eq!(l.gradient(&[9.0, 9.0]), vec![0.5, -2.0]);
        assert!(l.hessian(&[9.0, 9.0]).iter().all(|&v| v == 0.0));
    }

    #[test]
    fn translation_shifts_value_only() {
        let l = ScalarField::linear(vec![0.25]).translated(2.0);
        assert_eq!(l.value(&[4.0]), 3.0);
        assert_eq!(l.gradient(&[4.0]), vec![0.25]);
    }
}
