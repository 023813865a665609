//! Lorentzian linear algebra on ℝ^{n+1} with signature (+,…,+,−).
//!
//! Vectors carry n spatial components followed by one temporal component,
//! and the scalar product is ⟨x,y⟩ = Σᵢ xᵢyᵢ − x_{n+1}y_{n+1}. Causal
//! classification, hyperbolic angles between timelike vectors, and the
//! ambient volume form (a plain determinant in these coordinates) live here.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::math;

/// Relative tolerance for causal classification of nearly-null vectors.
pub const CAUSAL_EPS: f64 = 1e-12;

/// Rounding window below 1 inside which arccosh arguments are clamped.
/// Anything further below 1 is reported as an error.
pub const ACOSH_CLAMP: f64 = 1e-10;

/// A vector of ℝ^{n+1}₁: `n` spatial components plus one temporal component.
#[derive(Clone, Debug, PartialEq)]
pub struct SpacetimeVector {
    components: Vec<f64>,
}

/// Causal character of a vector with respect to the Lorentzian product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CausalClass {
    Spacelike,
    Lightlike,
    Timelike,
    Zero,
}

impl SpacetimeVector {
    /// Builds a vector from its full component list (spatial first, temporal
    /// last). Requires at least two finite entries.
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: components.len() });
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("non-finite component".into()));
        }
        Ok(Self { components })
    }

    /// Assembles a vector from a spatial part and a temporal component.
    pub fn from_parts(spatial: &[f64], temporal: f64) -> Result<Self> {
        let mut components = Vec::with_capacity(spatial.len() + 1);
        components.extend_from_slice(spatial);
        components.push(temporal);
        Self::new(components)
    }

    /// The zero vector of spatial dimension `n`.
    pub fn zero(n: usize) -> Self {
        Self { components: alloc::vec![0.0; n + 1] }
    }

    /// Coordinate basis vector `e_axis`; `axis == n` is the timelike one.
    pub fn basis(n: usize, axis: usize) -> Self {
        let mut v = Self::zero(n);
        v.components[axis] = 1.0;
        v
    }

    /// The future-directed timelike coordinate vector `e_{n+1}`.
    pub fn temporal_basis(n: usize) -> Self {
        Self::basis(n, n)
    }

    /// Spatial dimension `n` (one less than the component count).
    pub fn dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn spatial(&self) -> &[f64] {
        &self.components[..self.dim()]
    }

    pub fn temporal(&self) -> f64 {
        self.components[self.dim()]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&c| c == 0.0)
    }

    fn euclidean_norm_sq(&self) -> f64 {
        math::norm_sq(&self.components)
    }
}

impl Add for &SpacetimeVector {
    type Output = SpacetimeVector;
    fn add(self, rhs: &SpacetimeVector) -> SpacetimeVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        SpacetimeVector {
            components: self
                .components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &SpacetimeVector {
    type Output = SpacetimeVector;
    fn sub(self, rhs: &SpacetimeVector) -> SpacetimeVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        SpacetimeVector {
            components: self
                .components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul<f64> for &SpacetimeVector {
    type Output = SpacetimeVector;
    fn mul(self, s: f64) -> SpacetimeVector {
        SpacetimeVector { components: self.components.iter().map(|a| a * s).collect() }
    }
}

impl Neg for &SpacetimeVector {
    type Output = SpacetimeVector;
    fn neg(self) -> SpacetimeVector {
        self * -1.0
    }
}

/// Lorentzian scalar product Σᵢ xᵢyᵢ − x_{n+1}y_{n+1}.
pub fn lorentz_inner(x: &SpacetimeVector, y: &SpacetimeVector) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), got: y.dim() });
    }
    Ok(math::dot(x.spatial(), y.spatial()) - x.temporal() * y.temporal())
}

/// Classifies a vector as spacelike, lightlike, timelike or zero.
///
/// The lightlike band has half-width `CAUSAL_EPS · max(1, |x|²_euclid)` so the
/// classification of nearly-null vectors is deterministic in floating point.
pub fn causal_classify(x: &SpacetimeVector) -> CausalClass {
    if x.is_zero() {
        return CausalClass::Zero;
    }
    let q = lorentz_inner(x, x).expect("self-product is always well-formed");
    let eps = CAUSAL_EPS * math::max(1.0, x.euclidean_norm_sq());
    if q > eps {
        CausalClass::Spacelike
    } else if q < -eps {
        CausalClass::Timelike
    } else {
        CausalClass::Lightlike
    }
}

/// Lorentzian norm √|⟨x,x⟩| (zero on lightlike vectors).
pub fn lorentz_norm(x: &SpacetimeVector) -> f64 {
    let q = lorentz_inner(x, x).expect("self-product is always well-formed");
    math::sqrt(math::abs(q))
}

/// Whether two timelike vectors lie in the same timelike cone (⟨x,y⟩ < 0).
pub fn same_timelike_cone(x: &SpacetimeVector, y: &SpacetimeVector) -> Result<bool> {
    if causal_classify(x) != CausalClass::Timelike || causal_classify(y) != CausalClass::Timelike {
        return Err(Error::NotTimelike);
    }
    Ok(lorentz_inner(x, y)? < 0.0)
}

/// Whether a timelike vector lies in the future cone (the cone of `e_{n+1}`).
pub fn is_future_directed(x: &SpacetimeVector) -> Result<bool> {
    same_timelike_cone(x, &SpacetimeVector::temporal_basis(x.dim()))
}

/// Hyperbolic angle φ ≥ 0 between timelike vectors in the same cone:
/// ⟨x,y⟩ = −‖x‖‖y‖ cosh φ.
///
/// The reversed Cauchy–Schwarz inequality puts the arccosh argument at or
/// above 1; values within `ACOSH_CLAMP` below 1 are clamped (rounding),
/// anything lower raises an error to expose bugs.
pub fn hyperbolic_angle(x: &SpacetimeVector, y: &SpacetimeVector) -> Result<f64> {
    if !same_timelike_cone(x, y)? {
        return Err(Error::OppositeTimelikeCones);
    }
    let arg = -lorentz_inner(x, y)? / (lorentz_norm(x) * lorentz_norm(y));
    if arg < 1.0 - ACOSH_CLAMP {
        return Err(Error::AngleArgumentBelowOne { argument: arg });
    }
    Ok(math::acosh(math::max(arg, 1.0)))
}

/// Ambient volume form dV(v₁,…,v_{n+1}): the determinant of the matrix whose
/// columns are the arguments, with dV(e₁,…,e_{n+1}) = +1.
pub fn volume_form(vectors: &[SpacetimeVector]) -> Result<f64> {
    if vectors.is_empty() {
        return Err(Error::InvalidParameter("volume form needs vectors".into()));
    }
    let n = vectors[0].dim();
    if vectors.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: vectors.len() });
    }
    for v in vectors {
        if v.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: v.dim() });
        }
    }
    let m = n + 1;
    // Column-major copy, then LU with partial pivoting.
    let mut a: Vec<f64> = Vec::with_capacity(m * m);
    for row in 0..m {
        for v in vectors {
            a.push(v.components()[row]);
        }
    }
    let mut det = 1.0;
    for k in 0..m {
        let mut pivot = k;
        let mut best = math::abs(a[k * m + k]);
        for r in (k + 1)..m {
            let cand = math::abs(a[r * m + k]);
            if cand > best {
                best = cand;
                pivot = r;
            }
        }
        if best == 0.0 {
            return Ok(0.0);
        }
        if pivot != k {
            for c in 0..m {
                a.swap(k * m + c, pivot * m + c);
            }
            det = -det;
        }
        det *= a[k * m + k];
        for r in (k + 1)..m {
            let factor = a[r * m + k] / a[k * m + k];
            for c in k..m {
                a[r * m + c] -= factor * a[k * m + c];
            }
        }
    }
    Ok(det)
}

/// Orthonormal spacelike basis of the Lorentz-orthogonal complement of a
/// timelike vector, by Gram–Schmidt on projected coordinate vectors.
///
/// The complement of a timelike line is positive definite, so the procedure
/// cannot hit a degenerate vector; seeds that project too small are skipped.
pub fn spacelike_frame_orthogonal_to(t: &SpacetimeVector) -> Result<Vec<SpacetimeVector>> {
    if causal_classify(t) != CausalClass::Timelike {
        return Err(Error::NotTimelike);
    }
    let n = t.dim();
    let unit_t = t * (1.0 / lorentz_norm(t));
    let mut frame: Vec<SpacetimeVector> = Vec::with_capacity(n);
    for axis in 0..=n {
        if frame.len() == n {
            break;
        }
        let seed = SpacetimeVector::basis(n, axis);
        // Project out the timelike direction: z ↦ z + ⟨z,T⟩T for unit T.
        let mut v = &seed + &(&unit_t * lorentz_inner(&seed, &unit_t)?);
        for prev in &frame {
            v = &v - &(prev * lorentz_inner(&v, prev)?);
        }
        let norm = lorentz_norm(&v);
        if norm < 1e-8 {
            continue;
        }
        frame.push(&v * (1.0 / norm));
    }
    debug_assert_eq!(frame.len(), n);
    Ok(frame)
}
