//! Scalar math routed through `std` or `libm` so the crate builds without `std`.

#![allow(dead_code)]

macro_rules! forward {
    ($($name:ident => $std:ident / $libm:path;)*) => {
        $(
            #[cfg(feature = "std")]
            #[inline(always)]
            pub(crate) fn $name(x: f64) -> f64 { x.$std() }

            #[cfg(not(feature = "std"))]
            #[inline(always)]
            pub(crate) fn $name(x: f64) -> f64 { $libm(x) }
        )*
    };
}

forward! {
    exp => exp / libm::exp;
    ln => ln / libm::log;
    sqrt => sqrt / libm::sqrt;
    cosh => cosh / libm::cosh;
    sinh => sinh / libm::sinh;
    acosh => acosh / libm::acosh;
    sin => sin / libm::sin;
    cos => cos / libm::cos;
    abs => abs / libm::fabs;
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn max(a: f64, b: f64) -> f64 {
    a.max(b)
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn max(a: f64, b: f64) -> f64 {
    libm::fmax(a, b)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn min(a: f64, b: f64) -> f64 {
    a.min(b)
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn min(a: f64, b: f64) -> f64 {
    libm::fmin(a, b)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn copysign(a: f64, b: f64) -> f64 {
    a.copysign(b)
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn copysign(a: f64, b: f64) -> f64 {
    libm::copysign(a, b)
}

/// Integer power by repeated squaring; exponents here are tiny (|k| <= 8).
pub(crate) fn powi(x: f64, k: i32) -> f64 {
    let mut base = if k < 0 { 1.0 / x } else { x };
    let mut e = k.unsigned_abs();
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Euclidean dot product.
#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Squared Euclidean norm.
#[inline]
pub(crate) fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}
