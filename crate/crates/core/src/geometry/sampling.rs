//! Uniform disk sampling by inverse-CDF transforms.
//!
//! Radial CDFs of the area measure on a disk of intrinsic radius `R`:
//!
//! | geometry   | `F(r)`                              | inverse                               |
//! |------------|-------------------------------------|---------------------------------------|
//! | Euclidean  | `(r/R)^2`                           | `R sqrt(u)`                           |
//! | Spherical  | `(1 - cos r) / (1 - cos R)`         | `2 asin(sqrt(u) sin(R/2))`            |
//! | Hyperbolic | `(cosh r - 1) / (cosh R - 1)`       | `2 asinh(sqrt(u) sinh(R/2))`          |
//!
//! The half-angle forms of the inverses avoid cancellation near `r = 0`.

use std::f64::consts::{PI, TAU};

use rand::Rng;

use super::{Geometry, PolarPoint};
use crate::error::{Error, Result};
use crate::rng::{replicate_rng, Purpose};

/// Largest hyperbolic disk radius accepted by the samplers.
pub const MAX_HYPERBOLIC_RADIUS: f64 = 25.0;

/// A geodesic disk of intrinsic radius `radius` centred at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskDomain {
    geometry: Geometry,
    radius: f64,
}

impl DiskDomain {
    pub fn new(geometry: Geometry, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::input(format!(
                "disk radius must be positive, got {radius}"
            )));
        }
        match geometry {
            Geometry::Spherical if radius > PI => Err(Error::input(format!(
                "spherical disk radius {radius} exceeds pi"
            ))),
            Geometry::Hyperbolic if radius > MAX_HYPERBOLIC_RADIUS => Err(Error::input(format!(
                "hyperbolic disk radius {radius} exceeds {MAX_HYPERBOLIC_RADIUS}"
            ))),
            _ => Ok(DiskDomain { geometry, radius }),
        }
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn radial_cdf(&self, r: f64) -> f64 {
        let r = r.clamp(0.0, self.radius);
        let big_r = self.radius;
        match self.geometry {
            Geometry::Euclidean => (r / big_r).powi(2),
            Geometry::Spherical => ((0.5 * r).sin() / (0.5 * big_r).sin()).powi(2),
            Geometry::Hyperbolic => ((0.5 * r).sinh() / (0.5 * big_r).sinh()).powi(2),
        }
    }

    pub fn radial_pdf(&self, r: f64) -> f64 {
        if !(0.0..=self.radius).contains(&r) {
            return 0.0;
        }
        let big_r = self.radius;
        match self.geometry {
            Geometry::Euclidean => 2.0 * r / (big_r * big_r),
            Geometry::Spherical => r.sin() / (1.0 - big_r.cos()),
            Geometry::Hyperbolic => r.sinh() / (big_r.cosh() - 1.0),
        }
    }

    /// Inverse of [`DiskDomain::radial_cdf`] for `u` in `[0, 1]`.
    pub fn radial_quantile(&self, u: f64) -> f64 {
        let s = u.clamp(0.0, 1.0).sqrt();
        let big_r = self.radius;
        let r = match self.geometry {
            Geometry::Euclidean => big_r * s,
            Geometry::Spherical => 2.0 * (s * (0.5 * big_r).sin()).min(1.0).asin(),
            Geometry::Hyperbolic => 2.0 * (s * (0.5 * big_r).sinh()).asinh(),
        };
        r.min(big_r)
    }

    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> PolarPoint {
        let u: f64 = rng.random();
        let phi = TAU * rng.random::<f64>();
        PolarPoint::new(self.radial_quantile(u), phi)
    }

    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<PolarPoint> {
        (0..n).map(|_| self.sample_point(rng)).collect()
    }
}

/// `n` i.i.d. uniform points in `domain`, deterministic in `seed`.
pub fn sample_disk(domain: &DiskDomain, n: usize, seed: u64) -> Result<Vec<PolarPoint>> {
    if n == 0 {
        return Err(Error::input("sample size must be at least 1"));
    }
    let mut rng = replicate_rng(seed, Purpose::Positions, 0);
    Ok(domain.sample(n, &mut rng))
}

fn check_quasi(radius: f64, alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::input(format!("alpha must be positive, got {alpha}")));
    }
    if !(radius.is_finite() && radius > 0.0 && radius <= MAX_HYPERBOLIC_RADIUS) {
        return Err(Error::input(format!(
            "radius must lie in (0, {MAX_HYPERBOLIC_RADIUS}], got {radius}"
        )));
    }
    if alpha * radius > 1400.0 {
        return Err(Error::input(
            "alpha * radius too large for double precision",
        ));
    }
    Ok(())
}

/// Radial density `alpha sinh(alpha r) / (cosh(alpha R) - 1)` on `[0, R]`.
pub fn quasi_uniform_pdf(r: f64, radius: f64, alpha: f64) -> f64 {
    if !(0.0..=radius).contains(&r) {
        return 0.0;
    }
    alpha * (alpha * r).sinh() / ((alpha * radius).cosh() - 1.0)
}

pub fn quasi_uniform_cdf(r: f64, radius: f64, alpha: f64) -> f64 {
    let r = r.clamp(0.0, radius);
    ((0.5 * alpha * r).sinh() / (0.5 * alpha * radius).sinh()).powi(2)
}

pub(crate) fn quasi_uniform_quantile(u: f64, radius: f64, alpha: f64) -> f64 {
    let s = u.clamp(0.0, 1.0).sqrt();
    let r = 2.0 * (s * (0.5 * alpha * radius).sinh()).asinh() / alpha;
    r.min(radius)
}

/// `n` hyperbolic points with quasi-uniform radii and uniform angles.
pub fn sample_quasi_uniform(
    radius: f64,
    alpha: f64,
    n: usize,
    seed: u64,
) -> Result<Vec<PolarPoint>> {
    check_quasi(radius, alpha)?;
    if n == 0 {
        return Err(Error::input("sample size must be at least 1"));
    }
    let mut rng = replicate_rng(seed, Purpose::Positions, 0);
    Ok(sample_quasi_uniform_with(radius, alpha, n, &mut rng))
}

pub(crate) fn sample_quasi_uniform_with<R: Rng + ?Sized>(
    radius: f64,
    alpha: f64,
    n: usize,
    rng: &mut R,
) -> Vec<PolarPoint> {
    (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            let phi = TAU * rng.random::<f64>();
            PolarPoint::new(quasi_uniform_quantile(u, radius, alpha), phi)
        })
        .collect()
}

pub(crate) fn validate_quasi(radius: f64, alpha: f64) -> Result<()> {
    check_quasi(radius, alpha)
}
