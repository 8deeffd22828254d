//! Latent geometries: Euclidean plane, unit sphere, hyperbolic plane and
//! ultrametric trees.
//!
//! Curved-space points use intrinsic polar coordinates `(r, phi)` about the
//! disk centre: `r` is the geodesic distance from the centre (colatitude on
//! the sphere) and `phi` the angle. All operations use curvature `0`, `+1`
//! and `-1`; only [`circumference`] accepts an arbitrary `K`.

mod models;
mod sampling;
mod ultrametric;

pub use models::{to_hyperboloid, to_poincare, HyperboloidPoint, PoincarePoint};
pub use sampling::{
    quasi_uniform_cdf, quasi_uniform_pdf, sample_disk, sample_quasi_uniform, DiskDomain,
    MAX_HYPERBOLIC_RADIUS,
};
pub use ultrametric::UltrametricTree;

pub(crate) use sampling::{sample_quasi_uniform_with, validate_quasi};

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A constant-curvature surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Euclidean,
    Spherical,
    Hyperbolic,
}

impl Geometry {
    pub const ALL: [Geometry; 3] = [
        Geometry::Euclidean,
        Geometry::Spherical,
        Geometry::Hyperbolic,
    ];

    pub fn curvature(self) -> f64 {
        match self {
            Geometry::Euclidean => 0.0,
            Geometry::Spherical => 1.0,
            Geometry::Hyperbolic => -1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Geometry::Euclidean => "euclidean",
            Geometry::Spherical => "spherical",
            Geometry::Hyperbolic => "hyperbolic",
        }
    }

    /// Checks that `p` lies in the surface's coordinate domain.
    pub fn validate(self, p: PolarPoint) -> Result<()> {
        if !(p.r.is_finite() && p.phi.is_finite()) || p.r < 0.0 {
            return Err(Error::input(format!("invalid polar point {p:?}")));
        }
        if self == Geometry::Spherical && p.r > PI {
            return Err(Error::input(format!(
                "spherical colatitude {} exceeds pi",
                p.r
            )));
        }
        Ok(())
    }

    /// Geodesic distance between two validated points.
    pub fn distance(self, a: PolarPoint, b: PolarPoint) -> Result<f64> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.distance_unchecked(a, b))
    }

    /// Geodesic distance without domain checks.
    pub fn distance_unchecked(self, a: PolarPoint, b: PolarPoint) -> f64 {
        PreparedPoint::new(self, a).distance(&PreparedPoint::new(self, b))
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Geometry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" => Ok(Geometry::Euclidean),
            "spherical" | "elliptic" => Ok(Geometry::Spherical),
            "hyperbolic" => Ok(Geometry::Hyperbolic),
            other => Err(Error::input(format!("unknown geometry '{other}'"))),
        }
    }
}

/// Any latent space supported by the distance models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometrySpace {
    Curved(Geometry),
    Ultrametric(UltrametricTree),
}

impl GeometrySpace {
    /// Curvature of the continuous surfaces; `None` for trees.
    pub fn curvature(&self) -> Option<f64> {
        match self {
            GeometrySpace::Curved(g) => Some(g.curvature()),
            GeometrySpace::Ultrametric(_) => None,
        }
    }

    pub fn distance(&self, a: &LatentPoint, b: &LatentPoint) -> Result<f64> {
        match (self, a, b) {
            (GeometrySpace::Curved(g), LatentPoint::Polar(p), LatentPoint::Polar(q)) => {
                g.distance(*p, *q)
            }
            (GeometrySpace::Ultrametric(t), LatentPoint::Leaf(x), LatentPoint::Leaf(y)) => {
                t.distance(*x, *y).map(f64::from)
            }
            _ => Err(Error::input("point kind does not match the geometry")),
        }
    }
}

impl From<Geometry> for GeometrySpace {
    fn from(g: Geometry) -> Self {
        GeometrySpace::Curved(g)
    }
}

/// A point of any supported space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LatentPoint {
    Polar(PolarPoint),
    Leaf(u64),
}

/// Intrinsic polar coordinates about the disk centre.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarPoint {
    pub r: f64,
    pub phi: f64,
}

impl PolarPoint {
    pub fn new(r: f64, phi: f64) -> Self {
        PolarPoint { r, phi }
    }
}

/// Angular separation in `[0, pi]`.
pub fn angle_between(phi_a: f64, phi_b: f64) -> f64 {
    let raw = (phi_a - phi_b).abs() % TAU;
    PI - (PI - raw).abs()
}

/// A point with the trigonometric terms its distance computations need.
///
/// Hyperbolic distances use `sinh^2(d/2) = sinh^2(dr/2) + sinh(r_a) sinh(r_b) sin^2(dphi/2)`,
/// an exact rewrite of the polar cosine law whose terms are all nonnegative,
/// so near-coincident points never push `acosh` below its domain.
#[derive(Debug, Clone, Copy)]
pub struct PreparedPoint {
    geometry: Geometry,
    r: f64,
    sinh_r: f64,
    xyz: [f64; 3],
}

impl PreparedPoint {
    pub fn new(geometry: Geometry, p: PolarPoint) -> Self {
        let (s, c) = p.phi.sin_cos();
        let (xyz, sinh_r) = match geometry {
            Geometry::Euclidean => ([p.r * c, p.r * s, 0.0], 0.0),
            Geometry::Spherical => {
                let (sr, cr) = p.r.sin_cos();
                ([sr * c, sr * s, cr], 0.0)
            }
            Geometry::Hyperbolic => ([c, s, 0.0], p.r.sinh()),
        };
        PreparedPoint {
            geometry,
            r: p.r,
            sinh_r,
            xyz,
        }
    }

    pub fn distance(&self, other: &PreparedPoint) -> f64 {
        let dx = self.xyz[0] - other.xyz[0];
        let dy = self.xyz[1] - other.xyz[1];
        let dz = self.xyz[2] - other.xyz[2];
        let chord2 = dx * dx + dy * dy + dz * dz;
        match self.geometry {
            Geometry::Euclidean => chord2.sqrt(),
            Geometry::Spherical => 2.0 * (0.5 * chord2.sqrt()).min(1.0).asin(),
            Geometry::Hyperbolic => {
                // chord2 / 4 = sin^2(dphi / 2) on the unit circle
                let half_dr = (0.5 * (self.r - other.r)).sinh();
                let s2 = half_dr * half_dr + self.sinh_r * other.sinh_r * 0.25 * chord2;
                2.0 * s2.sqrt().asinh()
            }
        }
    }
}

/// Condensed pairwise distance vector in pair-rank order
/// (`(0,1), (0,2), ..., (0,n-1), (1,2), ...`).
pub fn pairwise_distances(geometry: Geometry, points: &[PolarPoint]) -> Vec<f64> {
    let prepared: Vec<PreparedPoint> = points
        .iter()
        .map(|&p| PreparedPoint::new(geometry, p))
        .collect();
    let n = prepared.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(prepared[i].distance(&prepared[j]));
        }
    }
    out
}

/// Circumference of a geodesic circle of radius `r` in curvature `k`.
pub fn circumference(k: f64, r: f64) -> f64 {
    let scale = k.abs().sqrt();
    if k > 0.0 {
        TAU * (scale * r).sin()
    } else if k < 0.0 {
        TAU * (scale * r).sinh()
    } else {
        TAU * r
    }
}
