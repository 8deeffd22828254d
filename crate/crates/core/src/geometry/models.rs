//! Hyperboloid and Poincaré disk charts of the hyperbolic plane.

use super::PolarPoint;

/// Point on the upper sheet `z^2 - x^2 - y^2 = 1`, `z > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperboloidPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoincarePoint {
    pub u: f64,
    pub v: f64,
}

impl HyperboloidPoint {
    pub fn from_polar(p: PolarPoint) -> Self {
        let (s, c) = p.phi.sin_cos();
        let sh = p.r.sinh();
        HyperboloidPoint {
            x: sh * c,
            y: sh * s,
            z: p.r.cosh(),
        }
    }

    /// `z^2 - x^2 - y^2`; equals 1 on the sheet.
    pub fn minkowski_norm(&self) -> f64 {
        self.z * self.z - self.x * self.x - self.y * self.y
    }

    /// Geodesic distance `acosh(z_a z_b - x_a x_b - y_a y_b)`.
    pub fn distance(&self, other: &HyperboloidPoint) -> f64 {
        let b = self.z * other.z - self.x * other.x - self.y * other.y;
        b.max(1.0).acosh()
    }

    /// Stereographic projection from `(0, 0, -1)` onto the plane `z = 0`.
    pub fn to_poincare(&self) -> PoincarePoint {
        let scale = 1.0 / (1.0 + self.z);
        PoincarePoint {
            u: self.x * scale,
            v: self.y * scale,
        }
    }
}

impl PoincarePoint {
    pub fn norm(&self) -> f64 {
        self.u.hypot(self.v)
    }
}

/// Polar coordinates to the hyperboloid sheet.
pub fn to_hyperboloid(p: PolarPoint) -> HyperboloidPoint {
    HyperboloidPoint::from_polar(p)
}

/// Hyperboloid sheet to the Poincaré disk.
pub fn to_poincare(h: HyperboloidPoint) -> PoincarePoint {
    h.to_poincare()
}
