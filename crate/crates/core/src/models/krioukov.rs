//! Hyperbolic Fermi-Dirac model with a quadrature-solved disk radius.
//!
//! Radii follow `p(r | R, alpha) = alpha sinh(alpha r) / (cosh(alpha R) - 1)`,
//! angles are uniform, and pairs connect with probability
//! `1 / (1 + exp((d - R) / (2T)))`. The exponent of the target power law
//! fixes `alpha = (gamma_pl - 1) / 2` for `T <= 1` and `(gamma_pl - 1) / (2T)`
//! above. `R` is the root of
//!
//! ```text
//! kbar = (n / pi) ∫∫ p(r1) p(r2) ∫_0^pi p_FD(d(r1, r2, dphi)) d(dphi) dr1 dr2
//! ```
//!
//! found by safeguarded false position. The radial integrals use composite Simpson on a fixed
//! grid; the angular integral is adaptive and split where `d = R`, because for
//! small `T` it is essentially a step whose location can be far narrower than
//! any fixed grid spacing.

use crate::error::{Error, Result};
use crate::geometry::{
    quasi_uniform_pdf, sample_quasi_uniform_with, PolarPoint, MAX_HYPERBOLIC_RADIUS,
};
use crate::graph::Graph;
use crate::rng::{replicate_rng, Purpose};

use super::generate::{generate_cls, ClsModel};
use super::latent::{LatentConfiguration, Positions};
use super::link::{logistic, Link};

/// Simpson nodes per radial axis.
const RADIAL_NODES: usize = 129;
const BISECTION_TOL: f64 = 1e-6;
const MAX_BISECTIONS: usize = 200;
const ANGULAR_TOL: f64 = 1e-10;
const ANGULAR_MAX_DEPTH: u32 = 40;
/// Lower end of the radius bracket.
const MIN_RADIUS: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrioukovParams {
    pub n: usize,
    /// Target average degree.
    pub mean_degree: f64,
    /// Exponent of the power-law degree distribution.
    pub gamma_pl: f64,
    pub temperature: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusSolution {
    pub radius: f64,
    pub alpha: f64,
    /// Quadrature value of the mean degree at `radius`.
    pub achieved_mean_degree: f64,
    pub iterations: usize,
}

/// A generated network together with its latent positions.
#[derive(Debug, Clone)]
pub struct KrioukovGraph {
    pub graph: Graph,
    pub positions: Vec<PolarPoint>,
    pub radius: f64,
    pub alpha: f64,
}

impl KrioukovParams {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::input("need at least two nodes"));
        }
        if !(self.mean_degree.is_finite() && self.mean_degree > 0.0) {
            return Err(Error::input("target mean degree must be positive"));
        }
        if !(self.gamma_pl.is_finite() && self.gamma_pl > 1.0) {
            return Err(Error::input("power-law exponent must exceed 1"));
        }
        if !(self.temperature.is_finite() && self.temperature > 0.0) {
            return Err(Error::input("temperature must be positive"));
        }
        Ok(())
    }

    pub fn alpha(&self) -> f64 {
        if self.temperature <= 1.0 {
            0.5 * (self.gamma_pl - 1.0)
        } else {
            0.5 * (self.gamma_pl - 1.0) / self.temperature
        }
    }

    /// Mean degree implied by disk radius `radius`.
    pub fn expected_mean_degree(&self, radius: f64) -> f64 {
        let alpha = self.alpha();
        let t = self.temperature;
        let h = radius / (RADIAL_NODES - 1) as f64;
        let nodes: Vec<f64> = (0..RADIAL_NODES).map(|k| k as f64 * h).collect();
        let weights: Vec<f64> = (0..RADIAL_NODES)
            .map(|k| {
                let w = if k == 0 || k == RADIAL_NODES - 1 {
                    1.0
                } else if k % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                w * h / 3.0
            })
            .collect();
        let dens: Vec<f64> = nodes
            .iter()
            .zip(&weights)
            .map(|(&r, &w)| w * quasi_uniform_pdf(r, radius, alpha))
            .collect();
        let sinh_half_r = (0.5 * radius).sinh();
        let mut total = 0.0;
        for a in 0..RADIAL_NODES {
            if dens[a] == 0.0 {
                continue;
            }
            for b in a..RADIAL_NODES {
                if dens[b] == 0.0 {
                    continue;
                }
                let inner = angular_integral(nodes[a], nodes[b], radius, sinh_half_r, t);
                let mult = if a == b { 1.0 } else { 2.0 };
                total += mult * dens[a] * dens[b] * inner;
            }
        }
        self.n as f64 / std::f64::consts::PI * total
    }

    /// Solves for the disk radius matching the target mean degree.
    pub fn solve_radius(&self) -> Result<RadiusSolution> {
        self.validate()?;
        let target = self.mean_degree;
        let mut lo = MIN_RADIUS;
        let k_lo = self.expected_mean_degree(lo);
        if k_lo < target {
            return Err(Error::Numerical(format!(
                "target mean degree {target} not bracketed: the densest admissible disk (R={lo}) gives {k_lo:.4}"
            )));
        }
        let mut hi = 2.0;
        let mut k_hi = self.expected_mean_degree(hi);
        while k_hi >= target {
            if hi >= MAX_HYPERBOLIC_RADIUS {
                return Err(Error::Numerical(format!(
                    "target mean degree {target} not bracketed: R={hi} still gives {k_hi:.4}"
                )));
            }
            lo = hi;
            hi = (2.0 * hi).min(MAX_HYPERBOLIC_RADIUS);
            k_hi = self.expected_mean_degree(hi);
        }
        // Illinois false position on ln k(R) - ln target, which is close to
        // linear in R; falls back to halving when the secant stalls
        let f = |k: f64| k.ln() - target.ln();
        let (mut f_lo, mut f_hi) = (f(self.expected_mean_degree(lo)), f(k_hi));
        let mut side = 0i8;
        let mut iterations = 0;
        while hi - lo > BISECTION_TOL {
            if iterations >= MAX_BISECTIONS {
                return Err(Error::Numerical(format!(
                    "root search did not converge: bracket [{lo}, {hi}] after {iterations} steps"
                )));
            }
            let mut mid = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
            if !(mid > lo && mid < hi) {
                mid = 0.5 * (lo + hi);
            }
            let f_mid = f(self.expected_mean_degree(mid));
            iterations += 1;
            if f_mid == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if f_mid > 0.0 {
                lo = mid;
                f_lo = f_mid;
                if side == 1 {
                    f_hi *= 0.5;
                }
                side = 1;
            } else {
                hi = mid;
                f_hi = f_mid;
                if side == -1 {
                    f_lo *= 0.5;
                }
                side = -1;
            }
            if f_mid.abs() < 1e-12 {
                lo = mid;
                hi = mid;
                break;
            }
        }
        let radius = 0.5 * (lo + hi);
        Ok(RadiusSolution {
            radius,
            alpha: self.alpha(),
            achieved_mean_degree: self.expected_mean_degree(radius),
            iterations,
        })
    }

    /// One network for an already solved radius; `replicate` selects the stream.
    pub fn generate_with(
        &self,
        solution: &RadiusSolution,
        seed: u64,
        replicate: u64,
    ) -> Result<KrioukovGraph> {
        self.validate()?;
        let mut rng = replicate_rng(seed, Purpose::Positions, replicate);
        let positions =
            sample_quasi_uniform_with(solution.radius, solution.alpha, self.n, &mut rng);
        let model = ClsModel::distance(
            crate::geometry::Geometry::Hyperbolic,
            Link::FermiDirac {
                temperature: self.temperature,
                radius: solution.radius,
            },
        );
        let config = LatentConfiguration::new(Positions::Polar(positions.clone()));
        let graph = generate_cls(&model, &config, seed, replicate, false)?;
        Ok(KrioukovGraph {
            graph,
            positions,
            radius: solution.radius,
            alpha: solution.alpha,
        })
    }
}

/// `∫_0^pi p_FD(d(r1, r2, phi)) dphi`.
fn angular_integral(r1: f64, r2: f64, radius: f64, sinh_half_r: f64, t: f64) -> f64 {
    use std::f64::consts::PI;
    let sa = r1.sinh();
    let sb = r2.sinh();
    let half = (0.5 * (r1 - r2)).sinh();
    let h = half * half;
    let prob = |phi: f64| {
        let s = (0.5 * phi).sin();
        let d = 2.0 * (h + sa * sb * s * s).sqrt().asinh();
        logistic((radius - d) / (2.0 * t))
    };
    let prod = sa * sb;
    if prod == 0.0 {
        return PI * prob(0.0);
    }
    // sin^2(phi*/2) where d(phi*) = R
    let s2 = (sinh_half_r * sinh_half_r - h) / prod;
    if s2 <= 0.0 || s2 >= 1.0 {
        return adaptive_simpson(&prob, 0.0, PI);
    }
    let split = 2.0 * s2.sqrt().asin();
    adaptive_simpson(&prob, 0.0, split) + adaptive_simpson(&prob, split, PI)
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * eps {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1)
    }
    if b <= a {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    recurse(f, a, b, fa, fm, fb, whole, ANGULAR_TOL, ANGULAR_MAX_DEPTH)
}

/// Disk radius for target mean degree `kbar`.
pub fn solve_krioukov_radius(
    n: usize,
    kbar: f64,
    gamma_pl: f64,
    temperature: f64,
) -> Result<RadiusSolution> {
    KrioukovParams {
        n,
        mean_degree: kbar,
        gamma_pl,
        temperature,
    }
    .solve_radius()
}

/// Solves the radius and draws one network.
pub fn generate_krioukov(params: &KrioukovParams, seed: u64) -> Result<KrioukovGraph> {
    let solution = params.solve_radius()?;
    params.generate_with(&solution, seed, 0)
}
