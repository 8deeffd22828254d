//! Cutoff sweep over rescaled latent distances.
//!
//! Each replicate draws one set of positions, rescales the pairwise distances
//! by their maximum, and thresholds them at every cutoff of the grid. The edge
//! sets of one replicate are therefore nested in the cutoff.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{average_path_length, centralization, girvan_newman, transitivity, CentralityKind};
use crate::error::{Error, Result};
use crate::geometry::{pairwise_distances, DiskDomain, Geometry};
use crate::graph::Graph;
use crate::models::heaviside_graph;
use crate::rng::{replicate_rng, Purpose};

/// Graph statistics reported by the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Transitivity,
    AveragePathLength,
    DegreeCentralization,
    BetweennessCentralization,
    ClosenessCentralization,
    Modularity,
}

impl Statistic {
    pub const ALL: [Statistic; 6] = [
        Statistic::Transitivity,
        Statistic::AveragePathLength,
        Statistic::DegreeCentralization,
        Statistic::BetweennessCentralization,
        Statistic::ClosenessCentralization,
        Statistic::Modularity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Transitivity => "transitivity",
            Statistic::AveragePathLength => "avg_path_length",
            Statistic::DegreeCentralization => "degree_centralization",
            Statistic::BetweennessCentralization => "betweenness_centralization",
            Statistic::ClosenessCentralization => "closeness_centralization",
            Statistic::Modularity => "modularity",
        }
    }

    /// Value on `g`. Path length and modularity are reported as 0 where they
    /// are undefined (no reachable pair, no edge).
    pub fn evaluate(self, g: &Graph) -> Result<f64> {
        Ok(match self {
            Statistic::Transitivity => transitivity(g)?,
            Statistic::AveragePathLength => average_path_length(g)?.unwrap_or(0.0),
            Statistic::DegreeCentralization => centralization(g, CentralityKind::Degree)?,
            Statistic::BetweennessCentralization => centralization(g, CentralityKind::Betweenness)?,
            Statistic::ClosenessCentralization => centralization(g, CentralityKind::Closeness)?,
            Statistic::Modularity => girvan_newman(g)?.modularity.unwrap_or(0.0),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::input(format!("unknown statistic '{s}'")))
    }
}

/// A geometry together with the disk radius used for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepGeometry {
    pub geometry: Geometry,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub geometries: Vec<SweepGeometry>,
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub gamma_start: f64,
    pub gamma_stop: f64,
    pub gamma_step: f64,
    pub statistics: Vec<Statistic>,
    pub seed: u64,
}

impl SweepConfig {
    /// Grid 0, 0.2, ..., 1 over Euclidean (R = pi/2), spherical (R = pi/2) and
    /// hyperbolic (R = 7.5) disks at n = 20, 50, 100 with 200 replicates.
    pub fn reference_grid(seed: u64) -> Self {
        use std::f64::consts::FRAC_PI_2;
        SweepConfig {
            geometries: vec![
                SweepGeometry {
                    geometry: Geometry::Euclidean,
                    radius: FRAC_PI_2,
                },
                SweepGeometry {
                    geometry: Geometry::Spherical,
                    radius: FRAC_PI_2,
                },
                SweepGeometry {
                    geometry: Geometry::Hyperbolic,
                    radius: 7.5,
                },
            ],
            sizes: vec![20, 50, 100],
            reps: 200,
            gamma_start: 0.0,
            gamma_stop: 1.0,
            gamma_step: 0.2,
            statistics: Statistic::ALL.to_vec(),
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.geometries.is_empty() || self.sizes.is_empty() || self.statistics.is_empty() {
            return Err(Error::input("sweep needs geometries, sizes and statistics"));
        }
        if self.reps == 0 {
            return Err(Error::input("sweep needs reps >= 1"));
        }
        if let Some(&n) = self.sizes.iter().find(|&&n| n < 3) {
            return Err(Error::input(format!("sweep sizes must be >= 3, got {n}")));
        }
        let (a, b, s) = (self.gamma_start, self.gamma_stop, self.gamma_step);
        if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) || a > b {
            return Err(Error::input(format!(
                "cutoff grid [{a}, {b}] must lie in [0, 1]"
            )));
        }
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::input(format!(
                "cutoff step must be positive, got {s}"
            )));
        }
        for g in &self.geometries {
            DiskDomain::new(g.geometry, g.radius)?;
        }
        Ok(())
    }

    /// Cutoff values `start + k * step <= stop`, rounded to 12 decimals.
    pub fn gammas(&self) -> Vec<f64> {
        let count =
            ((self.gamma_stop - self.gamma_start) / self.gamma_step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|k| {
                let g = self.gamma_start + k as f64 * self.gamma_step;
                ((g * 1e12).round() / 1e12).min(1.0)
            })
            .collect()
    }
}

/// One aggregated cell of the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub geometry: Geometry,
    pub n: usize,
    pub gamma: f64,
    pub statistic: Statistic,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

fn replicate_index(geometry_slot: usize, n: usize, rep: usize) -> u64 {
    ((geometry_slot as u64) << 48) | ((n as u64) << 24) | rep as u64
}

/// Positions of one replicate, distances rescaled by their maximum.
fn rescaled_distances(
    g: SweepGeometry,
    slot: usize,
    n: usize,
    rep: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    let domain = DiskDomain::new(g.geometry, g.radius)?;
    let mut rng = replicate_rng(seed, Purpose::Positions, replicate_index(slot, n, rep));
    let points = domain.sample(n, &mut rng);
    let mut d = pairwise_distances(g.geometry, &points);
    let max = d.iter().copied().fold(0.0, f64::max);
    if max > 0.0 {
        d.iter_mut().for_each(|x| *x = (*x / max).min(1.0));
    }
    Ok(d)
}

/// Graphs of replicate `rep` for geometry slot `slot` at every cutoff of the grid.
pub fn sweep_replicate_graphs(
    config: &SweepConfig,
    slot: usize,
    n: usize,
    rep: usize,
) -> Result<Vec<Graph>> {
    config.validate()?;
    let g = *config
        .geometries
        .get(slot)
        .ok_or_else(|| Error::input(format!("no geometry in slot {slot}")))?;
    let d = rescaled_distances(g, slot, n, rep, config.seed)?;
    config
        .gammas()
        .into_iter()
        .map(|gamma| heaviside_graph(n, &d, gamma))
        .collect()
}

/// Run the sweep. Rows are ordered by geometry, size, cutoff and statistic;
/// output is identical for any thread count.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let gammas = config.gammas();
    let stats = &config.statistics;
    let mut rows = Vec::new();
    for (slot, &geo) in config.geometries.iter().enumerate() {
        for &n in &config.sizes {
            // values[rep][gamma][stat]
            let values: Vec<Vec<Vec<f64>>> = (0..config.reps)
                .into_par_iter()
                .map(|rep| -> Result<Vec<Vec<f64>>> {
                    let d = rescaled_distances(geo, slot, n, rep, config.seed)?;
                    gammas
                        .iter()
                        .map(|&gamma| {
                            let graph = heaviside_graph(n, &d, gamma)?;
                            stats.iter().map(|s| s.evaluate(&graph)).collect()
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            for (gi, &gamma) in gammas.iter().enumerate() {
                for (si, &statistic) in stats.iter().enumerate() {
                    let (mut sum, mut min, mut max) = (0.0, f64::INFINITY, f64::NEG_INFINITY);
                    for rep in &values {
                        let x = rep[gi][si];
                        sum += x;
                        min = min.min(x);
                        max = max.max(x);
                    }
                    let mean = (sum / config.reps as f64).clamp(min, max);
                    rows.push(SweepRow {
                        geometry: geo.geometry,
                        n,
                        gamma,
                        statistic,
                        mean,
                        min,
                        max,
                    });
                }
            }
        }
    }
    Ok(rows)
}
