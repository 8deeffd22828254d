//! Logit and Heaviside latent distance models on the same positions.

use std::f64::consts::PI;

use clsnet::geometry::{sample_disk, DiskDomain, Geometry};
use clsnet::models::{generate_cls, ClsModel, LatentConfiguration, Link, Positions};
use clsnet::stats::transitivity;

fn main() -> clsnet::Result<()> {
    for g in Geometry::ALL {
        let pts = sample_disk(&DiskDomain::new(g, PI)?, 200, 7)?;
        let config = LatentConfiguration::new(Positions::Polar(pts));
        let logit = generate_cls(
            &ClsModel::distance(g, Link::Logit { alpha: 0.0 }),
            &config,
            7,
            0,
            false,
        )?;
        let step = ClsModel::distance(g, Link::Heaviside { gamma_cut: 0.3 }).rescaled();
        let heaviside = generate_cls(&step, &config, 7, 0, false)?;
        println!(
            "{:<10} logit: {} edges, transitivity {:.3}; heaviside(0.3): {} edges, transitivity {:.3}",
            g.name(),
            logit.edge_count(),
            transitivity(&logit)?,
            heaviside.edge_count(),
            transitivity(&heaviside)?
        );
    }
    Ok(())
}
