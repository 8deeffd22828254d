//! Scores the karate club spectrum against ensembles from each geometry.

use std::f64::consts::PI;

use clsnet::geometry::Geometry;
use clsnet::io::karate;
use clsnet::spectral::{build_ensemble, eigenvalues, geometry_score};

fn main() -> clsnet::Result<()> {
    let g = karate().graph;
    let curve = eigenvalues(&g)?;
    let ensembles = Geometry::ALL
        .iter()
        .map(|&geo| build_ensemble(geo, g.node_count(), 100, PI, 10))
        .collect::<clsnet::Result<Vec<_>>>()?;
    let scores = geometry_score(&curve, &ensembles)?;
    for (geo, s) in &scores.scores {
        println!("{:<10} {s:.4}", geo.name());
    }
    println!("closest: {}", scores.label());
    Ok(())
}
