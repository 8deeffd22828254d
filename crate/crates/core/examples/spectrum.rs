//! Laplacian eigenvalue curve of a network and a geometry ensemble summary.

use std::f64::consts::PI;

use clsnet::geometry::Geometry;
use clsnet::io::karate;
use clsnet::spectral::{build_ensemble, eigenvalues};

fn main() -> clsnet::Result<()> {
    let curve = eigenvalues(&karate().graph)?;
    println!(
        "karate: lambda_max {:.4}, algebraic connectivity {:.4}, components {}",
        curve.values[0],
        curve.algebraic_connectivity().unwrap_or(0.0),
        curve.zero_multiplicity()
    );
    let e = build_ensemble(Geometry::Spherical, 34, 50, PI, 1)?;
    println!(
        "spherical ensemble (n=34, 50 reps): mean lambda_max {:.4}",
        e.mean[0]
    );
    Ok(())
}
