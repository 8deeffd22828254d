//! Uniform positions in a disk of each geometry, plus quasi-uniform hyperbolic
//! positions and ultrametric leaves.

use std::f64::consts::FRAC_PI_2;

use clsnet::geometry::{sample_disk, sample_quasi_uniform, DiskDomain, Geometry, UltrametricTree};
use clsnet::rng::substream;

fn main() -> clsnet::Result<()> {
    for g in Geometry::ALL {
        let domain = DiskDomain::new(g, FRAC_PI_2)?;
        let pts = sample_disk(&domain, 1000, 1)?;
        let mean_r = pts.iter().map(|p| p.r).sum::<f64>() / pts.len() as f64;
        println!(
            "{:<10} R=pi/2 mean radius {mean_r:.3} (median {:.3})",
            g.name(),
            domain.radial_quantile(0.5)
        );
    }
    for alpha in [0.5, 1.0, 2.0] {
        let pts = sample_quasi_uniform(7.5, alpha, 1000, 2)?;
        let mean_r = pts.iter().map(|p| p.r).sum::<f64>() / pts.len() as f64;
        println!("hyperbolic R=7.5 alpha={alpha}: mean radius {mean_r:.3}");
    }
    let tree = UltrametricTree::new(3, 4)?;
    let mut rng = substream(3, 0);
    let (a, b) = (tree.sample_leaf(&mut rng), tree.sample_leaf(&mut rng));
    println!(
        "ultrametric leaves {a} and {b} of {}: distance {}",
        tree.leaves(),
        tree.distance(a, b)?
    );
    Ok(())
}
