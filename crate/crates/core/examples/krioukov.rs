//! Hyperbolic network with a targeted mean degree and power-law exponent.

use clsnet::models::KrioukovParams;

fn main() -> clsnet::Result<()> {
    let params = KrioukovParams {
        n: 500,
        mean_degree: 8.0,
        gamma_pl: 2.5,
        temperature: 0.1,
    };
    let solution = params.solve_radius()?;
    println!(
        "solved R = {:.4}, alpha = {:.3}",
        solution.radius, solution.alpha
    );
    let net = params.generate_with(&solution, 42, 0)?;
    let mut degrees = net.graph.degrees();
    degrees.sort_unstable();
    let mean = degrees.iter().sum::<usize>() as f64 / degrees.len() as f64;
    println!(
        "mean degree {mean:.2}, median {}, max {}",
        degrees[degrees.len() / 2],
        degrees.last().unwrap()
    );
    Ok(())
}
