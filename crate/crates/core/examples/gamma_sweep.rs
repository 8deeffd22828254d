//! A reduced gamma sweep over the three geometries, written as CSV.

use clsnet::io::sweep_csv;
use clsnet::stats::{run_sweep, SweepConfig};

fn main() -> clsnet::Result<()> {
    let mut config = SweepConfig::reference_grid(2024);
    config.sizes = vec![30];
    config.reps = 10;
    print!("{}", sweep_csv(&run_sweep(&config)?));
    Ok(())
}
