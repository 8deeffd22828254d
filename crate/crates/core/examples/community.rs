//! Girvan-Newman communities and modularity on the bundled networks.

use clsnet::io::{florentine, karate};
use clsnet::stats::girvan_newman;

fn main() -> clsnet::Result<()> {
    for (name, net) in [("karate", karate()), ("florentine", florentine())] {
        let c = girvan_newman(&net.graph)?;
        println!(
            "{name}: {} communities, Q = {:.4}",
            c.count,
            c.modularity.unwrap_or(0.0)
        );
    }
    Ok(())
}
