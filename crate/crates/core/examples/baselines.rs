//! Erdos-Renyi, preferential attachment, small-world and lattice references.

use clsnet::baselines::{BaselineKind, BaselineSpec};
use clsnet::stats::{average_path_length, transitivity};

fn main() -> clsnet::Result<()> {
    for kind in [
        BaselineKind::ErdosRenyi { p: 0.04 },
        BaselineKind::BarabasiAlbert { m: 2 },
        BaselineKind::WattsStrogatz { k: 2, beta: 0.1 },
        BaselineKind::Lattice { k: 2 },
    ] {
        let g = BaselineSpec::new(kind, 200).generate(1, 0)?;
        let apl = average_path_length(&g)?.unwrap_or(f64::NAN);
        println!(
            "{kind:?}: {} edges, transitivity {:.3}, path length {apl:.2}",
            g.edge_count(),
            transitivity(&g)?
        );
    }
    Ok(())
}
