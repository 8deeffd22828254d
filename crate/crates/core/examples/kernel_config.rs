//! A stochastic block model described by a TOML kernel configuration.

use clsnet::io::ModelConfig;
use clsnet::models::generate_cls;

const CONFIG: &str = r#"
[latent]
distribution = "one-hot"
probabilities = [0.5, 0.3, 0.2]

[kernel]
matrix = [[0.3, 0.02, 0.01], [0.02, 0.4, 0.02], [0.01, 0.02, 0.5]]
"#;

fn main() -> clsnet::Result<()> {
    let config = ModelConfig::from_toml(CONFIG)?;
    let (model, latent) = config.build("sbm", 150, 3)?;
    let g = generate_cls(&model, &latent, 3, 0, false)?;
    println!(
        "sbm: {} nodes, {} edges, {} components",
        g.node_count(),
        g.edge_count(),
        g.component_count()
    );
    Ok(())
}
