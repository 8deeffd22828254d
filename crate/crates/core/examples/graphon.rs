//! Graphon sampling with a few standard kernels.

use clsnet::models::sample_graphon;

type Kernel = fn(f64, f64) -> f64;

fn main() -> clsnet::Result<()> {
    let cases: [(&str, Kernel); 3] = [
        ("constant 0.1", |_, _| 0.1),
        ("product", |u, v| u * v),
        ("min", |u, v| u.min(v)),
    ];
    for (name, w) in cases {
        let s = sample_graphon(w, 300, 9)?;
        println!("{name:<12} density {:.4}", s.graph.density());
    }
    Ok(())
}
