//! File formats: edge lists, CSV tables, JSON scores, run manifests and
//! model configuration files.

mod config;
mod edgelist;
mod manifest;
mod tables;

pub use config::{
    ComponentConfig, KernelConfig, LatentConfig, LinkConfig, ModelConfig, KERNEL_NAMES,
};
pub use edgelist::{
    florentine, karate, parse_edge_list, parse_edge_list_str, read_labels, write_edge_list,
    write_labels, DuplicatePolicy, EdgeList, ParseOptions,
};
pub use manifest::{sha256_hex, RunManifest};
pub use tables::{
    curve_csv, ensemble_csv, parse_curve_csv, positions_csv, scores_json, sweep_csv, ScoresFile,
};
