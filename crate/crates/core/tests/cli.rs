//! End-to-end tests of the `clsnet` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn karate_path() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data/karate.edges")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clsnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_ok(args: &[&str]) -> Output {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn manifest_of(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}

/// Runs `args` (which write to `out`) twice and checks the artifact and its
/// manifest are byte-identical across runs.
fn deterministic(args: &[&str], out: &Path) -> String {
    run_ok(args);
    let first = (
        std::fs::read(out).unwrap(),
        std::fs::read(manifest_of(out)).unwrap(),
    );
    run_ok(args);
    let second = (
        std::fs::read(out).unwrap(),
        std::fs::read(manifest_of(out)).unwrap(),
    );
    assert_eq!(first, second, "{args:?} is not reproducible");
    let manifest: serde_json::Value = serde_json::from_slice(&first.1).unwrap();
    let name = out.file_name().unwrap().to_str().unwrap();
    let digest = manifest["artifacts"][name].as_str().unwrap();
    assert_eq!(digest, clsnet::io::sha256_hex(&first.0));
    String::from_utf8(first.0).unwrap()
}

fn error_json(out: &Output) -> serde_json::Value {
    let stderr = String::from_utf8_lossy(&out.stderr);
    let line = stderr
        .lines()
        .rev()
        .find(|l| l.starts_with('{'))
        .unwrap_or_else(|| {
            panic!("no JSON error on stderr: {stderr}");
        });
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    assert!(v["error"].is_string() && v["message"].is_string());
    v
}

#[test]
fn sample_every_space() {
    let dir = tempfile::tempdir().unwrap();
    for (space, extra) in [
        ("euclidean", vec!["--radius", "1.5"]),
        ("spherical", vec!["--radius", "3.14"]),
        ("hyperbolic", vec!["--radius", "5", "--alpha", "0.5"]),
        ("ultrametric", vec!["--branching", "3", "--depth", "2"]),
    ] {
        let out = dir.path().join(format!("{space}.csv"));
        let mut args = vec!["sample", "--geometry", space, "--n", "25", "--seed", "3"];
        args.extend(&extra);
        args.extend(["--out", out.to_str().unwrap()]);
        let text = deterministic(&args, &out);
        assert_eq!(
            text.lines().count(),
            26,
            "{space}: header plus one row per node"
        );
    }
}

#[test]
fn generate_every_model() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sbm.toml");
    std::fs::write(
        &config,
        "[latent]\ndistribution = \"one-hot\"\nprobabilities = [0.5, 0.5]\n\n[kernel]\nmatrix = [[0.5, 0.05], [0.05, 0.5]]\n",
    )
    .unwrap();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        (
            "logit",
            vec![
                "--model",
                "distance-logit",
                "--geometry",
                "hyperbolic",
                "--radius",
                "3",
                "--alpha",
                "1",
            ],
        ),
        (
            "heaviside",
            vec![
                "--model",
                "heaviside",
                "--geometry",
                "spherical",
                "--radius",
                "1.5",
                "--gamma",
                "0.4",
                "--rescale",
            ],
        ),
        (
            "tree",
            vec![
                "--model",
                "heaviside",
                "--geometry",
                "ultrametric",
                "--branching",
                "2",
                "--depth",
                "4",
                "--gamma",
                "2",
            ],
        ),
        (
            "krioukov",
            vec![
                "--model",
                "krioukov",
                "--mean-degree",
                "6",
                "--gamma-pl",
                "2.5",
                "--temperature",
                "0.5",
            ],
        ),
        (
            "graphon",
            vec!["--model", "graphon", "--graphon", "product"],
        ),
        (
            "constant",
            vec!["--model", "graphon", "--graphon", "constant:0.2"],
        ),
        (
            "sbm",
            vec![
                "--model",
                "kernel:sbm",
                "--config",
                config.to_str().unwrap(),
            ],
        ),
    ];
    for (name, extra) in cases {
        let out = dir.path().join(format!("{name}.edges"));
        let mut args = vec!["generate", "--n", "40", "--seed", "11"];
        args.extend(&extra);
        args.extend(["--out", out.to_str().unwrap()]);
        let text = deterministic(&args, &out);
        let parsed = clsnet::io::parse_edge_list_str(&text, Default::default()).unwrap();
        assert_eq!(parsed.graph.node_count(), 40, "{name}");
    }
}

#[test]
fn baseline_every_kind() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, extra) in [
        ("er", vec!["--p", "0.1"]),
        ("ba", vec!["--m", "2"]),
        ("ws", vec!["--k", "2", "--beta", "0.1"]),
        ("lattice", vec!["--k", "3"]),
    ] {
        let out = dir.path().join(format!("{kind}.edges"));
        let mut args = vec!["baseline", "--kind", kind, "--n", "50", "--seed", "5"];
        args.extend(&extra);
        args.extend(["--out", out.to_str().unwrap()]);
        let text = deterministic(&args, &out);
        let parsed = clsnet::io::parse_edge_list_str(&text, Default::default()).unwrap();
        assert_eq!(parsed.graph.node_count(), 50);
        if kind == "lattice" {
            assert_eq!(parsed.graph.edge_count(), 150);
        }
    }
}

#[test]
fn sweep_on_the_default_grid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let text = deterministic(
        &[
            "sweep",
            "--reps",
            "1",
            "--seed",
            "7",
            "--out",
            out.to_str().unwrap(),
        ],
        &out,
    );
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("geometry,n,gamma,stat,mean,min,max"));
    // 3 geometries x 3 sizes x 6 gammas x 6 statistics
    assert_eq!(lines.count(), 3 * 3 * 6 * 6);
}

#[test]
fn spectrum_ensemble_compare() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("karate.curve.csv");
    let text = deterministic(
        &[
            "spectrum",
            "--edges",
            karate_path(),
            "--out",
            curve.to_str().unwrap(),
        ],
        &curve,
    );
    let values = clsnet::io::parse_curve_csv(&text).unwrap().values;
    assert_eq!(values.len(), 34);
    assert!(values.windows(2).all(|w| w[0] >= w[1]));
    assert!((values.iter().sum::<f64>() - 2.0 * 78.0).abs() < 1e-9);

    let ens = dir.path().join("ensemble.csv");
    let text = deterministic(
        &[
            "ensemble",
            "--geometry",
            "hyperbolic",
            "--n",
            "30",
            "--reps",
            "10",
            "--seed",
            "2",
            "--out",
            ens.to_str().unwrap(),
        ],
        &ens,
    );
    assert_eq!(text.lines().count(), 31);

    let scores = dir.path().join("scores.json");
    let text = deterministic(
        &[
            "compare",
            "--edges",
            karate_path(),
            "--reps",
            "20",
            "--seed",
            "4",
            "--out",
            scores.to_str().unwrap(),
        ],
        &scores,
    );
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let s = v["scores"].as_object().unwrap();
    assert_eq!(s.len(), 3);
    assert!(s.values().all(|x| x.as_f64().unwrap().is_finite()));
    let label = v["label"].as_str().unwrap();
    assert!(label.split(',').all(|g| s.contains_key(g)));
}

#[test]
fn missing_seed_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let o = run(&[
        "sample",
        "--geometry",
        "euclidean",
        "--n",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "usage");
    assert!(!out.exists());
}

#[test]
fn invalid_combinations_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.edges");
    let out = out.to_str().unwrap();
    for args in [
        vec![
            "generate",
            "--model",
            "distance-logit",
            "--geometry",
            "euclidean",
            "--gamma",
            "0.3",
            "--n",
            "5",
            "--seed",
            "1",
            "--out",
            out,
        ],
        vec![
            "generate",
            "--model",
            "heaviside",
            "--geometry",
            "euclidean",
            "--alpha",
            "1",
            "--n",
            "5",
            "--seed",
            "1",
            "--out",
            out,
        ],
        vec![
            "generate",
            "--model",
            "warp-drive",
            "--n",
            "5",
            "--seed",
            "1",
            "--out",
            out,
        ],
        vec![
            "baseline", "--kind", "er", "--n", "5", "--seed", "1", "--out", out,
        ],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        error_json(&o);
    }
}

#[test]
fn runtime_failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "a b\nb c extra\n").unwrap();
    let out = dir.path().join("curve.csv");
    let o = run(&[
        "spectrum",
        "--edges",
        bad.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    error_json(&o);

    let missing = dir.path().join("nope.edges");
    let o = run(&[
        "spectrum",
        "--edges",
        missing.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    error_json(&o);

    let o = run(&[
        "baseline",
        "--kind",
        "er",
        "--p",
        "1.5",
        "--n",
        "5",
        "--seed",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_ne!(o.status.code(), Some(0));
    error_json(&o);
}

#[test]
fn help_and_version_succeed() {
    let o = run_ok(&["--help"]);
    let help = String::from_utf8_lossy(&o.stdout);
    for sub in [
        "sample", "generate", "baseline", "sweep", "spectrum", "ensemble", "compare",
    ] {
        assert!(help.contains(sub), "help lists {sub}");
    }
    run_ok(&["--version"]);
}
