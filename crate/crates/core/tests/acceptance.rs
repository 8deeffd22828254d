//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clsnet::baselines::{BaselineKind, BaselineSpec};
use clsnet::geometry::{
    quasi_uniform_pdf, DiskDomain, Geometry, HyperboloidPoint, PolarPoint, UltrametricTree,
};
use clsnet::graph::Graph;
use clsnet::models::{
    generate_cls, ClsModel, KrioukovParams, LatentConfiguration, Link, Positions,
};
use clsnet::rng::substream;
use clsnet::spectral::{build_ensemble, eigenvalues, ensemble_member, geometry_score};
use clsnet::stats::{
    bootstrap_mean_difference, centralization, run_sweep, sweep_replicate_graphs, transitivity,
    CentralityKind, SweepConfig, SweepGeometry,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed > limit {
        return Err(format!("{what} took {elapsed:.1?}, limit {limit:?}"));
    }
    Ok(())
}

fn metric_axioms() -> Outcome {
    let start = Instant::now();
    let mut worst_sym: f64 = 0.0;
    let mut worst_tri: f64 = 0.0;
    for (g, radius) in [
        (Geometry::Euclidean, PI),
        (Geometry::Spherical, PI),
        (Geometry::Hyperbolic, 7.5),
    ] {
        let d = DiskDomain::new(g, radius).unwrap();
        let mut rng = substream(101, g as u64);
        for _ in 0..10_000 {
            let (a, b, c) = (
                d.sample_point(&mut rng),
                d.sample_point(&mut rng),
                d.sample_point(&mut rng),
            );
            let ab = g.distance(a, b).unwrap();
            let ba = g.distance(b, a).unwrap();
            let bc = g.distance(b, c).unwrap();
            let ac = g.distance(a, c).unwrap();
            worst_sym = worst_sym.max((ab - ba).abs());
            worst_tri = worst_tri.max(ac - (ab + bc));
        }
    }
    let mut ultra_violations = 0usize;
    for (b, depth) in [(2u64, 6u32), (4, 3), (8, 2)] {
        let t = UltrametricTree::new(b, depth).unwrap();
        assert_eq!(t.leaves(), 64);
        for x in 0..64 {
            for y in 0..64 {
                for z in 0..64 {
                    let (xy, yz, xz) = (
                        t.distance(x, y).unwrap(),
                        t.distance(y, z).unwrap(),
                        t.distance(x, z).unwrap(),
                    );
                    if xz > xy.max(yz) {
                        ultra_violations += 1;
                    }
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10), "metric axioms")?;
    check(
        worst_sym <= 1e-12 && worst_tri <= 1e-9 && ultra_violations == 0,
        format!(
            "max |d(a,b)-d(b,a)| = {worst_sym:.1e}, max triangle excess = {worst_tri:.1e}, ultrametric violations = {ultra_violations}, {:.1?}",
            start.elapsed()
        ),
    )
}

fn radial_sampling() -> Outcome {
    let start = Instant::now();
    let mut cases = vec![];
    for g in Geometry::ALL {
        for r in [FRAC_PI_2, PI] {
            cases.push((g, r));
        }
    }
    cases.push((Geometry::Hyperbolic, 7.5));
    let mut worst_ks: f64 = 0.0;
    let mut report = Vec::new();
    for (k, &(g, radius)) in cases.iter().enumerate() {
        let d = DiskDomain::new(g, radius).unwrap();
        let mut rng = substream(202, k as u64);
        let mut rs: Vec<f64> = d.sample(100_000, &mut rng).iter().map(|p| p.r).collect();
        rs.sort_by(f64::total_cmp);
        let n = rs.len() as f64;
        let ks = rs
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let f = d.radial_cdf(r);
                (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
            })
            .fold(0.0, f64::max);
        worst_ks = worst_ks.max(ks);
        report.push(format!("{}@{radius:.3}:{ks:.4}", g.name()));
    }
    let mut worst_pdf: f64 = 0.0;
    for radius in [FRAC_PI_2, PI, 7.5] {
        let d = DiskDomain::new(Geometry::Hyperbolic, radius).unwrap();
        for i in 0..1000 {
            let r = radius * i as f64 / 999.0;
            worst_pdf = worst_pdf.max((quasi_uniform_pdf(r, radius, 1.0) - d.radial_pdf(r)).abs());
        }
    }
    within(start.elapsed(), Duration::from_secs(30), "radial sampling")?;
    check(
        worst_ks < 0.02 && worst_pdf <= 1e-12,
        format!(
            "KS {} (max {worst_ks:.4}); alpha=1 density gap {worst_pdf:.1e}",
            report.join(" ")
        ),
    )
}

fn cross_formula_distance() -> Outcome {
    let d = DiskDomain::new(Geometry::Hyperbolic, 7.5).unwrap();
    let mut rng = substream(303, 0);
    let (mut worst_lib, mut worst_polar): (f64, f64) = (0.0, 0.0);
    for _ in 0..10_000 {
        let (a, b): (PolarPoint, PolarPoint) = (d.sample_point(&mut rng), d.sample_point(&mut rng));
        let minkowski = HyperboloidPoint::from_polar(a).distance(&HyperboloidPoint::from_polar(b));
        let arg = a.r.cosh() * b.r.cosh() - a.r.sinh() * b.r.sinh() * (a.phi - b.phi).cos();
        let polar = arg.max(1.0).acosh();
        worst_lib = worst_lib.max((Geometry::Hyperbolic.distance(a, b).unwrap() - minkowski).abs());
        worst_polar = worst_polar.max((polar - minkowski).abs());
    }
    check(
        worst_lib <= 1e-8 && worst_polar <= 1e-8,
        format!("10^4 pairs at R=7.5: library vs Minkowski {worst_lib:.1e}, literal polar vs Minkowski {worst_polar:.1e}"),
    )
}

fn random_graph(k: usize, rng: &mut impl Rng) -> Graph {
    let n = rng.random_range(2..=200usize);
    let seed = k as u64;
    match k % 6 {
        0 => BaselineSpec::new(
            BaselineKind::ErdosRenyi {
                p: rng.random_range(0.0..0.1),
            },
            n,
        )
        .generate(seed, 0)
        .unwrap(),
        1 => {
            let m = rng.random_range(1..=3usize).min(n - 1);
            BaselineSpec::new(BaselineKind::BarabasiAlbert { m }, n)
                .generate(seed, 0)
                .unwrap()
        }
        2 if n >= 5 => {
            let k = rng.random_range(1..=(n - 1) / 2).min(4);
            let beta = rng.random::<f64>();
            BaselineSpec::new(BaselineKind::WattsStrogatz { k, beta }, n)
                .generate(seed, 0)
                .unwrap()
        }
        3 => {
            let g = Geometry::ALL[rng.random_range(0..3)];
            let alpha = rng.random_range(-4.0..1.0);
            let d = DiskDomain::new(g, PI).unwrap();
            let config = LatentConfiguration::new(Positions::Polar(d.sample(n, rng)));
            generate_cls(
                &ClsModel::distance(g, Link::Logit { alpha }),
                &config,
                seed,
                0,
                false,
            )
            .unwrap()
        }
        4 => {
            let g = Geometry::ALL[rng.random_range(0..3)];
            let d = DiskDomain::new(g, FRAC_PI_2).unwrap();
            let config = LatentConfiguration::new(Positions::Polar(d.sample(n, rng)));
            let gamma = rng.random::<f64>();
            let model = ClsModel::distance(g, Link::Heaviside { gamma_cut: gamma }).rescaled();
            generate_cls(&model, &config, seed, 0, false).unwrap()
        }
        _ => {
            // disjoint union of a few small pieces
            let mut edges = Vec::new();
            let mut offset = 0;
            while offset + 2 <= n {
                let size = rng.random_range(1..=(n - offset).min(30));
                for i in 0..size {
                    for j in (i + 1)..size {
                        if rng.random::<f64>() < 0.3 {
                            edges.push((offset + i, offset + j));
                        }
                    }
                }
                offset += size;
            }
            Graph::from_edges(n, edges).unwrap()
        }
    }
}

fn spectral_identities() -> Outcome {
    let start = Instant::now();
    let mut rng = substream(404, 0);
    let mut failures = Vec::new();
    for k in 0..1000 {
        let g = random_graph(k, &mut rng);
        let c = eigenvalues(&g).unwrap();
        let two_m = 2.0 * g.edge_count() as f64;
        let zero = c.zero_multiplicity();
        let comps = g.component_count();
        let sum_ok = (c.sum() - two_m).abs() <= 1e-6 * two_m.max(1.0);
        let min_ok = *c.values.last().unwrap() >= -1e-9;
        if zero != comps || !sum_ok || !min_ok {
            failures.push(format!(
                "graph {k}: n={} zeros={zero} comps={comps} sum={}",
                g.node_count(),
                c.sum()
            ));
        }
    }
    let mut worst_closed: f64 = 0.0;
    for n in 2..=50usize {
        let c = eigenvalues(&Graph::complete(n)).unwrap();
        for (rank, v) in c.values.iter().enumerate() {
            let e = if rank + 1 < n { n as f64 } else { 0.0 };
            worst_closed = worst_closed.max((v - e).abs());
        }
        let c = eigenvalues(&Graph::path(n)).unwrap();
        for (rank, v) in c.values.iter().enumerate() {
            let k = (n - 1 - rank) as f64;
            let e = 4.0 * (k * PI / (2.0 * n as f64)).sin().powi(2);
            worst_closed = worst_closed.max((v - e).abs());
        }
    }
    within(
        start.elapsed(),
        Duration::from_secs(120),
        "spectral identities",
    )?;
    check(
        failures.is_empty() && worst_closed <= 1e-8,
        format!(
            "1000 graphs, {} identity failures {:?}; K_n/P_n closed-form gap {worst_closed:.1e}; {:.1?}",
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>(),
            start.elapsed()
        ),
    )
}

fn centralization_contrast() -> Outcome {
    let start = Instant::now();
    let mut config = SweepConfig::reference_grid(505);
    config.geometries = vec![
        SweepGeometry {
            geometry: Geometry::Euclidean,
            radius: FRAC_PI_2,
        },
        SweepGeometry {
            geometry: Geometry::Hyperbolic,
            radius: 7.5,
        },
    ];
    config.sizes = vec![100];
    config.reps = 200;
    config.gamma_start = 0.4;
    config.gamma_stop = 0.4;
    let mut values = vec![vec![Vec::new(); 3]; 2];
    for (slot, per_kind) in values.iter_mut().enumerate() {
        for rep in 0..config.reps {
            let g = &sweep_replicate_graphs(&config, slot, 100, rep).unwrap()[0];
            for (k, kind) in CentralityKind::ALL.iter().enumerate() {
                per_kind[k].push(centralization(g, *kind).unwrap());
            }
        }
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, kind) in CentralityKind::ALL.iter().enumerate() {
        let ci =
            bootstrap_mean_difference(&values[1][k], &values[0][k], 2000, 0.95, 5050 + k as u64)
                .unwrap();
        let pass = ci.estimate > 0.0 && ci.lower > 0.0;
        ok &= pass;
        parts.push(format!(
            "{kind}: H-E = {:.4} CI [{:.4}, {:.4}] {}",
            ci.estimate,
            ci.lower,
            ci.upper,
            if pass { "ok" } else { "NOT larger" }
        ));
    }
    within(
        start.elapsed(),
        Duration::from_secs(300),
        "centralization contrast",
    )?;
    check(ok, format!("{}; {:.1?}", parts.join("; "), start.elapsed()))
}

fn sweep_structure() -> Outcome {
    let start = Instant::now();
    let config = SweepConfig::reference_grid(606);
    let gammas = config.gammas();
    let mut nesting_failures = 0;
    let mut endpoint_failures = 0;
    for slot in 0..config.geometries.len() {
        for &n in &config.sizes {
            for rep in 0..20 {
                let graphs = sweep_replicate_graphs(&config, slot, n, rep).unwrap();
                for w in graphs.windows(2) {
                    if !w[0].edges().iter().all(|&(u, v)| w[1].has_edge(u, v)) {
                        nesting_failures += 1;
                    }
                }
                let last = graphs.last().unwrap();
                if last.density() != 1.0 || transitivity(last).unwrap() != 1.0 {
                    endpoint_failures += 1;
                }
            }
        }
    }
    let mut quick = config.clone();
    quick.reps = 1;
    let rows = run_sweep(&quick).unwrap();
    let expected = config.geometries.len() * config.sizes.len() * gammas.len() * 6;
    let non_finite = rows
        .iter()
        .filter(|r| !(r.mean.is_finite() && r.min.is_finite() && r.max.is_finite()))
        .count();
    check(
        nesting_failures == 0 && endpoint_failures == 0 && non_finite == 0 && rows.len() == expected,
        format!(
            "nesting failures {nesting_failures}, gamma=1 endpoint failures {endpoint_failures} (540 replicate paths); {} rows ({expected} expected), {non_finite} non-finite; {:.1?}",
            rows.len(),
            start.elapsed()
        ),
    )
}

fn krioukov_degree() -> Outcome {
    let start = Instant::now();
    let p = KrioukovParams {
        n: 500,
        mean_degree: 8.0,
        gamma_pl: 3.0,
        temperature: 0.01,
    };
    let s = p.solve_radius().map_err(|e| e.to_string())?;
    let mut total = 0.0;
    for rep in 0..50 {
        let g = p.generate_with(&s, 707, rep).unwrap().graph;
        total += 2.0 * g.edge_count() as f64 / g.node_count() as f64;
    }
    let mean = total / 50.0;
    within(
        start.elapsed(),
        Duration::from_secs(60),
        "krioukov degree targeting",
    )?;
    check(
        (mean - 8.0).abs() <= 0.05 * 8.0,
        format!(
            "R = {:.6}, empirical mean degree {mean:.4} over 50 reps; {:.1?}",
            s.radius,
            start.elapsed()
        ),
    )
}

fn er_baseline() -> Outcome {
    let spec = BaselineSpec::new(BaselineKind::ErdosRenyi { p: 0.08080808 }, 100);
    let degrees: Vec<f64> = (0..100)
        .map(|rep| {
            let g = spec.generate(808, rep).unwrap();
            2.0 * g.edge_count() as f64 / 100.0
        })
        .collect();
    let mean = degrees.iter().sum::<f64>() / 100.0;
    check(
        (mean - 8.0).abs() <= 0.5,
        format!("mean degree {mean:.4} over 100 reps"),
    )
}

fn spectral_self_consistency() -> Outcome {
    let start = Instant::now();
    let n = 100;
    let ensembles: Vec<_> = Geometry::ALL
        .iter()
        .map(|&g| build_ensemble(g, n, 100, PI, 909).unwrap())
        .collect();
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, &g) in Geometry::ALL.iter().enumerate() {
        let hits = (0..50u64)
            .filter(|&trial| {
                let held_out = ensemble_member(g, n, PI, 9_090 + k as u64, trial).unwrap();
                geometry_score(&eigenvalues(&held_out).unwrap(), &ensembles)
                    .unwrap()
                    .best
                    == vec![g]
            })
            .count();
        ok &= hits * 5 >= 50 * 4;
        parts.push(format!("{}: {hits}/50", g.name()));
    }
    within(
        start.elapsed(),
        Duration::from_secs(600),
        "spectral self-consistency",
    )?;
    check(ok, format!("{}; {:.1?}", parts.join(", "), start.elapsed()))
}

fn compare_karate() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scores.json");
    let karate = concat!(env!("CARGO_MANIFEST_DIR"), "/data/karate.edges");
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_clsnet"))
        .args([
            "compare",
            "--edges",
            karate,
            "--reps",
            "100",
            "--radius",
            "3.141592653589793",
            "--seed",
            "10",
        ])
        .arg("--out")
        .arg(&out)
        .status()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !status.success() {
        return Err(format!("compare exited with {status}"));
    }
    let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let scores = v["scores"].as_object().ok_or("missing scores object")?;
    let finite = ["euclidean", "spherical", "hyperbolic"].iter().all(|g| {
        scores
            .get(*g)
            .and_then(|x| x.as_f64())
            .is_some_and(f64::is_finite)
    });
    let label = v["label"].as_str().unwrap_or("");
    let manifest = dir.path().join("scores.json.manifest.json").exists();
    within(elapsed, Duration::from_secs(120), "compare")?;
    check(
        finite && scores.len() == 3 && !label.is_empty() && manifest,
        format!(
            "scores {}; lowest = {label} (hyperbolic-lowest {}; reported only); {elapsed:.1?}",
            serde_json::Value::Object(scores.clone()),
            if label == "hyperbolic" {
                "observed"
            } else {
                "not observed"
            }
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("metric axioms", metric_axioms),
        ("radial sampling", radial_sampling),
        ("cross-formula hyperbolic distance", cross_formula_distance),
        ("spectral identities", spectral_identities),
        (
            "hyperbolic vs euclidean centralization at gamma 0.4",
            centralization_contrast,
        ),
        ("gamma-sweep structure", sweep_structure),
        ("krioukov degree targeting", krioukov_degree),
        ("erdos-renyi baseline degree", er_baseline),
        ("spectral self-consistency", spectral_self_consistency),
        ("compare on karate", compare_karate),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
