//! Command-line front end.
//!
//! Every subcommand writes its artifact to `--out` and a run manifest to
//! `<out>.manifest.json`. Failures are reported on stderr as one JSON object
//! `{"error": <kind>, "message": <text>}`; usage errors exit with 2, all other
//! failures with 1. `CLSNET_THREADS` caps the worker pool.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::baselines::{BaselineKind, BaselineSpec};
use crate::error::Error;
use crate::geometry::{sample_quasi_uniform, DiskDomain, Geometry, GeometrySpace, UltrametricTree};
use crate::graph::Graph;
use crate::io::{self, ModelConfig, ParseOptions, RunManifest};
use crate::models::{
    generate_cls, sample_graphon, ClsModel, KrioukovParams, LatentConfiguration, Link, Positions,
};
use crate::rng::{replicate_rng, Purpose};
use crate::spectral::{build_ensemble, eigenvalues, geometry_score};
use crate::stats::{run_sweep, Statistic, SweepConfig, SweepGeometry};

/// Environment variable holding the worker-thread count.
pub const THREADS_ENV: &str = "CLSNET_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "clsnet",
    version,
    about = "Latent space network models in curved geometries"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample latent positions in a disk or on an ultrametric tree.
    Sample(SampleArgs),
    /// Generate a network from a latent space model.
    Generate(GenerateArgs),
    /// Generate a baseline random graph.
    Baseline(BaselineArgs),
    /// Summary statistics over a grid of distance cutoffs.
    Sweep(SweepArgs),
    /// Laplacian spectrum of an edge list.
    Spectrum(SpectrumArgs),
    /// Per-rank spectrum envelope of simulated networks.
    Ensemble(EnsembleArgs),
    /// Score an observed network against same-size ensembles of every geometry.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Euclidean,
    #[value(alias = "elliptic")]
    Spherical,
    Hyperbolic,
    Ultrametric,
}

impl SpaceArg {
    fn curved(self) -> Option<Geometry> {
        match self {
            SpaceArg::Euclidean => Some(Geometry::Euclidean),
            SpaceArg::Spherical => Some(Geometry::Spherical),
            SpaceArg::Hyperbolic => Some(Geometry::Hyperbolic),
            SpaceArg::Ultrametric => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    Euclidean,
    #[value(alias = "elliptic")]
    Spherical,
    Hyperbolic,
}

impl From<GeometryArg> for Geometry {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Euclidean => Geometry::Euclidean,
            GeometryArg::Spherical => Geometry::Spherical,
            GeometryArg::Hyperbolic => Geometry::Hyperbolic,
        }
    }
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub geometry: SpaceArg,
    #[arg(long)]
    pub n: usize,
    /// Disk radius (curved geometries).
    #[arg(long)]
    pub radius: Option<f64>,
    /// Radial concentration for hyperbolic quasi-uniform sampling.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Branching factor (ultrametric).
    #[arg(long)]
    pub branching: Option<u64>,
    /// Tree depth (ultrametric).
    #[arg(long)]
    pub depth: Option<u32>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// distance-logit | heaviside | krioukov | graphon | kernel:<name>
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub geometry: Option<SpaceArg>,
    #[arg(long)]
    pub radius: Option<f64>,
    /// Logit intercept (distance-logit).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Distance cutoff (heaviside).
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Divide distances by their maximum before linking.
    #[arg(long)]
    pub rescale: bool,
    #[arg(long)]
    pub branching: Option<u64>,
    #[arg(long)]
    pub depth: Option<u32>,
    /// Target mean degree (krioukov).
    #[arg(long)]
    pub mean_degree: Option<f64>,
    /// Power-law exponent (krioukov).
    #[arg(long)]
    pub gamma_pl: Option<f64>,
    /// Temperature (krioukov).
    #[arg(long)]
    pub temperature: Option<f64>,
    /// constant:<p> | product | min (graphon).
    #[arg(long)]
    pub graphon: Option<String>,
    /// TOML model file (kernel models).
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaselineArg {
    Er,
    Ba,
    Ws,
    Lattice,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    #[arg(long, value_enum)]
    pub kind: BaselineArg,
    #[arg(long)]
    pub n: usize,
    /// Tie probability (er).
    #[arg(long)]
    pub p: Option<f64>,
    /// Edges per new node (ba).
    #[arg(long)]
    pub m: Option<usize>,
    /// Neighbours on each side (ws, lattice).
    #[arg(long)]
    pub k: Option<usize>,
    /// Rewiring probability (ws).
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [GeometryArg::Euclidean, GeometryArg::Spherical, GeometryArg::Hyperbolic])]
    pub geometries: Vec<GeometryArg>,
    #[arg(long, value_delimiter = ',', default_values_t = [20, 50, 100])]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    pub reps: usize,
    #[arg(long, default_value_t = 0.0)]
    pub gamma_start: f64,
    #[arg(long, default_value_t = 1.0)]
    pub gamma_stop: f64,
    #[arg(long, default_value_t = 0.2)]
    pub gamma_step: f64,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub euclidean_radius: f64,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub spherical_radius: f64,
    #[arg(long, default_value_t = 7.5)]
    pub hyperbolic_radius: f64,
    /// Comma-separated statistic names (default: all six).
    #[arg(long, value_delimiter = ',')]
    pub stats: Vec<String>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub edges: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    #[arg(long, value_enum)]
    pub geometry: GeometryArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub reps: usize,
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub radius: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub edges: PathBuf,
    #[arg(long, default_value_t = 100)]
    pub reps: usize,
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub radius: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

/// A failed invocation.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag combinations.
    Usage(String),
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Run(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Run(_) => 1,
        }
    }

    /// `{"error": <kind>, "message": <text>}`.
    pub fn to_json(&self) -> String {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m.clone()),
            CliError::Run(e) => (e.kind(), e.to_string()),
        };
        serde_json::json!({ "error": kind, "message": message }).to_string()
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

fn reject(flag: &str, present: bool, context: &str) -> CliResult<()> {
    if present {
        return usage(format!("--{flag} does not apply to {context}"));
    }
    Ok(())
}

fn require<T: Copy>(value: Option<T>, flag: &str, context: &str) -> CliResult<T> {
    match value {
        Some(v) => Ok(v),
        None => usage(format!("{context} requires --{flag}")),
    }
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

/// `<out>` with its extension replaced by `suffix` (e.g. `net.positions.csv`).
fn sidecar(out: &Path, suffix: &str) -> PathBuf {
    out.with_extension(suffix)
}

fn finish(manifest: &RunManifest, out: &Path) -> CliResult<()> {
    std::fs::write(manifest_path(out), manifest.to_json()).map_err(Error::from)?;
    Ok(())
}

/// Configures the global worker pool from `CLSNET_THREADS`, if set.
pub fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = match value.trim().parse() {
        Ok(t) if t > 0 => t,
        _ => {
            return usage(format!(
                "{THREADS_ENV} must be a positive integer, got '{value}'"
            ))
        }
    };
    // a pool that is already built keeps its size
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> CliResult<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli =
        Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string().trim().to_string()))?;
    configure_threads()?;
    execute(cli)
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            0
        }
        Err(e) => {
            eprintln!(
                "{}",
                CliError::Usage(e.to_string().trim().to_string()).to_json()
            );
            2
        }
        Ok(cli) => match configure_threads().and_then(|_| execute(cli)) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("{}", e.to_json());
                e.exit_code()
            }
        },
    }
}

pub fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Sample(a) => sample(a),
        Command::Generate(a) => generate(a),
        Command::Baseline(a) => baseline(a),
        Command::Sweep(a) => sweep(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Ensemble(a) => ensemble(a),
        Command::Compare(a) => compare(a),
    }
}

fn tree(branching: Option<u64>, depth: Option<u32>, context: &str) -> CliResult<UltrametricTree> {
    let b = require(branching, "branching", context)?;
    let d = require(depth, "depth", context)?;
    Ok(UltrametricTree::new(b, d)?)
}

fn sample(a: SampleArgs) -> CliResult<()> {
    let mut m = RunManifest::new("sample", Some(a.seed));
    m.param("geometry", format!("{:?}", a.geometry).to_lowercase())
        .param("n", a.n);
    let positions = match a.geometry.curved() {
        None => {
            reject("radius", a.radius.is_some(), "ultrametric sampling")?;
            reject("alpha", a.alpha.is_some(), "ultrametric sampling")?;
            let t = tree(a.branching, a.depth, "ultrametric sampling")?;
            m.param("branching", t.branching())
                .param("depth", t.depth());
            let mut rng = replicate_rng(a.seed, Purpose::Positions, 0);
            Positions::Leaves((0..a.n).map(|_| t.sample_leaf(&mut rng)).collect())
        }
        Some(g) => {
            reject("branching", a.branching.is_some(), "disk sampling")?;
            reject("depth", a.depth.is_some(), "disk sampling")?;
            let radius = require(a.radius, "radius", "disk sampling")?;
            m.param("radius", radius);
            match a.alpha {
                Some(alpha) => {
                    if g != Geometry::Hyperbolic {
                        return usage(
                            "--alpha (quasi-uniform radii) applies only to the hyperbolic geometry",
                        );
                    }
                    m.param("alpha", alpha);
                    Positions::Polar(sample_quasi_uniform(radius, alpha, a.n, a.seed)?)
                }
                None => {
                    let d = DiskDomain::new(g, radius)?;
                    Positions::Polar(crate::geometry::sample_disk(&d, a.n, a.seed)?)
                }
            }
        }
    };
    m.write_artifact(&a.out, io::positions_csv(&positions).as_bytes())?;
    finish(&m, &a.out)
}

fn write_graph(m: &mut RunManifest, out: &Path, g: &Graph) -> CliResult<()> {
    m.param("nodes", g.node_count())
        .param("edges", g.edge_count());
    m.write_artifact(out, io::write_edge_list(g, None)?.as_bytes())?;
    Ok(())
}

fn disk_positions(
    g: Geometry,
    radius: f64,
    n: usize,
    seed: u64,
) -> CliResult<Vec<crate::PolarPoint>> {
    let d = DiskDomain::new(g, radius)?;
    let mut rng = replicate_rng(seed, Purpose::Positions, 0);
    Ok(d.sample(n, &mut rng))
}

fn generate(a: GenerateArgs) -> CliResult<()> {
    let mut m = RunManifest::new("generate", Some(a.seed));
    m.param("model", &a.model).param("n", a.n);
    let model_name = a.model.as_str();
    let krioukov_flags = a.mean_degree.is_some() || a.gamma_pl.is_some() || a.temperature.is_some();
    if model_name != "krioukov" {
        reject(
            "mean-degree/--gamma-pl/--temperature",
            krioukov_flags,
            model_name,
        )?;
    }
    if model_name != "graphon" {
        reject("graphon", a.graphon.is_some(), model_name)?;
    }
    if !model_name.starts_with("kernel:") {
        reject("config", a.config.is_some(), model_name)?;
    }
    if model_name != "heaviside" {
        reject(
            "gamma",
            a.gamma.is_some(),
            &format!("{model_name} (gamma is the heaviside cutoff)"),
        )?;
    }
    if !matches!(model_name, "distance-logit" | "heaviside") {
        reject("geometry", a.geometry.is_some(), model_name)?;
        reject("radius", a.radius.is_some(), model_name)?;
        reject("rescale", a.rescale, model_name)?;
        reject("branching", a.branching.is_some(), model_name)?;
        reject("depth", a.depth.is_some(), model_name)?;
    }
    if model_name != "distance-logit" {
        reject(
            "alpha",
            a.alpha.is_some(),
            &format!("{model_name} (alpha is the logit intercept)"),
        )?;
    }

    match model_name {
        "distance-logit" | "heaviside" => {
            let space = require(a.geometry, "geometry", model_name)?;
            m.param("geometry", format!("{space:?}").to_lowercase())
                .param("rescale", a.rescale);
            let link = if model_name == "heaviside" {
                let gamma = require(a.gamma, "gamma", "heaviside")?;
                m.param("gamma", gamma);
                Link::Heaviside { gamma_cut: gamma }
            } else {
                let alpha = a.alpha.unwrap_or(0.0);
                m.param("alpha", alpha);
                Link::Logit { alpha }
            };
            let (space, positions) = match space.curved() {
                Some(g) => {
                    reject("branching", a.branching.is_some(), "disk positions")?;
                    reject("depth", a.depth.is_some(), "disk positions")?;
                    let radius = require(a.radius, "radius", model_name)?;
                    m.param("radius", radius);
                    (
                        GeometrySpace::Curved(g),
                        Positions::Polar(disk_positions(g, radius, a.n, a.seed)?),
                    )
                }
                None => {
                    reject("radius", a.radius.is_some(), "ultrametric positions")?;
                    let t = tree(a.branching, a.depth, model_name)?;
                    m.param("branching", t.branching())
                        .param("depth", t.depth());
                    let mut rng = replicate_rng(a.seed, Purpose::Positions, 0);
                    let leaves = (0..a.n).map(|_| t.sample_leaf(&mut rng)).collect();
                    (GeometrySpace::Ultrametric(t), Positions::Leaves(leaves))
                }
            };
            let mut model = ClsModel::distance(space, link);
            if a.rescale {
                model = model.rescaled();
            }
            let config = LatentConfiguration::new(positions);
            let g = generate_cls(&model, &config, a.seed, 0, false)?;
            m.write_artifact(
                &sidecar(&a.out, "positions.csv"),
                io::positions_csv(&config.positions).as_bytes(),
            )?;
            write_graph(&mut m, &a.out, &g)?;
        }
        "krioukov" => {
            let p = KrioukovParams {
                n: a.n,
                mean_degree: require(a.mean_degree, "mean-degree", "krioukov")?,
                gamma_pl: require(a.gamma_pl, "gamma-pl", "krioukov")?,
                temperature: require(a.temperature, "temperature", "krioukov")?,
            };
            let s = p.solve_radius()?;
            let k = p.generate_with(&s, a.seed, 0)?;
            m.param("mean_degree", p.mean_degree)
                .param("gamma_pl", p.gamma_pl)
                .param("temperature", p.temperature)
                .param("solved_radius", s.radius)
                .param("alpha", s.alpha);
            let pos = Positions::Polar(k.positions.clone());
            m.write_artifact(
                &sidecar(&a.out, "positions.csv"),
                io::positions_csv(&pos).as_bytes(),
            )?;
            write_graph(&mut m, &a.out, &k.graph)?;
        }
        "graphon" => {
            let spec = a.graphon.clone().unwrap_or_else(|| "product".into());
            m.param("graphon", &spec);
            let sample = match spec.as_str() {
                "product" => sample_graphon(|x, y| x * y, a.n, a.seed)?,
                "min" => sample_graphon(f64::min, a.n, a.seed)?,
                s if s.starts_with("constant:") => {
                    let p: f64 = s["constant:".len()..]
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad constant graphon '{s}'")))?;
                    sample_graphon(move |_, _| p, a.n, a.seed)?
                }
                other => {
                    return usage(format!(
                        "unknown graphon '{other}'; use constant:<p>, product or min"
                    ))
                }
            };
            let pos = Positions::Vectors(sample.positions.iter().map(|&z| vec![z]).collect());
            m.write_artifact(
                &sidecar(&a.out, "positions.csv"),
                io::positions_csv(&pos).as_bytes(),
            )?;
            write_graph(&mut m, &a.out, &sample.graph)?;
        }
        other => {
            let Some(kernel) = other.strip_prefix("kernel:") else {
                return usage(format!(
                    "unknown model '{other}'; use distance-logit, heaviside, krioukov, graphon or kernel:<name>"
                ));
            };
            let path = a
                .config
                .clone()
                .ok_or_else(|| CliError::Usage(format!("{other} requires --config")))?;
            let text = std::fs::read_to_string(&path).map_err(Error::from)?;
            let cfg = ModelConfig::from_toml(&text)?;
            m.param("config", &cfg);
            let (model, config) = cfg.build(kernel, a.n, a.seed)?;
            let g = generate_cls(&model, &config, a.seed, 0, cfg.link.directed)?;
            m.write_artifact(
                &sidecar(&a.out, "positions.csv"),
                io::positions_csv(&config.positions).as_bytes(),
            )?;
            if g.is_directed() {
                let mut text = format!(
                    "# directed; nodes: {}, arcs: {}\n",
                    g.node_count(),
                    g.edge_count()
                );
                for &(u, v) in g.edges() {
                    text.push_str(&format!("{u}\t{v}\n"));
                }
                m.param("nodes", g.node_count())
                    .param("arcs", g.edge_count());
                m.write_artifact(&a.out, text.as_bytes())?;
            } else {
                write_graph(&mut m, &a.out, &g)?;
            }
        }
    }
    finish(&m, &a.out)
}

fn baseline(a: BaselineArgs) -> CliResult<()> {
    let mut m = RunManifest::new("baseline", Some(a.seed));
    let kind = match a.kind {
        BaselineArg::Er => {
            reject("m", a.m.is_some(), "er")?;
            reject("k", a.k.is_some(), "er")?;
            reject("beta", a.beta.is_some(), "er")?;
            BaselineKind::ErdosRenyi {
                p: require(a.p, "p", "er")?,
            }
        }
        BaselineArg::Ba => {
            reject("p", a.p.is_some(), "ba")?;
            reject("k", a.k.is_some(), "ba")?;
            reject("beta", a.beta.is_some(), "ba")?;
            BaselineKind::BarabasiAlbert {
                m: require(a.m, "m", "ba")?,
            }
        }
        BaselineArg::Ws => {
            reject("p", a.p.is_some(), "ws")?;
            reject("m", a.m.is_some(), "ws")?;
            BaselineKind::WattsStrogatz {
                k: require(a.k, "k", "ws")?,
                beta: require(a.beta, "beta", "ws")?,
            }
        }
        BaselineArg::Lattice => {
            reject("p", a.p.is_some(), "lattice")?;
            reject("m", a.m.is_some(), "lattice")?;
            reject("beta", a.beta.is_some(), "lattice")?;
            BaselineKind::Lattice {
                k: require(a.k, "k", "lattice")?,
            }
        }
    };
    m.param("kind", format!("{kind:?}")).param("n", a.n);
    let g = BaselineSpec::new(kind, a.n).generate(a.seed, 0)?;
    write_graph(&mut m, &a.out, &g)?;
    finish(&m, &a.out)
}

fn sweep(a: SweepArgs) -> CliResult<()> {
    let statistics = if a.stats.is_empty() {
        Statistic::ALL.to_vec()
    } else {
        a.stats
            .iter()
            .map(|s| s.parse())
            .collect::<crate::Result<Vec<Statistic>>>()?
    };
    let geometries = a
        .geometries
        .iter()
        .map(|&g| {
            let geometry = Geometry::from(g);
            let radius = match geometry {
                Geometry::Euclidean => a.euclidean_radius,
                Geometry::Spherical => a.spherical_radius,
                Geometry::Hyperbolic => a.hyperbolic_radius,
            };
            SweepGeometry { geometry, radius }
        })
        .collect();
    let config = SweepConfig {
        geometries,
        sizes: a.sizes.clone(),
        reps: a.reps,
        gamma_start: a.gamma_start,
        gamma_stop: a.gamma_stop,
        gamma_step: a.gamma_step,
        statistics,
        seed: a.seed,
    };
    let mut m = RunManifest::new("sweep", Some(a.seed));
    m.param(
        "geometries",
        config
            .geometries
            .iter()
            .map(|g| (g.geometry.name(), g.radius))
            .collect::<Vec<_>>(),
    )
    .param("sizes", &config.sizes)
    .param("reps", config.reps)
    .param("gammas", config.gammas())
    .param(
        "statistics",
        config
            .statistics
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>(),
    );
    let rows = run_sweep(&config)?;
    m.write_artifact(&a.out, io::sweep_csv(&rows).as_bytes())?;
    finish(&m, &a.out)
}

fn read_edges(path: &Path, m: &mut RunManifest) -> CliResult<Graph> {
    let text = std::fs::read(path).map_err(Error::from)?;
    let text = String::from_utf8(text).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    let parsed = io::parse_edge_list_str(&text, ParseOptions::default())?;
    for w in &parsed.warnings {
        log::warn!("{}: {w}", path.display());
    }
    m.param("edges_file", path.display().to_string())
        .param("edges_sha256", io::sha256_hex(text.as_bytes()))
        .param("nodes", parsed.graph.node_count())
        .param("edge_count", parsed.graph.edge_count());
    Ok(parsed.graph)
}

fn spectrum(a: SpectrumArgs) -> CliResult<()> {
    let mut m = RunManifest::new("spectrum", None);
    let g = read_edges(&a.edges, &mut m)?;
    let curve = eigenvalues(&g)?;
    m.param("zero_multiplicity", curve.zero_multiplicity());
    m.write_artifact(&a.out, io::curve_csv(&curve).as_bytes())?;
    finish(&m, &a.out)
}

fn ensemble(a: EnsembleArgs) -> CliResult<()> {
    let g = Geometry::from(a.geometry);
    let mut m = RunManifest::new("ensemble", Some(a.seed));
    m.param("geometry", g.name())
        .param("n", a.n)
        .param("reps", a.reps)
        .param("radius", a.radius)
        .param("alpha", 0.0);
    let e = build_ensemble(g, a.n, a.reps, a.radius, a.seed)?;
    m.write_artifact(&a.out, io::ensemble_csv(&e).as_bytes())?;
    finish(&m, &a.out)
}

fn compare(a: CompareArgs) -> CliResult<()> {
    let mut m = RunManifest::new("compare", Some(a.seed));
    let g = read_edges(&a.edges, &mut m)?;
    m.param("reps", a.reps)
        .param("radius", a.radius)
        .param("alpha", 0.0);
    let curve = eigenvalues(&g)?;
    let ensembles = Geometry::ALL
        .iter()
        .map(|&geo| build_ensemble(geo, g.node_count(), a.reps, a.radius, a.seed))
        .collect::<crate::Result<Vec<_>>>()?;
    let scores = geometry_score(&curve, &ensembles)?;
    m.write_artifact(&a.out, io::scores_json(&scores).as_bytes())?;
    finish(&m, &a.out)
}
