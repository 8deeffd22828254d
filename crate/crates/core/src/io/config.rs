//! TOML configuration for similarity-kernel models.
//!
//! ```toml
//! [latent]
//! distribution = "one-hot"
//! probabilities = [0.5, 0.5]
//!
//! [kernel]
//! matrix = [[0.3, 0.02], [0.02, 0.3]]
//!
//! [link]
//! alpha = 0.0
//! ```

use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{
    ClsModel, LatentConfiguration, LatentDistribution, Link, Matrix, MixtureComponent,
    SimilarityKernel,
};
use crate::rng::{replicate_rng, Purpose};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "distribution", rename_all = "kebab-case", deny_unknown_fields)]
pub enum LatentConfig {
    Normal { dim: usize },
    Mixture { components: Vec<ComponentConfig> },
    Dirichlet { concentration: Vec<f64> },
    OneHot { probabilities: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentConfig {
    pub weight: f64,
    pub mean: Vec<f64>,
    pub sd: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelConfig {
    /// Square matrix for the quadratic, SBM and MMSBM kernels.
    pub matrix: Option<Vec<Vec<f64>>>,
    /// Scale of the latent term in the ARD kernel.
    pub zeta: Option<f64>,
    /// Standard deviation of the per-node effects (bilinear, ARD); default 1.
    pub effect_sd: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkConfig {
    #[serde(default)]
    pub alpha: f64,
    #[serde(default)]
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    pub latent: LatentConfig,
    #[serde(default)]
    pub kernel: KernelConfig,
    #[serde(default)]
    pub link: LinkConfig,
}

/// Kernel names accepted after `kernel:`.
pub const KERNEL_NAMES: [&str; 7] = [
    "dot",
    "projection",
    "bilinear",
    "quadratic",
    "sbm",
    "mmsbm",
    "ard",
];

impl ModelConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| {
            let line = e.span().map_or(0, |s| {
                text[..s.start.min(text.len())].matches('\n').count() + 1
            });
            Error::Parse {
                line,
                message: e.message().to_string(),
            }
        })
    }

    pub fn distribution(&self) -> LatentDistribution {
        match &self.latent {
            LatentConfig::Normal { dim } => LatentDistribution::StdNormal { dim: *dim },
            LatentConfig::Mixture { components } => LatentDistribution::NormalMixture {
                components: components
                    .iter()
                    .map(|c| MixtureComponent {
                        weight: c.weight,
                        mean: c.mean.clone(),
                        sd: c.sd,
                    })
                    .collect(),
            },
            LatentConfig::Dirichlet { concentration } => LatentDistribution::Dirichlet {
                concentration: concentration.clone(),
            },
            LatentConfig::OneHot { probabilities } => LatentDistribution::OneHot {
                probabilities: probabilities.clone(),
            },
        }
    }

    fn matrix(&self, kernel: &str) -> Result<Matrix> {
        let rows = self
            .kernel
            .matrix
            .as_ref()
            .ok_or_else(|| Error::input(format!("kernel '{kernel}' needs [kernel] matrix")))?;
        Matrix::from_rows(rows)
    }

    pub fn kernel(&self, name: &str) -> Result<SimilarityKernel> {
        Ok(match name {
            "dot" => SimilarityKernel::Dot,
            "projection" => SimilarityKernel::Projection,
            "bilinear" => SimilarityKernel::Bilinear,
            "quadratic" => SimilarityKernel::Quadratic(self.matrix(name)?),
            "sbm" => SimilarityKernel::Sbm(self.matrix(name)?),
            "mmsbm" => SimilarityKernel::Mmsbm(self.matrix(name)?),
            "ard" => SimilarityKernel::Ard {
                zeta: self.kernel.zeta.unwrap_or(1.0),
            },
            other => {
                return Err(Error::input(format!(
                    "unknown kernel '{other}'; expected one of {}",
                    KERNEL_NAMES.join(", ")
                )))
            }
        })
    }

    /// Model and sampled latent configuration for kernel `name` on `n` nodes.
    pub fn build(
        &self,
        name: &str,
        n: usize,
        seed: u64,
    ) -> Result<(ClsModel, LatentConfiguration)> {
        let kernel = self.kernel(name)?;
        let mut rng = replicate_rng(seed, Purpose::Positions, 0);
        let mut config = LatentConfiguration::new(self.distribution().sample_with(n, &mut rng)?);
        if matches!(
            kernel,
            SimilarityKernel::Bilinear | SimilarityKernel::Ard { .. }
        ) {
            let sd = self.kernel.effect_sd.unwrap_or(1.0);
            let normal =
                Normal::new(0.0, sd).map_err(|e| Error::input(format!("effect_sd: {e}")))?;
            let mut rng = replicate_rng(seed, Purpose::Generator, 0);
            let sender: Vec<f64> = (0..n).map(|_| normal.sample(&mut rng)).collect();
            config = config.with_sender(sender);
            if matches!(kernel, SimilarityKernel::Bilinear) {
                let receiver: Vec<f64> = (0..n).map(|_| normal.sample(&mut rng)).collect();
                config = config.with_receiver(receiver);
            }
        }
        let model = ClsModel::new(
            kernel,
            Link::Logit {
                alpha: self.link.alpha,
            },
        );
        model.validate()?;
        model.kernel.validate(&config)?;
        Ok((model, config))
    }
}
