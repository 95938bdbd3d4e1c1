//! Experiment configuration file.
//!
//! A single TOML document drives every subcommand. The normative keys:
//! `graph` (a `file` path or a `generator` spec), `phi` (list of bias
//! exponents), `analyses`, `output_dir`, `master_seed`, and the `walk` and
//! `zipf_chain` sections.
//!
//! ```toml
//! phi = [0.0, 1.0]
//! analyses = ["joint", "mi", "bounds"]
//! output_dir = "out"
//! master_seed = 42
//!
//! [graph]
//! file = "g1.edges"
//!
//! [walk]
//! steps = 1000000
//! ```

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub graph: GraphSource,
    #[serde(default)]
    pub phi: Vec<f64>,
    pub analyses: Vec<Analysis>,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub master_seed: Option<u64>,
    #[serde(default)]
    pub walk: Option<WalkSettings>,
    #[serde(default)]
    pub zipf_chain: Option<ZipfChainSettings>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSource {
    #[serde(default)]
    pub file: Option<PathBuf>,
    #[serde(default)]
    pub generator: Option<GeneratorSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeneratorSpec {
    Random {
        n: usize,
        m: usize,
        edge_probability: f64,
    },
    Contrast {
        mu: Vec<usize>,
    },
    MiOptimal {
        n: usize,
        m: usize,
        degree: usize,
    },
}

impl GeneratorSpec {
    /// Stable identifier used in report rows and file names.
    pub fn id(&self) -> String {
        match self {
            GeneratorSpec::Random {
                n,
                m,
                edge_probability,
            } => format!("random-n{n}-m{m}-p{edge_probability}"),
            GeneratorSpec::Contrast { mu } => format!("contrast-{}w", mu.len()),
            GeneratorSpec::MiOptimal { n, m, degree } => {
                format!("mi-optimal-n{n}-m{m}-d{degree}")
            }
        }
    }

    pub fn is_stochastic(&self) -> bool {
        matches!(self, GeneratorSpec::Random { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Analysis {
    Joint,
    Marginals,
    Walk,
    Mi,
    Law,
    Bounds,
    MeanIndependence,
    ZipfChain,
}

impl Analysis {
    pub fn name(self) -> &'static str {
        match self {
            Analysis::Joint => "joint",
            Analysis::Marginals => "marginals",
            Analysis::Walk => "walk",
            Analysis::Mi => "mi",
            Analysis::Law => "law",
            Analysis::Bounds => "bounds",
            Analysis::MeanIndependence => "mean_independence",
            Analysis::ZipfChain => "zipf_chain",
        }
    }

    /// Whether the analysis produces one artifact per phi value.
    pub fn per_phi(self) -> bool {
        !matches!(self, Analysis::ZipfChain)
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WalkSettings {
    pub steps: u64,
    #[serde(default)]
    pub burn_in: Option<u64>,
    #[serde(default)]
    pub chains: Option<u32>,
    #[serde(default)]
    pub start: Option<StartSpec>,
}

impl WalkSettings {
    pub fn burn_in(&self) -> u64 {
        // Default burn-in: 1% of the recorded budget.
        self.burn_in.unwrap_or(self.steps / 100)
    }

    pub fn chains(&self) -> u32 {
        self.chains.unwrap_or(1)
    }

    pub fn start(&self) -> StartSpec {
        self.start.unwrap_or(StartSpec::UniformWords)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StartSpec {
    UniformWords,
    UniformVertices,
    Word(usize),
    Meaning(usize),
}

impl StartSpec {
    pub fn to_policy(self) -> lexnet::StartPolicy {
        match self {
            StartSpec::UniformWords => lexnet::StartPolicy::UniformWords,
            StartSpec::UniformVertices => lexnet::StartPolicy::UniformVertices,
            StartSpec::Word(i) => lexnet::StartPolicy::Fixed(lexnet::Vertex::Word(i)),
            StartSpec::Meaning(j) => lexnet::StartPolicy::Fixed(lexnet::Vertex::Meaning(j)),
        }
    }

    pub fn label(self) -> String {
        match self {
            StartSpec::UniformWords => "uniform-words".to_string(),
            StartSpec::UniformVertices => "uniform-vertices".to_string(),
            StartSpec::Word(i) => format!("word-{i}"),
            StartSpec::Meaning(j) => format!("meaning-{j}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ZipfChainSettings {
    pub alpha: f64,
    pub gamma: f64,
    pub rank_count: usize,
}

impl Default for ZipfChainSettings {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            gamma: 0.5,
            rank_count: 1000,
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let config: ExperimentConfig =
            toml::from_str(text).map_err(|e| CliError::Config(format!("bad config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        match (&self.graph.file, &self.graph.generator) {
            (Some(_), Some(_)) => {
                return Err(CliError::Config(
                    "graph source must be a file or a generator, not both".into(),
                ))
            }
            (None, None) => {
                return Err(CliError::Config(
                    "graph source needs a file path or a generator spec".into(),
                ))
            }
            _ => {}
        }
        if self.analyses.is_empty() {
            return Err(CliError::Config("select at least one analysis".into()));
        }
        for &phi in &self.phi {
            if phi < 0.0 || !phi.is_finite() {
                return Err(CliError::Config(format!(
                    "phi values must be finite and nonnegative, got {phi}"
                )));
            }
        }
        if self.analyses.iter().any(|a| a.per_phi()) && self.phi.is_empty() {
            return Err(CliError::Config(
                "the selected analyses need at least one phi value".into(),
            ));
        }
        let stochastic = self.analyses.contains(&Analysis::Walk)
            || self
                .graph
                .generator
                .as_ref()
                .is_some_and(GeneratorSpec::is_stochastic);
        if stochastic && self.master_seed.is_none() {
            return Err(CliError::Config(
                "master_seed is mandatory when a walk or a random generator is selected".into(),
            ));
        }
        if self.analyses.contains(&Analysis::Walk) && self.walk.is_none() {
            return Err(CliError::Config(
                "the walk analysis needs a [walk] section".into(),
            ));
        }
        if let Some(walk) = &self.walk {
            if walk.steps == 0 {
                return Err(CliError::Config("walk steps must be >= 1".into()));
            }
            if walk.chains() == 0 {
                return Err(CliError::Config("walk chains must be >= 1".into()));
            }
        }
        if let Some(z) = &self.zipf_chain {
            if z.alpha <= 0.0 || z.gamma <= 0.0 || z.rank_count < 3 {
                return Err(CliError::Config(
                    "zipf_chain needs alpha > 0, gamma > 0, rank_count >= 3".into(),
                ));
            }
        }
        Ok(())
    }

    /// Graph identifier used in report rows.
    pub fn graph_id(&self) -> String {
        if let Some(file) = &self.graph.file {
            file.file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".to_string())
        } else if let Some(generator) = &self.graph.generator {
            generator.id()
        } else {
            "graph".to_string()
        }
    }
}
