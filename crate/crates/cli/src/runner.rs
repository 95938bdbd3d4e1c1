//! Experiment orchestration: graph materialization, per-analysis artifact
//! writing, phi sweeps, and the closing manifest.
//!
//! All randomness flows from the single master seed: the graph generator
//! uses stream 0 of [`lexnet::seed::derive_seed`], the walk for the k-th
//! phi value uses stream `1 + k`. No wall clock or OS entropy enters any
//! artifact, so identical configs produce byte-identical bundles.

use std::fs;
use std::path::PathBuf;

use lexnet::{fit, info, model, seed, walk, BipartiteGraph, Error as CoreError};

use crate::config::{Analysis, ExperimentConfig, GeneratorSpec, WalkSettings};
use crate::error::CliError;
use crate::manifest::Manifest;
use crate::report::{self, CensusContext, SweepRow};

/// Seed stream for the graph generator.
pub const GENERATOR_STREAM: u64 = 0;
/// Seed stream for the walk at phi index k is `WALK_STREAM_BASE + k`.
pub const WALK_STREAM_BASE: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }

    pub fn label(self) -> &'static str {
        self.extension()
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub dense_joint: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            seed: None,
            out: None,
            format: OutputFormat::Csv,
            dense_joint: false,
        }
    }
}

pub struct RunOutcome {
    pub out_dir: PathBuf,
    pub files: Vec<String>,
}

struct Sink {
    dir: PathBuf,
    files: Vec<(String, Vec<u8>)>,
}

impl Sink {
    fn new(dir: PathBuf) -> Result<Self, CliError> {
        fs::create_dir_all(&dir)?;
        Ok(Self {
            dir,
            files: Vec::new(),
        })
    }

    fn write(&mut self, name: String, content: String) -> Result<(), CliError> {
        let bytes = content.into_bytes();
        fs::write(self.dir.join(&name), &bytes)?;
        self.files.push((name, bytes));
        Ok(())
    }

    fn write_json(&mut self, name: String, value: serde_json::Value) -> Result<(), CliError> {
        let mut text =
            serde_json::to_string_pretty(&value).map_err(|e| CliError::Runtime(e.to_string()))?;
        text.push('\n');
        self.write(name, text)
    }

    /// Write the manifest last and hand back the outcome.
    fn finish(
        mut self,
        command: &str,
        format: OutputFormat,
        config: &ExperimentConfig,
    ) -> Result<RunOutcome, CliError> {
        let manifest = Manifest::new(command, format.label(), config, &self.files);
        let text = manifest.to_json_string();
        fs::write(self.dir.join("manifest.json"), &text)?;
        self.files.push(("manifest.json".into(), text.into_bytes()));
        Ok(RunOutcome {
            out_dir: self.dir,
            files: self.files.into_iter().map(|(name, _)| name).collect(),
        })
    }
}

/// Apply command-line overrides onto the parsed config.
pub fn resolve_config(
    mut config: ExperimentConfig,
    opts: &RunOptions,
) -> Result<ExperimentConfig, CliError> {
    if let Some(seed) = opts.seed {
        config.master_seed = Some(seed);
    }
    if let Some(out) = &opts.out {
        config.output_dir = Some(out.clone());
    }
    Ok(config)
}

fn output_dir(config: &ExperimentConfig) -> Result<PathBuf, CliError> {
    config.output_dir.clone().ok_or_else(|| {
        CliError::Config("output directory required: set output_dir or pass --out".into())
    })
}

/// Load or generate the experiment graph. File graphs are parsed
/// permissively; strictness is enforced by the probability operations that
/// need it, which keeps error reporting specific.
pub fn materialize_graph(config: &ExperimentConfig) -> Result<BipartiteGraph, CliError> {
    if let Some(path) = &config.graph.file {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read graph file {path:?}: {e}")))?;
        return BipartiteGraph::from_edge_list_permissive(&text)
            .map_err(|e| CliError::Input(format!("bad graph file {path:?}: {e}")));
    }
    let generator = config
        .graph
        .generator
        .as_ref()
        .expect("validated: file or generator");
    match generator {
        GeneratorSpec::Random {
            n,
            m,
            edge_probability,
        } => {
            let master = config.master_seed.expect("validated: seed present");
            let gen_seed = seed::derive_seed(master, GENERATOR_STREAM);
            BipartiteGraph::random(*n, *m, *edge_probability, gen_seed)
                .map_err(CliError::from_generation)
        }
        GeneratorSpec::Contrast { mu } => {
            BipartiteGraph::contrast(mu).map_err(CliError::from_generation)
        }
        GeneratorSpec::MiOptimal { n, m, degree } => {
            BipartiteGraph::mi_optimal(*n, *m, *degree).map_err(CliError::from_generation)
        }
    }
}

fn walk_settings(config: &ExperimentConfig) -> Result<&WalkSettings, CliError> {
    config
        .walk
        .as_ref()
        .ok_or_else(|| CliError::Config("the walk analysis needs a [walk] section".into()))
}

fn file_name(analysis: Analysis, phi: f64, format: OutputFormat) -> String {
    format!(
        "{}_phi{}.{}",
        analysis.name(),
        report::phi_label(phi),
        format.extension()
    )
}

struct AnalysisContext<'a> {
    config: &'a ExperimentConfig,
    graph: &'a BipartiteGraph,
    graph_id: &'a str,
    opts: &'a RunOptions,
}

fn run_one_analysis(
    sink: &mut Sink,
    ctx: &AnalysisContext<'_>,
    analysis: Analysis,
    phi_index: usize,
    phi: f64,
) -> Result<(), CliError> {
    let AnalysisContext {
        config,
        graph,
        graph_id,
        opts,
    } = *ctx;
    let format = opts.format;
    match analysis {
        Analysis::Joint => {
            let joint = model::joint_probability(graph, phi).map_err(CliError::from_analysis)?;
            match format {
                OutputFormat::Csv => sink.write(
                    file_name(analysis, phi, format),
                    report::joint_sparse_csv(graph_id, Some(phi), &joint),
                )?,
                OutputFormat::Json => sink.write_json(
                    file_name(analysis, phi, format),
                    report::joint_json(graph_id, Some(phi), &joint),
                )?,
            }
            if opts.dense_joint {
                sink.write(
                    format!("joint_dense_phi{}.csv", report::phi_label(phi)),
                    report::joint_dense_csv(graph_id, Some(phi), &joint),
                )?;
            }
        }
        Analysis::Marginals => {
            let joint = model::joint_probability(graph, phi).map_err(CliError::from_analysis)?;
            match format {
                OutputFormat::Csv => sink.write(
                    file_name(analysis, phi, format),
                    report::marginals_csv(graph_id, phi, &joint),
                )?,
                OutputFormat::Json => sink.write_json(
                    file_name(analysis, phi, format),
                    report::marginals_json(graph_id, phi, &joint),
                )?,
            }
        }
        Analysis::Mi => {
            let joint = model::joint_probability(graph, phi).map_err(CliError::from_analysis)?;
            let mi = info::mutual_information(&joint);
            match format {
                OutputFormat::Csv => sink.write(
                    file_name(analysis, phi, format),
                    report::mi_csv(graph_id, phi, &mi),
                )?,
                OutputFormat::Json => sink.write_json(
                    file_name(analysis, phi, format),
                    report::mi_json(graph_id, phi, &mi),
                )?,
            }
        }
        Analysis::Law => {
            let law =
                fit::check_meaning_frequency_law(graph, phi).map_err(CliError::from_analysis)?;
            let joint = model::joint_probability(graph, phi).map_err(CliError::from_analysis)?;
            let points = fit::law_points(graph, &joint).map_err(CliError::from_analysis)?;
            match format {
                OutputFormat::Csv => sink.write(
                    file_name(analysis, phi, format),
                    report::law_csv(graph_id, phi, &law),
                )?,
                OutputFormat::Json => sink.write_json(
                    file_name(analysis, phi, format),
                    report::law_json(graph_id, phi, &law),
                )?,
            }
            sink.write(
                format!("law_points_phi{}.csv", report::phi_label(phi)),
                report::law_points_csv(graph_id, phi, &points),
            )?;
        }
        Analysis::Bounds => {
            let bounds = fit::check_bounds(graph, phi).map_err(CliError::from_analysis)?;
            let joint = model::joint_probability(graph, phi).map_err(CliError::from_analysis)?;
            let mu = graph.degrees().mu;
            let probs = joint.word_marginal();
            match format {
                OutputFormat::Csv => sink.write(
                    file_name(analysis, phi, format),
                    report::bounds_csv(graph_id, phi, &mu, &probs, &bounds),
                )?,
                OutputFormat::Json => sink.write_json(
                    file_name(analysis, phi, format),
                    report::bounds_json(graph_id, phi, &mu, &probs, &bounds),
                )?,
            }
        }
        Analysis::MeanIndependence => {
            let mi = fit::check_mean_independence(graph, phi).map_err(CliError::from_analysis)?;
            match format {
                OutputFormat::Csv => sink.write(
                    file_name(analysis, phi, format),
                    report::mean_independence_csv(graph_id, phi, &mi),
                )?,
                OutputFormat::Json => sink.write_json(
                    file_name(analysis, phi, format),
                    report::mean_independence_json(graph_id, phi, &mi),
                )?,
            }
        }
        Analysis::Walk => {
            let settings = walk_settings(config)?;
            let master = config.master_seed.expect("validated: seed present");
            let walk_seed = seed::derive_seed(master, WALK_STREAM_BASE + phi_index as u64);
            let walk_config = walk::WalkConfig {
                steps: settings.steps,
                burn_in: settings.burn_in(),
                phi,
                start: settings.start().to_policy(),
                master_seed: walk_seed,
                chains: settings.chains(),
            };
            let census =
                walk::simulate_walk(graph, &walk_config).map_err(CliError::from_analysis)?;
            let ctx = CensusContext {
                graph_id,
                phi,
                settings,
                master_seed: master,
                walk_seed,
            };
            match format {
                OutputFormat::Csv => sink.write(
                    file_name(analysis, phi, format),
                    report::census_csv(&ctx, &census),
                )?,
                OutputFormat::Json => sink.write_json(
                    file_name(analysis, phi, format),
                    report::census_json(&ctx, &census),
                )?,
            }
        }
        Analysis::ZipfChain => unreachable!("zipf-chain is not a per-phi analysis"),
    }
    Ok(())
}

/// Run a set of analyses and write one artifact per analysis per phi, plus
/// the manifest.
pub fn run(
    command: &str,
    config: &ExperimentConfig,
    analyses: &[Analysis],
    opts: &RunOptions,
) -> Result<RunOutcome, CliError> {
    let graph = materialize_graph(config)?;
    let graph_id = config.graph_id();
    let ctx = AnalysisContext {
        config,
        graph: &graph,
        graph_id: &graph_id,
        opts,
    };
    let mut sink = Sink::new(output_dir(config)?)?;
    for &analysis in analyses {
        if analysis == Analysis::ZipfChain {
            let z = config.zipf_chain.unwrap_or_default();
            let fitted = fit::check_zipf_chain(z.alpha, z.gamma, z.rank_count)
                .map_err(|e| CliError::Config(e.to_string()))?;
            let name = format!("zipf_chain.{}", opts.format.extension());
            match opts.format {
                OutputFormat::Csv => sink.write(
                    name,
                    report::zipf_chain_csv(z.alpha, z.gamma, z.rank_count, &fitted),
                )?,
                OutputFormat::Json => sink.write_json(
                    name,
                    report::zipf_chain_json(z.alpha, z.gamma, z.rank_count, &fitted),
                )?,
            }
            continue;
        }
        for (phi_index, &phi) in config.phi.iter().enumerate() {
            run_one_analysis(&mut sink, &ctx, analysis, phi_index, phi)?;
        }
    }
    sink.finish(command, opts.format, config)
}

/// Write the configured generator's graph as an edge-list file.
pub fn cmd_generate(config: &ExperimentConfig, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    if config.graph.generator.is_none() {
        return Err(CliError::Config(
            "generate needs a [graph.generator] spec".into(),
        ));
    }
    let graph = materialize_graph(config)?;
    let mut sink = Sink::new(output_dir(config)?)?;
    sink.write("graph.edges".into(), graph.to_edge_list())?;
    sink.finish("generate", opts.format, config)
}

pub fn cmd_analyze(config: &ExperimentConfig, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    run("analyze", config, &config.analyses.clone(), opts)
}

/// Run only the walk analysis, regardless of the configured analysis list.
pub fn cmd_walk(config: &ExperimentConfig, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let mut forced = config.clone();
    forced.analyses = vec![Analysis::Walk];
    forced.validate()?;
    run("walk", &forced, &[Analysis::Walk], opts)
}

pub fn cmd_zipf_chain(
    config: &ExperimentConfig,
    opts: &RunOptions,
) -> Result<RunOutcome, CliError> {
    run("zipf-chain", config, &[Analysis::ZipfChain], opts)
}

/// One summary row per phi: measured delta, bound gap, mutual information,
/// and entropy rate. Cells that are undefined for the graph (single degree
/// value, disconnected graph) come out as `NA` rather than failing the
/// sweep.
pub fn cmd_sweep(config: &ExperimentConfig, opts: &RunOptions) -> Result<RunOutcome, CliError> {
    if config.phi.is_empty() {
        return Err(CliError::Config("sweep needs a nonempty phi list".into()));
    }
    let graph = materialize_graph(config)?;
    let graph_id = config.graph_id();
    let mut rows = Vec::with_capacity(config.phi.len());
    for &phi in &config.phi {
        let delta_hat = match fit::check_meaning_frequency_law(&graph, phi) {
            Ok(law) => Some(law.fit.exponent),
            Err(CoreError::DegenerateFit(_)) => None,
            Err(e) => return Err(CliError::from_analysis(e)),
        };
        let bounds = fit::check_bounds(&graph, phi).map_err(CliError::from_analysis)?;
        let joint = model::joint_probability(&graph, phi).map_err(CliError::from_analysis)?;
        let mi = info::mutual_information(&joint);
        let entropy_rate = match walk::entropy_rate(&graph, phi) {
            Ok(h) => Some(h),
            Err(CoreError::Disconnected) => None,
            Err(e) => return Err(CliError::from_analysis(e)),
        };
        rows.push(SweepRow {
            phi,
            delta_hat,
            gap_ratio: Some(bounds.gap_ratio),
            mutual_info: Some(mi.mutual_info),
            entropy_rate,
        });
    }
    let mut sink = Sink::new(output_dir(config)?)?;
    let name = format!("sweep.{}", opts.format.extension());
    match opts.format {
        OutputFormat::Csv => sink.write(name, report::sweep_csv(&graph_id, &rows))?,
        OutputFormat::Json => sink.write_json(name, report::sweep_json(&graph_id, &rows))?,
    }
    sink.finish("sweep", opts.format, config)
}
