use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lexnet_cli::config::ExperimentConfig;
use lexnet_cli::error::CliError;
use lexnet_cli::runner::{self, OutputFormat, RunOptions, RunOutcome};

/// Reproducible experiments on bipartite word-meaning networks: exact joint
/// distributions, degree-biased walks, information metrics, and power-law
/// fits, driven by a config file.
#[derive(Parser)]
#[command(name = "lexnet", version, about)]
struct Cli {
    /// Experiment config file (TOML)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Master seed override; all randomness derives from it
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory override
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Artifact format
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the configured generator's graph as an edge-list file
    Generate,
    /// Run the analyses selected in the config
    Analyze {
        /// Also write the dense joint-probability matrix per phi
        #[arg(long)]
        dense: bool,
    },
    /// Run only the walk analysis
    Walk,
    /// One summary row per phi: delta, gap ratio, mutual information,
    /// entropy rate
    Sweep,
    /// Fit the synthetic rank-law chain from the config's zipf_chain
    /// parameters
    ZipfChain,
}

fn load(cli: &Cli) -> Result<(ExperimentConfig, RunOptions), CliError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::Config("--config <PATH> is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config {path:?}: {e}")))?;
    let parsed: ExperimentConfig =
        toml::from_str(&text).map_err(|e| CliError::Config(format!("bad config: {e}")))?;
    let opts = RunOptions {
        seed: cli.seed,
        out: cli.out.clone(),
        format: cli.format,
        dense_joint: matches!(cli.command, Command::Analyze { dense: true }),
    };
    let resolved = runner::resolve_config(parsed, &opts)?;
    resolved.validate()?;
    Ok((resolved, opts))
}

fn dispatch(cli: &Cli) -> Result<RunOutcome, CliError> {
    let (config, opts) = load(cli)?;
    match cli.command {
        Command::Generate => runner::cmd_generate(&config, &opts),
        Command::Analyze { .. } => runner::cmd_analyze(&config, &opts),
        Command::Walk => runner::cmd_walk(&config, &opts),
        Command::Sweep => runner::cmd_sweep(&config, &opts),
        Command::ZipfChain => runner::cmd_zipf_chain(&config, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            println!(
                "wrote {} files to {}",
                outcome.files.len(),
                outcome.out_dir.display()
            );
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
