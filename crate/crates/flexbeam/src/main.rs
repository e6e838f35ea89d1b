use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use flexbeam::commands::{self, CommonOpts, SweepOpts};

/// Modal analysis, stabilization certificates, and closed-loop simulation
/// for a simply supported beam with a spring–mass shaker and distributed
/// piezoelectric actuators under velocity feedback.
#[derive(Parser)]
#[command(name = "flexbeam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Run configuration file (TOML)
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides `output.directory` from the config)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Truncation order (overrides `spectral.n_modes` from the config)
    #[arg(long)]
    n_modes: Option<usize>,
}

impl CommonArgs {
    fn into_opts(self) -> CommonOpts {
        CommonOpts {
            config: self.config,
            out: self.out,
            n_modes: self.n_modes,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a configuration against the model constraints and echo the
    /// effective parameters
    Validate(CommonArgs),
    /// Scan both characteristic functions and write spectrum.csv
    Spectrum(CommonArgs),
    /// Build the mass-normalized modal basis and write modes.csv
    Modes(CommonArgs),
    /// Certify controllability of the actuator placement and write
    /// certification.csv
    Certify(CommonArgs),
    /// Integrate the closed-loop system and write trajectory.csv
    Simulate(CommonArgs),
    /// Re-certify along a one-parameter family and write sweep.csv
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Parameter to vary: alpha0 | kappa | m | l0 |
        /// actuatorN.{center,width,height,alpha} (N is 1-based)
        #[arg(long)]
        param: String,
        /// First parameter value
        #[arg(long)]
        from: f64,
        /// Last parameter value
        #[arg(long)]
        to: f64,
        /// Number of evenly spaced points (0 writes an empty table)
        #[arg(long)]
        steps: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Validate(a) => commands::cmd_validate(&a.into_opts()),
        Command::Spectrum(a) => commands::cmd_spectrum(&a.into_opts()),
        Command::Modes(a) => commands::cmd_modes(&a.into_opts()),
        Command::Certify(a) => commands::cmd_certify(&a.into_opts()),
        Command::Simulate(a) => commands::cmd_simulate(&a.into_opts()),
        Command::Sweep {
            common,
            param,
            from,
            to,
            steps,
        } => commands::cmd_sweep(&SweepOpts {
            common: common.into_opts(),
            param,
            from,
            to,
            steps,
        }),
    };
    std::process::exit(code);
}
