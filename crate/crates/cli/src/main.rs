use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use seshadri_cli::run::EXIT_INPUT;
use seshadri_cli::{load, run, Command, Flags};

#[derive(Parser)]
#[command(name = "seshadri", version, about = "Seshadri constants, line schemes and cut-out degrees at a point")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Seed for every random choice
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Comma-separated primes for the oracle
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u32>>,
    /// Truncation cap for multiplicity and order computations
    #[arg(long = "max-m", global = true)]
    max_m: Option<u32>,
    /// Write the JSON report to this path (`-` for stdout)
    #[arg(long, global = true)]
    json: Option<String>,
    /// Check saturation of the ideals and report mult_p X
    #[arg(long, global = true)]
    validate: bool,
    /// Extra randomized attempts after a degenerate draw
    #[arg(long, global = true)]
    retries: Option<u32>,
}

#[derive(Subcommand)]
enum Sub {
    /// Lower bound d_p/(d_p - 1), or 1 when a line passes through p
    Bound {
        /// Instance file, or builtin:<name>
        instance: String,
    },
    /// Line scheme F_p(X) with its Hilbert data
    Fano {
        /// Instance file, or builtin:<name>
        instance: String,
    },
    /// Cut-out degrees d_p(X) and d_p(Y)
    Dp {
        /// Instance file, or builtin:<name>
        instance: String,
    },
    /// Exact value for a complete intersection
    Classify {
        /// Instance file, or builtin:<name>
        instance: String,
    },
    /// Seshadri-curve certificate
    Curve {
        /// Instance file, or builtin:<name>
        instance: String,
    },
    /// Hypersurface and curve attaining d/(d-1)
    Sharpness {
        /// Number of slices, at least 1
        #[arg(long)]
        n: u32,
        /// Degree of the hypersurface, at least n + 1
        #[arg(long)]
        d: u32,
    },
    /// Line counts and conic search over small prime fields
    Oracle {
        /// Instance file, or builtin:<name>
        instance: String,
        /// Conic-search draws per prime
        #[arg(long)]
        budget: Option<usize>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SESHADRI_LOG", "warn")).init();
    let cli = Cli::parse();
    let mut flags = Flags {
        seed: cli.global.seed,
        primes: cli.global.primes,
        max_m: cli.global.max_m,
        retries: cli.global.retries,
        validate: cli.global.validate,
        ..Flags::default()
    };
    let (command, source) = match cli.command {
        Sub::Bound { instance } => (Command::Bound, Some(instance)),
        Sub::Fano { instance } => (Command::Fano, Some(instance)),
        Sub::Dp { instance } => (Command::Dp, Some(instance)),
        Sub::Classify { instance } => (Command::Classify, Some(instance)),
        Sub::Curve { instance } => (Command::Curve, Some(instance)),
        Sub::Sharpness { n, d } => {
            flags.n = n;
            flags.d = d;
            (Command::Sharpness, None)
        }
        Sub::Oracle { instance, budget } => {
            flags.budget = budget;
            (Command::Oracle, Some(instance))
        }
    };
    let instance = match source.as_deref().map(load).transpose() {
        Ok(i) => i,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };

    let start = Instant::now();
    let report = run(command, instance.as_ref(), &flags);
    let elapsed = start.elapsed();

    match cli.global.json.as_deref() {
        Some("-") => print!("{}", report.to_json()),
        Some(path) => {
            if let Err(e) = fs::write(path, report.to_json()) {
                eprintln!("cannot write {path}: {e}");
                return ExitCode::from(EXIT_INPUT as u8);
            }
            print!("{}", report.to_text(Some(elapsed)));
        }
        None => print!("{}", report.to_text(Some(elapsed))),
    }
    ExitCode::from(report.exit_code as u8)
}
