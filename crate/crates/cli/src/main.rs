use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sublorentz_cli::{commands, CliError, Report};

#[derive(Parser)]
#[command(name = "sublorentz", version, about = "Invariants and symmetries of contact sub-Lorentzian 3-manifolds")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: apparatus, structure functions, invariants, checks
    Analyze { file: String },
    /// Invariants and classification label
    Classify { file: String },
    /// Verdicts for the fields in the [symmetry] section
    Symmetry { file: String },
    /// Hyperbolic rotation of the frame by theta
    Rotate {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
    },
    /// Dilation X_i -> s X_i
    Dilate {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        scale: Option<String>,
    },
    /// Brackets, Jacobi check and Killing form of a catalog algebra
    Algebra {
        name: String,
        /// Rational value substituted for the parameter k
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
    },
    /// Structure attached to the ODE u'' = Q(x, u, p)
    Ode {
        #[arg(long = "Q", allow_hyphen_values = true)]
        q: String,
    },
    /// Built-in structures and algebras
    Catalog,
}

fn run(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Analyze { file } => commands::analyze(file),
        Command::Classify { file } => commands::classify_cmd(file),
        Command::Symmetry { file } => commands::symmetry(file),
        Command::Rotate { file, theta } => commands::rotate(file, theta.as_deref()),
        Command::Dilate { file, scale } => commands::dilate_cmd(file, scale.as_deref()),
        Command::Algebra { name, kappa } => commands::algebra(name, kappa.as_deref()),
        Command::Ode { q } => commands::ode(q),
        Command::Catalog => commands::catalog(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(3);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
