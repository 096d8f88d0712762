use std::process::ExitCode;

use clap::{Parser, Subcommand};

use coringext::cli::{execute, parse_field_flag, Command, EXIT_INPUT};
use coringext::limits;

#[derive(Parser)]
#[command(name = "coringext", about = "Exact computation with corings and coring extensions")]
struct Args {
    /// JSON workspace; fixture names resolve without one.
    #[arg(long, short, global = true)]
    workspace: Option<String>,
    /// Field for fixture names without an `@Fp` suffix: a prime or `Q`.
    #[arg(long, global = true, default_value = "2")]
    field: String,
    /// Largest ambient dimension any intermediate space may reach.
    #[arg(long, global = true)]
    max_dim: Option<u64>,
    /// Largest number of candidates any enumeration may visit.
    #[arg(long, global = true)]
    max_enum: Option<u64>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate every object of the workspace, or a single one.
    Check {
        /// Workspace file (same as `--workspace`).
        file: Option<String>,
        #[arg(long, conflicts_with = "object")]
        all: bool,
        #[arg(long)]
        object: Option<String>,
    },
    /// Structure constants of the left dual ring of a coring.
    Dualring {
        #[arg(long)]
        coring: String,
    },
    /// All measurings from a coring to an algebra, with their algebra maps.
    EnumerateMeasurings {
        #[arg(long)]
        coring: String,
        #[arg(long)]
        algebra: String,
    },
    /// The comodule induced along an extension.
    Induce {
        #[arg(long)]
        extension: String,
        #[arg(long)]
        comodule: String,
    },
    /// The image of a comodule map under the induced functor.
    Apply {
        #[arg(long)]
        extension: String,
        #[arg(long)]
        map: String,
    },
    /// The composite of two extensions sharing the middle coring.
    Compose {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// The extension of a descent chain, optionally applied to a descent datum.
    Descent {
        #[arg(long)]
        chain: String,
        #[arg(long)]
        datum: Option<String>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(n) = args.max_dim {
        limits::set_max_dim(n);
    }
    if let Some(n) = args.max_enum {
        limits::set_max_enum(n);
    }
    let mut workspace = args.workspace;
    let command = match args.command {
        Cmd::Check { file, all: _, object } => {
            workspace = file.or(workspace);
            Command::Check { object }
        }
        Cmd::Dualring { coring } => Command::DualRing { coring },
        Cmd::EnumerateMeasurings { coring, algebra } => Command::EnumerateMeasurings { coring, algebra },
        Cmd::Induce { extension, comodule } => Command::Induce { extension, comodule },
        Cmd::Apply { extension, map } => Command::Apply { extension, map },
        Cmd::Compose { first, second } => Command::Compose { first, second },
        Cmd::Descent { chain, datum } => Command::Descent { chain, datum },
    };
    let field = match parse_field_flag(&args.field) {
        Ok(f) => f,
        Err(e) => return fail(e.report(), EXIT_INPUT),
    };
    let text = match workspace.as_deref().map(std::fs::read_to_string).transpose() {
        Ok(t) => t,
        Err(e) => {
            let report = serde_json::json!({"status": "error", "error": "io", "message": e.to_string()});
            return fail(report, EXIT_INPUT);
        }
    };
    let (report, code) = execute(text.as_deref(), field, &command);
    println!("{report}");
    ExitCode::from(code as u8)
}

fn fail(report: serde_json::Value, code: i32) -> ExitCode {
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    ExitCode::from(code as u8)
}
