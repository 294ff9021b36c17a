use bethe_cells::cli::{render, run, Command, Format, RunConfig};
use clap::{Parser, ValueEnum};
use std::io::{Read, Write};
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sub {
    Evolve,
    Compare,
    Tetra,
    Bethe,
    Positivity,
    Charts,
    Words,
}

impl From<Sub> for Command {
    fn from(s: Sub) -> Self {
        match s {
            Sub::Evolve => Command::Evolve,
            Sub::Compare => Command::Compare,
            Sub::Tetra => Command::Tetra,
            Sub::Bethe => Command::Bethe,
            Sub::Positivity => Command::Positivity,
            Sub::Charts => Command::Charts,
            Sub::Words => Command::Words,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

/// Wronskian evolutions, chart transitions and Bethe checks.
#[derive(Debug, Parser)]
#[command(name = "bethe-cells", version)]
struct Args {
    command: Option<Sub>,
    /// Read a JSON run configuration; `-` for stdin.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Letters such as `121321`, or comma separated.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    /// Comma-separated rationals, e.g. `1,-2/3,5`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    params: Option<Vec<String>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 200)]
    max_iter: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[arg(long)]
    from: Option<String>,
    #[arg(long)]
    to: Option<String>,
}

fn load(args: Args) -> Result<RunConfig, String> {
    if let Some(path) = &args.config {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
        };
        let mut cfg: RunConfig = serde_json::from_str(&text).map_err(|e| format!("config: {e}"))?;
        if let Some(sub) = args.command {
            cfg.command = Some(sub.into());
        }
        return Ok(cfg);
    }
    Ok(RunConfig {
        command: args.command.map(Command::from),
        rank: args.rank,
        word: args.word,
        params: args.params,
        seed: args.seed,
        tol: args.tol,
        trials: args.trials,
        max_iter: args.max_iter,
        format: match args.format {
            OutFormat::Json => Format::Json,
            OutFormat::Table => Format::Table,
        },
        from: args.from,
        to: args.to,
    })
}

fn main() -> ExitCode {
    let cfg = match load(Args::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cfg) {
        Ok(outcome) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{}", render(&outcome.report, cfg.format));
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
