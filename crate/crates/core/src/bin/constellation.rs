use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use constellation::commands::run;
use constellation::{Command, Emit, Error, Result, RunConfig, SlopeChoice};

#[derive(Parser)]
#[command(name = "constellation", version, about = "Slope stability and HN filtrations in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify O_X and list slopes of every submodule.
    Report(Opts),
    /// θ- and D-Harder–Narasimhan filtrations.
    Hn(Opts),
    /// D-HN filtrations and polygon distances over a range of windows.
    Sweep(Opts),
}

#[derive(Clone, Copy, ValueEnum)]
enum SlopeArg {
    Theta,
    #[value(name = "D")]
    D,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Json,
    Svg,
    Text,
}

#[derive(Args)]
struct Opts {
    /// JSON run configuration.
    #[arg(long, conflicts_with = "example", required_unless_present = "example")]
    input: Option<PathBuf>,
    /// Builtin example: ex4.1, ex4.2, ex4.3 or ex4.4.
    #[arg(long)]
    example: Option<String>,
    /// Half-width of the window [-N, N].
    #[arg(long = "N")]
    n: Option<u64>,
    #[arg(long = "N-from")]
    n_from: Option<u64>,
    #[arg(long = "N-to")]
    n_to: Option<u64>,
    #[arg(long, value_enum)]
    slope: Option<SlopeArg>,
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load(opts: &Opts) -> Result<RunConfig> {
    let cfg = match (&opts.input, &opts.example) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::config(path.display().to_string(), e.to_string()))?;
            RunConfig::from_json(&text)?
        }
        (None, Some(name)) => RunConfig::builtin(name)?,
        (None, None) => return Err(Error::config("--input", "give --input or --example")),
    };
    let slope = opts.slope.map(|s| match s {
        SlopeArg::Theta => SlopeChoice::Theta,
        SlopeArg::D => SlopeChoice::D,
        SlopeArg::Both => SlopeChoice::Both,
    });
    let emit = opts.emit.map(|e| match e {
        EmitArg::Json => Emit::Json,
        EmitArg::Svg => Emit::Svg,
        EmitArg::Text => Emit::Text,
    });
    cfg.with_overrides(opts.n, (opts.n_from, opts.n_to), slope, emit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, opts) = match &cli.command {
        Cmd::Report(o) => (Command::Report, o),
        Cmd::Hn(o) => (Command::Hn, o),
        Cmd::Sweep(o) => (Command::Sweep, o),
    };
    let result = load(opts).and_then(|cfg| run(&cfg, command)).and_then(|text| match &opts.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::config(path.display().to_string(), e.to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
