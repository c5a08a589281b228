use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use charclass::cli::{
    cmd_compare, cmd_deduce, cmd_invariants, cmd_report_all, Catalog, CmdOutput, DeduceArgs,
    Format, Pins, EXIT_USAGE,
};

#[derive(Parser)]
#[command(
    name = "charclass",
    version,
    about = "Characteristic classes and homeomorphism obstructions"
)]
struct Cli {
    /// Output format: md or json.
    #[arg(long, global = true, default_value = "md")]
    format: Format,
    /// Directory of record files, searched before the built-ins.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// TOML file of expected verdicts, overriding the built-in pins.
    #[arg(long, global = true)]
    pin: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti, Hodge, characteristic classes and numbers of a record.
    Invariants { record: String },
    /// Homeomorphism invariants of two records side by side.
    Compare { a: String, b: String },
    /// Run a deduction pipeline and check it against its pinned verdict.
    Deduce {
        pipeline: String,
        target: Option<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        dim: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        chi: Option<i64>,
    },
    /// Every pinned value with pass/fail.
    ReportAll,
}

fn run(cli: &Cli) -> charclass::Result<CmdOutput> {
    let catalog = match &cli.catalog {
        Some(d) => Catalog::with_dir(d),
        None => Catalog::builtin(),
    };
    let mut pins = Pins::builtin();
    if let Some(p) = &cli.pin {
        pins = pins.merged(Pins::load(p)?);
    }
    let ok = |report| CmdOutput { report, exit: 0 };
    Ok(match &cli.command {
        Command::Invariants { record } => ok(cmd_invariants(&catalog, record)?),
        Command::Compare { a, b } => ok(cmd_compare(&catalog, a, b)?),
        Command::Deduce {
            pipeline,
            target,
            family,
            d,
            n,
            dim,
            chi,
        } => {
            let args = DeduceArgs {
                target: target.clone(),
                family: family.clone(),
                d: *d,
                n: *n,
                dim: *dim,
                chi: *chi,
            };
            cmd_deduce(&catalog, &pins, pipeline, &args)?
        }
        Command::ReportAll => cmd_report_all(&catalog, &pins),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("charclass: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let text = out.report.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("charclass: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(out.exit as u8)
}
