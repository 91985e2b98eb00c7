mod generate;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use elastic_symmetry::classifier::{classify_with, ClassifyOptions, Tolerances};
use elastic_symmetry::grouptab::render_tables;

use input::{read_records, MatrixFormat};

#[derive(Parser)]
#[command(
    name = "elasym",
    version,
    about = "Symmetry classes of elasticity tensors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every record of one or more JSON files (`-` reads stdin).
    Classify(ClassifyArgs),
    /// Write a sample of a given class as a one-record input file.
    Generate(generate::GenerateArgs),
    /// Print the stratification tables of Ela and H^4.
    Tables,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(required = true)]
    files: Vec<String>,
    /// Format of records that do not say.
    #[arg(long, value_enum, default_value_t = MatrixFormat::Voigt)]
    format: MatrixFormat,
    #[arg(long, default_value_t = Tolerances::default().syzygy)]
    tol_syzygy: f64,
    #[arg(long, default_value_t = Tolerances::default().zero)]
    tol_zero: f64,
    /// Also classify d2 alone and flag a mismatch with (a, b, d2).
    #[arg(long)]
    strict_mga: bool,
    /// One JSON array of reports (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Human-readable summary.
    #[arg(long)]
    text: bool,
}

fn classify(args: &ClassifyArgs) -> ExitCode {
    let opts = ClassifyOptions {
        tolerances: Tolerances {
            syzygy: args.tol_syzygy,
            zero: args.tol_zero,
            ..Tolerances::default()
        },
        strict_mga: args.strict_mga,
    };
    let mut failed = false;
    let mut reports = Vec::new();
    let mut text = String::new();
    for path in &args.files {
        let records = match read_records(path) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                failed = true;
                continue;
            }
        };
        for rec in records {
            let c = match rec.tensor(args.format) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {path}: record `{}`: {e}", rec.id);
                    failed = true;
                    continue;
                }
            };
            let cert = classify_with(&c, &opts);
            for w in &cert.warnings {
                eprintln!("warning: {}: {w}", rec.id);
            }
            if args.text {
                text.push_str(&report::to_text(&rec.id, &cert));
            } else {
                reports.push(report::to_json(&rec.id, &cert, args.strict_mga));
            }
        }
    }
    let mut out = std::io::stdout().lock();
    let written = if args.text {
        out.write_all(text.as_bytes())
    } else {
        serde_json::to_writer_pretty(&mut out, &reports)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(out))
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(args) => classify(&args),
        Command::Generate(args) => generate::run(&args),
        Command::Tables => {
            print!("{}", render_tables());
            ExitCode::SUCCESS
        }
    }
}
