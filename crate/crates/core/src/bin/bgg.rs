//! Command-line front end for building and checking singular BGG complexes.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bgg_core::{render, Error, Pipeline, Weight};

#[derive(Parser)]
#[command(
    name = "bgg",
    about = "Singular BGG complexes on type-A Grassmannians",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the singularity data (l, S, I, J) of the weight.
    Analyze(Common),
    /// Build and print the relative Hasse diagram.
    Relative(Common),
    /// Label the diagram with direct-image degrees.
    Images(Common),
    /// Assemble the singular complex with jump arrows and operator orders.
    Complex(Common),
    /// Check the complex against the reduced regular diagram.
    Oracle(Common),
    /// Run the full verification suite.
    Check(Common),
    /// Render the labeled diagram and complex (DOT by default).
    Render(Common),
}

#[derive(Args)]
struct Common {
    /// Weight coordinates, comma-separated, e.g. 5,5,4,3,2,2,1,0.
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    mu: Vec<i64>,

    /// First block size k, with 1 <= k <= n/2.
    #[arg(long)]
    k: usize,

    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Dot,
    Json,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Internal(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let (common, default_format) = match &cli.command {
        Command::Render(c) => (c, Format::Dot),
        Command::Analyze(c)
        | Command::Relative(c)
        | Command::Images(c)
        | Command::Complex(c)
        | Command::Oracle(c)
        | Command::Check(c) => (c, Format::Ascii),
    };
    let format = common.format.unwrap_or(default_format);

    let mu = Weight::new(common.mu.clone())?;
    let pipeline = Pipeline::run(mu, common.k)?;

    let mut exit = ExitCode::SUCCESS;
    let output = match &cli.command {
        Command::Analyze(_) => match format {
            Format::Ascii | Format::Dot => render::ascii_profile(&pipeline.profile),
            Format::Json => to_json(&bgg_core::JsonReport::new(&pipeline.mu, &pipeline.profile)),
        },
        Command::Relative(_) => match format {
            Format::Ascii => render::ascii_relative(&pipeline.labeled.diagram),
            Format::Dot => render::dot(&pipeline.labeled, None),
            Format::Json => to_json(
                &bgg_core::JsonReport::new(&pipeline.mu, &pipeline.profile)
                    .with_relative(&pipeline.labeled),
            ),
        },
        Command::Images(_) => match format {
            Format::Ascii => render::ascii_images(&pipeline.labeled),
            Format::Dot => render::dot(&pipeline.labeled, None),
            Format::Json => to_json(
                &bgg_core::JsonReport::new(&pipeline.mu, &pipeline.profile)
                    .with_relative(&pipeline.labeled),
            ),
        },
        Command::Complex(_) => match format {
            Format::Ascii => render::ascii_complex(&pipeline.labeled, &pipeline.complex),
            Format::Dot => render::dot_complex(&pipeline.labeled, &pipeline.complex),
            Format::Json => to_json(&pipeline.json_report()),
        },
        Command::Oracle(_) => {
            let report = bgg_core::oracle_check(&pipeline.complex, &pipeline.profile)?;
            if !report.ok {
                exit = ExitCode::from(2);
            }
            match format {
                Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                    "ok": report.ok,
                    "complex_vertices": report.complex_vertices,
                    "oracle_vertices": report.oracle_vertices,
                    "complex_arrows": report.complex_arrows,
                    "oracle_arrows": report.oracle_arrows,
                    "mismatches": report.mismatches,
                }))
                .expect("serializable")
                    + "\n",
                _ => {
                    let mut text = format!(
                        "oracle {}: {} vertices / {} arrows against {} / {}\n",
                        if report.ok { "OK" } else { "MISMATCH" },
                        report.complex_vertices,
                        report.complex_arrows,
                        report.oracle_vertices,
                        report.oracle_arrows,
                    );
                    for m in &report.mismatches {
                        text.push_str(&format!("  {m}\n"));
                    }
                    text
                }
            }
        }
        Command::Check(_) => {
            let report = pipeline.verify()?;
            if !report.ok() {
                exit = ExitCode::from(2);
            }
            match format {
                Format::Json => to_json(&report),
                _ => {
                    let mut text = report.summary();
                    text.push('\n');
                    for f in &report.failures {
                        text.push_str(&format!("  {f}\n"));
                    }
                    text
                }
            }
        }
        Command::Render(_) => match format {
            Format::Ascii => render::ascii_complex(&pipeline.labeled, &pipeline.complex),
            Format::Dot => render::dot(&pipeline.labeled, Some(&pipeline.complex)),
            Format::Json => to_json(&pipeline.json_report()),
        },
    };

    match &common.out {
        Some(path) => fs::write(path, output)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{output}"),
    }
    Ok(exit)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}
