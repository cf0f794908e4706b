use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use hypercauchy::curve::{Curve, CurveArgs};
use hypercauchy::figure::{default_grid, write_figure, FigureId, DEFAULT_POINTS};
use hypercauchy::grid::parse_grid;
use hypercauchy::output::{tabulate, Format};
use hypercauchy::sample::{generate_parallel, sampler_from_args, write_batch};
use hypercauchy::verify::{all_passed, run_parallel, write_json, write_table};
use hypercauchy::thread_pool;
use hypercauchy_core::verification::Suite;

/// Hyper-Cauchy and Cauchy-type laws: densities, samples, checks and figure data.
#[derive(Debug, Parser)]
#[command(name = "hypercauchy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate a density (or related curve) on a grid.
    Pdf {
        #[command(flatten)]
        law: LawArgs,
        /// Grid as min:max:points [default: -5t:5t:2001]
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Draw a seeded, reproducible sample.
    Sample {
        #[command(flatten)]
        law: LawArgs,
        /// Number of draws
        #[arg(short = 'n', long = "count", default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run verification checks; exit status 1 if any check fails.
    Verify {
        /// all, normalization, identities, pde, airy, initial, cf, modes or sampling
        #[arg(long, default_value = "all")]
        suite: String,
        /// Emit the reports as a JSON array
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the curve data of a figure, one CSV per curve.
    Figure {
        id: FigureId,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
    },
}

#[derive(Debug, Args)]
struct LawArgs {
    #[arg(long)]
    law: String,
    /// Order exponent: the law has order 2^n
    #[arg(long = "n")]
    order: Option<u32>,
    /// Component or odd-order index
    #[arg(long)]
    k: Option<u64>,
    /// Parameter m of the generic skewed law
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    t: f64,
}

impl LawArgs {
    fn curve_args(&self) -> CurveArgs {
        CurveArgs { n: self.order, k: self.k, m: self.m, t: self.t }
    }
}

#[derive(Debug, Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file [default: stdout]
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

fn usage<T>(r: Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn runtime<T, E: Into<anyhow::Error>>(r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Runtime(e.into()))
}

fn sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let pool = usage(thread_pool())?;
    match cli.command {
        Command::Pdf { law, grid, out } => {
            let curve = usage(Curve::from_args(&law.law, law.curve_args()))?;
            let grid = usage(match grid {
                Some(g) => parse_grid(&g),
                None => default_grid(curve.t(), DEFAULT_POINTS),
            })?;
            let record = runtime(pool.install(|| tabulate(&curve, &grid)))?;
            runtime(record.write(out.format, runtime(sink(out.output.as_ref()))?))?;
        }
        Command::Sample { law, count, seed, out } => {
            let sampler = usage(sampler_from_args(&law.law, law.curve_args()))?;
            let batch = usage(pool.install(|| generate_parallel(&sampler, count, seed)))?;
            runtime(write_batch(&batch, out.format, runtime(sink(out.output.as_ref()))?))?;
        }
        Command::Verify { suite, json, output } => {
            let suite: Suite = usage(suite.parse().map_err(|_| {
                anyhow::anyhow!(
                    "unknown suite {suite:?}; expected all, {}",
                    Suite::NAMED.map(|s| s.name()).join(", ")
                )
            }))?;
            let reports = pool.install(|| run_parallel(suite));
            let out = runtime(sink(output.as_ref()))?;
            runtime(if json { write_json(&reports, out) } else { write_table(&reports, out) })?;
            if !all_passed(&reports) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Figure { id, out_dir, points } => {
            let files = runtime(pool.install(|| write_figure(id, &out_dir, points)))?;
            for f in files {
                println!("{}", f.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
