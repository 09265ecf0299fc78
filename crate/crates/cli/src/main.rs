use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use torusinv::verify::Grid;
use torusinv::weyl::Family;
use torusinv_cli::{Format, Report};

#[derive(Parser)]
#[command(name = "torusinv", version, about = "Maximal-torus invariants of finite classical groups")]
struct Cli {
    /// Output format: json or csv.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for verification sweeps.
    #[arg(long, env = "TORUSINV_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List Weyl classes with centralizer orders, torus orders and signs.
    Classes {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Run a verification sweep; exits with status 1 if any cell fails.
    Verify {
        /// th1, th2, th5, dd3, pm1, pm2, pp3, au1, zw1, d1d, zz1, m1m, in8,
        /// ext-power, elements or steinberg.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: usize,
        /// Separate bound on n for gl and sl.
        #[arg(long)]
        max_n_type_a: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<u64>,
        /// Cap on enumerated elements, vectors or monomials.
        #[arg(long, default_value_t = 1_000_000)]
        max_enum: u128,
        /// Cap on explicitly enumerated Weyl groups.
        #[arg(long, default_value_t = 10_000_000)]
        max_group: u128,
    },
    /// Decompose the Steinberg product of a strongly q-restricted SL weight.
    Decompose {
        #[arg(long, default_value = "sl")]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Coordinates a_1,...,a_{n-1} in the fundamental weight basis.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Zero-weight multiplicity, required for weights outside the special family.
        #[arg(long)]
        d0: Option<u64>,
    },
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let report = match cli.command {
        Command::Classes { family, n, q } => Report::Classes(torusinv_cli::classes(family, n, q)?),
        Command::Verify {
            theorem,
            max_n,
            max_n_type_a,
            q_list,
            max_enum,
            max_group,
        } => {
            let mut grid = Grid::new(max_n, &q_list).with_max_enum(max_enum);
            grid.max_n_type_a = max_n_type_a;
            grid.max_group = max_group;
            Report::Verify(torusinv_cli::verify(&theorem, grid)?)
        }
        Command::Decompose {
            family,
            n,
            q,
            weight,
            d0,
        } => torusinv_cli::decompose(family, n, q, &weight, d0)?,
    };
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    report.write(cli.format, &mut out)?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
