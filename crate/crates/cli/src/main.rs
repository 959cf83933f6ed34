//! `heterotree`: generate, solve, construct and verify heterochromatic tree
//! partitions of edge-colored graphs.
//!
//! Exit status: 0 success, 1 usage or input error, 2 counterexample found,
//! 3 size guard exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heterotree::canonical::{extremal_partition, generate_canonical_with_fill};
use heterotree::constructive::partition_complete;
use heterotree::formula::evaluate;
use heterotree::io::{parse_coloring, write_coloring, write_partition};
use heterotree::solver::{solve_with, SolveOptions, DEFAULT_MAX_N};
use heterotree::verify::{
    campaign_constructive, campaign_cutedge, campaign_monotonicity, campaign_theorem1,
    ConstructiveConfig, Theorem1Config, VerificationReport,
};
use heterotree::{merge_colors, EdgeColoring, Error};

#[derive(Debug, Parser)]
#[command(name = "heterotree", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print f(r) and the predicted partition number of K_n.
    Formula { n: usize, r: usize },
    /// Write the extremal coloring of K_n with r colors.
    Canonical {
        n: usize,
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the explicit optimal partition here.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Fill color used when no color is left over (default 1).
        #[arg(long, default_value_t = 1)]
        fill: u32,
    },
    /// Compute an exact minimum partition.
    Solve {
        file: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Run the polynomial constructive algorithm on a complete graph.
    Construct {
        file: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Recolor every edge of color FROM with TO and renumber the colors.
    Merge {
        file: PathBuf,
        from: u32,
        to: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification campaign.
    Verify {
        campaign: Campaign,
        #[arg(long)]
        max_n: Option<usize>,
        /// Samples per cell (theorem1), trials (monotonicity) or samples per n (constructive).
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the full report (text, or JSON with --format json).
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Campaign {
    Theorem1,
    Monotonicity,
    Cutedge,
    Constructive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

const EXIT_USAGE: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_GUARD: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Defect { .. } => EXIT_COUNTEREXAMPLE,
        _ => EXIT_USAGE,
    }
}

fn read_coloring(path: &Path) -> Result<EdgeColoring, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_coloring(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    eprintln!("# config: {:?}", cli.command);
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type Outcome = Result<u8, (u8, String)>;

fn fail(e: Error) -> (u8, String) {
    (exit_code(&e), e.to_string())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Formula { n, r } => {
            let f = evaluate(n, r).map_err(fail)?;
            let t = f.t.map_or_else(|| "-".to_string(), |t| t.to_string());
            println!("t={t} value={}", f.value);
            Ok(0)
        }
        Command::Canonical {
            n,
            r,
            output,
            partition,
            fill,
        } => {
            let (c, layout) = generate_canonical_with_fill(n, r, fill).map_err(fail)?;
            write_or_print(output.as_deref(), &write_coloring(&c)).map_err(fail)?;
            if let Some(path) = partition {
                let p = extremal_partition(&c, &layout).map_err(fail)?;
                fs::write(&path, write_partition(&p)).map_err(|e| fail(e.into()))?;
                eprintln!("partition trees={}", p.count());
            }
            Ok(0)
        }
        Command::Solve {
            file,
            partition,
            max_n,
        } => {
            let c = read_coloring(&file).map_err(|m| (EXIT_USAGE, m))?;
            let res = solve_with(&c, SolveOptions { max_n }).map_err(fail)?;
            println!("count={}", res.count);
            eprintln!(
                "stats subsets={} feasibility_checks={} cache_hits={}",
                res.stats.subsets_explored, res.stats.feasibility_checks, res.stats.cache_hits
            );
            if let Some(path) = partition {
                fs::write(&path, write_partition(&res.partition)).map_err(|e| fail(e.into()))?;
            }
            Ok(0)
        }
        Command::Construct { file, partition } => {
            let c = read_coloring(&file).map_err(|m| (EXIT_USAGE, m))?;
            let res = partition_complete(&c).map_err(fail)?;
            let bound = evaluate(c.n(), c.r() as usize).map_err(fail)?.value;
            println!("count={} bound={bound}", res.partition.count());
            if let Some(path) = partition {
                fs::write(&path, write_partition(&res.partition)).map_err(|e| fail(e.into()))?;
            }
            Ok(0)
        }
        Command::Merge {
            file,
            from,
            to,
            output,
        } => {
            let c = read_coloring(&file).map_err(|m| (EXIT_USAGE, m))?;
            let merged = merge_colors(&c, from, to).map_err(fail)?;
            write_or_print(output.as_deref(), &write_coloring(&merged)).map_err(fail)?;
            Ok(0)
        }
        Command::Verify {
            campaign,
            max_n,
            samples,
            seed,
            report,
            format,
        } => {
            let rep = run_campaign(campaign, max_n, samples, seed).map_err(fail)?;
            let full = match format {
                Format::Text => rep.to_text(),
                Format::Json => rep.to_json(),
            };
            match format {
                Format::Text => print!("{full}"),
                Format::Json => println!("{}", rep.summary_json()),
            }
            if let Some(path) = report {
                fs::write(&path, full).map_err(|e| fail(e.into()))?;
            }
            Ok(if rep.passed() { 0 } else { EXIT_COUNTEREXAMPLE })
        }
    }
}

fn run_campaign(
    campaign: Campaign,
    max_n: Option<usize>,
    samples: Option<usize>,
    seed: u64,
) -> Result<VerificationReport, Error> {
    match campaign {
        Campaign::Theorem1 => {
            campaign_theorem1(&Theorem1Config::new(max_n.unwrap_or(6), samples.unwrap_or(200), seed))
        }
        Campaign::Monotonicity => {
            campaign_monotonicity(samples.unwrap_or(1000), seed, max_n.unwrap_or(7))
        }
        Campaign::Cutedge => campaign_cutedge(max_n.unwrap_or(7)),
        Campaign::Constructive => campaign_constructive(&ConstructiveConfig::new(
            max_n.unwrap_or(12),
            samples.unwrap_or(500),
            seed,
        )),
    }
}
