use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use descartes_lab::catalog::{build_catalog, CatalogOptions, CSV_HEADER};
use descartes_lab::criteria::{classify, Status};
use descartes_lab::oracle::{grid_search, random_search, Grid, DEFAULT_BUDGET};
use descartes_lab::prop3_verifier::{inequality_battery, verify_suite};
use descartes_lab::signpat::{AdmissiblePair, SignPattern};
use descartes_lab::witness::{construct_witness, thm2_sweep_case, thm2_sweep_triples};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "descartes-lab", version, about = "Realizability of sign patterns with admissible root counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one (pattern, pair) couple.
    Classify {
        #[arg(short, long)]
        degree: Option<usize>,
        /// `+--+` or `S(m,n,q)`.
        #[arg(short = 's', long)]
        pattern: String,
        /// `pos,neg`.
        #[arg(short, long)]
        ap: String,
    },
    /// Classify every couple of a degree.
    Catalog {
        #[arg(short, long)]
        degree: usize,
        /// Only patterns with two sign changes.
        #[arg(long)]
        c2: bool,
        /// Only three-block patterns with `(0, d-2)`.
        #[arg(long)]
        blocks_only: bool,
        /// Attach certified witnesses to realizable rows.
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
    },
    /// Build (or search for) a certified witness.
    Witness {
        #[arg(short = 's', long)]
        pattern: String,
        #[arg(short, long)]
        ap: String,
        /// Use the root-placement oracle instead of the constructions.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "default")]
        grid: GridChoice,
    },
    /// Run a verification battery.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 30)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridChoice {
    Default,
    Dense,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Prop3,
    Thm2Sweep,
    Inequalities,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_couple(pattern: &str, ap: &str) -> Result<(SignPattern, AdmissiblePair), Failure> {
    let sigma: SignPattern = pattern.parse().map_err(usage)?;
    let ap: AdmissiblePair = ap.parse().map_err(usage)?;
    sigma.check_admissible(ap).map_err(usage)?;
    Ok((sigma, ap))
}

fn print_json(v: &impl serde::Serialize) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Failure::Check(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { degree, pattern, ap } => {
            let (sigma, ap) = parse_couple(&pattern, &ap)?;
            if let Some(d) = degree.filter(|&d| d != sigma.degree()) {
                return Err(Failure::Usage(format!("{sigma} has degree {}, not {d}", sigma.degree())));
            }
            let mut c = classify(&sigma, ap).map_err(|e| Failure::Check(e.to_string()))?;
            if c.status == Status::Realizable {
                c.witness = construct_witness(&sigma, ap).ok().map(|w| w.poly);
            }
            print_json(&c)
        }
        Command::Catalog { degree, c2, blocks_only, witnesses, format, out, max_degree } => {
            if degree > max_degree {
                return Err(Failure::Usage(format!("degree {degree} exceeds --max-degree {max_degree}")));
            }
            let opts = CatalogOptions { c2_only: c2, blocks_only, witnesses };
            let cat = build_catalog(degree, opts).map_err(|e| Failure::Check(e.to_string()))?;
            let bytes = match format {
                Format::Json => {
                    let mut v = serde_json::to_vec_pretty(&cat).map_err(|e| Failure::Check(e.to_string()))?;
                    v.push(b'\n');
                    v
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    let io_err = |e: csv::Error| Failure::Check(e.to_string());
                    w.write_record(CSV_HEADER).map_err(io_err)?;
                    for r in cat.csv_records() {
                        w.write_record(&r).map_err(io_err)?;
                    }
                    w.into_inner().map_err(|e| Failure::Check(e.to_string()))?
                }
            };
            match out {
                Some(path) => fs::write(path, bytes)?,
                None => io::stdout().lock().write_all(&bytes)?,
            }
            Ok(())
        }
        Command::Witness { pattern, ap, search, seed, budget, grid } => {
            let (sigma, ap) = parse_couple(&pattern, &ap)?;
            let found = if search {
                let grid = match grid {
                    GridChoice::Default => Grid::default(),
                    GridChoice::Dense => Grid::dense(),
                };
                grid_search(&sigma, ap, &grid, budget).or_else(|| random_search(&sigma, ap, seed, budget))
            } else {
                match construct_witness(&sigma, ap) {
                    Ok(w) => Some(w),
                    Err(e) => return Err(Failure::Check(e.to_string())),
                }
            };
            match found {
                Some(w) => print_json(&w),
                None => Err(Failure::Check(format!("no witness for {sigma} with {ap} within budget {budget}"))),
            }
        }
        Command::Verify { suite, max_degree, seed, budget } => {
            let (report, pass) = match suite {
                Suite::Prop3 => {
                    let cases = verify_suite();
                    let pass = cases.iter().all(|c| c.pass);
                    (json!({ "suite": "prop3", "pass": pass, "cases": cases }), pass)
                }
                Suite::Thm2Sweep => {
                    let triples = thm2_sweep_triples(max_degree);
                    let failures: Vec<String> = triples
                        .par_iter()
                        .filter_map(|&(d, m, n)| thm2_sweep_case(d, m, n).err().map(|e| format!("({d},{m},{n}): {e}")))
                        .collect();
                    let pass = failures.is_empty();
                    let report = json!({
                        "suite": "thm2-sweep",
                        "max_degree": max_degree,
                        "cases": triples.len(),
                        "pass": pass,
                        "failures": failures,
                    });
                    (report, pass)
                }
                Suite::Inequalities => {
                    let r = inequality_battery(seed, budget);
                    let pass = r.pass();
                    (json!({ "suite": "inequalities", "seed": seed, "pass": pass, "report": r }), pass)
                }
            };
            print_json(&report)?;
            if pass {
                Ok(())
            } else {
                Err(Failure::Check("verification failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("DESCARTES_LAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
