//! Command-line surface: parameter solvers, per-colouring parameters, the
//! tree algorithm, generators, the named verification checks, and graph6
//! stream scans. One JSON object per result on stdout; `--pretty` switches to
//! a human-readable line format.

use std::io::{BufRead, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use critset_core::cache::{CacheKey, ResultCache};
use critset_core::generators::{generate, FamilySpec};
use critset_core::io::{
    parse_colouring, parse_edge_list, parse_graph6, parse_hypergraph_json, to_graph6,
    to_hypergraph_json,
};
use critset_core::verify::{all_checks, run_check, scan_stream, CheckReport, KPolicy};
use critset_core::{params, tree, Budget, ColourStructure, Error, ParamResult, Result};

#[derive(Parser)]
#[command(name = "critset", version, about = "Exact critical-set solvers for graph and hypergraph colourings")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Abort solvers after this many seconds with a budget-exhausted status.
    #[arg(long, global = true)]
    budget: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edges,
    Hjson,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    Graph6,
    Hjson,
}

#[derive(Clone, Copy, ValueEnum)]
enum AggregateParam {
    Sn,
    Oscs,
    Ulcs,
    Olcs,
}

#[derive(Clone, Copy, ValueEnum)]
enum PerColouringParam {
    Scs,
    Lcs,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sn, oscs, ulcs or olcs of a structure.
    Param {
        parameter: AggregateParam,
        #[arg(long)]
        k: u8,
        /// Input file, or `-` for stdin.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        /// Skip the result cache.
        #[arg(long)]
        no_cache: bool,
        /// Cache file (default: $CRITSET_CACHE or .critset-cache.jsonl).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Compute scs or lcs for a fixed colouring.
    Percolouring {
        parameter: PerColouringParam,
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        /// JSON array of colours in [1..k].
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        k: u8,
    },
    /// Sudoku number of a tree by the polynomial recurrence (k >= 3).
    TreeSn {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
    },
    /// Emit a named family, e.g. `gen complete 5` or `gen "cartesian_product(complete(3),complete(3))"`.
    Gen {
        #[arg(required = true)]
        spec: Vec<String>,
        #[arg(long, value_enum)]
        emit: Option<EmitFormat>,
    },
    /// Run named checks; exit code 0 iff all pass.
    Verify {
        names: Vec<String>,
        /// Run every registered check.
        #[arg(long)]
        all: bool,
        /// List registered check names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate a predicate over a graph6 stream (files or stdin).
    Scan {
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value = "chi")]
        kpolicy: String,
        /// Resumable progress file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        files: Vec<PathBuf>,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_structure(path: &str, format: InputFormat) -> Result<ColourStructure> {
    let text = read_input(path)?;
    match format {
        InputFormat::Graph6 => parse_graph6(
            text.lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Error::input("no graph6 record in input"))?,
        ),
        InputFormat::Edges => parse_edge_list(&text),
        InputFormat::Hjson => parse_hypergraph_json(&text),
    }
}

fn budget_of(cli_budget: Option<f64>) -> Budget {
    match cli_budget {
        Some(secs) => Budget::seconds(secs),
        None => Budget::NONE,
    }
}

fn print_param_result(
    pretty: bool,
    parameter: &str,
    k: u8,
    structure: &ColourStructure,
    result: &ParamResult,
    cached: bool,
    runtime: f64,
) {
    if pretty {
        println!(
            "{parameter}(n={}, k={k}) = {}{}   witness_set={:?}   nodes={}   {runtime:.3}s",
            structure.n(),
            result.value,
            if cached { " [cached]" } else { "" },
            result.witness_set.as_deref().unwrap_or(&[]),
            result.nodes_explored,
        );
    } else {
        let payload = json!({
            "command": "param",
            "parameter": parameter,
            "k": k,
            "n": structure.n(),
            "value": result.value,
            "witness_set": result.witness_set,
            "witness_colouring": result.witness_colouring.as_ref().map(|c| c.colours().to_vec()),
            "nodes_explored": result.nodes_explored,
            "cached": cached,
            "runtime_secs": runtime,
        });
        println!("{payload}");
    }
}

fn print_report(pretty: bool, report: &CheckReport) {
    if pretty {
        println!(
            "{} {} ({:.2}s)  expected={}  computed={}",
            if report.pass { "PASS" } else { "FAIL" },
            report.name,
            report.runtime_secs,
            report.expected,
            report.computed
        );
        for v in &report.violations {
            println!("    violation: {v}");
        }
        for n in &report.notes {
            println!("    note: {n}");
        }
        for e in &report.record_errors {
            println!("    record error: {e}");
        }
    } else {
        println!("{}", serde_json::to_string(report).expect("report serializes"));
    }
}

fn run(cli: Cli) -> Result<bool> {
    let budget = budget_of(cli.budget);
    let pretty = cli.pretty;
    match cli.command {
        Command::Param {
            parameter,
            k,
            input,
            format,
            no_cache,
            cache,
        } => {
            let structure = load_structure(&input, format)?;
            let name = match parameter {
                AggregateParam::Sn => "sn",
                AggregateParam::Oscs => "oscs",
                AggregateParam::Ulcs => "ulcs",
                AggregateParam::Olcs => "olcs",
            };
            let cache = if no_cache {
                None
            } else {
                Some(match cache {
                    Some(path) => ResultCache::at(path),
                    None => ResultCache::default_location(),
                })
            };
            let key = CacheKey::new(&structure, name, k);
            let start = Instant::now();
            if let Some(hit) = cache.as_ref().and_then(|c| c.lookup(&key)) {
                print_param_result(pretty, name, k, &structure, &hit, true, start.elapsed().as_secs_f64());
                return Ok(true);
            }
            let result = match parameter {
                AggregateParam::Sn => params::sn_budgeted(&structure, k, &budget)?,
                AggregateParam::Oscs => params::oscs_budgeted(&structure, k, &budget)?,
                AggregateParam::Ulcs => params::ulcs_budgeted(&structure, k, &budget)?,
                AggregateParam::Olcs => params::olcs_budgeted(&structure, k, &budget)?,
            };
            if let Some(cache) = &cache {
                cache.store(&key, &result)?;
            }
            print_param_result(pretty, name, k, &structure, &result, false, start.elapsed().as_secs_f64());
            Ok(true)
        }
        Command::Percolouring {
            parameter,
            input,
            format,
            colouring,
            k,
        } => {
            let structure = load_structure(&input, format)?;
            let colouring = parse_colouring(&std::fs::read_to_string(colouring)?, k)?;
            let start = Instant::now();
            let (name, result) = match parameter {
                PerColouringParam::Scs => {
                    ("scs", params::scs_budgeted(&structure, &colouring, k, &budget)?)
                }
                PerColouringParam::Lcs => {
                    ("lcs", params::lcs_budgeted(&structure, &colouring, k, &budget)?)
                }
            };
            print_param_result(pretty, name, k, &structure, &result, false, start.elapsed().as_secs_f64());
            Ok(true)
        }
        Command::TreeSn { k, input, format } => {
            let structure = load_structure(&input, format)?;
            let start = Instant::now();
            let value = tree::sn_tree(&structure, k)?;
            if pretty {
                println!("sn_tree(n={}, k={k}) = {value}", structure.n());
            } else {
                println!(
                    "{}",
                    json!({
                        "command": "tree-sn",
                        "k": k,
                        "n": structure.n(),
                        "value": value,
                        "runtime_secs": start.elapsed().as_secs_f64(),
                    })
                );
            }
            Ok(true)
        }
        Command::Gen { spec, emit } => {
            let text = if spec.len() > 1 {
                format!("{}({})", spec[0], spec[1..].join(","))
            } else {
                spec[0].clone()
            };
            let family: FamilySpec = text.parse()?;
            let structure = generate(&family)?;
            let emit = emit.unwrap_or(if structure.is_graph() {
                EmitFormat::Graph6
            } else {
                EmitFormat::Hjson
            });
            match emit {
                EmitFormat::Graph6 => println!("{}", to_graph6(&structure)?),
                EmitFormat::Hjson => println!("{}", to_hypergraph_json(&structure)),
            }
            Ok(true)
        }
        Command::Verify { names, all, list } => {
            if list {
                for name in all_checks() {
                    println!("{name}");
                }
                return Ok(true);
            }
            let names: Vec<String> = if all {
                all_checks().iter().map(|s| s.to_string()).collect()
            } else if names.is_empty() {
                return Err(Error::input("give check names or --all (see --list)"));
            } else {
                names
            };
            let mut all_pass = true;
            for name in &names {
                let report = run_check(name, &budget)?;
                all_pass &= report.pass;
                print_report(pretty, &report);
            }
            Ok(all_pass)
        }
        Command::Scan {
            predicate,
            kpolicy,
            checkpoint,
            files,
        } => {
            let policy = KPolicy::parse(&kpolicy)?;
            let mut records: Vec<String> = Vec::new();
            if files.is_empty() {
                for line in std::io::stdin().lock().lines() {
                    records.push(line?);
                }
            } else {
                for file in &files {
                    for line in std::fs::read_to_string(file)?.lines() {
                        records.push(line.to_string());
                    }
                }
            }
            let report = scan_stream(records, &predicate, policy, &budget, checkpoint.as_deref())?;
            let pass = report.pass;
            print_report(pretty, &report);
            Ok(pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if pretty {
                eprintln!("error: {e}");
            } else {
                println!("{}", json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            }
            match e {
                Error::BudgetExhausted => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
