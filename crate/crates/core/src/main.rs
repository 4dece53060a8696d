//! Command-line front end: compute single values, run verification sweeps,
//! replay transport chains, and benchmark the two evaluators.
//!
//! Exit codes: 0 all pass, 1 counterexample, 2 usage error, 3 pole.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use flatsum::combinat::{DiagIndex, LinearIndex};
use flatsum::connect::{
    chain_is_constant, schur_chain_is_constant, transport_check_linear, transport_check_schur,
    RegionVariant,
};
use flatsum::error::Error;
use flatsum::exactq::{ops_count, ops_reset, to_cyclo};
use flatsum::sums::{classical_value, evaluate, Evaluator, NumeratorReading, SumArg, SumKind};
use flatsum::verify::{run_suite, Suite, SweepConfig, VerificationReport};

#[derive(Parser)]
#[command(
    name = "flatsum",
    about = "Exact computation and verification of flat-sum identities for multiple harmonic q-sums",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one sum as an exact element of Q(q), optionally specialized.
    Compute(ComputeArgs),
    /// Run a verification suite over a sweep grid and emit a JSON report.
    Verify(VerifyArgs),
    /// Replay a transport chain and check that it is constant.
    Transport(TransportArgs),
    /// Compare the DP and naive evaluators (values, field ops, wall time).
    Bench(BenchArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// bz | qflat | bz-star | qstar-flat | schur-bz | schur-qflat
    #[arg(long)]
    sum: String,
    /// Comma-separated index, e.g. 1,2 (empty string for the empty index)
    #[arg(long)]
    index: Option<String>,
    /// Shape JSON (path or inline): {"cells": [[i,j],...], "weights": {"p": k}}
    #[arg(long)]
    shape: Option<String>,
    /// Interpret --index as a one-row shape
    #[arg(long, conflicts_with = "as_column")]
    as_row: bool,
    /// Interpret --index as a one-column shape
    #[arg(long)]
    as_column: bool,
    #[arg(long)]
    upper: u32,
    /// Numerator reading for the Schur flat sum
    #[arg(long, default_value = "first-plain")]
    reading: String,
    /// Evaluate with the naive enumerator instead of the DP
    #[arg(long)]
    naive: bool,
    /// Print the exact value at q = 1 instead of the rational function
    #[arg(long, conflicts_with = "root")]
    at_q1: bool,
    /// Print the exact value at a primitive root of unity of this level
    #[arg(long)]
    root: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite token (msw-q, classical-msw, star-q, schur-q, classical-schur,
    /// hessami, connector-linear, transport-linear, connector-schur,
    /// det-connector, transport-schur, reflection) or "all"
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long)]
    max_depth: Option<u32>,
    /// Upper bounds, "1..6" (inclusive) or "2,3,4"
    #[arg(long)]
    uppers: Option<String>,
    /// Cyclotomic levels, "2..8" (inclusive) or a comma list
    #[arg(long)]
    levels: Option<String>,
    #[arg(long)]
    max_cells: Option<usize>,
    #[arg(long)]
    max_diag_weight: Option<u32>,
    /// "builtin" or a path to a JSON array of shapes with weights
    #[arg(long)]
    shapes: Option<String>,
    /// "printed", "first-primed", "first-plain", "both" (the two printed
    /// candidates), "all", or a comma list
    #[arg(long)]
    readings: Option<String>,
    /// "printed", "strict", "derived", "both", "all", or a comma list
    #[arg(long)]
    variants: Option<String>,
    /// Skip the naive-oracle cross-check
    #[arg(long)]
    no_oracle: bool,
    /// Start from a JSON SweepConfig instead of the defaults
    #[arg(long)]
    config: Option<String>,
    /// Use the acceptance-gate bounds for this suite
    #[arg(long)]
    acceptance: bool,
    /// Write the JSON report here
    #[arg(long)]
    report: Option<String>,
}

#[derive(Args)]
struct TransportArgs {
    #[arg(long)]
    index: Option<String>,
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    upper: u32,
    #[arg(long, default_value = "derived")]
    variant: String,
    #[arg(long, default_value = "first-plain")]
    reading: String,
    /// Print every chain member's serialized value
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// bz | qflat | bz-star | qstar-flat | schur-bz | schur-qflat
    #[arg(long)]
    sum: String,
    #[arg(long)]
    index: Option<String>,
    #[arg(long)]
    shape: Option<String>,
    /// Run every composition up to this weight instead of one index
    #[arg(long)]
    max_weight: Option<u32>,
    /// Upper bounds, "10,15" or "2..8"
    #[arg(long)]
    uppers: String,
    #[arg(long, default_value = "first-plain")]
    reading: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Transport(args) => cmd_transport(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match code {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::PoleAtOne | Error::PoleAtRoot(_) => 3u8,
                _ => 2u8,
            };
            ExitCode::from(code)
        }
    }
}

fn parse_range(text: &str) -> Result<Vec<u32>, Error> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let a: u32 = a
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("bad range start {a:?}")))?;
        let b: u32 = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| Error::Usage(format!("bad range end {b:?}")))?;
        if a > b {
            return Err(Error::Usage(format!("empty range {text:?}")));
        }
        return Ok((a..=b).collect());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Usage(format!("bad bound {t:?}")))
        })
        .collect()
}

fn parse_kind(text: &str) -> Result<SumKind, Error> {
    SumKind::parse(text).ok_or_else(|| Error::Usage(format!("unknown sum kind {text:?}")))
}

fn parse_reading(text: &str) -> Result<NumeratorReading, Error> {
    NumeratorReading::parse(text)
        .ok_or_else(|| Error::Usage(format!("unknown reading {text:?}")))
}

fn parse_variant(text: &str) -> Result<RegionVariant, Error> {
    RegionVariant::parse(text)
        .ok_or_else(|| Error::Usage(format!("unknown region variant {text:?}")))
}

/// A shape argument is either inline JSON or a path to a JSON file.
fn load_shape(text: &str) -> Result<DiagIndex, Error> {
    let body = if text.trim_start().starts_with('{') {
        text.to_string()
    } else {
        std::fs::read_to_string(text)
            .map_err(|e| Error::Usage(format!("cannot read shape file {text:?}: {e}")))?
    };
    serde_json::from_str(&body).map_err(|e| Error::Usage(format!("bad shape JSON: {e}")))
}

fn sum_argument(
    kind: SumKind,
    index: &Option<String>,
    shape: &Option<String>,
    as_row: bool,
    as_column: bool,
) -> Result<SumArg, Error> {
    match (index, shape) {
        (Some(_), Some(_)) => Err(Error::Usage("pass --index or --shape, not both".into())),
        (None, None) => Err(Error::Usage("pass --index or --shape".into())),
        (None, Some(s)) => {
            if !kind.is_schur() {
                return Err(Error::Usage(format!(
                    "sum kind {} takes --index, not --shape",
                    kind.token()
                )));
            }
            Ok(SumArg::Shape(load_shape(s)?))
        }
        (Some(text), None) => {
            let k = LinearIndex::parse_csv(text)?;
            if kind.is_schur() {
                // Map onto a one-row or one-column shape; columns are the
                // embedding that recovers the strict-chain sums.
                let kk = if as_row {
                    DiagIndex::from_row(&k)
                } else {
                    DiagIndex::from_column(&k)
                };
                return Ok(SumArg::Shape(kk));
            }
            let star = matches!(kind, SumKind::BzStar | SumKind::QStarFlat);
            if as_row && !star {
                return Err(Error::Usage(format!(
                    "--as-row models weak chains; use a star kind, not {}",
                    kind.token()
                )));
            }
            if as_column && star {
                return Err(Error::Usage(format!(
                    "--as-column models strict chains; use {} without it",
                    kind.token()
                )));
            }
            Ok(SumArg::Linear(k))
        }
    }
}

fn cmd_compute(args: &ComputeArgs) -> Result<ExitCode, Error> {
    let kind = parse_kind(&args.sum)?;
    let reading = parse_reading(&args.reading)?;
    let arg = sum_argument(kind, &args.index, &args.shape, args.as_row, args.as_column)?;
    let evaluator = if args.naive {
        Evaluator::Naive
    } else {
        Evaluator::Dp
    };
    if args.at_q1 {
        let v = classical_value(kind, &arg, args.upper, reading)?;
        println!(
            "{}",
            serde_json::json!([v.numer().to_string(), v.denom().to_string()])
        );
        return Ok(ExitCode::SUCCESS);
    }
    let value = evaluate(kind, &arg, args.upper, reading, evaluator)?;
    if let Some(level) = args.root {
        let at_root = to_cyclo(&value, level)?;
        println!("{}", serde_json::to_string(&at_root).expect("serializable"));
        return Ok(ExitCode::SUCCESS);
    }
    println!("{}", serde_json::to_string(&value).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}

fn apply_overrides(cfg: &mut SweepConfig, args: &VerifyArgs) -> Result<(), Error> {
    if let Some(w) = args.max_weight {
        cfg.max_weight = w;
    }
    if args.max_depth.is_some() {
        cfg.max_depth = args.max_depth;
    }
    if let Some(u) = &args.uppers {
        cfg.uppers = parse_range(u)?;
    }
    if let Some(l) = &args.levels {
        cfg.levels = parse_range(l)?;
    }
    if let Some(c) = args.max_cells {
        cfg.max_cells = c;
    }
    if let Some(k) = args.max_diag_weight {
        cfg.max_diag_weight = k;
    }
    if let Some(s) = &args.shapes {
        if s != "builtin" {
            let body = std::fs::read_to_string(s)
                .map_err(|e| Error::Usage(format!("cannot read shapes file {s:?}: {e}")))?;
            let shapes: Vec<DiagIndex> = serde_json::from_str(&body)
                .map_err(|e| Error::Usage(format!("bad shapes JSON: {e}")))?;
            cfg.shapes = Some(shapes);
        }
    }
    if let Some(r) = &args.readings {
        cfg.readings = match r.as_str() {
            "all" => NumeratorReading::ALL.to_vec(),
            "both" => vec![NumeratorReading::Printed, NumeratorReading::FirstPrimed],
            list => list
                .split(',')
                .map(|t| parse_reading(t.trim()))
                .collect::<Result<_, _>>()?,
        };
    }
    if let Some(v) = &args.variants {
        cfg.variants = match v.as_str() {
            "all" => RegionVariant::ALL.to_vec(),
            "both" => vec![RegionVariant::Printed, RegionVariant::AllBlocksStrict],
            list => list
                .split(',')
                .map(|t| parse_variant(t.trim()))
                .collect::<Result<_, _>>()?,
        };
    }
    if args.no_oracle {
        cfg.oracle_check = false;
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    let suites: Vec<Suite> = if args.theorem == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(&args.theorem)
            .ok_or_else(|| Error::Usage(format!("unknown theorem {:?}", args.theorem)))?]
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for suite in &suites {
        let mut cfg = if args.acceptance {
            suite.acceptance_config()
        } else if let Some(path) = &args.config {
            let body = std::fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("cannot read config {path:?}: {e}")))?;
            serde_json::from_str(&body)
                .map_err(|e| Error::Usage(format!("bad config JSON: {e}")))?
        } else {
            SweepConfig::default()
        };
        apply_overrides(&mut cfg, args)?;
        let report = run_suite(*suite, &cfg)?;
        println!(
            "{}: {} cases, {} failed{}{}",
            report.theorem,
            report.summary.total,
            report.summary.failed,
            report
                .resolved_variants
                .linear_region
                .as_deref()
                .map(|v| format!(", linear region resolved: {v}"))
                .unwrap_or_default(),
            report
                .resolved_variants
                .schur_reading
                .as_deref()
                .map(|r| format!(", reading resolved: {r}"))
                .unwrap_or_default(),
        );
        reports.push(report);
    }

    let all_passed = reports.iter().all(|r| r.all_passed());
    if let Some(path) = &args.report {
        let body = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0]).expect("serializable")
        } else {
            serde_json::to_string_pretty(&reports).expect("serializable")
        };
        let mut file = std::fs::File::create(path)
            .map_err(|e| Error::Usage(format!("cannot write report {path:?}: {e}")))?;
        file.write_all(body.as_bytes())
            .map_err(|e| Error::Usage(format!("cannot write report {path:?}: {e}")))?;
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_transport(args: &TransportArgs) -> Result<ExitCode, Error> {
    match (&args.index, &args.shape) {
        (Some(_), Some(_)) => Err(Error::Usage("pass --index or --shape, not both".into())),
        (None, None) => Err(Error::Usage("pass --index or --shape".into())),
        (Some(text), None) => {
            let k = LinearIndex::parse_csv(text)?;
            let variant = parse_variant(&args.variant)?;
            let steps = transport_check_linear(&k, args.upper, variant)?;
            if args.trace {
                for s in &steps {
                    println!(
                        "Z({} | {}) = {}",
                        s.left,
                        s.right,
                        serde_json::to_string(&s.value).expect("serializable")
                    );
                }
            }
            let ok = chain_is_constant(&steps);
            println!(
                "chain of {} members: {}",
                steps.len(),
                if ok { "constant" } else { "NOT constant" }
            );
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        (None, Some(s)) => {
            let kk = load_shape(s)?;
            let reading = parse_reading(&args.reading)?;
            let steps = transport_check_schur(&kk, args.upper, reading)?;
            if args.trace {
                for s in &steps {
                    println!(
                        "Z(K; {}) = {}",
                        s.pivot,
                        serde_json::to_string(&s.value).expect("serializable")
                    );
                }
            }
            let ok = schur_chain_is_constant(&steps);
            println!(
                "chain of {} members: {}",
                steps.len(),
                if ok { "constant" } else { "NOT constant" }
            );
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode, Error> {
    let kind = parse_kind(&args.sum)?;
    let reading = parse_reading(&args.reading)?;
    let uppers = parse_range(&args.uppers)?;
    let mut arguments: Vec<(String, SumArg)> = Vec::new();
    if let Some(w) = args.max_weight {
        for k in flatsum::verify::compositions_up_to(w, None) {
            arguments.push((k.to_string(), SumArg::Linear(k)));
        }
    } else {
        let arg = sum_argument(kind, &args.index, &args.shape, false, false)?;
        let name = match (&args.index, &args.shape) {
            (Some(i), _) => i.clone(),
            (_, Some(s)) => s.clone(),
            _ => unreachable!(),
        };
        arguments.push((name, arg));
    }

    println!("kind,argument,upper,evaluator,ring_ops,wall_ms");
    let mut all_equal = true;
    for (name, arg) in &arguments {
        for &upper in &uppers {
            let mut values = Vec::new();
            for (evaluator, label) in [(Evaluator::Dp, "dp"), (Evaluator::Naive, "naive")] {
                ops_reset();
                let start = Instant::now();
                let value = evaluate(kind, arg, upper, reading, evaluator)?;
                let wall = start.elapsed().as_millis();
                let quoted = if name.contains(',') {
                    format!("\"{name}\"")
                } else {
                    name.clone()
                };
                println!(
                    "{},{},{},{},{},{}",
                    kind.token(),
                    quoted,
                    upper,
                    label,
                    ops_count(),
                    wall
                );
                values.push(value);
            }
            if values[0] != values[1] {
                eprintln!("evaluator mismatch for {name} at upper {upper}");
                all_equal = false;
            }
        }
    }
    Ok(if all_equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
