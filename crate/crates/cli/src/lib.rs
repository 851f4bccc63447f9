//! Command-line driver: solve, verify, oracle, generate, and the
//! experiment harness over the colouring text format.
//!
//! Exit codes are part of the contract: 0 success, 1 failed verification,
//! 2 parse or usage error, 3 internal invariant failure (with a diagnostic
//! bundle written to disk), 4 oracle size refusal.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use monocycle::batch::{batch_solve, SolveSummary};
use monocycle::colouring::{Colour, Colouring, Cycle, CycleKind, Partition};
use monocycle::error::Error;
use monocycle::gen::{enumerate_all, gen_proposition7, gen_random, gen_split};
use monocycle::oracle::{min_cycle_partition, DEFAULT_ORACLE_LIMIT};
use monocycle::solver::{parse_vertex_name, partition_le4, vertex_name, Route, SolutionJson};
use monocycle::trace;
use monocycle::verify::verify_partition;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_REFUSED: i32 = 4;

/// Environment variable naming the default worker count for batch work.
pub const WORKERS_ENV: &str = "MONOCYCLE_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "monocycle",
    about = "Partition 2-edge-coloured complete bipartite graphs into at most 4 monochromatic cycles",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition one colouring into at most four monochromatic cycles.
    Solve(SolveArgs),
    /// Exact minimum cycle partition by exhaustive search (small boards).
    Oracle(OracleArgs),
    /// Emit a colouring from one of the built-in families.
    Gen(GenArgs),
    /// Check a solution file against a colouring.
    Verify(VerifyArgs),
    /// Solve many instances and summarize; optionally cross-check against
    /// the oracle and hunt for minimum-4 witnesses.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Colouring file in the text format, or '-' for standard input.
    input: String,
    /// Print the solution as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Print every edge probe the solver made.
    #[arg(long)]
    trace: bool,
    /// Re-run the verifier on the solution before printing.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Colouring file in the text format, or '-' for standard input.
    input: String,
    /// Size cap; instances with n above it are refused.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    limit: usize,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
}

#[derive(Subcommand, Debug)]
enum GenFamily {
    /// The extremal family whose minimum is exactly three cycles.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A split colouring with block sizes |X1|=a, |Y1|=b.
    Split {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A seeded random colouring.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        p_red: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Colouring file in the text format, or '-' for standard input.
    input: String,
    /// Solution JSON file, as printed by `solve --json`.
    solution: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Random,
    Exhaustive,
    Extremal,
    Split,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// Instance family to draw from.
    #[arg(long, value_enum)]
    family: Family,
    /// Smallest board size, inclusive.
    #[arg(long)]
    n_min: usize,
    /// Largest board size, inclusive; defaults to n-min.
    #[arg(long)]
    n_max: Option<usize>,
    /// Instances per board size (random family only).
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Base seed; instance i of size n uses seed + i (random family only).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Red-edge probability for the random family.
    #[arg(long, default_value_t = 0.5)]
    p_red: f64,
    /// Also run the exact oracle on every instance and report
    /// discrepancies (requires n within the oracle limit).
    #[arg(long)]
    oracle_cross_check: bool,
    /// Collect instances whose exact minimum is four into witness files.
    #[arg(long)]
    hunt_four: bool,
    /// Oracle size cap used by cross-check and the hunt.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    /// Worker threads; defaults to MONOCYCLE_WORKERS, then all cores.
    #[arg(long)]
    workers: Option<usize>,
    /// Include wall-time statistics (breaks byte-identical reproducibility).
    #[arg(long)]
    timings: bool,
    /// Directory for minimum-4 witness files; defaults to the current one.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
}

/// Run the CLI; the returned code is the process exit status.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Gen(a) => cmd_gen(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Experiment(a) => cmd_experiment(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::OutOfRange(_) | Error::Unbalanced(_) => EXIT_PARSE,
                Error::OracleLimit { .. } => EXIT_REFUSED,
                _ => EXIT_INTERNAL,
            }
        }
    }
}

fn read_colouring(input: &str) -> Result<Colouring, Error> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("reading standard input: {e}"),
        })?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("reading {input}: {e}"),
        })?
    };
    Colouring::parse_text(&text)
}

fn cycle_text(cy: &Cycle) -> String {
    let kind = match cy.kind {
        CycleKind::Singleton => "singleton",
        CycleKind::EdgeCycle => "edge",
        CycleKind::Proper => "proper",
    };
    let colour = match cy.colour_tag {
        Some(Colour::Red) => "red",
        Some(Colour::Blue) => "blue",
        None => "uncoloured",
    };
    let vs: Vec<String> = cy.vertices.iter().map(|&v| vertex_name(v)).collect();
    format!("{kind} {colour}: {}", vs.join(" "))
}

/// On an internal invariant failure, preserve the offending input and the
/// probe trace for a bug report.
fn write_diagnostic_bundle(c: &Colouring, err: &Error) -> PathBuf {
    let events = trace::take();
    let mut body = String::new();
    body.push_str(&format!("error: {err}\n\ncolouring:\n{}\nprobes:\n", c.to_text()));
    for ev in events {
        body.push_str(&format!("  x{} y{} = {:?} ({})\n", ev.x, ev.y, ev.colour, ev.context));
    }
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0);
    let path = std::env::temp_dir().join(format!("monocycle-diagnostic-{stamp}.txt"));
    if std::fs::write(&path, body).is_err() {
        eprintln!("could not write diagnostic bundle to {}", path.display());
    }
    path
}

fn cmd_solve(a: &SolveArgs) -> Result<i32, Error> {
    let c = read_colouring(&a.input)?;
    trace::enable();
    let solution = match partition_le4(&c) {
        Ok(s) => s,
        Err(e @ Error::Internal(_)) => {
            let path = write_diagnostic_bundle(&c, &e);
            eprintln!("error: {e}\ndiagnostic bundle: {}", path.display());
            return Ok(EXIT_INTERNAL);
        }
        Err(e) => return Err(e),
    };
    let probes = trace::take();
    if a.verify {
        let report = verify_partition(&c, &solution.partition);
        if !report.valid {
            let e = Error::Internal(format!(
                "solution failed re-verification: {}",
                report.failure.as_deref().unwrap_or("unspecified")
            ));
            let path = write_diagnostic_bundle(&c, &e);
            eprintln!("error: {e}\ndiagnostic bundle: {}", path.display());
            return Ok(EXIT_INTERNAL);
        }
    }
    if a.json {
        println!("{}", serde_json::to_string(&solution.to_json()).expect("serializable"));
    } else {
        let route = match solution.route {
            Route::Split => "split",
            Route::NonSplit => "nonsplit",
        };
        println!("n = {}, route = {route}, cycles = {}", solution.n, solution.partition.len());
        for cy in &solution.partition.cycles {
            println!("  {}", cycle_text(cy));
        }
    }
    if a.trace {
        for ev in probes {
            println!("probe x{} y{} = {:?} ({})", ev.x, ev.y, ev.colour, ev.context);
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct OracleJson {
    n: usize,
    minimum: usize,
    witness: Vec<monocycle::solver::CycleJson>,
}

fn cmd_oracle(a: &OracleArgs) -> Result<i32, Error> {
    let c = read_colouring(&a.input)?;
    let r = min_cycle_partition(&c, a.limit)?;
    let out = OracleJson {
        n: c.n(),
        minimum: r.minimum,
        witness: r.witness.cycles.iter().map(Cycle::to_json).collect(),
    };
    println!("{}", serde_json::to_string(&out).expect("serializable"));
    Ok(EXIT_OK)
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<i32, Error> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Error::Internal(format!("writing {}: {e}", path.display()))
        })?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn cmd_gen(a: &GenArgs) -> Result<i32, Error> {
    match &a.family {
        GenFamily::Extremal { n, output } => emit(&gen_proposition7(*n)?.to_text(), output),
        GenFamily::Split { a, b, n, output } => emit(&gen_split(*a, *b, *n)?.0.to_text(), output),
        GenFamily::Random { n, seed, p_red, output } => {
            emit(&gen_random(*n, *seed, *p_red)?.to_text(), output)
        }
    }
}

fn partition_from_json(sol: &SolutionJson) -> Result<Partition, Error> {
    let mut cycles = Vec::new();
    for cj in &sol.cycles {
        let vertices = cj
            .vertices
            .iter()
            .map(|s| parse_vertex_name(s))
            .collect::<Result<Vec<_>, _>>()?;
        let colour = match cj.colour.as_deref() {
            Some("red") => Some(Colour::Red),
            Some("blue") => Some(Colour::Blue),
            None => None,
            Some(other) => {
                return Err(Error::Parse {
                    line: 1,
                    col: 1,
                    msg: format!("unknown colour '{other}'"),
                })
            }
        };
        let kind = match cj.kind.as_str() {
            "singleton" => CycleKind::Singleton,
            "edge" => CycleKind::EdgeCycle,
            "proper" => CycleKind::Proper,
            other => {
                return Err(Error::Parse {
                    line: 1,
                    col: 1,
                    msg: format!("unknown cycle kind '{other}'"),
                })
            }
        };
        cycles.push(Cycle { vertices, kind, colour_tag: colour });
    }
    Ok(Partition::new(cycles))
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32, Error> {
    let c = read_colouring(&a.input)?;
    let text = std::fs::read_to_string(&a.solution).map_err(|e| Error::Parse {
        line: 1,
        col: 1,
        msg: format!("reading {}: {e}", a.solution.display()),
    })?;
    let sol: SolutionJson = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: 1,
        col: 1,
        msg: format!("solution JSON: {e}"),
    })?;
    let p = partition_from_json(&sol)?;
    let report = verify_partition(&c, &p);
    println!(
        "{}",
        serde_json::to_string(&serde_json::json!({
            "valid": report.valid,
            "cycle_count": report.cycle_count,
            "failure": report.failure,
        }))
        .expect("serializable")
    );
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct Discrepancy {
    index: usize,
    n: usize,
    solver_cycles: usize,
    oracle_minimum: usize,
    reason: String,
}

#[derive(Serialize)]
struct WallTime {
    total_micros: u128,
    min_micros: u128,
    max_micros: u128,
}

/// Aggregate record of one experiment run. Field order is the JSON order;
/// histograms use ordered maps so reruns are byte-identical.
#[derive(Serialize)]
struct ExperimentSummary {
    family: String,
    n_min: usize,
    n_max: usize,
    count: usize,
    seed: u64,
    instances: usize,
    solver_cycle_histogram: BTreeMap<usize, usize>,
    oracle_histogram: Option<BTreeMap<usize, usize>>,
    max_oracle_minimum: Option<usize>,
    discrepancies: Vec<Discrepancy>,
    four_witnesses: Vec<String>,
    wall_time: Option<WallTime>,
}

fn experiment_instances(a: &ExperimentArgs, n_max: usize) -> Result<Vec<Colouring>, Error> {
    let mut cs = Vec::new();
    for n in a.n_min..=n_max {
        match a.family {
            Family::Random => {
                for i in 0..a.count as u64 {
                    cs.push(gen_random(n, a.seed + i, a.p_red)?);
                }
            }
            Family::Exhaustive => cs.extend(enumerate_all(n)?),
            Family::Extremal => cs.push(gen_proposition7(n)?),
            Family::Split => {
                for blk_a in 1..n {
                    for blk_b in 1..n {
                        cs.push(gen_split(blk_a, blk_b, n)?.0);
                    }
                }
            }
        }
    }
    Ok(cs)
}

fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or_else(|| std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Random => "random",
        Family::Exhaustive => "exhaustive",
        Family::Extremal => "extremal",
        Family::Split => "split",
    }
}

/// Write a minimum-4 colouring with its oracle witness next to it; returns
/// the text file name recorded in the summary.
fn write_witness(
    dir: &Path,
    family: &str,
    index: usize,
    c: &Colouring,
    witness: &Partition,
) -> Result<String, Error> {
    let stem = format!("witness-{family}-n{}-i{index}", c.n());
    let txt = dir.join(format!("{stem}.txt"));
    let json = dir.join(format!("{stem}.json"));
    let io_err =
        |p: &Path, e: std::io::Error| Error::Internal(format!("writing {}: {e}", p.display()));
    std::fs::write(&txt, c.to_text()).map_err(|e| io_err(&txt, e))?;
    let sidecar = serde_json::json!({
        "n": c.n(),
        "minimum": 4,
        "witness": witness.cycles.iter().map(Cycle::to_json).collect::<Vec<_>>(),
    });
    std::fs::write(&json, serde_json::to_string(&sidecar).expect("serializable"))
        .map_err(|e| io_err(&json, e))?;
    Ok(format!("{stem}.txt"))
}

fn cmd_experiment(a: &ExperimentArgs) -> Result<i32, Error> {
    let n_max = a.n_max.unwrap_or(a.n_min);
    if n_max < a.n_min {
        return Err(Error::OutOfRange(format!(
            "n-max {n_max} is below n-min {}",
            a.n_min
        )));
    }
    let want_oracle = a.oracle_cross_check || a.hunt_four;
    let cs = experiment_instances(a, n_max)?;
    if want_oracle {
        if let Some(c) = cs.iter().find(|c| c.n() > a.oracle_limit) {
            return Err(Error::OracleLimit { n: c.n(), limit: a.oracle_limit });
        }
    }
    let workers = a.workers.unwrap_or_else(default_workers).max(1);
    let summaries: Vec<SolveSummary> = batch_solve(&cs, workers)?;

    let mut solver_hist: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &summaries {
        *solver_hist.entry(s.cycle_count).or_insert(0) += 1;
    }

    let mut oracle_hist = None;
    let mut max_min = None;
    let mut discrepancies = Vec::new();
    let mut four_witnesses = Vec::new();
    if want_oracle {
        let dir = a.witness_dir.clone().unwrap_or_else(|| PathBuf::from("."));
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, (c, s)) in cs.iter().zip(&summaries).enumerate() {
            let r = min_cycle_partition(c, a.oracle_limit)?;
            *hist.entry(r.minimum).or_insert(0) += 1;
            max_min = Some(max_min.map_or(r.minimum, |m: usize| m.max(r.minimum)));
            if r.minimum > s.cycle_count {
                discrepancies.push(Discrepancy {
                    index: i,
                    n: c.n(),
                    solver_cycles: s.cycle_count,
                    oracle_minimum: r.minimum,
                    reason: "oracle minimum exceeds solver cycle count".into(),
                });
            }
            if s.cycle_count > 4 {
                discrepancies.push(Discrepancy {
                    index: i,
                    n: c.n(),
                    solver_cycles: s.cycle_count,
                    oracle_minimum: r.minimum,
                    reason: "solver exceeded four cycles".into(),
                });
            }
            if r.minimum >= 4 {
                four_witnesses.push(write_witness(
                    &dir,
                    family_name(a.family),
                    i,
                    c,
                    &r.witness,
                )?);
            }
        }
        oracle_hist = Some(hist);
    }

    let wall_time = a.timings.then(|| {
        let total = summaries.iter().map(|s| s.micros).sum();
        WallTime {
            total_micros: total,
            min_micros: summaries.iter().map(|s| s.micros).min().unwrap_or(0),
            max_micros: summaries.iter().map(|s| s.micros).max().unwrap_or(0),
        }
    });

    let summary = ExperimentSummary {
        family: family_name(a.family).to_string(),
        n_min: a.n_min,
        n_max,
        count: a.count,
        seed: a.seed,
        instances: cs.len(),
        solver_cycle_histogram: solver_hist,
        oracle_histogram: oracle_hist,
        max_oracle_minimum: max_min,
        discrepancies,
        four_witnesses,
        wall_time,
    };
    println!("{}", serde_json::to_string(&summary).expect("serializable"));
    Ok(EXIT_OK)
}
