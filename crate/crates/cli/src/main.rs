//! `psp`: gap analysis and exhaustive scans for postage stamp sets.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stamp_gaps::analysis::{check_conjecture, classify_a};
use stamp_gaps::derivation::{build_graph, shared_parent_stats};
use stamp_gaps::propagation::classify_b;
use stamp_gaps::render::{hgap_table, parameter_line, render_gap_map, render_hgap_table};
use stamp_gaps::scanner::{self, record, Algorithm, Extreme, ScanJob, ScanOptions, ScanSummary};
use stamp_gaps::verify::{all_passed, verify_analysis};
use stamp_gaps::{Error, GapAnalysis, GapClass, StampSet};

const EXIT_FAILURE: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;
const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Parser)]
#[command(name = "psp", version, about = "Gap structure of postage stamp sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    A,
    B,
    Both,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::A => Algorithm::A,
            AlgoArg::B => Algorithm::B,
            AlgoArg::Both => Algorithm::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every value between n(h0-1) and (h0-1)a_k.
    Analyze {
        /// Denominations, e.g. 1,4,26,35
        set: String,
        #[arg(long, value_enum, default_value = "a")]
        algo: AlgoArg,
        /// Print the gap map.
        #[arg(long)]
        render: bool,
        /// Print every m-gap with all representations of its shifted value.
        #[arg(long)]
        table: bool,
        /// Print the derivation graph between m-gaps.
        #[arg(long, value_enum)]
        graph: Option<GraphFormat>,
        /// Report m-gaps that share a derived gap.
        #[arg(long)]
        shared: bool,
    },
    /// Examine every set of k denominations with the given h0.
    Scan {
        k: usize,
        h0: u32,
        /// Worker threads (default: available parallelism).
        #[arg(long, short)]
        jobs: Option<usize>,
        /// Violation records, one JSON object per line.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        #[arg(long, value_enum)]
        algo: Option<AlgoArg>,
        /// Restrict a_2 to `N` or `LO..HI`.
        #[arg(long, value_parser = parse_range)]
        a2: Option<RangeInclusive<u64>>,
        /// Restrict a_3 to `N` or `LO..HI`.
        #[arg(long, value_parser = parse_range)]
        a3: Option<RangeInclusive<u64>>,
    },
    /// Extremes and rise counts, from a violation file or a fresh scan.
    Stats {
        #[arg(long, conflicts_with_all = ["k", "h0"])]
        input: Option<PathBuf>,
        #[arg(requires = "h0")]
        k: Option<usize>,
        h0: Option<u32>,
        #[arg(long, short)]
        jobs: Option<usize>,
    },
    /// Check an analysis against direct computation and the structural
    /// theorems.
    Verify {
        set: String,
        /// Flip the class of this window value before checking.
        #[arg(long, value_name = "X")]
        inject_fault: Option<u64>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSet(_) | Error::UnsupportedJob(_) | Error::MalformedRecord { .. } => {
                EXIT_BAD_INPUT
            }
            Error::Disagreement { .. } => EXIT_DISAGREEMENT,
            _ => EXIT_FAILURE,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            set,
            algo,
            render,
            table,
            graph,
            shared,
        } => analyze(&set, algo.into(), render, table, graph, shared),
        Command::Scan {
            k,
            h0,
            jobs,
            out,
            checkpoint,
            resume,
            algo,
            a2,
            a3,
        } => {
            let prefix = (a2, a3);
            run_scan(k, h0, jobs, out, checkpoint, resume, algo, prefix)
        }
        Command::Stats { input, k, h0, jobs } => stats(input, k.zip(h0), jobs),
        Command::Verify { set, inject_fault } => verify(&set, inject_fault),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("psp: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_set(s: &str) -> Result<StampSet, Failure> {
    s.parse()
        .map_err(|e: Error| Failure::new(EXIT_BAD_INPUT, e.to_string()))
}

fn analyse_with(set: &StampSet, algo: Algorithm) -> Result<GapAnalysis, Failure> {
    Ok(match algo {
        Algorithm::A => classify_a(set),
        Algorithm::B => classify_b(set),
        Algorithm::Both => {
            let a = classify_a(set);
            let b = classify_b(set);
            if a != b {
                return Err(Error::Disagreement {
                    set: set.to_string(),
                    detail: scanner::describe_difference(&a, &b),
                }
                .into());
            }
            a
        }
    })
}

fn analyze(
    set: &str,
    algo: Algorithm,
    render: bool,
    table: bool,
    graph: Option<GraphFormat>,
    shared: bool,
) -> Result<String, Failure> {
    let set = parse_set(set)?;
    let a = analyse_with(&set, algo)?;
    let mut out = String::new();
    let _ = writeln!(out, "set {set}");
    let _ = writeln!(out, "{}", parameter_line(&a));
    let _ = writeln!(out, "delta {}", join(a.delta()));
    let rises = check_conjecture(a.delta(), a.h0);
    if !rises.is_empty() {
        let _ = writeln!(out, "rises at h = {}", join(&rises));
    }
    if render {
        out.push('\n');
        out.push_str(&render_gap_map(&a));
    }
    if table {
        out.push('\n');
        out.push_str(&render_hgap_table(&hgap_table(&a)));
    }
    if graph.is_some() || shared {
        let g = build_graph(&a);
        match graph {
            Some(GraphFormat::Text) => {
                out.push('\n');
                out.push_str(&g.to_text());
            }
            Some(GraphFormat::Dot) => {
                out.push('\n');
                out.push_str(&g.to_dot());
            }
            None => {}
        }
        if shared {
            out.push('\n');
            let report = shared_parent_stats(&g);
            for group in &report.groups {
                let _ = writeln!(
                    out,
                    "m={} sources {} -> {} distinct{}",
                    group.m,
                    join(&group.sources),
                    group.targets.len(),
                    if group.is_flagged() { " (shared)" } else { "" }
                );
            }
        }
    }
    Ok(out)
}

fn workers(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn scan_job(k: usize, h0: u32) -> Result<ScanJob, Failure> {
    if k < 4 {
        return Err(Failure::new(EXIT_BAD_INPUT, format!("k must be at least 4, got {k}")));
    }
    if h0 < 3 {
        return Err(Failure::new(EXIT_BAD_INPUT, format!("h0 must be at least 3, got {h0}")));
    }
    Ok(ScanJob::new(k, h0))
}

#[allow(clippy::too_many_arguments)]
fn run_scan(
    k: usize,
    h0: u32,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    checkpoint: Option<PathBuf>,
    resume: bool,
    algo: Option<AlgoArg>,
    prefix: (Option<RangeInclusive<u64>>, Option<RangeInclusive<u64>>),
) -> Result<String, Failure> {
    let mut job = scan_job(k, h0)?;
    if let Some(a) = algo {
        job.algorithm = a.into();
    }
    (job.a2, job.a3) = prefix;
    job.output = out;
    job.checkpoint = checkpoint;
    let opts = ScanOptions {
        workers: workers(jobs),
        resume,
        ..Default::default()
    };
    let report = scanner::scan(&job, &opts).map_err(|e| match e {
        Error::UnsupportedJob(_) | Error::Disagreement { .. } => Failure::from(e),
        other => Failure::new(EXIT_FAILURE, other.to_string()),
    })?;
    let mut text = format!("k={k} h0={h0} sets={}\n", report.summary.sets);
    for v in &report.violations {
        let _ = writeln!(
            text,
            "{} h1={} h2={} n0={} delta {} rises {}",
            v.set,
            v.h1,
            v.h2,
            v.n0,
            join(&v.delta),
            join(&v.rises)
        );
    }
    text.push_str(&summary_tables(&report.summary));
    let _ = writeln!(text, "{} violations", report.violations.len());
    Ok(text)
}

fn stats(
    input: Option<PathBuf>,
    params: Option<(usize, u32)>,
    jobs: Option<usize>,
) -> Result<String, Failure> {
    let summary = match (input, params) {
        (Some(path), _) => {
            let file = std::fs::File::open(&path).map_err(|e| {
                Failure::new(EXIT_BAD_INPUT, format!("cannot read {}: {e}", path.display()))
            })?;
            let records = record::read_records(std::io::BufReader::new(file)).map_err(|e| {
                Failure::new(EXIT_BAD_INPUT, format!("{}: {e}", path.display()))
            })?;
            ScanSummary::from_violations(&records)
        }
        (None, Some((k, h0))) => {
            let job = scan_job(k, h0)?;
            let opts = ScanOptions {
                workers: workers(jobs),
                ..Default::default()
            };
            scanner::scan(&job, &opts)?.summary
        }
        (None, None) => {
            return Err(Failure::new(
                EXIT_BAD_INPUT,
                "give either --input FILE or k and h0",
            ))
        }
    };
    Ok(summary_tables(&summary))
}

fn summary_tables(s: &ScanSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sets\t{}", s.sets);
    let _ = writeln!(out, "violations\t{}", s.violations);
    let _ = writeln!(out, "multiple rises\t{}", s.multi_rise);
    let _ = writeln!(out, "rise above one\t{}", s.steep_rise);
    let _ = writeln!(out, "h1 != h2\t{}", s.split_h1_h2);
    if s.fills > 0 {
        let _ = writeln!(out, "propagation fills\t{}\timprovements\t{}", s.fills, s.improvements);
    }
    extreme_table(&mut out, "highest h2", &s.max_h2);
    extreme_table(&mut out, "highest h2-h1", &s.max_spread);
    out
}

fn extreme_table(out: &mut String, title: &str, e: &Option<Extreme>) {
    let _ = writeln!(out, "\n{title}");
    let _ = writeln!(out, "value\tcount\th2\th1\tset");
    if let Some(e) = e {
        for w in &e.witnesses {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", e.value, e.count, w.h2, w.h1, w.set);
        }
    }
}

fn verify(set: &str, inject_fault: Option<u64>) -> Result<String, Failure> {
    let set = parse_set(set)?;
    let mut a = classify_a(&set);
    if let Some(x) = inject_fault {
        let flipped = match a.class(x) {
            Some(GapClass::PreFilled) => GapClass::Permanent,
            Some(_) => GapClass::PreFilled,
            None => {
                return Err(Failure::new(
                    EXIT_BAD_INPUT,
                    format!("{x} lies outside the window {:?}", a.window()),
                ))
            }
        };
        a = a.with_class(x, flipped).expect("inside window");
    }
    let checks = verify_analysis(&a);
    let mut out = format!("set {set}\n{}\n", parameter_line(&a));
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status}  {}", c.name);
        if !c.detail.is_empty() {
            let _ = write!(out, ": {}", c.detail);
        }
        out.push('\n');
    }
    if all_passed(&checks) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::new(EXIT_VERIFY_FAILED, "verification failed"))
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
