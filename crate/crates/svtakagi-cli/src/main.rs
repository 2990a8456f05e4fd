//! `svtakagi` — scenario verification, Takagi-type series sampling, and the
//! built-in suite.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error, 3
//! environment or capability error.

use clap::{Parser, Subcommand};
use std::fs;
use std::path::{Path, PathBuf};
use svtakagi_core::rational::{csv_cell, format_rational};
use svtakagi_core::{
    builtin_scenarios, parse_rational, run_scenario, takagi_alpha, takagi_alpha_dyadic,
    weakened_margin, BoundedValue, DyadicRational, Error, Rational, Scenario,
    VerificationReport,
};

#[derive(Parser)]
#[command(name = "svtakagi", version, about = "Exact verification of convexity-type inclusions for set-valued maps with Takagi-type error terms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all checks of one scenario file and write the JSON report.
    Verify {
        /// Scenario JSON file
        #[arg(long)]
        scenario: PathBuf,
        /// Report output path
        #[arg(long)]
        out: PathBuf,
        /// Override the scenario's slack radius (exact rational)
        #[arg(long)]
        slack: Option<String>,
        /// Override the scenario's dyadic depth
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Sample `T_alpha` on a uniform rational grid and write CSV enclosures.
    Takagi {
        /// Series order (natural number; exact evaluation for 1 and 2)
        #[arg(long)]
        alpha: u32,
        /// Left endpoint (exact rational)
        #[arg(long)]
        from: String,
        /// Right endpoint (exact rational)
        #[arg(long)]
        to: String,
        /// Number of grid points (at least 2)
        #[arg(long)]
        steps: u64,
        /// Tail bound for non-dyadic points (positive rational)
        #[arg(long)]
        tail: String,
        /// CSV output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every built-in scenario and write one report each plus an index.
    Suite {
        /// Output directory (created if its parent exists)
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(code) = init_threads() {
        return code;
    }
    match cli.command {
        Command::Verify {
            scenario,
            out,
            slack,
            depth,
        } => cmd_verify(&scenario, &out, slack, depth),
        Command::Takagi {
            alpha,
            from,
            to,
            steps,
            tail,
            out,
        } => cmd_takagi(alpha, &from, &to, steps, &tail, &out),
        Command::Suite { out } => cmd_suite(&out),
    }
}

/// `SVTAKAGI_THREADS` caps the rayon pool; 0 or unset means auto.
fn init_threads() -> Option<i32> {
    let raw = match std::env::var("SVTAKAGI_THREADS") {
        Ok(v) => v,
        Err(_) => return None,
    };
    let n: usize = match raw.trim().parse() {
        Ok(n) => n,
        Err(_) => {
            eprintln!("error: SVTAKAGI_THREADS must be a nonnegative integer, got {raw:?}");
            return Some(2);
        }
    };
    if n == 0 {
        return None;
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .expect("thread pool initialized once at startup");
    None
}

/// Capability and dimension problems are environment errors; everything
/// else wrong with a scenario is an input error.
fn classify(e: &Error) -> i32 {
    if e.is_capability() || matches!(e, Error::DimensionMismatch { .. } | Error::DimensionLimit { .. }) {
        3
    } else {
        2
    }
}

fn print_summary(report: &VerificationReport) {
    println!(
        "{}: pass={} fail={} skipped={}",
        report.scenario, report.summary.pass, report.summary.fail, report.summary.skipped
    );
}

fn cmd_verify(path: &Path, out: &Path, slack: Option<String>, depth: Option<u32>) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let mut scenario: Scenario = match serde_json::from_str(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: invalid scenario {}: {e}", path.display());
            return 2;
        }
    };
    if let Some(s) = slack {
        scenario.slack = s;
    }
    if let Some(d) = depth {
        scenario.depth = d;
    }
    let report = match run_scenario(&scenario) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return classify(&e);
        }
    };
    if let Err(e) = fs::write(out, report.to_json()) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return 3;
    }
    print_summary(&report);
    if scenario.probe_weakened {
        report_weakened_margin(&scenario);
    }
    if report.passed() {
        0
    } else {
        1
    }
}

/// Diagnostic only: measures how far the conclusions are from holding once
/// `b` is replaced by the zero map.  Goes to stderr so report bytes stay
/// byte-identical with and without the probe.
fn report_weakened_margin(scenario: &Scenario) {
    match weakened_margin(scenario, 12) {
        Ok(Some(bracket)) => match bracket.fails_at {
            Some(lo) => eprintln!(
                "weakened-probe margin: passes at slack {} (fails at {})",
                format_rational(&bracket.passes_at),
                format_rational(&lo)
            ),
            None => eprintln!(
                "weakened-probe margin: conclusions hold exactly even with b dropped"
            ),
        },
        Ok(None) => eprintln!(
            "weakened-probe margin: unbounded (no slack radius up to 2^16 repairs the weakened conclusions)"
        ),
        Err(e) => eprintln!("notice: weakened-probe margin unavailable: {e}"),
    }
}

fn cmd_takagi(alpha: u32, from: &str, to: &str, steps: u64, tail: &str, out: &Path) -> i32 {
    let parse = |label: &str, text: &str| -> Result<Rational, i32> {
        parse_rational(text).map_err(|e| {
            eprintln!("error: {label}: {e}");
            2
        })
    };
    let from = match parse("--from", from) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let to = match parse("--to", to) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let tail = match parse("--tail", tail) {
        Ok(v) => v,
        Err(c) => return c,
    };
    if steps < 2 {
        eprintln!("error: --steps must be at least 2");
        return 2;
    }
    if from > to {
        eprintln!("error: --from exceeds --to");
        return 2;
    }
    if alpha == 0 {
        eprintln!("error: {}", Error::ZeroAlpha);
        return 2;
    }
    let exact_alpha = alpha == 1 || alpha == 2;
    if !exact_alpha {
        eprintln!(
            "notice: alpha = {alpha} has no exact dyadic evaluation; \
             emitting interval enclosures for every grid point"
        );
    }

    let span = &to - &from;
    let denominator = Rational::from_integer((steps - 1).into());
    let mut csv = String::from("t,value_lower,value_upper\n");
    for i in 0..steps {
        let offset = &span * Rational::from_integer(i.into()) / &denominator;
        let t = &from + offset;
        let value = match evaluate_point(alpha, exact_alpha, &t, &tail) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {e}");
                return classify(&e);
            }
        };
        csv.push_str(&format!(
            "{},{},{}\n",
            csv_cell(&t),
            csv_cell(value.lower()),
            csv_cell(value.upper())
        ));
    }
    if let Err(e) = fs::write(out, csv) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return 3;
    }
    0
}

fn evaluate_point(
    alpha: u32,
    exact_alpha: bool,
    t: &Rational,
    tail: &Rational,
) -> svtakagi_core::Result<BoundedValue> {
    if exact_alpha {
        match DyadicRational::from_rational(t) {
            Ok(d) => return Ok(BoundedValue::exact(takagi_alpha_dyadic(&d, alpha)?)),
            Err(Error::NotDyadic { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    takagi_alpha(t, alpha, tail)
}

fn cmd_suite(out: &Path) -> i32 {
    match fs::create_dir(out) {
        Ok(()) => {}
        Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {}
        Err(e) => {
            eprintln!("error: cannot create {}: {e}", out.display());
            return 3;
        }
    }
    let mut index = Vec::new();
    let mut all_passed = true;
    for scenario in builtin_scenarios() {
        let report = match run_scenario(&scenario) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: scenario {}: {e}", scenario.id);
                return classify(&e);
            }
        };
        let file = format!("{}.json", scenario.id);
        if let Err(e) = fs::write(out.join(&file), report.to_json()) {
            eprintln!("error: cannot write {}: {e}", out.join(&file).display());
            return 3;
        }
        print_summary(&report);
        all_passed &= report.passed();
        index.push(serde_json::json!({
            "id": report.scenario,
            "file": file,
            "summary": report.summary,
            "passed": report.passed(),
        }));
    }
    let mut index_text =
        serde_json::to_string_pretty(&serde_json::json!({ "scenarios": index }))
            .expect("index serialization");
    index_text.push('\n');
    if let Err(e) = fs::write(out.join("index.json"), index_text) {
        eprintln!("error: cannot write {}: {e}", out.join("index.json").display());
        return 3;
    }
    if all_passed {
        0
    } else {
        1
    }
}
