//! `degsq`: compute `f(n, m)`, its bounds and extremal graphs, and sweep
//! the bound inequalities over parameter grids.
//!
//! Exit codes: 0 success, 1 usage error, 2 a check or comparison failed,
//! 3 I/O error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use degsq_core::display::{self, DISPLAY_DIGITS};
use degsq_core::exact::ClosedForms;
use degsq_core::verify::{self, Check, MPolicy, SweepConfig};
use degsq_core::{graph, oracle, BoundReport, Error, Surd};

#[derive(Parser)]
#[command(name = "degsq", version, about = "Maximum sum of squared degrees of graphs with n vertices and m edges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the decompositions and the closed forms C, S and f.
    Exact { n: u64, m: u64 },
    /// Print f together with every bound and its range flags.
    Bounds {
        n: u64,
        m: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write an extremal graph in edge-list format.
    Construct {
        n: u64,
        m: u64,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare exhaustive enumeration with the closed form.
    Oracle {
        n: u64,
        #[arg(long)]
        m: Option<u64>,
        /// Permit n = 8 (2^28 edge subsets).
        #[arg(long)]
        allow_large: bool,
    },
    /// Run the selected checks over a grid of (n, m).
    Verify {
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long, default_value_t = 100)]
        n_max: u64,
        /// Comma-separated edge counts.
        #[arg(long, value_delimiter = ',', conflicts_with = "stride")]
        m: Option<Vec<u64>>,
        #[arg(long)]
        stride: Option<u64>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: String,
        /// Let the oracle check run at n = 8.
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Qc,
    Qs,
    Extremal,
}

enum Failure {
    Usage(String),
    Check(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Check(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(msg) => Failure::Io(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn io_err(context: &str) -> impl Fn(io::Error) -> Failure + '_ {
    move |e| Failure::Io(format!("{context}: {e}"))
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Check(msg) => eprintln!("{msg}"),
                Failure::Io(msg) => eprintln!("I/O error: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Exact { n, m } => cmd_exact(n, m),
        Command::Bounds { n, m, json } => cmd_bounds(n, m, json),
        Command::Construct { n, m, kind, out } => cmd_construct(n, m, kind, out),
        Command::Oracle { n, m, allow_large } => cmd_oracle(n, m, allow_large),
        Command::Verify {
            n_min,
            n_max,
            m,
            stride,
            checks,
            out,
            format,
            allow_large,
        } => {
            let m_policy = match (m, stride) {
                (Some(list), _) => MPolicy::Explicit(list),
                (None, Some(k)) => MPolicy::Stride(k),
                (None, None) => MPolicy::All,
            };
            let config = SweepConfig {
                n_min,
                n_max,
                m_policy,
                checks: Check::parse_list(&checks)?,
                format: format.parse()?,
                allow_large_oracle: allow_large,
            };
            cmd_verify(&config, out)
        }
    }
}

fn cmd_exact(n: u64, m: u64) -> Outcome {
    let forms = ClosedForms::new(n, m)?;
    println!(
        "n={n} m={m} r={} q={} s={} t={} C={} S={} f={} winner={}",
        forms.tri.r,
        forms.tri.q,
        forms.co.s,
        forms.co.t,
        forms.c,
        forms.s,
        forms.f(),
        forms.winner().as_str()
    );
    Ok(())
}

fn surd_line(name: &str, x: &Surd) -> String {
    format!("{name}={} ({x})", x.to_display(DISPLAY_DIGITS))
}

fn cmd_bounds(n: u64, m: u64, json: bool) -> Outcome {
    let report = BoundReport::new(n, m)?;
    if json {
        println!("{:#}", verify::report_json(&report));
        return Ok(());
    }
    let forms = &report.forms;
    println!("n={n} m={m}");
    println!(
        "C={} S={} f={} winner={} subtle={}",
        forms.c,
        forms.s,
        forms.f(),
        forms.winner().as_str(),
        u8::from(forms.is_subtle())
    );
    match &report.d {
        Some(d) => println!(
            "D={} ({}/{})",
            display::rational(d, DISPLAY_DIGITS),
            d.numer(),
            d.denom()
        ),
        None => println!("D=undefined (n <= 1)"),
    }
    println!("{} branch={}", surd_line("F", &report.f_bound), report.f_branch.as_str());
    println!("{}", surd_line("th1_lower", &report.th1.lower));
    println!("{}", surd_line("th1_upper", &report.th1.upper));
    println!(
        "th1_applies={} bo2_range={} bo4_range={}",
        report.th1.applies, report.bo2_range, report.bo4_range
    );
    if let Some(r) = report.ratio_display() {
        println!("ratio_100D_over_f={r}");
    }
    Ok(())
}

fn cmd_construct(n: u64, m: u64, kind: Kind, out: Option<PathBuf>) -> Outcome {
    let forms = ClosedForms::new(n, m)?;
    let (g, label, expected) = match kind {
        Kind::Qc => (graph::quasi_complete(n, m)?, "C", &forms.c),
        Kind::Qs => (graph::quasi_star(n, m)?, "S", &forms.s),
        Kind::Extremal => (graph::extremal_graph(n, m)?, "f", forms.f()),
    };
    let text = g.to_edge_list();
    let sumsq = g.sum_sq_degrees();
    let verdict = if &sumsq == expected { "match" } else { "MISMATCH" };
    let line = format!("sumsq={sumsq} {label}={expected} {verdict}");
    match out {
        Some(path) => {
            std::fs::write(&path, text).map_err(io_err(&path.display().to_string()))?;
            println!("{line}");
        }
        None => {
            print!("{text}");
            eprintln!("{line}");
        }
    }
    if verdict == "match" {
        Ok(())
    } else {
        Err(Failure::Check(line))
    }
}

fn cmd_oracle(n: u64, m: Option<u64>, allow_large: bool) -> Outcome {
    if n == oracle::LARGE_CAP && allow_large {
        eprintln!("warning: n=8 enumerates 2^28 edge subsets; this can take minutes");
    }
    let results = match m {
        Some(m) => vec![oracle::brute_force_max(n, m, allow_large)?],
        None => oracle::brute_force_sweep(n, allow_large)?,
    };
    let mut mismatches = 0;
    for r in &results {
        let f = degsq_core::exact::f_exact(n, r.m)?;
        let verdict = if f == r.max_value { "match" } else { "MISMATCH" };
        if f != r.max_value {
            mismatches += 1;
        }
        println!("n={n} m={} oracle={} f={f} {verdict}", r.m, r.max_value);
    }
    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{mismatches} oracle mismatches")))
    }
}

fn cmd_verify(config: &SweepConfig, out: Option<PathBuf>) -> Outcome {
    config.validate()?;
    let (summary, violations) = match &out {
        Some(path) => {
            let file = File::create(path).map_err(io_err(&path.display().to_string()))?;
            let mut w = BufWriter::new(file);
            verify::write_report(config, &mut w)?
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            let res = verify::write_report(config, &mut w)?;
            w.flush().map_err(io_err("stdout"))?;
            res
        }
    };
    for v in violations.iter().take(20) {
        eprintln!("{v}");
    }
    if violations.len() > 20 {
        eprintln!("... {} more", violations.len() - 20);
    }
    for (check, pass, na, fail) in &summary.per_check {
        eprintln!("{check}: pass={pass} na={na} fail={fail}");
    }
    let line = format!("rows={} violations={}", summary.rows, summary.violations);
    if summary.violations == 0 {
        eprintln!("{line}");
        Ok(())
    } else {
        Err(Failure::Check(line))
    }
}
