//! Grid sweeps over `(n, m)` and their CSV/JSON reports.
//!
//! Rows for one `n` are computed in parallel and handed to the sink in `m`
//! order, so output is deterministic and only one `n` is held in memory.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bounds::{check_prop_pr0, BoundReport, Quantity, Verdict};
use crate::display::{self, DISPLAY_DIGITS};
use crate::error::{Error, Result};
use crate::exact::max_edges;
use crate::oracle;
use crate::surd::Surd;

/// Largest `n` swept over every `m` without an explicit stride.
pub const FULL_SWEEP_LIMIT: u64 = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Bo1,
    Bo2,
    Bo3,
    Bo4,
    P1,
    Pro1,
    In5,
    Pr0,
    Sc,
    Complement,
    Oracle,
    /// `D > 1.06 f`; only meaningful near `m = n^2/4` for large `n`, so it
    /// is not part of `all`.
    Ratio106,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Bo1,
        Check::Bo2,
        Check::Bo3,
        Check::Bo4,
        Check::P1,
        Check::Pro1,
        Check::In5,
        Check::Pr0,
        Check::Sc,
        Check::Complement,
        Check::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bo1 => "bo1",
            Check::Bo2 => "bo2",
            Check::Bo3 => "bo3",
            Check::Bo4 => "bo4",
            Check::P1 => "p1",
            Check::Pro1 => "pro1",
            Check::In5 => "in5",
            Check::Pr0 => "pr0",
            Check::Sc => "sc",
            Check::Complement => "complement",
            Check::Oracle => "oracle",
            Check::Ratio106 => "ratio106",
        }
    }

    /// Parses `all` or a comma-separated list of names. The result is sorted
    /// and deduplicated.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .iter()
            .chain(&[Check::Ratio106])
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MPolicy {
    All,
    /// `m = 0, k, 2k, ...` up to `binom(n,2)`.
    Stride(u64),
    /// Values above `binom(n,2)` are skipped for that `n`.
    Explicit(Vec<u64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_min: u64,
    pub n_max: u64,
    pub m_policy: MPolicy,
    pub checks: Vec<Check>,
    pub format: Format,
    /// Lets the oracle check run at `n = 8`.
    pub allow_large_oracle: bool,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 1 {
            return Err(Error::Config("n-min must be at least 1".into()));
        }
        if self.n_max < self.n_min {
            return Err(Error::Config(format!(
                "n-max ({}) is below n-min ({})",
                self.n_max, self.n_min
            )));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        match &self.m_policy {
            MPolicy::All if self.n_max > FULL_SWEEP_LIMIT => Err(Error::Config(format!(
                "n-max above {FULL_SWEEP_LIMIT} needs --stride or --m"
            ))),
            MPolicy::Stride(0) => Err(Error::Config("stride must be positive".into())),
            MPolicy::Explicit(v) if v.is_empty() => Err(Error::Config("empty m list".into())),
            _ => Ok(()),
        }
    }

    fn edge_counts(&self, n: u64) -> Vec<u64> {
        let top = max_edges(n) as u64;
        match &self.m_policy {
            MPolicy::All => (0..=top).collect(),
            MPolicy::Stride(k) => (0..=top).step_by(*k as usize).collect(),
            MPolicy::Explicit(v) => {
                let mut v: Vec<u64> = v.iter().copied().filter(|&m| m <= top).collect();
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    fn oracle_cap(&self) -> u64 {
        if self.allow_large_oracle {
            oracle::LARGE_CAP
        } else {
            oracle::DEFAULT_CAP
        }
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub report: BoundReport,
    pub verdicts: Vec<(Check, Verdict)>,
}

impl Row {
    pub fn violations(&self) -> impl Iterator<Item = ViolationRecord> + '_ {
        self.verdicts.iter().filter_map(|(check, v)| match v {
            Verdict::Violated(v) => Some(ViolationRecord {
                check: *check,
                n: self.report.n(),
                m: self.report.m(),
                relation: v.relation,
                lhs: v.lhs.clone(),
                rhs: v.rhs.clone(),
            }),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ViolationRecord {
    pub check: Check,
    pub n: u64,
    pub m: u64,
    pub relation: &'static str,
    pub lhs: Quantity,
    pub rhs: Quantity,
}

impl ViolationRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check.name(),
            "n": self.n,
            "m": self.m,
            "relation": self.relation,
            "lhs": { "display": self.lhs.display(), "exact": self.lhs.exact() },
            "rhs": { "display": self.rhs.display(), "exact": self.rhs.exact() },
        })
    }
}

impl fmt::Display for ViolationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated at n={} m={}: {} with lhs={} rhs={}",
            self.check,
            self.n,
            self.m,
            self.relation,
            self.lhs.exact(),
            self.rhs.exact()
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub rows: u64,
    pub violations: u64,
    /// `(check, pass, na, fail)` in check order.
    pub per_check: Vec<(Check, u64, u64, u64)>,
}

impl Summary {
    fn record(&mut self, row: &Row) {
        self.rows += 1;
        for (i, (check, v)) in row.verdicts.iter().enumerate() {
            if self.per_check.len() <= i {
                self.per_check.push((*check, 0, 0, 0));
            }
            let slot = &mut self.per_check[i];
            match v {
                Verdict::Holds => slot.1 += 1,
                Verdict::NotApplicable => slot.2 += 1,
                Verdict::Violated(_) => {
                    slot.3 += 1;
                    self.violations += 1;
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let checks: serde_json::Map<String, Value> = self
            .per_check
            .iter()
            .map(|(c, p, na, f)| (c.name().to_string(), json!({ "pass": p, "na": na, "fail": f })))
            .collect();
        json!({ "rows": self.rows, "violations": self.violations, "checks": checks })
    }
}

fn evaluate(report: BoundReport, checks: &[Check], oracle_max: Option<&BigInt>) -> Row {
    let verdicts = checks
        .iter()
        .map(|&check| {
            let v = match check {
                Check::Bo1 => report.bo1(),
                Check::Bo2 => report.bo2(),
                Check::Bo3 => report.bo3(),
                Check::Bo4 => report.bo4(),
                Check::P1 => report.prop2(),
                Check::Pro1 => report.lemma_pro1(),
                Check::In5 => report.lemma_pro3(),
                Check::Pr0 => {
                    let r: u64 = (&report.forms.tri.r).try_into().unwrap_or(u64::MAX);
                    check_prop_pr0(r)
                }
                Check::Sc => report.identity_sc(),
                Check::Complement => report.identity_complement(),
                Check::Oracle => match oracle_max {
                    None => Verdict::NotApplicable,
                    Some(max) if max == report.f() => Verdict::Holds,
                    Some(max) => Verdict::Violated(Box::new(crate::bounds::Violation {
                        relation: "lhs == rhs",
                        lhs: Quantity::Integer(max.clone()),
                        rhs: Quantity::Integer(report.f().clone()),
                    })),
                },
                Check::Ratio106 => report.ratio_exceeds(106, 100),
            };
            (check, v)
        })
        .collect();
    Row { report, verdicts }
}

/// Runs every selected check over the grid, feeding rows to `sink` in
/// `(n, m)` order.
pub fn run_sweep<F>(config: &SweepConfig, mut sink: F) -> Result<Summary>
where
    F: FnMut(&Row) -> Result<()>,
{
    config.validate()?;
    let mut summary = Summary::default();
    let wants_oracle = config.checks.contains(&Check::Oracle);
    for n in config.n_min..=config.n_max {
        let oracle_values: Option<Vec<BigInt>> = (wants_oracle && n <= config.oracle_cap())
            .then(|| oracle::brute_force_sweep(n, config.allow_large_oracle))
            .transpose()?
            .map(|v| v.into_iter().map(|r| r.max_value).collect());
        let rows: Vec<Row> = config
            .edge_counts(n)
            .into_par_iter()
            .map(|m| {
                let report = BoundReport::new(n, m)?;
                let max = oracle_values.as_ref().map(|v| &v[m as usize]);
                Ok(evaluate(report, &config.checks, max))
            })
            .collect::<Result<_>>()?;
        for row in &rows {
            summary.record(row);
            sink(row)?;
        }
    }
    Ok(summary)
}

/// Header line (no trailing newline) for a CSV sweep with these checks.
pub fn csv_header(checks: &[Check]) -> String {
    let mut cols: Vec<&str> = vec![
        "n",
        "m",
        "C",
        "S",
        "f",
        "winner",
        "D_num",
        "D_den",
        "F_display",
        "th1_lo_display",
        "th1_hi_display",
    ];
    cols.extend(checks.iter().map(|c| c.name()));
    cols.push("subtle");
    if checks.contains(&Check::Ratio106) {
        cols.push("ratio_display");
    }
    cols.join(",")
}

pub fn csv_row(row: &Row) -> String {
    let r = &row.report;
    let (d_num, d_den) = match &r.d {
        Some(d) => (d.numer().to_string(), d.denom().to_string()),
        None => (String::new(), String::new()),
    };
    let mut cols = vec![
        r.n().to_string(),
        r.m().to_string(),
        r.forms.c.to_string(),
        r.forms.s.to_string(),
        r.f().to_string(),
        r.forms.winner().as_str().to_string(),
        d_num,
        d_den,
        r.f_bound.to_display(DISPLAY_DIGITS),
        r.th1.lower.to_display(DISPLAY_DIGITS),
        r.th1.upper.to_display(DISPLAY_DIGITS),
    ];
    cols.extend(row.verdicts.iter().map(|(_, v)| v.as_str().to_string()));
    cols.push(if r.forms.is_subtle() { "1" } else { "0" }.to_string());
    if row.verdicts.iter().any(|(c, _)| *c == Check::Ratio106) {
        cols.push(r.ratio_display().unwrap_or_default());
    }
    cols.join(",")
}

fn surd_json(x: &Surd) -> Value {
    json!({
        "p": x.p().to_string(),
        "c": x.c().to_string(),
        "k": x.k().to_string(),
        "display": x.to_display(DISPLAY_DIGITS),
    })
}

/// Full exact report for one `(n, m)`.
pub fn report_json(r: &BoundReport) -> Value {
    let forms = &r.forms;
    json!({
        "n": r.n(),
        "m": r.m(),
        "r": forms.tri.r.to_string(),
        "q": forms.tri.q.to_string(),
        "s": forms.co.s.to_string(),
        "t": forms.co.t.to_string(),
        "C": forms.c.to_string(),
        "S": forms.s.to_string(),
        "f": r.f().to_string(),
        "winner": forms.winner().as_str(),
        "subtle": forms.is_subtle(),
        "D": r.d.as_ref().map(|d| json!({
            "num": d.numer().to_string(),
            "den": d.denom().to_string(),
            "display": display::rational(d, DISPLAY_DIGITS),
        })),
        "F": surd_json(&r.f_bound),
        "F_branch": r.f_branch.as_str(),
        "th1_lower": surd_json(&r.th1.lower),
        "th1_upper": surd_json(&r.th1.upper),
        "th1_applies": r.th1.applies,
        "bo2_range": r.bo2_range,
        "bo4_range": r.bo4_range,
        "ratio_display": r.ratio_display(),
    })
}

pub fn row_json(row: &Row) -> Value {
    let mut v = report_json(&row.report);
    let checks: serde_json::Map<String, Value> = row
        .verdicts
        .iter()
        .map(|(c, v)| (c.name().to_string(), Value::from(v.as_str())))
        .collect();
    v["checks"] = Value::Object(checks);
    v
}

/// Runs the sweep and writes the report in the configured format. Returns
/// the summary and every violation found.
pub fn write_report<W: Write>(config: &SweepConfig, out: &mut W) -> Result<(Summary, Vec<ViolationRecord>)> {
    config.validate()?;
    let mut violations = Vec::new();
    let mut io_err: Option<io::Error> = None;
    let mut first = true;
    let mut emit = |out: &mut W, row: &Row| -> io::Result<()> {
        match config.format {
            Format::Csv => writeln!(out, "{}", csv_row(row)),
            Format::Json => {
                let sep = if first { "" } else { "," };
                first = false;
                write!(out, "{sep}\n{}", row_json(row))
            }
        }
    };
    let head = match config.format {
        Format::Csv => writeln!(out, "{}", csv_header(&config.checks)),
        Format::Json => write!(out, "{{\"rows\":["),
    };
    if let Err(e) = head {
        return Err(io_failure(e));
    }
    let summary = run_sweep(config, |row| {
        violations.extend(row.violations());
        if io_err.is_none() {
            if let Err(e) = emit(out, row) {
                io_err = Some(e);
            }
        }
        Ok(())
    })?;
    if let Some(e) = io_err {
        return Err(io_failure(e));
    }
    if config.format == Format::Json {
        let tail: Vec<Value> = violations.iter().map(ViolationRecord::to_json).collect();
        write!(
            out,
            "\n],\"violations\":{},\"summary\":{}}}\n",
            Value::Array(tail),
            summary.to_json()
        )
        .map_err(io_failure)?;
    }
    out.flush().map_err(io_failure)?;
    Ok((summary, violations))
}

fn io_failure(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n_min: u64, n_max: u64, checks: &str) -> SweepConfig {
        SweepConfig {
            n_min,
            n_max,
            m_policy: MPolicy::All,
            checks: Check::parse_list(checks).unwrap(),
            format: Format::Csv,
            allow_large_oracle: false,
        }
    }

    #[test]
    fn parse_checks() {
        assert_eq!(Check::parse_list("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(
            Check::parse_list("sc,bo1,bo1").unwrap(),
            vec![Check::Bo1, Check::Sc]
        );
        assert_eq!(Check::parse_list("ratio106").unwrap(), vec![Check::Ratio106]);
        assert!(Check::parse_list("bogus").is_err());
        assert!(Check::parse_list("").is_err());
    }

    #[test]
    fn config_validation() {
        assert!(config(1, 0, "all").validate().is_err());
        assert!(config(0, 3, "all").validate().is_err());
        assert!(config(1, 301, "all").validate().is_err());
        let mut c = config(1, 301, "all");
        c.m_policy = MPolicy::Stride(1000);
        assert!(c.validate().is_ok());
        c.m_policy = MPolicy::Stride(0);
        assert!(c.validate().is_err());
        c.m_policy = MPolicy::Explicit(vec![]);
        assert!(c.validate().is_err());
    }

    #[test]
    fn edge_count_policies() {
        let mut c = config(1, 5, "sc");
        assert_eq!(c.edge_counts(4), (0..=6).collect::<Vec<_>>());
        c.m_policy = MPolicy::Stride(4);
        assert_eq!(c.edge_counts(5), vec![0, 4, 8]);
        c.m_policy = MPolicy::Explicit(vec![7, 2, 2, 40]);
        assert_eq!(c.edge_counts(5), vec![2, 7]);
        assert_eq!(c.edge_counts(3), vec![2]);
    }

    #[test]
    fn small_sweep_is_clean() {
        let mut rows = 0;
        let summary = run_sweep(&config(1, 5, "all"), |_| {
            rows += 1;
            Ok(())
        })
        .unwrap();
        let expected: u64 = (1..=5u64).map(|n| max_edges(n) as u64 + 1).sum();
        assert_eq!(summary.rows, expected);
        assert_eq!(rows, expected);
        assert_eq!(summary.violations, 0);
    }

    #[test]
    fn bo3_lower_half_fails_for_sparse_graphs() {
        // F - 4m <= f breaks from n = 6 on: at (6, 1), F - 4 = 34^{3/2} - 196 > 2.
        let mut found = Vec::new();
        let summary = run_sweep(&config(1, 12, "all"), |row| {
            found.extend(row.violations());
            Ok(())
        })
        .unwrap();
        assert_eq!(summary.violations as usize, found.len());
        assert!(found.iter().all(|v| v.check == Check::Bo3));
        assert_eq!((found[0].n, found[0].m), (6, 1));
        assert_eq!(found[0].lhs.exact(), "-196 + 1*sqrt(39304)");
        assert_eq!(found[0].rhs.exact(), "2");
    }

    #[test]
    fn csv_row_shape() {
        let c = config(5, 5, "all");
        let mut lines = Vec::new();
        run_sweep(&c, |row| {
            lines.push(csv_row(row));
            Ok(())
        })
        .unwrap();
        assert_eq!(
            lines[6],
            "5,6,36,34,36,C,36,1,41.8722,24,36,pass,na,pass,na,pass,pass,pass,pass,pass,pass,pass,1"
        );
        let header = csv_header(&c.checks);
        assert_eq!(
            header.split(',').count(),
            lines[6].split(',').count(),
            "header and row widths differ"
        );
    }

    #[test]
    fn ratio_row() {
        let c = SweepConfig {
            m_policy: MPolicy::Explicit(vec![250000]),
            ..config(1000, 1000, "ratio106")
        };
        let mut line = String::new();
        let summary = run_sweep(&c, |row| {
            line = csv_row(row);
            Ok(())
        })
        .unwrap();
        assert_eq!(summary.violations, 0);
        assert!(line.ends_with(",pass,1,106.067"), "{line}");
    }

    #[test]
    fn json_report_parses() {
        let mut c = config(3, 4, "all");
        c.format = Format::Json;
        let mut buf = Vec::new();
        let (summary, violations) = write_report(&c, &mut buf).unwrap();
        assert!(violations.is_empty());
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len() as u64, summary.rows);
        assert_eq!(v["summary"]["violations"], 0);
        assert_eq!(v["rows"][3]["f"], "12");
        assert_eq!(v["rows"][3]["checks"]["oracle"], "pass");
    }

    #[test]
    fn violation_record_json() {
        let rec = ViolationRecord {
            check: Check::Bo3,
            n: 5,
            m: 6,
            relation: "lhs <= rhs",
            lhs: Quantity::Integer(BigInt::from(50)),
            rhs: Quantity::Surd(Surd::new(BigInt::from(-5), BigInt::from(1), BigInt::from(2197)).unwrap()),
        };
        let v = rec.to_json();
        assert_eq!(v["rhs"]["exact"], "-5 + 1*sqrt(2197)");
        assert_eq!(v["rhs"]["display"], "41.8722");
        assert!(rec.to_string().starts_with("bo3 violated at n=5 m=6"));
    }
}
