//! Text, JSON and CSV rendering of the library's result types.
//!
//! JSON keys follow struct field order. CSV output is a header row followed
//! by one row per cell, instance or check.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{DoVerdict, RuleMatch};
use crate::dickson::DicksonKind;
use crate::error::{Error, Result};
use crate::verify::{IdentityReport, SurveyRow, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

/// A constructed polynomial together with the query that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generated {
    pub kind: DicksonKind,
    pub p: u64,
    pub n: u64,
    pub d: u64,
    pub polynomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checked {
    pub kind: DicksonKind,
    pub p: u64,
    pub n: u64,
    pub d: u64,
    pub polynomial: String,
    pub verdict: DoVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub kind: DicksonKind,
    pub p: u64,
    pub e_list: Vec<u32>,
    pub n_max: u64,
    pub d_max: u64,
    pub rows: Vec<SurveyRow>,
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<R, I>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let io = |e: csv::Error| Error::InvalidArgument(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row.into_iter().collect::<Vec<_>>())
            .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn render_generated(g: &Generated, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(format!("{}\n", g.polynomial)),
        Format::Json => json(g),
        Format::Csv => csv_rows(
            &["kind", "p", "n", "d", "polynomial"],
            [[
                g.kind.to_string(),
                g.p.to_string(),
                g.n.to_string(),
                g.d.to_string(),
                g.polynomial.clone(),
            ]],
        ),
    }
}

fn witness_list(v: &DoVerdict) -> String {
    v.witnesses
        .iter()
        .map(|w| format!("{}=p^{}+p^{}", w.exponent, w.i, w.j))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_checked(c: &Checked, format: Format) -> Result<String> {
    let v = &c.verdict;
    match format {
        Format::Text => {
            let mut s = format!("{}\n", c.polynomial);
            if v.trivially_zero {
                s.push_str("DO (zero polynomial)\n");
            } else if v.is_do {
                let _ = writeln!(s, "DO, witnesses {}", witness_list(v).replace(';', ", "));
            } else {
                let _ = writeln!(s, "not DO, failing exponent {}", opt(&v.failing_exponent));
            }
            Ok(s)
        }
        Format::Json => json(c),
        Format::Csv => csv_rows(
            &[
                "kind",
                "p",
                "n",
                "d",
                "is_do",
                "trivially_zero",
                "failing_exponent",
                "witnesses",
            ],
            [[
                c.kind.to_string(),
                c.p.to_string(),
                c.n.to_string(),
                c.d.to_string(),
                v.is_do.to_string(),
                v.trivially_zero.to_string(),
                opt(&v.failing_exponent),
                witness_list(v),
            ]],
        ),
    }
}

pub fn render_match(r: &RuleMatch, format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let params = format!(
                "n0={} m={} d0={} k={}{}",
                r.n0,
                r.m,
                r.d0,
                r.k,
                r.pattern_exponent
                    .map(|a| format!(" exponent={a}"))
                    .unwrap_or_default()
            );
            Ok(match r.rule_id.filter(|_| r.matched) {
                Some(rule) => format!("matched, rule {rule} ({params})\n"),
                None => format!("not matched ({params})\n"),
            })
        }
        Format::Json => json(r),
        Format::Csv => csv_rows(
            &[
                "kind",
                "p",
                "n",
                "d",
                "matched",
                "rule_id",
                "n0",
                "m",
                "d0",
                "k",
                "pattern_exponent",
            ],
            [[
                r.kind.to_string(),
                r.p.to_string(),
                r.n.to_string(),
                r.d.to_string(),
                r.matched.to_string(),
                opt(&r.rule_id),
                r.n0.to_string(),
                r.m.to_string(),
                r.d0.to_string(),
                r.k.to_string(),
                opt(&r.pattern_exponent),
            ]],
        ),
    }
}

pub fn render_sweep(r: &SweepReport, format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "sweep kind={} p={} n=[{},{}] d=[{},{}]",
                r.kind, r.p, r.n_range[0], r.n_range[1], r.d_range[0], r.d_range[1]
            );
            let _ = writeln!(s, "total_checked: {}", r.total_checked);
            let _ = writeln!(s, "skipped_overflow: {}", r.skipped_overflow);
            let _ = writeln!(s, "mismatches: {}", r.mismatches.len());
            let _ = writeln!(s, "do_instances: {}", r.do_instances.len());
            let _ = writeln!(s, "errata_diffs: {}", r.errata_diffs.len());
            if let Some(t) = r.runtime {
                let _ = writeln!(s, "runtime: {t:.3}s");
            }
            let _ = writeln!(s, "result: {}", if r.passed() { "PASS" } else { "FAIL" });
            for m in &r.mismatches {
                let _ = writeln!(
                    s,
                    "MISMATCH n={} d={} oracle={} detector={}",
                    m.n, m.d, m.oracle, m.detector
                );
            }
            for i in &r.do_instances {
                let _ = writeln!(
                    s,
                    "DO n={} d={} rule={} {}",
                    i.n,
                    i.d,
                    opt(&i.rule_id),
                    i.polynomial
                );
            }
            for e in &r.errata_diffs {
                let _ = writeln!(
                    s,
                    "ERRATUM {} [{}] {}: printed {} computed {}",
                    e.item, e.params, e.label, e.printed_term, e.computed_term
                );
            }
            Ok(s)
        }
        Format::Json => json(r),
        Format::Csv => csv_rows(
            &["n", "d", "rule_id", "polynomial"],
            r.do_instances.iter().map(|i| {
                [
                    i.n.to_string(),
                    i.d.to_string(),
                    opt(&i.rule_id),
                    i.polynomial.clone(),
                ]
            }),
        ),
    }
}

pub fn render_identities(r: &IdentityReport, format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                let detail = c
                    .counterexample
                    .as_ref()
                    .or(c.note.as_ref())
                    .map(|d| format!(" [{d}]"))
                    .unwrap_or_default();
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{} ({} cases){detail} {verdict}", c.name, c.cases);
            }
            Ok(s)
        }
        Format::Json => json(r),
        Format::Csv => csv_rows(
            &["name", "passed", "cases", "counterexample"],
            r.checks.iter().map(|c| {
                [
                    c.name.clone(),
                    c.passed.to_string(),
                    c.cases.to_string(),
                    opt(&c.counterexample),
                ]
            }),
        ),
    }
}

pub fn render_survey(r: &SurveyReport, format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let mut s = format!("survey kind={} p={} rows={}\n", r.kind, r.p, r.rows.len());
            for row in &r.rows {
                let _ = writeln!(
                    s,
                    "n={} d={} q={} do={} planar={} permutation={}",
                    row.n, row.d, row.q, row.is_do, row.is_planar, row.is_permutation
                );
            }
            Ok(s)
        }
        Format::Json => json(r),
        Format::Csv => csv_rows(
            &["n", "d", "q", "is_do", "is_planar", "is_permutation"],
            r.rows.iter().map(|row| {
                [
                    row.n.to_string(),
                    row.d.to_string(),
                    row.q.to_string(),
                    row.is_do.to_string(),
                    row.is_planar.to_string(),
                    row.is_permutation.to_string(),
                ]
            }),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::sweep;

    #[test]
    fn empty_mismatches_in_json() {
        let mut r = sweep(DicksonKind::First, 3, 10, 4, 1).unwrap();
        r.runtime = None;
        let s = render_sweep(&r, Format::Json).unwrap();
        assert!(s.contains("\"mismatches\": []"));
        let back: SweepReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn sweep_csv_columns() {
        let r = sweep(DicksonKind::First, 3, 5, 2, 1).unwrap();
        let s = render_sweep(&r, Format::Csv).unwrap();
        let mut lines = s.lines();
        assert_eq!(lines.next(), Some("n,d,rule_id,polynomial"));
        assert_eq!(lines.next(), Some("2,2,Thm2.1-i,1*x^2"));
    }

    #[test]
    fn identity_text_lines_end_with_verdict() {
        let f = crate::field::FieldParams::new(3, 2).unwrap();
        let r = crate::verify::identity_suite(3, 12, &[f]).unwrap();
        let s = render_identities(&r, Format::Text).unwrap();
        assert_eq!(s.lines().count(), r.checks.len());
        assert!(s.lines().all(|l| l.ends_with("PASS")));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }
}
