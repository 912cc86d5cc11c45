//! Report rendering. Every number is printed as an exact decimal string.

use std::fmt::Write as _;

use clap::ValueEnum;
use qcert_core::verify::{CheckResult, Mismatch};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureRecord {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

/// One check in the stable JSON schema.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub check: String,
    pub prec: usize,
    pub status: String,
    pub first_failure: Option<FailureRecord>,
    pub elapsed_ms: f64,
}

impl From<&Mismatch> for FailureRecord {
    fn from(m: &Mismatch) -> Self {
        FailureRecord {
            exponent: m.exponent,
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }
    }
}

impl From<&CheckResult> for Record {
    fn from(r: &CheckResult) -> Self {
        Record {
            check: r.name.clone(),
            prec: r.prec,
            status: r.status().to_string(),
            first_failure: r.first_failure.as_ref().map(FailureRecord::from),
            elapsed_ms: (r.elapsed.as_secs_f64() * 1e6).round() / 1e3,
        }
    }
}

pub fn text_line(r: &CheckResult) -> String {
    let mut line = format!(
        "{:<4} {:<28} prec={:<6} {:>10.3} ms",
        r.status().to_string().to_uppercase(),
        r.name,
        r.prec,
        r.elapsed.as_secs_f64() * 1e3
    );
    if let Some(m) = &r.first_failure {
        let _ = write!(
            line,
            "  first mismatch at q^{}: lhs={} rhs={}",
            m.exponent, m.lhs, m.rhs
        );
    }
    line
}

pub fn render(results: &[CheckResult], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in results {
                out.push_str(&text_line(r));
                out.push('\n');
            }
            let passed = results.iter().filter(|r| r.passed()).count();
            let _ = writeln!(out, "{passed}/{} passed", results.len());
            out
        }
        Format::Json => {
            let records: Vec<Record> = results.iter().map(Record::from).collect();
            let mut s = serde_json::to_string_pretty(&records).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "check",
                "prec",
                "status",
                "first_failure_exponent",
                "elapsed_ms",
            ])
            .expect("in-memory write");
            for r in results {
                let rec = Record::from(r);
                let exponent = rec
                    .first_failure
                    .map(|f| f.exponent.to_string())
                    .unwrap_or_default();
                w.write_record([
                    rec.check,
                    rec.prec.to_string(),
                    rec.status,
                    exponent,
                    rec.elapsed_ms.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcert_core::verify::check_identity;
    use qcert_core::Series;

    fn results() -> Vec<CheckResult> {
        let f: Series = Series::from_i64s(&[1, 2, 3]);
        let g: Series = Series::from_i64s(&[1, 2, 4]);
        vec![
            check_identity("same", &f, &f),
            check_identity("differ", &f, &g),
        ]
    }

    #[test]
    fn json_schema() {
        let v: serde_json::Value = serde_json::from_str(&render(&results(), Format::Json)).unwrap();
        assert_eq!(v[0]["check"], "same");
        assert_eq!(v[0]["status"], "pass");
        assert!(v[0]["first_failure"].is_null());
        assert_eq!(v[1]["first_failure"]["exponent"], 2);
        assert_eq!(v[1]["first_failure"]["lhs"], "3");
        assert_eq!(v[1]["first_failure"]["rhs"], "4");
        assert!(v[1]["elapsed_ms"].is_number());
    }

    #[test]
    fn csv_and_text_agree() {
        let csv = render(&results(), Format::Csv);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "check,prec,status,first_failure_exponent,elapsed_ms"
        );
        assert!(lines[1].starts_with("same,3,pass,,"));
        assert!(lines[2].starts_with("differ,3,fail,2,"));
        let text = render(&results(), Format::Text);
        assert!(text.contains("PASS same") && text.contains("FAIL differ"));
        assert!(text.contains("lhs=3 rhs=4") && text.ends_with("1/2 passed\n"));
    }
}
