//! Serializers for sweep reports. Big integers are always written as
//! decimal strings so no consumer loses precision.

use std::io::{self, Write};

use convolvium_core::verify::{Param, ParamValue, Report, SweepRange, ViolationKind};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

struct Params<'a>(&'a [Param]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for p in self.0 {
            match &p.value {
                ParamValue::Int(v) => map.serialize_entry(p.name, v)?,
                ParamValue::Text(v) => map.serialize_entry(p.name, v)?,
            }
        }
        map.end()
    }
}

#[derive(Serialize)]
struct RangeOut {
    n_max: u64,
    m_max: u64,
    r_max: u64,
    a_max: u64,
    t_max: u64,
    identity_max: u64,
    kr_window: u64,
    board_max: u64,
    custom_kernels: u64,
    seed: u64,
}

impl From<&SweepRange> for RangeOut {
    fn from(r: &SweepRange) -> Self {
        RangeOut {
            n_max: r.n_max,
            m_max: r.m_max,
            r_max: r.r_max,
            a_max: r.a_max,
            t_max: r.t_max,
            identity_max: r.identity_max,
            kr_window: r.kr_window,
            board_max: r.board_max,
            custom_kernels: r.custom_kernels,
            seed: r.seed,
        }
    }
}

/// Flattened violation values, shared by JSON and CSV.
#[derive(Default)]
struct Values {
    expected: Option<String>,
    actual: Option<String>,
    divisor: Option<String>,
    remainder: Option<String>,
    message: Option<String>,
}

fn values(kind: &ViolationKind) -> Values {
    match kind {
        ViolationKind::Mismatch { expected, actual } => Values {
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            ..Values::default()
        },
        ViolationKind::NotDivisible {
            value,
            divisor,
            remainder,
        } => Values {
            actual: Some(value.to_string()),
            divisor: Some(divisor.to_string()),
            remainder: Some(remainder.to_string()),
            ..Values::default()
        },
        ViolationKind::UnexpectedlyDivisible { value, divisor } => Values {
            actual: Some(value.to_string()),
            divisor: Some(divisor.to_string()),
            remainder: Some("0".into()),
            ..Values::default()
        },
        ViolationKind::Error { message } => Values {
            message: Some(message.clone()),
            ..Values::default()
        },
    }
}

#[derive(Serialize)]
struct ViolationOut<'a> {
    check: &'a str,
    params: Params<'a>,
    expected: Option<String>,
    actual: Option<String>,
    divisor: Option<String>,
    remainder: Option<String>,
    message: Option<String>,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    suite: &'a str,
    range: RangeOut,
    cases_checked: u64,
    passed: bool,
    violations: Vec<ViolationOut<'a>>,
    notes: &'a [String],
    elapsed_ms: Option<u64>,
}

/// One compact JSON object. `elapsed_ms` is only kept with `timings`.
pub fn report_json(report: &Report, timings: bool) -> String {
    let out = ReportOut {
        suite: report.suite.name(),
        range: (&report.range).into(),
        cases_checked: report.cases_checked,
        passed: report.passed(),
        violations: report
            .violations
            .iter()
            .map(|v| {
                let vals = values(&v.kind);
                ViolationOut {
                    check: v.check,
                    params: Params(&v.params),
                    expected: vals.expected,
                    actual: vals.actual,
                    divisor: vals.divisor,
                    remainder: vals.remainder,
                    message: vals.message,
                }
            })
            .collect(),
        notes: &report.notes,
        elapsed_ms: report.elapsed_ms.filter(|_| timings),
    };
    serde_json::to_string(&out).expect("report serializes")
}

/// JSON Lines, one report per line.
pub fn write_json(w: &mut dyn Write, reports: &[Report], timings: bool) -> io::Result<()> {
    for r in reports {
        writeln!(w, "{}", report_json(r, timings))?;
    }
    Ok(())
}

fn params_cell(check: &str, params: &[Param]) -> String {
    let mut s = format!("check={check}");
    for p in params {
        match &p.value {
            ParamValue::Int(v) => s.push_str(&format!(" {}={v}", p.name)),
            ParamValue::Text(v) => s.push_str(&format!(" {}={v}", p.name)),
        }
    }
    s
}

pub const CSV_HEADER: [&str; 7] = [
    "suite",
    "params",
    "expected",
    "actual",
    "divisor",
    "remainder",
    "message",
];

/// One row per violation under a fixed header.
pub fn write_csv(w: &mut dyn Write, reports: &[Report]) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(CSV_HEADER)?;
    for r in reports {
        for v in &r.violations {
            let vals = values(&v.kind);
            let cell = |o: Option<String>| o.unwrap_or_default();
            out.write_record([
                r.suite.name().to_string(),
                params_cell(v.check, &v.params),
                cell(vals.expected),
                cell(vals.actual),
                cell(vals.divisor),
                cell(vals.remainder),
                cell(vals.message),
            ])?;
        }
    }
    out.flush()
}

/// A status line per suite, then an indented line per violation.
pub fn write_plain(w: &mut dyn Write, reports: &[Report], timings: bool) -> io::Result<()> {
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        write!(
            w,
            "{status} {} cases={} violations={}",
            r.suite.name(),
            r.cases_checked,
            r.violations.len()
        )?;
        if let (true, Some(ms)) = (timings, r.elapsed_ms) {
            write!(w, " elapsed_ms={ms}")?;
        }
        writeln!(w)?;
        for note in &r.notes {
            writeln!(w, "  note: {note}")?;
        }
        for v in &r.violations {
            let vals = values(&v.kind);
            let mut line = format!("  {}", params_cell(v.check, &v.params));
            let fields = [
                ("expected", vals.expected),
                ("actual", vals.actual),
                ("divisor", vals.divisor),
                ("remainder", vals.remainder),
                ("message", vals.message),
            ];
            for (name, val) in fields {
                if let Some(val) = val {
                    line.push_str(&format!(" {name}={val}"));
                }
            }
            writeln!(w, "{line}")?;
        }
    }
    Ok(())
}

pub fn write_reports(
    w: &mut dyn Write,
    reports: &[Report],
    format: Format,
    timings: bool,
) -> io::Result<()> {
    match format {
        Format::Json => write_json(w, reports, timings),
        Format::Csv => write_csv(w, reports),
        Format::Plain => write_plain(w, reports, timings),
    }
}
