use convolvium::format::{report_json, write_csv, write_plain, CSV_HEADER};
use convolvium::runner::Runner;
use convolvium_core::verify::{Fault, Report, Suite, SweepRange};
use convolvium_core::{KernelFamily, Perturbation};

fn faulty(jobs: usize, suite: Suite) -> Report {
    let mut runner = Runner::new(jobs, 60_000);
    runner.verifier.fault = Some(Fault {
        family: KernelFamily::Gessel,
        perturbation: Perturbation {
            n: 4,
            k: 1,
            delta: 1,
        },
    });
    let range = SweepRange {
        n_max: 3,
        m_max: 2,
        r_max: 2,
        ..SweepRange::default()
    };
    runner.run_suite(suite, &range).unwrap()
}

#[test]
fn json_carries_violation_fields() {
    let report = faulty(1, Suite::Theorem1);
    assert!(!report.passed());
    let line = report_json(&report, false);
    assert!(!line.contains('\n'));
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["elapsed_ms"].is_null());
    let first = &v["violations"][0];
    assert!(first["check"].is_string());
    assert!(first["divisor"].is_string());
    assert!(first["remainder"].is_string());
    assert!(first["actual"].is_string());
    // params keep their visiting order
    let keys: Vec<_> = first["params"]
        .as_object()
        .unwrap()
        .keys()
        .cloned()
        .collect();
    assert!(keys.contains(&"n".to_string()));
    let raw = line.find("\"params\":{\"n\"");
    assert!(raw.is_some(), "{line}");
}

#[test]
fn mismatches_have_expected_and_actual() {
    let report = faulty(1, Suite::PhiM1);
    let v: serde_json::Value = serde_json::from_str(&report_json(&report, true)).unwrap();
    let first = &v["violations"][0];
    assert!(first["expected"].is_string());
    assert!(first["actual"].is_string());
    assert_ne!(first["expected"], first["actual"]);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn csv_has_one_row_per_violation() {
    let report = faulty(1, Suite::Theorem1);
    let mut buf = Vec::new();
    write_csv(&mut buf, std::slice::from_ref(&report)).unwrap();
    let mut reader = csv::Reader::from_reader(buf.as_slice());
    assert_eq!(reader.headers().unwrap(), CSV_HEADER.as_slice());
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), report.violations.len());
    assert!(rows
        .iter()
        .all(|r| &r[0] == "theorem1" && r[1].starts_with("check=")));
}

#[test]
fn plain_marks_failure() {
    let report = faulty(1, Suite::Theorem1);
    let mut buf = Vec::new();
    write_plain(&mut buf, std::slice::from_ref(&report), false).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("FAIL theorem1 "));
    assert_eq!(text.lines().count(), 1 + report.violations.len());
}

#[test]
fn parallel_run_matches_serial() {
    for suite in [Suite::Theorem1, Suite::ClosedForms, Suite::Transplant] {
        let mut a = faulty(1, suite);
        let mut b = faulty(3, suite);
        a.elapsed_ms = None;
        b.elapsed_ms = None;
        assert_eq!(a, b, "{suite}");
    }
}
