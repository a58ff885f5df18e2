use convolvium_core::verify::{Fault, Report, Suite, SweepRange, Verifier, ViolationKind};
use convolvium_core::{kr_constant, Error, KernelFamily, Perturbation};

fn run(suite: Suite, range: SweepRange) -> Report {
    Verifier::default().run_suite(suite, &range).unwrap()
}

fn small() -> SweepRange {
    SweepRange {
        n_max: 4,
        m_max: 2,
        r_max: 3,
        a_max: 2,
        t_max: 1,
        identity_max: 6,
        kr_window: 60,
        board_max: 6,
        custom_kernels: 4,
        ..SweepRange::default()
    }
}

#[test]
fn theorem1_sweep_is_clean() {
    let range = SweepRange {
        n_max: 10,
        m_max: 4,
        r_max: 5,
        ..SweepRange::default()
    };
    let report = run(Suite::Theorem1, range);
    assert!(report.passed(), "{:?}", report.violations);
    assert_eq!(report.cases_checked, 11 * 4 * 5);
}

#[test]
fn remark1_default_passes() {
    let report = run(Suite::Remark1, SweepRange::default());
    assert!(report.passed(), "{:?}", report.violations);
}

#[test]
fn smallest_paths_sweep() {
    let range = SweepRange {
        n_max: 1,
        r_max: 1,
        board_max: 0,
        ..SweepRange::default()
    };
    let report = run(Suite::Paths, range);
    assert!(report.passed());
    // one interpretation case plus the seven touch sets on the empty board
    assert_eq!(report.cases_checked, 1 + 7);

    let bad = SweepRange { n_max: 0, ..range };
    assert!(matches!(
        Verifier::default().run_suite(Suite::Paths, &bad),
        Err(Error::InvalidRange { suite: "paths", .. })
    ));
}

#[test]
fn run_all_defaults_pass() {
    let reports = Verifier::default().run_all(&SweepRange::default());
    assert_eq!(reports.len(), Suite::ALL.len());
    for r in &reports {
        assert!(
            r.passed(),
            "{} failed: {:?}",
            r.suite,
            &r.violations[..r.violations.len().min(3)]
        );
        assert!(r.cases_checked > 0, "{}", r.suite);
        assert!(r.notes.is_empty());
    }
}

#[test]
fn run_all_clamps_degenerate_ranges() {
    let range = SweepRange {
        n_max: 0,
        m_max: 0,
        r_max: 0,
        ..small()
    };
    let reports = Verifier::default().run_all(&range);
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.suite, r.violations);
    }
    let paths = reports.iter().find(|r| r.suite == Suite::Paths).unwrap();
    assert!(paths
        .notes
        .iter()
        .any(|n| n.starts_with("n_max clamped from 0 to 1")));
    assert!(paths.notes.iter().any(|n| n.starts_with("r_max clamped")));
    assert_eq!(paths.range.n_max, 1);
    let theorem1 = reports.iter().find(|r| r.suite == Suite::Theorem1).unwrap();
    assert!(theorem1
        .notes
        .iter()
        .any(|n| n.starts_with("m_max clamped")));
    let stanley = reports.iter().find(|r| r.suite == Suite::Stanley).unwrap();
    assert!(stanley.notes.is_empty());
}

#[test]
fn identical_inputs_give_identical_reports() {
    let v = Verifier::default();
    assert_eq!(v.run_all(&small()), v.run_all(&small()));
    let other_seed = SweepRange { seed: 7, ..small() };
    let a = v.run_suite(Suite::MSumLift, &small()).unwrap();
    let b = v.run_suite(Suite::MSumLift, &other_seed).unwrap();
    assert_eq!(a.cases_checked, b.cases_checked);
}

fn expected_cases(suite: Suite, r: &SweepRange) -> u64 {
    let (n, m, rr, a, t) = (r.n_max, r.m_max, r.r_max, r.a_max, r.t_max);
    let builtins = 2 + (a + 1) + 3 * rr;
    let half_grid: u64 = (0..=n).map(|x| x / 2 + 1).sum();
    let triangle = (n + 1) * (n + 2) / 2;
    match suite {
        Suite::Theorem1 | Suite::PsiDiv | Suite::GesselFactorization => (n + 1) * m * rr,
        Suite::PhiM1 => n + 1,
        Suite::PsiM1 => (n + 1) * rr,
        Suite::Calkin | Suite::S3Div => (n + 1) * m,
        Suite::S2Div => (n + 1) * m * (a + 1),
        Suite::ClosedForms => triangle * (3 + 2 * (a + 1) + 3 * rr) + (n + 1) * rr,
        Suite::MSumBase => builtins * (n + 1) * m,
        Suite::MSumLift => (builtins + r.custom_kernels) * half_grid * (t + 1),
        Suite::Transplant => r.custom_kernels * half_grid * (a + 1) + triangle * rr,
        Suite::Stanley => (r.identity_max + 1).pow(4),
        Suite::BinomialProduct => {
            let p = r.identity_max;
            (p + 1) * (p + 2) * (p + 3) / 6
        }
        Suite::KrMinimality => (1..=rr)
            .map(|x| r.kr_window + 1 + u64::try_from(&kr_constant(x).unwrap()).unwrap() - 1)
            .sum(),
        Suite::Remark1 => 1 + (n + 1) * m,
        Suite::Paths => {
            let boards: u64 = (0..=r.board_max).map(|s| s + 1).sum();
            n * rr + 7 * boards
        }
    }
}

#[test]
fn cases_checked_equals_grid_cardinality() {
    for range in [small(), SweepRange::default()] {
        for suite in Suite::ALL {
            let report = run(suite, range);
            assert_eq!(
                report.cases_checked,
                expected_cases(suite, &range),
                "{suite}"
            );
        }
    }
}

fn fault(family: KernelFamily, n: u64, k: u64) -> Verifier {
    Verifier {
        fault: Some(Fault {
            family,
            perturbation: Perturbation { n, k, delta: 1 },
        }),
        budget: None,
    }
}

#[test]
fn every_single_point_fault_is_detected() {
    let families = [
        KernelFamily::Plain,
        KernelFamily::Rising,
        KernelFamily::Central,
        KernelFamily::SuperCatalan,
        KernelFamily::HalfSuperCatalan,
        KernelFamily::Gessel,
        KernelFamily::Custom,
    ];
    for family in families {
        // every point lies inside the small grid for both index conventions
        for (n, k) in [(0, 0), (2, 1), (4, 1), (4, 2), (4, 4)] {
            let reports = fault(family, n, k).run_all(&small());
            let failing: Vec<Suite> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| r.suite)
                .collect();
            assert!(
                !failing.is_empty(),
                "{family:?} at ({n},{k}) went unnoticed"
            );
            for s in &failing {
                assert!(
                    s.kernel_families().contains(&family),
                    "{s} failed although it does not use {family:?}"
                );
            }
        }
    }
}

#[test]
fn gessel_fault_hits_the_gessel_suites() {
    let reports = fault(KernelFamily::Gessel, 6, 3).run_all(&small());
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.suite.name())
        .collect();
    for expected in ["phi-m1", "closed-forms", "eq2-eq4", "thm2"] {
        assert!(
            failing.contains(&expected),
            "{expected} missing from {failing:?}"
        );
    }
    // kernel-generic identities are blind to the corruption
    assert!(!failing.contains(&"eq7"));
    assert!(!failing.contains(&"eq8"));
    let eq7 = reports.iter().find(|r| r.suite == Suite::MSumBase).unwrap();
    assert!(eq7.cases_checked > 0);
}

#[test]
fn violations_carry_full_values() {
    let report = fault(KernelFamily::Gessel, 6, 3)
        .run_suite(Suite::GesselFactorization, &small())
        .unwrap();
    let v = &report.violations[0];
    assert_eq!(v.check, "factorization");
    assert!(matches!(v.kind, ViolationKind::Mismatch { .. }));
    assert!(v.params.iter().any(|p| p.name == "n"));
}

#[test]
fn budget_rejects_oversized_ranges() {
    let v = Verifier {
        budget: Some(10_000),
        ..Verifier::default()
    };
    assert!(v.run_suite(Suite::PhiM1, &SweepRange::default()).is_ok());
    let huge = SweepRange {
        identity_max: 200,
        ..SweepRange::default()
    };
    assert!(matches!(
        v.run_suite(Suite::Stanley, &huge),
        Err(Error::RangeTooLarge {
            suite: "stanley",
            ..
        })
    ));
    let reports = v.run_all(&huge);
    let stanley = reports.iter().find(|r| r.suite == Suite::Stanley).unwrap();
    assert!(!stanley.passed());
    assert_eq!(stanley.cases_checked, 0);
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(matches!(
        Suite::from_name("eq99"),
        Err(Error::UnknownSuite(_))
    ));
}
