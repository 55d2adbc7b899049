use g3bell::measure::MeasureKind;
use g3bell::report::{emit, run_audit, AuditConfig, AuditReport, OutputFormat, Verdict};
use g3bell::{ProductForm, Vector3};
use serde_json::Value;

fn json(report: &AuditReport) -> Value {
    let mut buf = Vec::new();
    emit(report, OutputFormat::Json, &mut buf).unwrap();
    serde_json::from_slice(&buf).unwrap()
}

fn text(report: &AuditReport) -> String {
    let mut buf = Vec::new();
    emit(report, OutputFormat::Text, &mut buf).unwrap();
    String::from_utf8(buf).unwrap()
}

fn support<'a>(
    r: &'a AuditReport,
    pair: &str,
    form: ProductForm,
    kind: MeasureKind,
) -> &'a [usize] {
    &r.grade_support
        .iter()
        .find(|e| e.pair == pair && e.form == form && e.measure == kind)
        .unwrap()
        .grades
}

#[test]
fn default_audit_confirms_every_claim() {
    let r = run_audit(&AuditConfig::default()).unwrap();
    assert_eq!(
        support(
            &r,
            "e1,e2",
            ProductForm::Identity,
            MeasureKind::DirectedTrivector
        ),
        [1]
    );
    assert!(!r.normalization.valid);
    assert!(!r.normalization.directed_valid);
    assert!(r.all_confirmed(), "{:#?}", r.verdicts);
    assert_eq!(r.exit_code(), 0);
    assert_eq!(r.verdicts.len(), 9);
}

#[test]
fn json_schema_fields() {
    let r = run_audit(&AuditConfig::default()).unwrap();
    let v = json(&r);
    assert_eq!(v["normalization"]["directed_total"], 1.0);
    assert_eq!(v["normalization"]["scalar_total"], 1.0);
    assert_eq!(
        v["normalization"]["directed_total_multivector"]["e123"],
        1.0
    );
    assert_eq!(v["normalization"]["directed_valid"], false);
    for section in [
        "config",
        "claim_map",
        "pairs",
        "identity_check",
        "grade_support",
        "normalization",
        "functional_range",
        "chsh",
        "verdicts",
    ] {
        assert!(v.get(section).is_some(), "missing {section}");
    }
    assert_eq!(v["chsh"]["lhv_bound"], 2.0);
    assert_eq!(v["chsh"]["quantum_target_s"], -2.82842712474619);
    assert_eq!(v["verdicts"][4]["verdict"], "confirmed");
}

#[test]
fn json_numbers_have_at_most_15_significant_digits() {
    let r = run_audit(&AuditConfig::default()).unwrap();
    let mut buf = Vec::new();
    emit(&r, OutputFormat::Json, &mut buf).unwrap();
    let body = String::from_utf8(buf).unwrap();
    assert!(body.contains("0.707106781186547"));
    assert!(!body.contains("0.7071067811865475"));
}

#[test]
fn text_report_has_verdict_lines() {
    let r = run_audit(&AuditConfig::default()).unwrap();
    let t = text(&r);
    assert!(t.contains("\ndirected measure normalizes to trivector: confirmed\n"));
    assert!(t.contains("claim map:"));
    assert!(t.contains("0 [as grade-2]"));
}

#[test]
fn coarse_grid_gives_same_supports() {
    let fine = run_audit(&AuditConfig::default()).unwrap();
    let coarse = run_audit(&AuditConfig {
        p_step: 1.0,
        ..AuditConfig::default()
    })
    .unwrap();
    assert_eq!(coarse.config.p_grid.len(), 2);
    for (f, c) in fine.grade_support.iter().zip(&coarse.grade_support) {
        assert_eq!((&f.pair, f.form, f.measure), (&c.pair, c.form, c.measure));
        assert_eq!(f.grades, c.grades);
    }
}

#[test]
fn degenerate_tolerance_is_informational() {
    let r = run_audit(&AuditConfig {
        tolerance: 10.0,
        ..AuditConfig::default()
    })
    .unwrap();
    assert!(r.grade_support.iter().all(|e| e.grades.is_empty()));
    assert!(r
        .verdicts
        .iter()
        .all(|v| v.verdict == Verdict::Informational));
    assert_eq!(r.exit_code(), 1);
    assert!(text(&r).contains("verdicts are informational"));
}

#[test]
fn configured_pairs_join_the_defaults() {
    let r = run_audit(&AuditConfig {
        pairs: vec![(Vector3::new(0.0, 0.0, 1.0), Vector3::new(0.6, 0.0, 0.8))],
        ..AuditConfig::default()
    })
    .unwrap();
    assert_eq!(r.pairs.len(), 4);
    let label = &r.pairs[3].label;
    assert_eq!(
        support(&r, label, ProductForm::Raw, MeasureKind::DirectedTrivector),
        [1, 3]
    );
    assert!(r.all_confirmed());
}

#[test]
fn sections_present_without_extra_pairs() {
    let r = run_audit(&AuditConfig::default()).unwrap();
    let v = json(&r);
    assert_eq!(v["chsh"]["scalarizers"].as_array().unwrap().len(), 3);
    assert!(v["normalization"].is_object());
}

#[test]
fn seed_changes_only_seeded_sections() {
    let a = run_audit(&AuditConfig::default()).unwrap();
    let b = run_audit(&AuditConfig {
        seed: 7,
        ..AuditConfig::default()
    })
    .unwrap();
    assert_eq!(json(&a)["grade_support"], json(&b)["grade_support"]);
    assert!(b.all_confirmed());
}
