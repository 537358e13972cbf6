use srgclique::bounds::full_report;
use srgclique::catalog::{emit_to_string, scan_compare, Filter, OutputFormat, ScanConfig};
use srgclique::srg::FeasibilityLevel;
use srgclique::SrgParams;

#[test]
fn scans_are_byte_identical() {
    let cfg = ScanConfig::new(120);
    for format in [OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json] {
        let a = emit_to_string(&scan_compare(&cfg).unwrap().records, format);
        let b = emit_to_string(&scan_compare(&cfg).unwrap().records, format);
        assert_eq!(a, b);
    }
}

#[test]
fn gap_two_record() {
    let mut cfg = ScanConfig::new(378);
    cfg.filter = Filter::Gap;
    let out = scan_compare(&cfg).unwrap();
    let p = SrgParams::new(378, 52, 1, 8).unwrap();
    let r = out.records.iter().find(|r| r.params == p).unwrap();
    assert_eq!((r.cab, r.delsarte, r.gap), (3, 5, 2));
    assert!(out.records.iter().all(|r| r.gap > 0));
}

#[test]
fn thm51_records_meet_trivial_bound() {
    let mut cfg = ScanConfig::new(300);
    cfg.filter = Filter::Thm51;
    let out = scan_compare(&cfg).unwrap();
    assert!(!out.records.is_empty());
    for r in out.records {
        assert_eq!(r.cab, r.params.lambda + 2, "{}", r.params);
    }
}

#[test]
fn thm_records_have_a_gap() {
    let mut cfg = ScanConfig::new(300);
    cfg.filter = Filter::Thm;
    for r in scan_compare(&cfg).unwrap().records {
        assert!(r.gap >= 1, "{}", r.params);
    }
}

#[test]
fn improved_bound_never_exceeds_delsarte() {
    let mut cfg = ScanConfig::new(250);
    cfg.level = FeasibilityLevel::Integrality;
    for r in scan_compare(&cfg).unwrap().records {
        let rep = full_report(&r.params).unwrap();
        if let Some(b) = rep.improved_bound {
            assert!(b <= r.delsarte);
            assert!(r.cab <= b, "{}", r.params);
        }
    }
}

#[test]
fn theorem_frequencies_at_500() {
    let stats = scan_compare(&ScanConfig::new(500)).unwrap().stats;
    // Independent float-and-fraction count: 123 of 1225 primitive type II tuples, 21 of 80 type I.
    assert_eq!((stats.thm22, stats.primitive_type_ii), (123, 1225));
    assert_eq!((stats.thm21, stats.primitive_type_i), (21, 80));
    assert!((0.05..=0.25).contains(&stats.thm22_fraction()));
}
