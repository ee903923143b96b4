//! Values quoted in the source text, and the conformance runner on the
//! embedded and on corrupted reference tables.

use std::fs;
use std::path::PathBuf;

use triquad_core::conformance::{run, Provenance, Scope, Status};
use triquad_core::delpezzo::{cremona, normal_chi, SurfaceClass};
use triquad_core::enumerate::{decomposable_candidates, intermediate_table, solve_alpha_beta, IntermediateVerdict};
use triquad_core::golden::Golden;
use triquad_core::invariants::residual_class;
use triquad_core::{CurveClass, DivisorClass};

fn d(a: i64, b: i64, c: i64) -> DivisorClass {
    DivisorClass::new(a, b, c)
}

fn c(a: i64, b: i64, c: i64) -> CurveClass {
    CurveClass::new(a, b, c)
}

#[test]
fn worked_divisorial_case() {
    let alpha = d(1, 2, 2);
    let betas = solve_alpha_beta(&alpha, 0, &CurveClass::ZERO).unwrap();
    let mut want = vec![c(2, 1, 2), c(2, 2, 1), c(2, 0, 3), c(2, 3, 0)];
    want.sort();
    assert_eq!(betas, want);
    let residuals: Vec<_> = [c(2, 1, 2), c(2, 2, 1), c(2, 0, 3), c(2, 3, 0)]
        .iter()
        .map(|b| residual_class(&alpha, b, &d(0, 1, 2)).unwrap())
        .collect();
    assert_eq!(residuals, vec![c(0, -1, 1), c(0, 0, 0), c(0, -2, 2), c(0, 1, -1)]);
}

#[test]
fn intermediate_rows() {
    let rows = intermediate_table().unwrap();
    let row = |l: &str| rows.iter().find(|r| r.label == l).unwrap();
    assert_eq!((row("M").deg, row("M").pa, row("M").verdict), (1, 0, IntermediateVerdict::Admissible));
    assert_eq!((row("R").deg, row("R").pa, row("R").verdict), (2, 0, IntermediateVerdict::NonExistent));
    assert_eq!((row("S").deg, row("S").pa), (2, -1));
    assert_eq!(
        row("N").verdict,
        IntermediateVerdict::decomposable(d(0, 1, 0), d(0, 0, 1))
    );
}

#[test]
fn elliptic_split_case() {
    let pairs = decomposable_candidates(&d(2, 2, 2), Some(12), None).unwrap();
    assert!(pairs.contains(&(d(2, 0, 1), d(0, 2, 1))));
    for (l1, l2) in &pairs {
        assert_eq!(l1.sorted(), d(0, 1, 2));
        assert_eq!(l2.sorted(), d(0, 1, 2));
    }
}

#[test]
fn surface_values() {
    assert_eq!(cremona(&SurfaceClass::new(5, [3, 2, 2])), SurfaceClass::new(3, [1, 0, 0]));
    assert_eq!(cremona(&SurfaceClass::exceptional(0)), SurfaceClass::new(1, [0, 1, 1]));
    assert_eq!(normal_chi(&SurfaceClass::new(3, [0, 0, 2])).unwrap(), (7, 14));
}

#[test]
fn embedded_report_shape() {
    let r = run(&Golden::embedded(), None);
    assert!(r.summary.total >= 20);
    assert_eq!(r.summary.total, r.summary.pass + r.summary.fail + r.summary.paper_discrepancy);
    assert!(r.checks.iter().any(|c| c.provenance == Provenance::GoldenTable));
    assert!(r.checks.iter().any(|c| c.provenance == Provenance::Property));
    let l = r.checks.iter().find(|c| c.name == "intermediate row L").unwrap();
    assert_eq!(l.status, Status::PaperDiscrepancy);
    let printed = r.checks.iter().find(|c| c.name.starts_with("printed list")).unwrap();
    assert_eq!(printed.status, Status::PaperDiscrepancy);
    for n in [1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12] {
        assert_eq!(r.criterion_status(n), Some(Status::Pass), "criterion {n}");
    }
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("triquad-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    for (f, body) in [
        ("divisorial.csv", include_str!("../golden/divisorial.csv")),
        ("intermediate.csv", include_str!("../golden/intermediate.csv")),
        ("rank_one.csv", include_str!("../golden/rank_one.csv")),
    ] {
        fs::write(dir.join(f), body).unwrap();
    }
    dir
}

#[test]
fn corrupted_cell_is_reported() {
    let dir = scratch_dir("corrupt");
    let path = dir.join("intermediate.csv");
    let text = fs::read_to_string(&path).unwrap();
    let corrupted = text.replace("R,1,1,1,2,0,0,2,0,NonExistent", "R,1,1,1,2,0,0,2,0,Admissible");
    assert_ne!(corrupted, text);
    fs::write(&path, corrupted).unwrap();
    let golden = Golden::from_dir(&dir).unwrap();
    let r = run(&golden, Some(Scope::Tables));
    let row = r.checks.iter().find(|c| c.name == "intermediate row R").unwrap();
    assert_eq!(row.status, Status::Fail, "{}", row.detail);
    assert!(!r.passed());
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn copied_tables_match_embedded() {
    let dir = scratch_dir("copy");
    let golden = Golden::from_dir(&dir).unwrap();
    assert_eq!(run(&golden, Some(Scope::Tables)).checks, run(&Golden::embedded(), Some(Scope::Tables)).checks);
    fs::remove_dir_all(dir).unwrap();
}
