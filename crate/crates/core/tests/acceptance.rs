//! Acceptance suite. Each test checks one criterion and prints a single
//! `AC<n> PASS|FAIL` line (visible with `--nocapture`).

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use partrec::catalog::{self, ELL_MATRIX, MC_MATRIX};
use partrec::counting::{dp_table, enum_table};
use partrec::figurate::{figurate_value, FigurateKind};
use partrec::methods::{compute, Method};
use partrec::qseries::{family_series, inv_trunc, pochhammer};
use partrec::recurrence::{lhs_apply, rhs_apply, series_verify, solve};
use partrec::selftest::{self, Faults};
use partrec::{FamilySpec, Params, ProductFactor};

fn report(criterion: &str, failures: &[String], elapsed: Duration) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("{criterion} {status} ({:.2?})", elapsed);
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "{criterion} failed: {failures:?}");
}

fn offsets(id: &str, params: Params, skip_zero: bool, count: usize) -> Vec<u64> {
    let ident = catalog::build(id, &params).unwrap();
    ident
        .multiplier
        .terms()
        .filter(|t| !(skip_zero && t.exponent == 0))
        .take(count)
        .map(|t| t.exponent)
        .collect()
}

#[test]
fn ac1_known_values() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = solve(&catalog::build("euler-pentagonal", &Params::new()).unwrap(), 4, None).unwrap();
    if p[4] != BigInt::from(5) {
        failures.push(format!("p(4) = {}", p[4]));
    }
    let over = solve(&catalog::build("thm2-overpartition", &Params::new()).unwrap(), 3, None).unwrap();
    if over[3] != BigInt::from(8) {
        failures.push(format!("overpartitions of 3 = {}", over[3]));
    }
    let mc = |m, c| Params::new().with("m", m).with("c", c);
    let cases: Vec<(&str, Params, bool, Vec<u64>)> = vec![
        ("euler-pentagonal", Params::new(), true, vec![1, 2, 5, 7, 12, 15]),
        ("thm1-even", Params::new(), false, vec![0, 6, 10, 28, 36, 66, 78]),
        ("thm1-odd", Params::new(), false, vec![1, 3, 15, 21, 45, 55]),
        ("thm5-qq", Params::new(), true, vec![4, 8, 20, 28, 48, 60]),
        ("thm6-po", Params::new(), true, vec![1, 5, 8, 16]),
        ("thm8-pm", mc(5, 1), true, vec![1, 4, 7, 13]),
        ("cor1-R1", Params::new(), true, vec![1, 4, 7, 13]),
        ("cor2-s2", Params::new(), true, vec![2, 4, 10, 14]),
        ("cor2-s1", Params::new(), true, vec![1, 5, 8, 16]),
    ];
    for (id, params, skip_zero, expected) in cases {
        let got = offsets(id, params, skip_zero, expected.len());
        if got != expected {
            failures.push(format!("{id}: offsets {got:?}, expected {expected:?}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        failures.push(format!("runtime {elapsed:?} exceeds 1 s"));
    }
    report("AC1 known values and offset lists", &failures, elapsed);
}

#[test]
fn ac2_full_catalog_series_verification() {
    let start = Instant::now();
    let matrix = catalog::full_matrix();
    let mut failures = Vec::new();
    for id in catalog::all_ids() {
        if !matrix.iter().any(|i| i.id == id || i.id.starts_with(&format!("{id}("))) {
            failures.push(format!("{id} missing from the verification matrix"));
        }
    }
    assert_eq!(matrix.len(), catalog::all_ids().len() - 2 + ELL_MATRIX.len() + MC_MATRIX.len());
    for ident in &matrix {
        match series_verify(ident, 2000) {
            Ok(None) => {}
            Ok(Some(n)) => failures.push(format!("{}: first mismatch at n = {n}", ident.id)),
            Err(e) => failures.push(format!("{}: {e}", ident.id)),
        }
    }
    report(&format!("AC2 {} identity instances, series_verify N=2000", matrix.len()), &failures, start.elapsed());
}

#[test]
fn ac3_oracle_triangulation() {
    let start = Instant::now();
    let mut fams = vec![
        FamilySpec::P,
        FamilySpec::Pd,
        FamilySpec::Po,
        FamilySpec::QQ,
        FamilySpec::OverP,
        FamilySpec::OverPd,
    ];
    fams.extend(ELL_MATRIX.iter().map(|&ell| FamilySpec::Bl { ell }));
    fams.extend(MC_MATRIX.iter().map(|&(m, c)| FamilySpec::residue_pair(m, c).unwrap()));
    let mut failures = Vec::new();
    for fam in &fams {
        let rec = compute(fam, 1000, Method::Recurrence, None).unwrap();
        let series = family_series(fam, 1000).unwrap().into_coeffs();
        let dp = dp_table(fam, 1000);
        let en = enum_table(fam, 30).unwrap();
        if let Some(n) = (0..=1000).find(|&n| rec[n] != series[n] || series[n] != dp[n]) {
            failures.push(format!("{fam}: recurrence/series/dp disagree at n = {n}"));
        }
        if en[..] != dp[..=30] {
            failures.push(format!("{fam}: enumeration disagrees below 31"));
        }
    }
    report(&format!("AC3 oracle triangulation over {} families", fams.len()), &failures, start.elapsed());
}

#[test]
fn ac4_series_self_tests() {
    let start = Instant::now();
    let checks = selftest::run(2000, Faults::default()).unwrap();
    let failures: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: mismatch at {:?}", c.name, c.first_mismatch))
        .collect();
    let triple = checks.iter().filter(|c| c.name.starts_with("triple product")).count();
    assert_eq!(triple, 6);
    report(&format!("AC4 {} series identities to order 2000", checks.len()), &failures, start.elapsed());
}

#[test]
fn ac5_structural_properties() {
    let start = Instant::now();
    let n_max = 2000;
    let mut failures = Vec::new();

    let over = solve(&catalog::build("thm2-overpartition", &Params::new()).unwrap(), n_max, None).unwrap();
    let two = BigInt::from(2);
    if let Some(n) = (1..=n_max).find(|&n| !(&over[n] % &two).is_zero()) {
        failures.push(format!("overpartition count odd at n = {n}"));
    }

    let even = catalog::build("thm1-even", &Params::new()).unwrap();
    let p = dp_table(&FamilySpec::P, n_max);
    if let Some(n) = (1..=n_max as u64).step_by(2).find(|&n| !lhs_apply(&even, &p, n).unwrap().is_zero()) {
        failures.push(format!("even-triangular lhs nonzero at odd n = {n}"));
    }

    let s1 = catalog::build("cor2-s1", &Params::new()).unwrap();
    let s2 = catalog::build("cor2-s2", &Params::new()).unwrap();
    let t1 = dp_table(&s1.family, n_max);
    let t2 = dp_table(&s2.family, n_max);
    if let Some(n) = (0..=n_max as u64).find(|&n| lhs_apply(&s1, &t1, n).unwrap() != lhs_apply(&s2, &t2, n).unwrap()) {
        failures.push(format!("mod-6 left-hand sides differ at n = {n}"));
    }

    // Independent expectation: enumerate j(5j−3)/2 over an index window.
    let r2 = catalog::build("cor1-R2-pentagonal", &Params::new()).unwrap();
    let mut expected = vec![0i64; n_max + 1];
    for j in -40i64..=40 {
        let h = figurate_value(FigurateKind::GenHeptagonal, j).unwrap() as usize;
        if h <= n_max {
            expected[h] = if j % 2 == 0 { 1 } else { -1 };
        }
    }
    for (n, &want) in expected.iter().enumerate() {
        let got = rhs_apply(&r2, None, n as u64).unwrap();
        if got != BigInt::from(want) {
            failures.push(format!("heptagonal rhs at {n}: {got}, expected {want}"));
        }
    }
    report("AC5 structural properties to n = 2000", &failures, start.elapsed());
}

#[test]
fn ac6_performance_floor() {
    let mut failures = Vec::new();
    let euler = catalog::build("euler-pentagonal", &Params::new()).unwrap();

    let start = Instant::now();
    let p = solve(&euler, 50_000, None).unwrap();
    let big_run = start.elapsed();
    if big_run > Duration::from_secs(30) {
        failures.push(format!("p(0..50000) took {big_run:?}"));
    }
    if p[1000].to_string() != "24061467864032622473692149727991" {
        failures.push(format!("p(1000) = {}", p[1000]));
    }
    if p[50_000].to_string().len() != 244 {
        failures.push(format!("p(50000) has {} digits", p[50_000].to_string().len()));
    }

    let n = 3000;
    let t = Instant::now();
    let rec = solve(&euler, n, None).unwrap();
    let rec_time = t.elapsed();
    let t = Instant::now();
    let inverted = inv_trunc(&pochhammer(&[ProductFactor::pochhammer(1, 1, 1).unwrap()], n).unwrap()).unwrap();
    let series_time = t.elapsed();
    if rec[..] != inverted.coeffs()[..] {
        failures.push("recurrence and series inversion disagree".into());
    }
    if rec_time >= series_time {
        failures.push(format!("recurrence {rec_time:?} not faster than series {series_time:?} at N = {n}"));
    }
    println!("    p(0..50000): {big_run:.2?}; N={n}: recurrence {rec_time:.2?}, series {series_time:.2?}");
    report("AC6 performance floor", &failures, big_run);
}
