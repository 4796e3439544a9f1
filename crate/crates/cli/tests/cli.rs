use std::fs;
use std::process::{Command, Output};

fn partrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partrec")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_values(out: &Output) -> Vec<String> {
    let text = stdout(out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,value"));
    lines
        .enumerate()
        .map(|(i, line)| {
            let (n, v) = line.split_once(',').unwrap();
            assert_eq!(n, i.to_string());
            v.to_string()
        })
        .collect()
}

#[test]
fn compute_partitions_csv() {
    let out = partrec(&["compute", "P", "--max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(csv_values(&out), ["1", "1", "2", "3", "5"]);
}

#[test]
fn compute_overpartitions_by_recurrence() {
    let out = partrec(&["compute", "OverP", "--max", "3", "--method", "recurrence"]);
    assert_eq!(csv_values(&out), ["1", "2", "4", "8"]);
}

#[test]
fn compute_residue_pair_by_dp() {
    // parts in {2,3,7,8}: 8+2, 7+3, 3+3+2+2, 2+2+2+2+2
    let out = partrec(&["compute", "Pcm", "--params", "m=5,c=2", "--max", "10", "--method", "dp"]);
    assert_eq!(csv_values(&out).last().map(String::as_str), Some("4"));
}

#[test]
fn every_method_gives_the_same_table() {
    for (family, params) in [("P", ""), ("OverPd", ""), ("Bl", "ell=5"), ("Pcm", "m=7,c=2"), ("QQ", "")] {
        let tables: Vec<_> = ["recurrence", "series", "dp", "enum"]
            .iter()
            .map(|m| csv_values(&partrec(&["compute", family, "--params", params, "--max", "30", "--method", m])))
            .collect();
        assert!(tables.windows(2).all(|w| w[0] == w[1]), "{family}");
    }
}

#[test]
fn json_values_are_decimal_strings() {
    let out = partrec(&["compute", "P", "--max", "5000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["family"], "P");
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 5001);
    assert_eq!(values[100], "190569292");
    assert!(values[5000].as_str().unwrap().len() > 70);
}

#[test]
fn usage_and_guard_exit_codes() {
    assert_eq!(partrec(&["verify", "bogus-id"]).status.code(), Some(2));
    assert_eq!(partrec(&["compute", "Nope", "--max", "3"]).status.code(), Some(2));
    assert_eq!(partrec(&["compute", "Pcm", "--params", "m=6,c=3", "--max", "3"]).status.code(), Some(2));
    assert_eq!(partrec(&["compute", "P", "--params", "m=5", "--max", "3"]).status.code(), Some(2));
    assert_eq!(partrec(&["list", "--bogus"]).status.code(), Some(2));
    assert_eq!(partrec(&["compute", "P", "--max", "41", "--method", "enum"]).status.code(), Some(3));
    assert_eq!(partrec(&["verify", "thm5-qq", "--max", "41", "--oracle", "enum"]).status.code(), Some(3));
}

#[test]
fn verify_single_and_all() {
    let out = partrec(&["verify", "thm5-qq", "--max", "30", "--oracle", "enum"]);
    assert_eq!(out.status.code(), Some(0));
    let out = partrec(&["verify", "thm8-pm", "--params", "m=7,c=3", "--max", "300", "--oracle", "dp"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("thm8-pm(m=7,c=3)"));

    let out = partrec(&["verify", "all", "--max", "300"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("ok")).count(), 29);
}

#[test]
fn selftest_and_fault_hook() {
    assert_eq!(partrec(&["selftest", "--max", "300"]).status.code(), Some(0));
    assert_eq!(partrec(&["selftest", "--max", "0"]).status.code(), Some(0));
    let out = partrec(&["selftest", "--max", "300", "--corrupt-euler"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL pentagonal number theorem"));
}

#[test]
fn bench_cross_checks() {
    let out = partrec(&["bench", "P", "--max", "2000", "--methods", "recurrence,series"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all methods agree"));
    let out = partrec(&["bench", "OverP", "--max", "200", "--methods", "recurrence,dp", "--inject-disagreement"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn list_text_and_json() {
    let out = partrec(&["list"]);
    assert_eq!(stdout(&out).lines().count(), 19);
    let v: serde_json::Value = serde_json::from_slice(&partrec(&["list", "--json"]).stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 19);
    assert!(rows.iter().all(|r| r["id"].is_string() && r["params"].is_object() && r["citation"].is_string()));
    let pm = rows.iter().find(|r| r["id"] == "thm8-pm").unwrap();
    assert_eq!(pm["params"]["m"], 5);
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["compute", "Pcm", "--params", "m=7,c=3", "--max", "400", "--cache-dir", cache];
    let first = partrec(&args);
    assert_eq!(first.status.code(), Some(0));
    let path = dir.path().join("Pcm_c=3_m=7.json");
    let stored: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(stored["values"].as_array().unwrap().len(), 401);
    assert_eq!(stored["params"]["m"], 7);

    // a shorter request is served from the stored table
    let shorter = partrec(&["compute", "Pcm", "--params", "m=7,c=3", "--max", "100", "--cache-dir", cache]);
    assert_eq!(csv_values(&shorter)[..], csv_values(&first)[..=100]);

    // corrupt a leading value: the cache is rejected and rewritten
    let mut tampered = stored.clone();
    tampered["values"][3] = "999".into();
    fs::write(&path, tampered.to_string()).unwrap();
    let again = partrec(&args);
    assert_eq!(again.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&again.stderr).contains("ignoring cache"));
    assert_eq!(csv_values(&again), csv_values(&first));
    let rewritten: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rewritten, stored);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = partrec(&["compute", "Po", "--max", "50", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let expected = stdout(&partrec(&["compute", "Po", "--max", "50"]));
    assert_eq!(fs::read_to_string(path).unwrap(), expected);
}
