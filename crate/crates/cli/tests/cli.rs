use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ncent_cli::report::{Report, SearchReport};
use ncent_core::verifier::SuiteReport;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn ncent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncent"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("ncent runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_a4() {
    let o = ncent(&["analyze", "builtin:alternating:4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.cent_count, 6);
    assert_eq!(r.flags.f_group, Some(true));
    assert_eq!(r.flags.ca_group, Some(true));
    let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
}

#[test]
fn analyze_golden() {
    let o = ncent(&["analyze", "builtin:alternating:4", "--format", "json"]);
    let golden = manifest_dir().join("tests/golden/analyze_a4.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &o.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&golden).unwrap();
    assert_eq!(stdout(&o), want, "rerun with UPDATE_GOLDEN=1 to refresh");
}

#[test]
fn analyze_text_mentions_the_count() {
    let o = ncent(&["analyze", "builtin:dihedral:6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("|Cent(G)|       5"));
}

#[test]
fn verify_default_catalog() {
    let o = ncent(&["verify", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: SuiteReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.summary.fail, 0);
    assert_eq!(r.summary.error, 0);
    assert_eq!(r.summary.indeterminate, 0);
    assert!(r.summary.pass > 0);
}

#[test]
fn verify_is_stable_across_jobs_and_seeds_parse() {
    let one = ncent(&["verify", "--format", "json", "--jobs", "1"]);
    let four = ncent(&["verify", "--format", "json", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
    let seeded = ncent(&["verify", "--format", "json", "--seed", "0x5EED"]);
    assert_eq!(one.stdout, seeded.stdout);
    let other = ncent(&["verify", "--format", "json", "--seed", "7"]);
    assert_eq!(code(&other), 0);
    assert_ne!(one.stdout, other.stdout);
}

#[test]
fn verify_catalog_files() {
    let o = ncent(&[
        "verify",
        "--catalog",
        "tests/fixtures/small.catalog",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r: SuiteReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.summary.groups, 2);

    let o = ncent(&[
        "verify",
        "--catalog",
        "tests/fixtures/broken.catalog",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 3);
    let r: SuiteReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.summary.error, r.summary.fail), (1, 0));
    let errored: Vec<&str> = r
        .results
        .iter()
        .filter(|c| {
            c.reason
                .as_deref()
                .is_some_and(|s| s.contains("does_not_exist"))
        })
        .map(|c| c.group_name.as_str())
        .collect();
    assert_eq!(errored, ["missing"]);
}

#[test]
fn search_cent_eq_half() {
    let o = ncent(&["search", "cent_eq_half", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: SearchReport = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = r.hits.iter().map(|h| h.group.as_str()).collect();
    for g in ["A4", "E32+", "E32-", "E128+", "E128-", "Q8", "D8"] {
        assert!(names.contains(&g), "{g} missing from {names:?}");
    }
    let o = ncent(&[
        "search",
        "cent_eq_half",
        "--max-order",
        "16",
        "--format",
        "json",
    ]);
    let r: SearchReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.hits.iter().all(|h| h.order <= 16));
    assert!(r.hits.iter().any(|h| h.group == "A4"));
}

fn export_and_reload(spec: &str, dir: &Path) -> (Report, Report) {
    let file = dir.join(format!("{}.cayley", spec.replace([':', ' ', '*'], "_")));
    let file_arg = file.to_str().unwrap();
    let o = ncent(&["export", spec, file_arg]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let direct = ncent(&["analyze", spec, "--format", "json"]);
    let loaded = ncent(&["analyze", &format!("cayley:{file_arg}"), "--format", "json"]);
    (
        serde_json::from_slice(&direct.stdout).unwrap(),
        serde_json::from_slice(&loaded.stdout).unwrap(),
    )
}

#[test]
fn export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        "builtin:dihedral:6",
        "builtin:alternating:4",
        "builtin:extraspecial2:2:plus",
        "builtin:heisenberg:2:2",
        "builtin:frobenius:7:3:2",
    ] {
        let (a, b) = export_and_reload(spec, dir.path());
        assert_eq!(a.cent_count, b.cent_count, "{spec}");
        assert_eq!(a.flags, b.flags, "{spec}");
        assert_eq!(a.group, b.group, "{spec}");
    }
}

#[test]
fn permutation_files() {
    let o = ncent(&["analyze", "perm:tests/fixtures/a5.perm", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((r.order, r.cent_count), (60, 22));
}

#[test]
fn input_errors_exit_3() {
    for spec in [
        "builtin:dihedral:7",
        "builtin:klein:4",
        "cayley:tests/fixtures/out_of_range.cayley",
        "cayley:tests/fixtures/not_a_group.cayley",
        "cayley:tests/fixtures/short.cayley",
        "cayley:tests/fixtures/missing.cayley",
        "perm:tests/fixtures/non_bijective.perm",
        "builtin:frobenius:7:3:3",
    ] {
        let o = ncent(&["analyze", spec]);
        assert_eq!(code(&o), 3, "{spec}");
        assert!(!o.stderr.is_empty());
        assert!(o.stdout.is_empty());
    }
    let o = ncent(&["analyze", "cayley:tests/fixtures/out_of_range.cayley"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 8"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["verify", "--jobs", "0"],
        &["verify", "--format", "yaml"],
        &["search", "cent_lt_half"],
        &["analyze"],
        &["verify", "--seed", "zz"],
    ] {
        assert_eq!(code(&ncent(args)), 2, "{args:?}");
    }
}

#[test]
fn report_json_fuzz_seeds_round_trip() {
    let dir = manifest_dir().join("../../fuzz/corpus/report_json");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let bytes = std::fs::read(entry.unwrap().path()).unwrap();
        let r: Report = serde_json::from_slice(&bytes).unwrap();
        let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(again, r);
        seen += 1;
    }
    assert!(seen > 0);
}
