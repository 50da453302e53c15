use std::fs;
use std::process::Command;

use idbench_core::cli;
use idbench_core::harness::read_csv;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("idbench")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn ideal_run_saturates() {
    let (code, out, _) = run(&["run", "--n", "3", "--ideal"]);
    assert_eq!(code, 0);
    assert!(out.contains("B=1.000000"), "{out}");
    assert!(out.contains("F_ID=1.000000"), "{out}");
    assert!(out.contains("alpha=4.000000"), "{out}");
}

#[test]
fn preset_run_is_nonclassical() {
    let (code, out, _) = run(&["run", "--n", "4", "--preset", "chip"]);
    assert_eq!(code, 0);
    let b: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("B="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(b > 0.0 && b < 1.0);
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, err) = run(&["run", "--n", "3", "--bogus"]);
    assert_eq!(code, 1);
    assert!(err.contains("Usage"), "{err}");
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(
        run(&["run", "--n", "3", "--ideal", "--preset", "chip"]).0,
        1
    );
    assert_eq!(run(&["run", "--n", "3", "--preset", "nope"]).0, 1);
    assert_eq!(run(&["run", "--n", "12"]).0, 1);
    assert_eq!(
        run(&["report", "--kind", "b_vs_q", "--input", "/nonexistent"]).0,
        1
    );
}

#[test]
fn resource_errors_exit_two() {
    let (code, _, err) = run(&["search", "--n", "30", "--m", "6"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn validate_builtin_and_files() {
    let (code, out, _) = run(&["validate", "builtin"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.ends_with(" ok")).count(), 7);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "ID N=2 M=3 sign=1\n+1 XX\n+1 ZZ\n-1 YY\n").unwrap();
    let (code, out, _) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"), "{out}");

    let garbage = dir.path().join("garbage.txt");
    fs::write(&garbage, "ID N=2\n").unwrap();
    let (code, _, err) = run(&["validate", garbage.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn search_writes_a_parseable_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ids.txt");
    let (code, _, _) = run(&[
        "search",
        "--n",
        "4",
        "--m",
        "5",
        "--ghz",
        "--maxent",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().count() >= 1);
}

#[test]
fn sweep_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("grid.spec");
    let csv = dir.path().join("grid.csv");
    fs::write(
        &spec,
        format!(
            "n_list=3,4\nt1_preset=chip\npe_preset=chip\nt2_range=1,19\nw_range=0.05,0.5\npoints_per_axis=3\nout={}\n",
            csv.display()
        ),
    )
    .unwrap();
    let (code, _, err) = run(&["sweep", "--spec", spec.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let rows = read_csv(fs::File::open(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 2 * 3 * 3);

    let (code, out, _) = run(&[
        "report",
        "--kind",
        "b_vs_n",
        "--input",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    assert!(out.starts_with("n b_min b_median b_max\n"));

    let (code, out, _) = run(&[
        "report",
        "--kind",
        "b_vs_t2",
        "--input",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    // three T2 values for each N at the w nearest the median
    assert_eq!(out.lines().count(), 1 + 2 * 3, "{out}");

    let (code, _, err) = run(&[
        "report",
        "--kind",
        "b_vs_t1",
        "--input",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 1, "preset T1 has no numeric axis: {err}");
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_idbench");
    let ok = Command::new(exe)
        .args(["run", "--n", "3", "--ideal"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("B=1.000000"));
    let bad = Command::new(exe).args(["--nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let help = Command::new(exe).args(["--help"]).output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
