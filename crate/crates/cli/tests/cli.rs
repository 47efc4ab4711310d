//! End-to-end tests for the `selvar` binary: exit codes, CSV layout, and
//! manifest-based reproducibility.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn selvar() -> Command {
    Command::new(env!("CARGO_BIN_EXE_selvar"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    selvar()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("run selvar")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn predict_emits_the_reference_value() {
    let dir = tempfile::tempdir().unwrap();
    let x = format!("{}", (10.0f64).exp());
    let h = format!("{}", (3.0f64).exp());
    let out = run_in(
        dir.path(),
        &[
            "predict",
            "--descriptor",
            "zeta",
            "--x",
            &x,
            "--h",
            &h,
            "--out-dir",
            "o",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("o/predict.csv")).unwrap();
    assert!(csv.starts_with("statistic,parameter,value,x,main_term,normalized,regime,formula"));
    assert!(csv.contains("4.584907"), "csv = {csv}");
    assert!(dir.path().join("o/predict_manifest.json").exists());
}

#[test]
fn variance_with_empty_grid_writes_header_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "variance",
            "--descriptor",
            "zeta",
            "--x",
            "500",
            "--grid-log",
            "2:3:0",
            "--n",
            "700",
            "--out-dir",
            "o",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("o/variance.csv")).unwrap();
    assert_eq!(csv, "x,h_or_delta,value,normalized,log_x_over_h\n");
    let manifest = std::fs::read_to_string(dir.path().join("o/variance_manifest.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    assert_eq!(parsed["subcommand"], "variance");
}

#[test]
fn variance_multiplicative_statistic() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "variance",
            "--descriptor",
            "zeta",
            "--x",
            "1000",
            "--stat",
            "multiplicative",
            "--grid-log",
            "2:5:4",
            "--out-dir",
            "o",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("o/variance.csv")).unwrap();
    assert_eq!(csv.lines().count(), 5);
    let preds = std::fs::read_to_string(dir.path().join("o/predictions.csv")).unwrap();
    assert!(preds.contains("degree1"));
}

#[test]
fn variance_rerun_is_bitwise_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "variance",
        "--descriptor",
        "zeta",
        "--x",
        "2000",
        "--grid-log",
        "1:5:9",
        "--out-dir",
        "o",
    ];
    assert!(run_in(dir.path(), &args).status.success());
    let first = std::fs::read(dir.path().join("o/variance.csv")).unwrap();
    assert!(run_in(dir.path(), &args).status.success());
    let second = std::fs::read(dir.path().join("o/variance.csv")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn unknown_subcommand_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_config_exits_2_and_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.conf");
    std::fs::write(
        &cfg,
        "kind = elliptic_curve\na1=0\na2=0\na3=1\na4=-1\na6=0\n",
    )
    .unwrap();
    let out = run_in(
        dir.path(),
        &[
            "coeffs",
            "--descriptor",
            cfg.to_str().unwrap(),
            "--n",
            "100",
            "--out-dir",
            "o",
        ],
    );
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("conductor"), "stderr: {err}");
}

#[test]
fn bad_grid_spec_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "variance",
            "--descriptor",
            "zeta",
            "--x",
            "500",
            "--grid-log",
            "oops",
            "--out-dir",
            "o",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_fast_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["selftest", "--fast"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("checks passed"));
}

#[test]
fn coeffs_exports_lambda_csv_and_uses_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "coeffs",
            "--descriptor",
            "ec37",
            "--n",
            "200",
            "--lambda-csv",
            "lam.csv",
            "--cache-dir",
            "cache",
            "--out-dir",
            "o",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("lam.csv")).unwrap();
    // Lambda(4) = (a^2 - 2) log 2 with a = -sqrt(2): exactly 0 for this curve
    let line4 = csv.lines().nth(4).unwrap();
    assert!(line4.starts_with("4,"), "{line4}");
    let cache_files: Vec<PathBuf> = std::fs::read_dir(dir.path().join("cache"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(cache_files.len(), 1);
    assert!(cache_files[0]
        .file_name()
        .unwrap()
        .to_str()
        .unwrap()
        .starts_with("ec37_p"));
}

#[test]
fn paircorr_and_explicit_run_on_a_small_list() {
    let dir = tempfile::tempdir().unwrap();
    let zeros = dir.path().join("z.txt");
    std::fs::write(
        &zeros,
        "# three ordinates\n14.134725\n21.022040\n25.010858\n",
    )
    .unwrap();
    let out = run_in(
        dir.path(),
        &[
            "paircorr",
            "--descriptor",
            "zeta",
            "--zeros",
            zeros.to_str().unwrap(),
            "--reflect",
            "--x",
            "25.0",
            "--t",
            "26.0",
            "--prime-cutoff",
            "20000",
            "--euler-profile",
            "--g-profile-t",
            "0.0",
            "--out-dir",
            "o",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("o/paircorr.csv")).unwrap();
    assert!(csv.starts_with("x,t,f,f_tilde,prediction,ratio"));
    assert_eq!(csv.lines().count(), 2);
    let factors = std::fs::read_to_string(dir.path().join("o/euler_factors.csv")).unwrap();
    assert_eq!(factors.lines().count(), 18); // header + 17 r values
    let profile = std::fs::read_to_string(dir.path().join("o/rcs_profile.csv")).unwrap();
    assert_eq!(profile.lines().count(), 61);

    let out = run_in(
        dir.path(),
        &[
            "explicit",
            "--descriptor",
            "zeta",
            "--zeros",
            zeros.to_str().unwrap(),
            "--reflect",
            "--count",
            "5",
            "--x-min",
            "50",
            "--x-max",
            "200",
            "--out-dir",
            "o",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("o/explicit.csv")).unwrap();
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn hl_emits_singular_series_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "hl",
            "--x",
            "2000",
            "--kmax",
            "12",
            "--prime-cutoff",
            "10000",
            "--out-dir",
            "o",
        ],
    );
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("o/hardy_littlewood.csv")).unwrap();
    assert!(csv.starts_with("k,singular_series,autocorrelation_per_x,ratio"));
    assert_eq!(csv.lines().count(), 13);
    // odd k rows carry an exactly-zero singular series
    let k3 = csv.lines().nth(3).unwrap();
    assert!(k3.starts_with("3,0"), "{k3}");
}

#[test]
fn descending_zero_file_is_rejected_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let zeros = dir.path().join("bad.txt");
    std::fs::write(&zeros, "14.1\n13.9\n").unwrap();
    let out = run_in(
        dir.path(),
        &[
            "paircorr",
            "--descriptor",
            "zeta",
            "--zeros",
            zeros.to_str().unwrap(),
            "--x",
            "10",
            "--t",
            "20",
            "--out-dir",
            "o",
        ],
    );
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn tauberian_subcommand_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["tauberian", "--out-dir", "o"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let csv = std::fs::read_to_string(dir.path().join("o/tauberian.csv")).unwrap();
    assert!(csv.lines().count() > 5);
    assert!(!csv.contains(",fail"));
}
