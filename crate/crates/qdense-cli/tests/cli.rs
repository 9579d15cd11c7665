//! Black-box checks of the command line: documented examples, exit codes,
//! CSV output, and the oracle-to-bound JSON pipeline.

use assert_cmd::Command;
use qdense::exact::{int, parse_rational, rat};
use serde_json::Value;
use std::fs;

fn qdense_bin() -> Command {
    Command::cargo_bin("qdense").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = qdense_bin().args(args).assert().success();
    String::from_utf8(out.get_output().stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).unwrap()
}

const SPREAD_FAMILY: &str = r#"{"q":2,"p":2,"e":1,"N":5,"members":[
 [[1,0,0,0,0],[0,1,0,0,0]],
 [[0,0,1,0,0],[0,0,0,1,0]],
 [[0,0,0,0,1],[1,0,1,0,0]],
 [[0,1,0,1,0],[1,0,0,1,1]],
 [[0,1,0,0,1],[1,0,1,1,0]]]}"#;

const SIX_ROW_CODE: &str = r#"{"q":2,"p":2,"e":1,"n":3,"m":3,"rows":[
 [1,0,0,0,1,0,0,0,1],
 [0,1,0,0,0,1,1,1,0],
 [0,0,1,1,1,0,0,1,1],
 [1,0,0,0,0,1,0,1,1],
 [0,1,0,1,1,0,1,1,1],
 [0,0,1,0,1,1,1,0,1]]}"#;

const TWO_BY_TWO_CODE: &str = r#"{"q":2,"p":2,"e":1,"n":2,"m":2,"rows":[[1,0,0,1],[0,1,1,1]]}"#;

#[test]
fn documented_compute_examples() {
    assert_eq!(stdout_of(&["compute", "qbinom", "--a", "5", "--b", "3", "--q", "2"]), "155\n");
    assert_eq!(
        stdout_of(&["compute", "nu", "--N", "5", "--k", "3", "--l", "0", "--q", "2"]),
        "51\n"
    );
    assert_eq!(
        stdout_of(&["compute", "theta", "--n", "3", "--u", "1", "--i", "1", "--q", "2"]),
        "7\n"
    );
    assert_eq!(
        stdout_of(&["compute", "tau", "--r", "2", "--k", "1", "--N", "3", "--q", "2"]),
        "48\n"
    );
    assert_eq!(
        stdout_of(&["compute", "ball", "--n", "2", "--m", "2", "--r", "1", "--q", "2"]),
        "10\n"
    );
}

#[test]
fn interval_outputs_enclose_and_invert_each_other() {
    let pi = json_of(&["compute", "pi", "--q", "2"]);
    let phi = json_of(&["compute", "phi", "--q", "2"]);
    assert_eq!(pi["decimal"], "3.462746619444");
    assert_eq!(phi["decimal"], "0.288788095117");
    let bound = |v: &Value, key: &str| parse_rational(v[key].as_str().unwrap()).unwrap();
    let (pl, ph) = (bound(&pi, "lo"), bound(&pi, "hi"));
    let (fl, fh) = (bound(&phi, "lo"), bound(&phi, "hi"));
    let eps = rat(1, 1_000_000_000);
    assert!(pl < ph && &ph - &pl <= eps);
    assert!(fl < fh && &fh - &fl <= eps);
    // the two series outputs are reciprocal: their product brackets 1
    assert!(&pl * &fl <= rat(1, 1) && rat(1, 1) <= &ph * &fh);
}

#[test]
fn unknown_flag_is_a_usage_error() {
    qdense_bin()
        .args(["compute", "qbinom", "--a", "5", "--b", "3", "--q", "2", "--bogus"])
        .assert()
        .code(2);
}

#[test]
fn precondition_failures_exit_three() {
    qdense_bin()
        .args(["compute", "nu", "--N", "2", "--k", "1", "--l", "0", "--q", "2"])
        .assert()
        .code(3);
    // 6 is not 1 mod (q - 1) for q = 3
    qdense_bin()
        .args(["bound", "cone", "--size", "6", "--N", "5", "--k", "3", "--q", "3"])
        .assert()
        .code(3);
    // 6 is not a prime power
    qdense_bin()
        .args(["oracle", "theta", "--n", "3", "--u", "1", "--q", "6"])
        .assert()
        .code(3);
}

#[test]
fn exhausted_budget_exits_four() {
    qdense_bin()
        .args(["oracle", "mrd", "--n", "3", "--m", "3", "--d", "2", "--q", "2", "--budget", "10"])
        .assert()
        .code(4);
    qdense_bin()
        .args(["oracle", "mrd", "--n", "3", "--m", "3", "--d", "2", "--q", "2"])
        .env("QDENSE_BUDGET", "10")
        .assert()
        .code(4);
}

#[test]
fn figure_files_are_stable_csv() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("fig1.csv");
    let two = dir.path().join("fig2.csv");
    qdense_bin()
        .args(["figure", "fig1", "--q-list", "2,3", "--out"])
        .arg(&one)
        .assert()
        .success();
    qdense_bin()
        .args(["figure", "fig2", "--q-list", "2,3", "--out"])
        .arg(&two)
        .assert()
        .success();
    let got_one = fs::read_to_string(&one).unwrap();
    let got_two = fs::read_to_string(&two).unwrap();
    assert_eq!(
        got_one,
        "q,bound_mrd_q,bound_generic\n\
         2,0.057119330173,0.110917961672\n\
         3,0.089586066808,0.129026524495\n"
    );
    assert_eq!(
        got_two,
        "q,bound_prior_m,bound_mrd_m\n\
         2,0.002008613745,0.054826886929\n\
         3,0.017298185454,0.089213543349\n"
    );
    assert!(!got_one.contains('\r') && !got_two.contains('\r'));
}

#[test]
fn smoke_verification_passes() {
    let report = json_of(&["verify", "smoke"]);
    assert_eq!(report["level"], "smoke");
    assert_eq!(report["pass"], true);
    assert!(report["checks"].as_array().unwrap().len() > 10);
}

#[test]
fn oracle_census_feeds_the_bound_checker() {
    let dir = tempfile::tempdir().unwrap();
    let family = dir.path().join("spread.json");
    fs::write(&family, SPREAD_FAMILY).unwrap();

    let census = json_of(&[
        "oracle", "cc", "--family", family.to_str().unwrap(), "--k", "3",
    ]);
    assert_eq!(census["counts"]["complements"], "1");
    assert_eq!(census["counts"]["intersecting"], "154");
    assert_eq!(census["counts"]["total"], "155");

    // same counts when a thread pool is requested explicitly
    let threaded = json_of(&[
        "oracle", "cc", "--family", family.to_str().unwrap(), "--k", "3", "--threads", "2",
    ]);
    assert_eq!(threaded["counts"], census["counts"]);

    let profile = stdout_of(&["oracle", "profile", "--family", family.to_str().unwrap()]);
    let parsed: Value = serde_json::from_str(&profile).unwrap();
    assert_eq!(parsed["s"], 5);
    assert_eq!(parsed["counts"]["0"], "20");
    assert_eq!(parsed["counts"]["2"], "5");

    let profile_path = dir.path().join("profile.json");
    fs::write(&profile_path, &profile).unwrap();
    let bound = json_of(&["bound", "cc", "--profile", profile_path.to_str().unwrap(), "--q", "2"]);
    assert_eq!(bound["lower"]["rational"], "8281/59");
    assert_eq!(bound["upper"]["rational"], "455/1");
    // the censused count sits inside the window the bound promises
    let lower = parse_rational("8281/59").unwrap();
    assert_eq!(lower.ceil().to_integer(), int(141));
    assert!(lower <= rat(154, 1) && rat(154, 1) <= rat(455, 1));
}

#[test]
fn split_and_dual_fixtures_have_the_expected_structure() {
    let dir = tempfile::tempdir().unwrap();
    let six = dir.path().join("six.json");
    let two = dir.path().join("two.json");
    fs::write(&six, SIX_ROW_CODE).unwrap();
    fs::write(&two, TWO_BY_TWO_CODE).unwrap();

    let split = json_of(&["oracle", "split", "--code", six.to_str().unwrap()]);
    assert_eq!(split["subject"], "top-row-split");
    for factor in ["c1", "c2"] {
        assert_eq!(split[factor]["n"], 2);
        assert_eq!(split[factor]["m"], 3);
        assert_eq!(split[factor]["dim"], 3);
        assert_eq!(split[factor]["min_distance"], 2);
    }

    let dual = json_of(&["oracle", "dual", "--code", two.to_str().unwrap()]);
    assert_eq!(dual["subject"], "trace-form-dual");
    assert_eq!(dual["primal"]["dim"], 2);
    assert_eq!(dual["primal"]["min_distance"], 2);
    assert_eq!(dual["dual"]["dim"], 2);
    assert_eq!(dual["dual"]["min_distance"], 2);
    assert_eq!(dual["dual"]["rows"].as_array().unwrap().len(), 2);
}
