//! End-to-end tests of the `cyclav` binary: exit-status contract, JSON
//! schema stability, and agreement with direct library calls.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cyclav(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclav"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).trim().to_string()
}

fn json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn temp_path(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cyclav-cli-{tag}-{}", std::process::id()))
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let ok = cyclav(&["check", "--kind", "abelian", "--mode", "cyclic", "--exponent", "7", "1000100"]);
    assert_eq!(exit_code(&ok), 0);
    assert!(stdout(&ok).contains("avoids abelian 7-powers cyclically"));

    let bad = cyclav(&["check", "--exponent", "4", "00010011"]);
    assert_eq!(exit_code(&bad), 1);

    let circular = cyclav(&["check", "--mode", "circular", "--exponent", "4", "00010011"]);
    assert_eq!(exit_code(&circular), 0);
}

#[test]
fn check_json_matches_the_library_report() {
    let output = cyclav(&["check", "--json", "--exponent", "5", "1000100"]);
    assert_eq!(exit_code(&output), 1);
    let value = json(&output);

    let word = cyclav::word::Word::parse("1000100").unwrap();
    let expected = cyclav::avoidance::cyclic_abelian_avoids(&word, 5).unwrap().to_json();
    assert_eq!(value, expected);

    assert_eq!(value["word"], "1000100");
    assert_eq!(value["mode"], "cyclic");
    assert_eq!(value["kind"], "abelian");
    assert_eq!(value["exponent"], "5");
    assert_eq!(value["verdict"], false);
    assert_eq!(value["witness"]["start"], 0);
    assert_eq!(value["witness"]["period"], 3);
    assert_eq!(value["witness"]["exponent"], "5");
}

#[test]
fn check_golden_fractional_run() {
    // Frozen detector output: 00100 fails 5/2+ cyclically through the
    // letter run straddling the wraparound, reported at the scan ceiling.
    let output = cyclav(&[
        "check", "--json", "--kind", "ordinary", "--mode", "cyclic", "--exponent", "5/2+", "00100",
    ]);
    assert_eq!(exit_code(&output), 1);
    let value = json(&output);
    assert_eq!(value["exponent"], "5/2+");
    assert_eq!(value["witness"]["start"], 3);
    assert_eq!(value["witness"]["period"], 1);
    assert_eq!(value["witness"]["exponent"], "4");

    let word = cyclav::word::Word::parse("00100").unwrap();
    let expected = cyclav::avoidance::cyclic_ordinary_avoids(
        &word,
        cyclav::rational::rational(5, 2),
        true,
    )
    .unwrap()
    .to_json();
    assert_eq!(value, expected);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["check", "--exponent", "abc", "01"],
        vec!["check", "--kind", "abelian", "--exponent", "5/2", "01"],
        vec!["check", "--kind", "abelian", "--exponent", "4+", "01"],
        vec!["check", "--kind", "abelian", "--exponent=-2", "01"],
        vec!["check", "--kind", "abelian", "--exponent", "1", "01"],
        vec!["check", "--kind", "ordinary", "--exponent", "1", "01"],
        vec!["check", "--exponent", "2"], // no word
        vec!["check", "--exponent", "2", "01?"],
        vec!["threshold", ""],
        vec!["generate", "--alphabet", "9", "--length", "5"],
        vec!["count", "--alphabet", "2", "--length", "0", "--exponent", "4"],
        vec!["nonsense-subcommand"],
    ] {
        let output = cyclav(&args);
        assert_eq!(exit_code(&output), 2, "args {args:?}");
    }
}

#[test]
fn threshold_examples() {
    let output = cyclav(&["threshold", "1000100"]);
    assert_eq!((exit_code(&output), stdout(&output)), (0, "7".to_string()));
    assert_eq!(stdout(&cyclav(&["threshold", "0011"])), "infinity");
    assert_eq!(stdout(&cyclav(&["threshold", "01"])), "2");

    let value = json(&cyclav(&["threshold", "--json", "0011"]));
    assert_eq!(value["min_exponent"], Value::Null);
}

#[test]
fn generate_constructions() {
    let output = cyclav(&["generate", "--alphabet", "2", "--length", "17", "--verify"]);
    assert_eq!(exit_code(&output), 0);
    let word = stdout(&output);
    assert_eq!(word.len(), 17);
    assert!(word.chars().all(|c| c == '0' || c == '1'));

    assert_eq!(stdout(&cyclav(&["generate", "--alphabet", "3", "--length", "5"])), "0001#");

    // f = w̄ ⋄ w with w = "0": the diamond sits in the middle.
    let diamond = cyclav(&["generate", "--alphabet", "2", "--length", "3", "--diamond", "1"]);
    assert_eq!(stdout(&diamond), "110");

    let morphic = cyclav(&[
        "generate", "--json", "--alphabet", "2", "--length", "15", "--exponent", "4", "--verify",
    ]);
    assert_eq!(exit_code(&morphic), 0);
    let value = json(&morphic);
    assert_eq!(value["method"], "morphic_witness");
    assert_eq!(value["word"], "000100010001101");
    assert_eq!(value["verified"], true);
}

#[test]
fn count_uses_and_extends_the_results_cache() {
    let path = temp_path("results");
    let _ = std::fs::remove_file(&path);
    let args = [
        "count", "--json", "--alphabet", "2", "--length", "3", "--exponent", "4",
        "--results",
    ];
    let mut first: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    first.push(path_str);
    let output = cyclav(&first);
    let value = json(&output);
    assert_eq!(value["count"], 6);
    assert_eq!(value["cached"], false);

    let contents = std::fs::read_to_string(&path).unwrap();
    assert_eq!(contents.trim(), "2\t3\t4\t6");

    let output = cyclav(&first);
    let value = json(&output);
    assert_eq!(value["count"], 6);
    assert_eq!(value["cached"], true);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn count_plain_value() {
    assert_eq!(stdout(&cyclav(&["count", "--alphabet", "2", "--length", "3", "--exponent", "4"])), "6");
    let sym = cyclav(&[
        "count", "--alphabet", "2", "--length", "10", "--exponent", "4", "--symmetry", "--jobs", "2",
    ]);
    assert_eq!(stdout(&sym), "120");
}

#[test]
fn search_finds_and_certifies() {
    let absent = cyclav(&[
        "search", "--alphabet", "3", "--length", "5", "--kind", "ordinary", "--exponent", "2",
        "--mode", "cyclic",
    ]);
    assert_eq!(exit_code(&absent), 1);
    assert!(stdout(&absent).contains("no witness"));

    let present = cyclav(&[
        "search", "--alphabet", "3", "--length", "6", "--kind", "ordinary", "--exponent", "2",
    ]);
    assert_eq!(exit_code(&present), 0);

    let all = cyclav(&[
        "search", "--json", "--alphabet", "2", "--length", "5", "--exponent", "4", "--all",
    ]);
    let value = json(&all);
    assert_eq!(value["witnesses"].as_array().unwrap().len(), 10); // A334831(5)
}

#[test]
fn word_files_feed_check() {
    let path = temp_path("words");
    std::fs::write(&path, "% cyclic abelian-3 avoiders\n001122\n0\n").unwrap();
    let output = cyclav(&["check", "--exponent", "3", "--file", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    let lines = stdout(&output);
    assert_eq!(lines.lines().count(), 2);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn expand_applies_iterates_and_lists_factors() {
    assert_eq!(
        stdout(&cyclav(&["expand", "--morphism", "sigma3", "--min-length", "10"])),
        "000100010001101"
    );
    assert_eq!(
        stdout(&cyclav(&["expand", "--morphism", "sigma4", "--apply", "012"])),
        "0012112022"
    );

    let factors = cyclav(&["expand", "--json", "--morphism", "thue_morse", "--factors", "2"]);
    let value = json(&factors);
    let listed: Vec<&str> =
        value["factors"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(listed, vec!["0", "1", "00", "01", "10", "11"]);

    let path = temp_path("morphism");
    std::fs::write(&path, "% custom\n0 -> 01\n1 -> 10\n").unwrap();
    let custom = cyclav(&[
        "expand", "--morphism-file", path.to_str().unwrap(), "--seed", "0", "--min-length", "8",
    ]);
    assert_eq!(stdout(&custom), "01101001");
    std::fs::remove_file(&path).unwrap();

    let neither = cyclav(&["expand", "--min-length", "4"]);
    assert_eq!(exit_code(&neither), 2);
}

#[test]
fn witness_subcommands() {
    let tm = cyclav(&["tm-witness", "--length", "40"]);
    assert_eq!(exit_code(&tm), 0);
    assert_eq!(stdout(&tm).len(), 40);

    let justin = cyclav(&["justin-witness", "--length", "25", "--budget", "100000"]);
    assert_eq!(exit_code(&justin), 0);
    assert_eq!(stdout(&justin).len(), 25);

    let exhausted = cyclav(&["justin-witness", "--length", "25", "--budget", "0"]);
    assert_eq!(exit_code(&exhausted), 1);
}

#[test]
fn verify_lemmas_passes() {
    let output = cyclav(&["verify-lemmas"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output).lines().filter(|l| l.starts_with("PASS")).count(), 3);
}

#[test]
fn repro_single_criterion_table() {
    let output = cyclav(&["repro", "--criterion", "8"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("PASS"));

    let value = json(&cyclav(&["repro", "--json", "--criterion", "2", "--suite", "all"]));
    assert_eq!(value["passed"], true);
    assert_eq!(value["criteria"][0]["id"], 2);

    let out_of_range = cyclav(&["repro", "--criterion", "99"]);
    assert_eq!(exit_code(&out_of_range), 2);
}

#[test]
fn quiet_suppresses_output_but_keeps_the_verdict() {
    let output = cyclav(&["check", "--quiet", "--exponent", "5", "1000100"]);
    assert_eq!(exit_code(&output), 1);
    assert!(stdout(&output).is_empty());
}

/// The full reproduction table; slow, run on demand:
/// `cargo test -p cyclav-cli --test cli -- --ignored`.
#[test]
#[ignore = "runs the whole fast suite through the binary"]
fn repro_fast_suite_passes() {
    let output = cyclav(&["repro", "--suite", "fast"]);
    assert_eq!(exit_code(&output), 0, "stdout: {}", stdout(&output));
    assert_eq!(stdout(&output).matches("PASS").count(), 13);
}
