use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orderword")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn success(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stderr.is_empty(), "{args:?} wrote to stderr");
    stdout(&o)
}

#[test]
fn series_of_ab_at_degree_one() {
    assert_eq!(success(&["series", "aB", "--degree", "1"]).trim(), "1 + X1 - X2 + O(2)");
}

#[test]
fn series_default_degree_is_two() {
    assert_eq!(success(&["series", "aB"]).trim(), "1 + X1 - X2 - X1X2 + X2^2 + O(3)");
}

#[test]
fn compare_generators() {
    assert_eq!(success(&["compare", "a", "b"]).trim(), "a > b");
    assert_eq!(success(&["compare", "b", "a"]).trim(), "b < a");
    assert_eq!(success(&["compare", "abA", "abA"]).trim(), "abA = abA");
    assert_eq!(success(&["compare", "--swap-order", "a", "b"]).trim(), "a < b");
}

#[test]
fn decompose_commutator() {
    assert_eq!(
        success(&["decompose", "abAB"]).trim(),
        "W' = abAB (fromW), A = ab, D = AB, A unique: yes, D unique: yes"
    );
}

#[test]
fn decompose_monotonic_word_has_empty_descent() {
    let out = success(&["decompose", "aab"]);
    assert!(out.contains("D = 1"), "{out}");
}

#[test]
fn verify_prints_report() {
    let out = success(&["verify", "abAB"]);
    assert!(out.contains("anomalies: 0"), "{out}");
}

#[test]
fn weinbaum_lists_pairs() {
    let out = success(&["weinbaum", "ab"]);
    assert!(out.lines().any(|l| l == "a | b"), "{out}");
    let count: usize = out.lines().last().unwrap().strip_prefix("count=").unwrap().parse().unwrap();
    assert!(count >= 1);
    assert_eq!(out.lines().count(), count + 1);

    let out = success(&["weinbaum", "baaba"]);
    assert!(out.lines().any(|l| l == "aa | bab"), "{out}");
}

#[test]
fn weinbaum_rejects_periodic_word() {
    let o = run(&["weinbaum", "aa"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("periodic"));
}

#[test]
fn parse_error_names_character() {
    let o = run(&["compare", "a1", "b"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("'1'"));

    let o = run(&["series", "aX"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("'X'"));
}

#[test]
fn decompose_rejects_non_cyclically_reduced() {
    assert_eq!(run(&["decompose", "abA"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "abab"]).status.code(), Some(2));
}

fn summary(out: &str) -> (u64, u64) {
    let fields: Vec<&str> = out.trim().split(' ').collect();
    assert_eq!(fields.len(), 3, "{out}");
    assert!(fields[2].starts_with("seconds="));
    let n = fields[0].strip_prefix("checked=").unwrap().parse().unwrap();
    let k = fields[1].strip_prefix("anomalies=").unwrap().parse().unwrap();
    (n, k)
}

#[test]
fn campaign_rank_two_is_clean_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = success(&["campaign", "--rank", "2", "--min-len", "2", "--max-len", "6", "--out", path.to_str().unwrap()]);
    let (checked, anomalies) = summary(&out);
    assert_eq!((checked, anomalies), (2 + 4 + 9 + 24 + 58, 0));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["schema"], "orderword-report-1");
    assert_eq!(json["words_checked"], checked);
}

#[test]
fn campaign_rank_one_checks_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = success(&["campaign", "--rank", "1", "--min-len", "2", "--max-len", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(summary(&out), (0, 0));
}

#[test]
fn campaign_swapped_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = success(&[
        "campaign", "--rank", "2", "--min-len", "2", "--max-len", "2", "--swap-order", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(summary(&out).1, 0);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["order"], "magnus(X2 > X1)");
    assert_eq!(json["checks"]["monotonic_iff_empty_descent"], false);
}

#[test]
fn campaign_unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no").join("such").join("dir.json");
    let o = run(&["campaign", "--min-len", "2", "--max-len", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
