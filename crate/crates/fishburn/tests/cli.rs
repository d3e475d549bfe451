//! Behaviour of the command-line surface: text formats round-trip, output
//! is deterministic, and exit codes follow the 0/1/2 convention.

use fishburn::bijection::from_sequence;
use fishburn::enumeration::{all_ascent_sequences, all_matrices};
use fishburn::matrices::FishburnMatrix;
use fishburn::sequences::{AscentSequence, StatPolynomial};
use fishburn::subclasses::{matrix_to_partition, paren_to_blocks, OCPartition, ParenRep};

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = fishburn::cli::run(&args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn text_forms_round_trip_over_all_small_objects() {
    for n in 1..=6 {
        for x in all_ascent_sequences(n) {
            let parsed: AscentSequence = x.to_string().parse().unwrap();
            assert_eq!(parsed, x);
        }
        for a in all_matrices(n) {
            let parsed: FishburnMatrix = a.to_string().parse().unwrap();
            assert_eq!(parsed, a);
            let poly = a.row_sum_polynomial();
            let parsed: StatPolynomial = poly.to_string().parse().unwrap();
            assert_eq!(parsed, poly);
        }
        for b in all_matrices(n).filter(|m| m.is_bidiagonal()) {
            let rep = matrix_to_partition(&b).unwrap();
            let parsed: ParenRep = rep.to_string().parse().unwrap();
            assert_eq!(parsed, rep);
            let blocks = paren_to_blocks(&rep);
            let parsed: OCPartition = blocks.to_string().parse().unwrap();
            assert_eq!(parsed, blocks);
        }
    }
}

#[test]
fn enumerate_is_deterministic_and_jobs_invariant() {
    let (code, first, _) = run_cli(&["enumerate", "--kind", "seq", "--n", "5"]);
    assert_eq!(code, 0);
    let (_, second, _) = run_cli(&["enumerate", "--kind", "seq", "--n", "5"]);
    assert_eq!(first, second);
    let (_, parallel, _) = run_cli(&["enumerate", "--kind", "seq", "--n", "5", "--jobs", "2"]);
    assert_eq!(first, parallel);
    assert_eq!(first.lines().count(), 53);
    let (_, mats, _) = run_cli(&["enumerate", "--kind", "mat", "--n", "3"]);
    assert_eq!(mats.lines().count(), 5);
    assert!(mats.lines().any(|l| l == "3"));
    assert!(mats.lines().any(|l| l == "1,0,0;0,1,0;0,0,1"));
}

#[test]
fn count_and_dist_with_jobs() {
    let (code, out, _) = run_cli(&["count", "--n", "6", "--jobs", "2"]);
    assert_eq!((code, out.as_str()), (0, "217\n"));
    let (code, out, _) = run_cli(&["count", "--n", "6", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"count\":217,\"n\":6}\n");
    let (_, plain, _) = run_cli(&["dist", "--stat", "rmax_hat", "--n", "6"]);
    let (_, threaded, _) = run_cli(&["dist", "--stat", "rmax_hat", "--n", "6", "--jobs", "2"]);
    assert_eq!(plain, threaded);
}

#[test]
fn trace_lists_rules_per_step() {
    let (code, out, _) = run_cli(&["trace", "0,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "- 0 1\nAdd2 1 1,0;0,1\nAdd1 0 1,1;0,1\n");
    let (code, out, _) = run_cli(&["trace", "0,1,2", "--format", "json"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("matrix").is_some());
    }
}

#[test]
fn check_json_lines_parse_and_pass() {
    let (code, out, _) = run_cli(&["check", "--theorems", "--n-max", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let mut seen = 0;
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], serde_json::Value::Bool(true), "{line}");
        seen += 1;
    }
    assert!(seen >= 20);
}

#[test]
fn conjecture_prints_one_row_per_weight() {
    let (code, out, _) = run_cli(&["conjecture", "--n-max", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n=1 match\nn=2 match\nn=3 match\nn=4 match\n");
}

#[test]
fn partition_verbs_round_trip_through_text() {
    let (code, out, _) = run_cli(&["partition", "to-matrix", "{1,2,3},{4,9},{5},{6,7},{8}"]);
    assert_eq!(code, 0);
    let matrix_text = out.trim().to_string();
    let (code, out, _) = run_cli(&["partition", "from-matrix", &matrix_text]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("(123)(4(5)(67)(8)9)"));
    assert_eq!(lines.next(), Some("{1,2,3},{4,9},{5},{6,7},{8}"));

    let (code, out, _) = run_cli(&["partition", "from-matrix", "2,0;0,1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["paren"], "(12)(3)");

    // A non-order-consecutive input is an input error, not a panic.
    let (code, _, err) = run_cli(&["partition", "to-matrix", "{1,3},{2,4}"]);
    assert_eq!(code, 2);
    assert!(err.contains("order-consecutive"));
    // Non-bidiagonal matrices are rejected.
    let (code, _, err) = run_cli(&["partition", "from-matrix", "1,0,1;0,1,0;0,0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("bidiagonal"));
}

#[test]
fn explore_tables() {
    let (code, out, _) = run_cli(&["explore", "flip", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "0,0,0\t0,0,0\n0,0,1\t0,1,1\n0,1,0\t0,1,0\n0,1,1\t0,0,1\n0,1,2\t0,1,2\n"
    );
    let (code, out, _) = run_cli(&["explore", "sum", "--n", "2", "--m", "2"]);
    assert_eq!(code, 0);
    // Weight-2 objects: 0,0 (dimension 1) and 0,1 (dimension 2); only
    // matching dimensions combine.
    assert_eq!(out, "0,0\t0,0\t0,0,0,0\n0,1\t0,1\t0,0,1,1\n");
    let (code, _, err) = run_cli(&["explore", "sum", "0,0", "0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("dimensions differ"));
}

#[test]
fn validate_emits_canonical_forms() {
    let (code, out, _) = run_cli(&["validate", "--kind", "mat", r#"{"rows": [[1,1],[0,1]]}"#]);
    assert_eq!((code, out.as_str()), (0, "1,1;0,1\n"));
    let (code, out, _) = run_cli(&["validate", "--kind", "seq", "0,1,2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"entries\":[0,1,2]}\n");
    let (code, _, err) = run_cli(&["validate", "--kind", "mat", "1,1;0,0"]);
    assert_eq!(code, 1);
    assert!(err.contains("row 2"));
}

#[test]
fn stats_cover_both_kinds() {
    let (code, seq_out, _) = run_cli(&["stats", "--kind", "seq", "0,1,0"]);
    assert_eq!(code, 0);
    let (code, mat_out, _) = run_cli(&["stats", "--kind", "mat", "1,1;0,1"]);
    assert_eq!(code, 0);
    // The matrix is the encoding of the sequence, so the tables agree.
    assert_eq!(seq_out, mat_out);
    assert!(seq_out.lines().any(|l| l == "zeros\t2"));
    assert!(seq_out.lines().any(|l| l == "dim\t2"));
    assert!(seq_out.lines().any(|l| l == "row1_last_positive\t1"));
}

#[test]
fn help_is_available() {
    let (code, out, _) = run_cli(&["help"]);
    assert_eq!(code, 0);
    assert!(out.contains("usage: fishburn"));
}

#[test]
fn json_output_is_stable_per_object() {
    for n in 1..=4 {
        for x in all_ascent_sequences(n) {
            let a = from_sequence(&x);
            let (code, out, _) = run_cli(&["gamma", &a.to_string(), "--format", "json"]);
            assert_eq!(code, 0);
            let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
            let entries: Vec<usize> = v["entries"]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| e.as_u64().unwrap() as usize)
                .collect();
            assert_eq!(entries, x.entries());
        }
    }
}
