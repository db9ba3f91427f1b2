//! In-process runs of the command line, pinned against files in `golden/`.
//! Regenerate a golden only after checking the diff by hand.

use std::fs;
use std::path::PathBuf;

use lehmer_cli::{run, EXIT_DISCREPANCY, EXIT_ERROR, EXIT_OK};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn lehmer(args: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lehmer").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[track_caller]
fn pinned(args: &str, code: i32, name: &str) {
    let r = lehmer(args);
    assert_eq!(r.code, code, "`{args}` stderr: {}", r.err);
    assert_eq!(r.out, golden(name), "`{args}` drifted from golden/{name}");
}

#[test]
fn goldens() {
    pinned("u -1 -5 5", EXIT_OK, "u_text.txt");
    pinned("seq psi -2 --format json", EXIT_OK, "seq_json.txt");
    pinned("check 5 1 5 --format json", EXIT_OK, "check_json.txt");
    pinned("check -1 -5 5", EXIT_OK, "check_text.txt");
    pinned("check -1 -5 5 --format tsv", EXIT_OK, "check_tsv.txt");
    pinned("verify 4 --bound 10", EXIT_DISCREPANCY, "verify4_text.txt");
    pinned("verify 4 --bound 10 --format tsv", EXIT_DISCREPANCY, "verify4_tsv.txt");
    pinned("verify 4 --bound 10 --format json", EXIT_DISCREPANCY, "verify4_json.txt");
    pinned("family 5 --bound 7 --format tsv", EXIT_OK, "family5_tsv.txt");
    pinned("family 5 --bound 7 --format json", EXIT_OK, "family5_json.txt");
    pinned("search 5 --bound 7 --format tsv", EXIT_OK, "search5_tsv.txt");
    pinned("search 12 --bound 5 --format json", EXIT_OK, "search12_json.txt");
    pinned("audit --format tsv", EXIT_OK, "audit_tsv.txt");
}

#[test]
fn plain_answers() {
    assert_eq!(lehmer("u -1 -5 5").out, "5\n");
    assert_eq!(lehmer("seq psi -2").out, "3\n");
    assert_eq!(lehmer("seq zeta3 1").out, "5\n");
    assert_eq!(lehmer("pq 5 1").out, "5 1\n");
    assert_eq!(lehmer("ab 5 1").out, "5 1\n");
    assert_eq!(lehmer("u 1 5 30").out, "832040\n");
}

#[test]
fn json_is_one_document_with_string_integers() {
    let r = lehmer("check 5 1 5 --format json");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["defective"], false);
    assert_eq!(v["primitive_primes"], serde_json::json!(["11"]));
    assert_eq!(v["u_n"], "11");
    // beyond 64 bits
    let r = lehmer("u 1 5 120 --format json");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["u_n"], "5358359254990966640871840");
}

#[test]
fn tsv_starts_with_header() {
    for args in ["u 1 5 3", "check 5 1 5", "family 8 --bound 100", "search 8 --bound 100", "audit"] {
        let r = lehmer(&format!("{args} --format tsv"));
        let first = r.out.lines().next().unwrap();
        assert!(first.starts_with('#'), "{args}: {first}");
        assert!(r.out.lines().skip(1).all(|l| !l.is_empty()), "{args}");
    }
}

#[test]
fn exact_verify_exits_zero() {
    let r = lehmer("verify 5 --bound 100");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.ends_with("result                EXACT\n"));
}

#[test]
fn errors_exit_one() {
    for args in ["u 2 2 5", "check 1 1 5", "verify 7 --bound 10", "search 9", "family 2", "seq omega 1", "seq phi -3", "check 5 1 2", "u 1", "bogus"] {
        let r = lehmer(args);
        assert_eq!(r.code, EXIT_ERROR, "{args}");
        assert!(r.out.is_empty(), "{args}");
        assert!(!r.err.is_empty(), "{args}");
    }
    assert!(lehmer("u 2 2 5").err.contains("ZeroQ"));
}

#[test]
fn help_goes_to_stdout() {
    let r = lehmer("--help");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("verify"));
}

#[test]
fn checkpointed_search_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("s.ckpt");
    let ck = state.to_str().unwrap();
    let whole = lehmer("search 8 --bound 900 --format json");
    let first = lehmer(&format!("search 8 --bound 900 --chunk-size 100 --checkpoint {ck} --max-chunks 4 --format json"));
    let v: serde_json::Value = serde_json::from_str(&first.out).unwrap();
    assert_eq!(v["status"], "interrupted");
    assert_eq!(v["completed_chunks"], 4);
    assert_eq!(v["total_chunks"], 9);
    let rest = lehmer(&format!("search 8 --bound 900 --chunk-size 100 --checkpoint {ck} --format json"));
    assert_eq!(rest.out, whole.out);
    // a different scan may not reuse the file
    let other = lehmer(&format!("search 8 --bound 901 --chunk-size 100 --checkpoint {ck}"));
    assert_eq!(other.code, EXIT_ERROR);
    assert!(lehmer("search 8 --max-chunks 2").code == EXIT_ERROR);
}
