use std::fs;

use lehmer_core::harness::{run_search, HarnessError, SearchConfig, SearchOutcome};

fn complete(outcome: SearchOutcome) -> Vec<(i64, i64)> {
    match outcome {
        SearchOutcome::Complete(r) => r.pairs,
        other => panic!("expected a complete run, got {other:?}"),
    }
}

#[test]
fn interrupted_run_resumes_to_same_result() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("n5.ckpt");
    let base = SearchConfig::new(5, 1200).chunk_size(100);
    let want = complete(run_search(&base).unwrap());

    let staged = base.clone().checkpoint(&state).chunk_limit(4);
    assert_eq!(
        run_search(&staged).unwrap(),
        SearchOutcome::Interrupted { completed_chunks: 4, total_chunks: 12 }
    );
    assert_eq!(
        run_search(&staged).unwrap(),
        SearchOutcome::Interrupted { completed_chunks: 8, total_chunks: 12 }
    );
    let resumed = base.clone().checkpoint(&state).jobs(3);
    assert_eq!(complete(run_search(&resumed).unwrap()), want);
    // a finished checkpoint answers without rescanning
    assert_eq!(complete(run_search(&resumed).unwrap()), want);
}

#[test]
fn torn_tail_and_orphan_hits_are_discarded() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("n8.ckpt");
    let base = SearchConfig::new(8, 600).chunk_size(50);
    let want = complete(run_search(&base).unwrap());
    run_search(&base.clone().checkpoint(&state).chunk_limit(3)).unwrap();

    // simulate a crash mid-chunk: a stray hit and half a chunk line
    let hits = dir.path().join("n8.ckpt.hits");
    let mut h = fs::read_to_string(&hits).unwrap();
    h.push_str("170\t-2\n");
    fs::write(&hits, h).unwrap();
    let mut s = fs::read_to_string(&state).unwrap();
    s.push_str("8\t151\t2");
    fs::write(&state, s).unwrap();

    assert_eq!(complete(run_search(&base.clone().checkpoint(&state)).unwrap()), want);
}

#[test]
fn mismatched_checkpoint_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("x.ckpt");
    run_search(&SearchConfig::new(5, 300).checkpoint(&state).chunk_limit(1)).unwrap();
    let err = run_search(&SearchConfig::new(5, 400).checkpoint(&state)).unwrap_err();
    assert!(matches!(err, HarnessError::CheckpointMismatch(_)), "{err}");
    let err = run_search(&SearchConfig::new(10, 300).checkpoint(&state)).unwrap_err();
    assert!(matches!(err, HarnessError::CheckpointMismatch(_)), "{err}");
}

#[test]
fn count_mismatch_is_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("c.ckpt");
    let cfg = SearchConfig::new(3, 200).chunk_size(100);
    run_search(&cfg.clone().checkpoint(&state).chunk_limit(1)).unwrap();
    fs::write(dir.path().join("c.ckpt.hits"), "").unwrap();
    let err = run_search(&cfg.checkpoint(&state)).unwrap_err();
    assert!(matches!(err, HarnessError::CheckpointCorrupt(_)), "{err}");
}
