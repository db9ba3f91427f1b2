use std::path::PathBuf;
use std::sync::Mutex;

use rayon::prelude::*;

use super::checkpoint::{ChunkRange, CheckpointWriter};
use super::kernel;
use super::HarnessError;
use crate::is_supported_n;

pub const DEFAULT_CHUNK_SIZE: u64 = 250;

/// Canonical `(a, b)` pairs, `a > 0`, that are n-defective with
/// `max(|a|, |b|) <= bound`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: u32,
    pub bound: u64,
    pub pairs: Vec<(i64, i64)>,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: u32,
    pub bound: u64,
    pub jobs: usize,
    pub chunk_size: u64,
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many newly scanned chunks (for staged or interrupted runs).
    pub chunk_limit: Option<usize>,
}

impl SearchConfig {
    pub fn new(n: u32, bound: u64) -> Self {
        SearchConfig {
            n,
            bound,
            jobs: 1,
            chunk_size: DEFAULT_CHUNK_SIZE,
            checkpoint: None,
            chunk_limit: None,
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn chunk_size(mut self, size: u64) -> Self {
        self.chunk_size = size.max(1);
        self
    }

    pub fn checkpoint(mut self, path: impl Into<PathBuf>) -> Self {
        self.checkpoint = Some(path.into());
        self
    }

    pub fn chunk_limit(mut self, limit: usize) -> Self {
        self.chunk_limit = Some(limit);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Complete(SearchResult),
    Interrupted { completed_chunks: usize, total_chunks: usize },
}

/// Largest bound the word-sized grid accepts.
pub const MAX_BOUND: u64 = 1 << 40;

pub(crate) fn chunks(bound: u64, chunk_size: u64) -> Vec<ChunkRange> {
    let bound = bound as i64;
    let size = chunk_size as i64;
    let mut out = Vec::new();
    let mut a = 1;
    while a <= bound {
        let a_to = (a + size - 1).min(bound);
        out.push(ChunkRange { a_from: a, a_to });
        a = a_to + 1;
    }
    out
}

fn scan_chunk(n: u32, bound: i64, chunk: ChunkRange) -> Vec<(i64, i64)> {
    let mut hits = Vec::new();
    for a in chunk.a_from..=chunk.a_to {
        // smallest b >= -bound with b = a (mod 4)
        let b0 = -bound + (a + bound).rem_euclid(4);
        let mut b = b0;
        while b <= bound {
            if kernel::is_hit(a, b, n) {
                hits.push((a, b));
            }
            b += 4;
        }
    }
    hits
}

pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutcome, HarnessError> {
    if !is_supported_n(cfg.n) {
        return Err(HarnessError::UnsupportedN(cfg.n));
    }
    if cfg.bound > MAX_BOUND {
        return Err(HarnessError::BoundTooLarge(cfg.bound));
    }
    let all = chunks(cfg.bound, cfg.chunk_size);
    let (writer, loaded) = match &cfg.checkpoint {
        Some(path) => {
            let (w, l) = CheckpointWriter::open(path, cfg.n, cfg.bound, cfg.chunk_size, &all)?;
            (Some(Mutex::new(w)), l)
        }
        None => (None, Default::default()),
    };
    let mut pending: Vec<ChunkRange> = all
        .iter()
        .filter(|c| !loaded.done.contains_key(&c.a_from))
        .copied()
        .collect();
    let mut interrupted = false;
    if let Some(limit) = cfg.chunk_limit {
        if pending.len() > limit {
            pending.truncate(limit);
            interrupted = true;
        }
    }
    let bound = cfg.bound as i64;
    let n = cfg.n;
    let work = |chunk: ChunkRange| -> Result<(i64, Vec<(i64, i64)>), HarnessError> {
        let hits = scan_chunk(n, bound, chunk);
        if let Some(w) = &writer {
            w.lock().unwrap().record(chunk, &hits)?;
        }
        Ok((chunk.a_from, hits))
    };
    let fresh: Vec<(i64, Vec<(i64, i64)>)> = if cfg.jobs <= 1 {
        pending.iter().map(|c| work(*c)).collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| HarnessError::ThreadPool(e.to_string()))?;
        pool.install(|| pending.par_iter().map(|c| work(*c)).collect::<Result<_, _>>())?
    };
    if interrupted {
        return Ok(SearchOutcome::Interrupted {
            completed_chunks: loaded.done.len() + fresh.len(),
            total_chunks: all.len(),
        });
    }
    let mut by_start = loaded.done;
    by_start.extend(fresh);
    let pairs = by_start.into_values().flatten().collect();
    Ok(SearchOutcome::Complete(SearchResult {
        n: cfg.n,
        bound: cfg.bound,
        pairs,
    }))
}

/// Single-threaded scan of the canonical grid `0 < a <= bound`, `|b| <= bound`.
pub fn search_defective(n: u32, bound: u64) -> Result<SearchResult, HarnessError> {
    search_with_jobs(n, bound, 1)
}

pub fn search_with_jobs(n: u32, bound: u64, jobs: usize) -> Result<SearchResult, HarnessError> {
    match run_search(&SearchConfig::new(n, bound).jobs(jobs))? {
        SearchOutcome::Complete(r) => Ok(r),
        SearchOutcome::Interrupted { .. } => unreachable!("no chunk limit set"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunking_covers_axis() {
        let c = chunks(1000, 250);
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], ChunkRange { a_from: 1, a_to: 250 });
        assert_eq!(c[3].a_to, 1000);
        let c = chunks(7, 3);
        assert_eq!(c.iter().map(|r| (r.a_from, r.a_to)).collect::<Vec<_>>(), vec![(1, 3), (4, 6), (7, 7)]);
        assert!(chunks(0, 5).is_empty());
    }

    #[test]
    fn grid_rows_respect_congruence_and_bound() {
        // with n = 3 many points hit; all must be canonical, in range and congruent
        let r = search_defective(3, 40).unwrap();
        assert!(!r.pairs.is_empty());
        for &(a, b) in &r.pairs {
            assert!(a > 0 && a <= 40 && b.abs() <= 40 && (a - b) % 4 == 0);
        }
        assert!(r.pairs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_examples() {
        assert!(search_defective(5, 3).unwrap().pairs.is_empty());
        assert_eq!(
            search_defective(5, 7).unwrap().pairs,
            vec![(1, -7), (1, 5), (3, -5), (5, -3), (7, -5)]
        );
        let twelve = search_defective(12, 5).unwrap().pairs;
        assert!(twelve.contains(&(1, 5)) && twelve.contains(&(5, 1)));
        assert!(matches!(search_defective(7, 5), Err(HarnessError::UnsupportedN(7))));
    }

    #[test]
    fn chunk_size_and_jobs_do_not_change_result() {
        let base = search_defective(8, 300).unwrap();
        for (jobs, size) in [(1, 7), (3, 50), (4, 1000)] {
            let cfg = SearchConfig::new(8, 300).jobs(jobs).chunk_size(size);
            assert_eq!(run_search(&cfg).unwrap(), SearchOutcome::Complete(base.clone()));
        }
    }
}
