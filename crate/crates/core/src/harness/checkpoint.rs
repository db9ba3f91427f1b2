//! Resumable record of a grid scan.
//!
//! The state file starts with one `#` header line naming the scan, followed
//! by one line per completed chunk: `n<TAB>a_from<TAB>a_to<TAB>hit-count`.
//! Hits go to a sibling file (`<state>.hits`), one `a<TAB>b` line each, and
//! are written before the chunk line that covers them. On load, hits outside
//! completed chunks are dropped and per-chunk counts must match.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChunkRange {
    pub a_from: i64,
    pub a_to: i64,
}

pub(crate) fn hits_path(state: &Path) -> PathBuf {
    let mut s = state.as_os_str().to_owned();
    s.push(".hits");
    PathBuf::from(s)
}

fn header(n: u32, bound: u64, chunk_size: u64) -> String {
    format!("# lehmer-search n={n} bound={bound} chunk={chunk_size}")
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Completed chunks and their hits, keyed by chunk start.
#[derive(Debug, Default)]
pub(crate) struct Loaded {
    pub done: BTreeMap<i64, Vec<(i64, i64)>>,
}

pub(crate) struct CheckpointWriter {
    n: u32,
    state_path: PathBuf,
    hits_path: PathBuf,
    state: BufWriter<File>,
    hits: BufWriter<File>,
}

impl CheckpointWriter {
    /// Opens (or creates) the checkpoint at `path`, returning what earlier
    /// runs completed.
    pub fn open(
        path: &Path,
        n: u32,
        bound: u64,
        chunk_size: u64,
        chunks: &[ChunkRange],
    ) -> Result<(CheckpointWriter, Loaded), HarnessError> {
        let hits_file = hits_path(path);
        let loaded = if path.exists() {
            load(path, &hits_file, n, bound, chunk_size, chunks)?
        } else {
            fs::write(path, header(n, bound, chunk_size) + "\n").map_err(io_err(path))?;
            Loaded::default()
        };
        // Rewrite hits so orphans from an interrupted chunk disappear.
        let mut body = String::new();
        for hits in loaded.done.values() {
            for (a, b) in hits {
                body.push_str(&format!("{a}\t{b}\n"));
            }
        }
        fs::write(&hits_file, body).map_err(io_err(&hits_file))?;
        let state = OpenOptions::new().append(true).open(path).map_err(io_err(path))?;
        let hits = OpenOptions::new()
            .append(true)
            .open(&hits_file)
            .map_err(io_err(&hits_file))?;
        Ok((
            CheckpointWriter {
                n,
                state_path: path.to_path_buf(),
                hits_path: hits_file,
                state: BufWriter::new(state),
                hits: BufWriter::new(hits),
            },
            loaded,
        ))
    }

    pub fn record(&mut self, chunk: ChunkRange, hits: &[(i64, i64)]) -> Result<(), HarnessError> {
        for (a, b) in hits {
            writeln!(self.hits, "{a}\t{b}").map_err(io_err(&self.hits_path))?;
        }
        self.hits.flush().map_err(io_err(&self.hits_path))?;
        writeln!(self.state, "{}\t{}\t{}\t{}", self.n, chunk.a_from, chunk.a_to, hits.len())
            .map_err(io_err(&self.state_path))?;
        self.state.flush().map_err(io_err(&self.state_path))
    }
}

fn parse_i64(s: &str, what: &str, line: &str) -> Result<i64, HarnessError> {
    s.parse()
        .map_err(|_| HarnessError::CheckpointCorrupt(format!("bad {what} in line {line:?}")))
}

fn load(
    path: &Path,
    hits_file: &Path,
    n: u32,
    bound: u64,
    chunk_size: u64,
    chunks: &[ChunkRange],
) -> Result<Loaded, HarnessError> {
    let reader = BufReader::new(File::open(path).map_err(io_err(path))?);
    let mut lines = reader.lines();
    let first = lines
        .next()
        .transpose()
        .map_err(io_err(path))?
        .unwrap_or_default();
    let want = header(n, bound, chunk_size);
    if first != want {
        return Err(HarnessError::CheckpointMismatch(format!(
            "{} was written by {first:?}, expected {want:?}",
            path.display()
        )));
    }
    let by_start: BTreeMap<i64, ChunkRange> = chunks.iter().map(|c| (c.a_from, *c)).collect();
    let mut counts: BTreeMap<i64, (ChunkRange, usize)> = BTreeMap::new();
    for line in lines {
        let line = line.map_err(io_err(path))?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            // a torn final line from an interrupted write
            continue;
        }
        let line_n = parse_i64(fields[0], "n", &line)?;
        let a_from = parse_i64(fields[1], "a_from", &line)?;
        let a_to = parse_i64(fields[2], "a_to", &line)?;
        let count = parse_i64(fields[3], "hit-count", &line)? as usize;
        let expected = by_start.get(&a_from);
        if line_n != i64::from(n) || expected.map(|c| c.a_to) != Some(a_to) {
            return Err(HarnessError::CheckpointMismatch(format!(
                "chunk line {line:?} does not match the current scan"
            )));
        }
        counts.insert(a_from, (ChunkRange { a_from, a_to }, count));
    }
    let mut done: BTreeMap<i64, Vec<(i64, i64)>> =
        counts.keys().map(|&start| (start, Vec::new())).collect();
    if hits_file.exists() {
        let reader = BufReader::new(File::open(hits_file).map_err(io_err(hits_file))?);
        for line in reader.lines() {
            let line = line.map_err(io_err(hits_file))?;
            let Some((a, b)) = line.split_once('\t') else { continue };
            let (Ok(a), Ok(b)) = (a.parse::<i64>(), b.parse::<i64>()) else { continue };
            if let Some((start, (range, _))) = counts.range(..=a).next_back() {
                if a <= range.a_to {
                    done.get_mut(start).unwrap().push((a, b));
                }
            }
        }
    }
    for (start, (range, count)) in &counts {
        let hits = done.get_mut(start).unwrap();
        hits.sort_unstable();
        hits.dedup();
        if hits.len() != *count {
            return Err(HarnessError::CheckpointCorrupt(format!(
                "chunk {}..={} records {count} hits but the hits file holds {}",
                range.a_from,
                range.a_to,
                hits.len()
            )));
        }
    }
    Ok(Loaded { done })
}
