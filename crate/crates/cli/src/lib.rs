//! Command-line front end. [`run`] is the whole program; `main` only wires
//! it to the process streams so tests can drive it in-process.
//!
//! Exit codes: 0 on success, 1 on usage or validation errors, 2 when a
//! `verify` or `audit` run completes but reports a discrepancy.

pub mod args;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use anyhow::{anyhow, bail, Result};
use clap::error::ErrorKind;
use clap::Parser;

use lehmer_core::families::enumerate_full;
use lehmer_core::harness::{audit_changes, run_search, verify_table_with_jobs, SearchConfig, SearchOutcome};
use lehmer_core::pairs::{ab_of, validate_ab};
use lehmer_core::primdiv::defect_witness_factored;
use lehmer_core::sequences::seq_eval;
use lehmer_core::LehmerPair;

use args::{Cli, Command};
use report::{
    AuditDoc, CheckDoc, CoordsDoc, Document, FamilyDoc, InterruptedDoc, SearchDoc, SeqDoc, UDoc, VerifyDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISCREPANCY: i32 = 2;

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_ERROR,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_ERROR;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn pair(a: num_bigint::BigInt, b: num_bigint::BigInt) -> Result<LehmerPair> {
    let (sa, sb) = (a.to_string(), b.to_string());
    validate_ab(a, b).map_err(|e| anyhow!("({sa}, {sb}) is not a Lehmer pair: {}", e.describe()))
}

fn supported(n: u32) -> Result<()> {
    if lehmer_core::is_supported_n(n) {
        Ok(())
    } else {
        bail!("n = {n} is not one of 3, 4, 5, 6, 8, 10, 12")
    }
}

fn execute(cmd: Command) -> Result<(String, i32)> {
    Ok(match cmd {
        Command::Seq { sequence, k, fmt } => {
            let value = seq_eval(sequence, k)?;
            let doc = SeqDoc {
                sequence: sequence.name().to_string(),
                k,
                value: value.to_string(),
            };
            (doc.render(fmt.format), EXIT_OK)
        }
        Command::U { a, b, n, fmt } => {
            let p = pair(a, b)?;
            let doc = UDoc {
                a: p.a().to_string(),
                b: p.b().to_string(),
                n,
                u_n: p.lehmer_number(n).to_string(),
            };
            (doc.render(fmt.format), EXIT_OK)
        }
        Command::Check { a, b, n, fmt } => {
            let p = pair(a, b)?;
            let w = defect_witness_factored(&p, n)?;
            (CheckDoc::from(&w).render(fmt.format), EXIT_OK)
        }
        Command::Pq { a, b, fmt } => {
            let p = pair(a, b)?;
            let doc = CoordsDoc {
                a: p.a().to_string(),
                b: p.b().to_string(),
                p: p.p().to_string(),
                q: p.q().to_string(),
                show_pq: true,
            };
            (doc.render(fmt.format), EXIT_OK)
        }
        Command::Ab { p, q, fmt } => {
            let (a, b) = ab_of(p.clone(), q.clone());
            pair(a.clone(), b.clone())?;
            let doc = CoordsDoc {
                a: a.to_string(),
                b: b.to_string(),
                p: p.to_string(),
                q: q.to_string(),
                show_pq: false,
            };
            (doc.render(fmt.format), EXIT_OK)
        }
        Command::Family { n, bound, fmt } => {
            supported(n)?;
            let e = enumerate_full(n, bound)?;
            (FamilyDoc::from(&e).render(fmt.format), EXIT_OK)
        }
        Command::Search {
            n,
            bound,
            jobs,
            checkpoint,
            chunk_size,
            max_chunks,
            fmt,
        } => {
            let mut cfg = SearchConfig::new(n, bound).jobs(jobs.jobs).chunk_size(chunk_size);
            if let Some(path) = checkpoint {
                cfg = cfg.checkpoint(path);
            }
            if let Some(limit) = max_chunks {
                cfg = cfg.chunk_limit(limit);
            }
            let text = match run_search(&cfg)? {
                SearchOutcome::Complete(r) => SearchDoc::from(&r).render(fmt.format),
                SearchOutcome::Interrupted {
                    completed_chunks,
                    total_chunks,
                } => InterruptedDoc {
                    n,
                    bound,
                    status: "interrupted",
                    completed_chunks,
                    total_chunks,
                }
                .render(fmt.format),
            };
            (text, EXIT_OK)
        }
        Command::Verify { n, bound, jobs, fmt } => {
            let doc = VerifyDoc::from(verify_table_with_jobs(n, bound, jobs.jobs)?);
            let code = if doc.exact() { EXIT_OK } else { EXIT_DISCREPANCY };
            (doc.render(fmt.format), code)
        }
        Command::Audit { fmt } => {
            let doc = AuditDoc::from(audit_changes());
            let code = if doc.all_passed() { EXIT_OK } else { EXIT_DISCREPANCY };
            (doc.render(fmt.format), code)
        }
    })
}
