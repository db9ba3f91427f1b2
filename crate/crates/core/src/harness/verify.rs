use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::search::search_with_jobs;
use super::HarnessError;
use crate::families::{enumerate_full, FamilyEntry, FamilyParams, FamilyRowId, Provenance};
use crate::pairs::{canonical_ab, ValidationError};
use crate::primdiv;

/// A table tuple, as cited in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRef {
    pub row: FamilyRowId,
    pub params: FamilyParams,
    pub raw_ab: (BigInt, BigInt),
    pub canonical_ab: (BigInt, BigInt),
}

impl TableRef {
    fn of_entry(e: &FamilyEntry) -> Self {
        TableRef {
            row: e.row,
            params: e.params,
            raw_ab: e.raw_ab.clone(),
            canonical_ab: e.canonical_ab.clone(),
        }
    }

    fn of_provenance(p: &Provenance) -> Self {
        TableRef {
            row: p.row,
            params: p.params,
            canonical_ab: canonical_ab(&p.raw_ab.0, &p.raw_ab.1),
            raw_ab: p.raw_ab.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    InvalidPair(ValidationError),
    NotDefective,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFailure {
    pub entry: TableRef,
    pub reason: FailureReason,
}

/// Search against table at one bound. Mismatches are data, never errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub n: u32,
    pub bound: u64,
    /// Defective pairs found by search that no table tuple produces.
    pub missing_from_table: Vec<(BigInt, BigInt)>,
    /// Admitted tuples that are not Lehmer pairs or not n-defective.
    pub table_failures: Vec<TableFailure>,
    /// Pairs of admitted tuples producing equivalent Lehmer pairs.
    pub equivalent_duplicates: Vec<(TableRef, TableRef)>,
    /// Defective table pairs the search did not return; nonempty only if the
    /// scan itself is wrong.
    pub unmatched_entries: Vec<TableRef>,
    pub matched_count: usize,
}

impl DiscrepancyReport {
    pub fn is_exact_agreement(&self) -> bool {
        self.missing_from_table.is_empty()
            && self.table_failures.is_empty()
            && self.equivalent_duplicates.is_empty()
            && self.unmatched_entries.is_empty()
    }
}

pub fn verify_table(n: u32, bound: u64) -> Result<DiscrepancyReport, HarnessError> {
    verify_table_with_jobs(n, bound, 1)
}

pub fn verify_table_with_jobs(n: u32, bound: u64, jobs: usize) -> Result<DiscrepancyReport, HarnessError> {
    let search = search_with_jobs(n, bound, jobs)?;
    let table = enumerate_full(n, bound).map_err(|_| HarnessError::UnsupportedN(n))?;

    let found: BTreeSet<(BigInt, BigInt)> = search
        .pairs
        .iter()
        .map(|&(a, b)| (BigInt::from(a), BigInt::from(b)))
        .collect();

    let mut table_failures: Vec<TableFailure> = table
        .invalid
        .iter()
        .map(|inv| TableFailure {
            entry: TableRef {
                row: inv.row,
                params: inv.params,
                canonical_ab: canonical_ab(&inv.raw_ab.0, &inv.raw_ab.1),
                raw_ab: inv.raw_ab.clone(),
            },
            reason: FailureReason::InvalidPair(inv.error),
        })
        .collect();
    let mut equivalent_duplicates = Vec::new();
    let mut unmatched_entries = Vec::new();
    let mut listed: BTreeSet<(BigInt, BigInt)> = BTreeSet::new();
    let mut matched_count = 0;
    for entry in &table.entries {
        for dup in &entry.duplicates {
            equivalent_duplicates.push((TableRef::of_entry(entry), TableRef::of_provenance(dup)));
        }
        listed.insert(entry.canonical_ab.clone());
        // the n >= 3 precondition holds for every supported n
        if !primdiv::is_defective(&entry.pair, n).unwrap_or(false) {
            table_failures.push(TableFailure {
                entry: TableRef::of_entry(entry),
                reason: FailureReason::NotDefective,
            });
        } else if found.contains(&entry.canonical_ab) {
            matched_count += 1;
        } else {
            unmatched_entries.push(TableRef::of_entry(entry));
        }
    }
    let missing_from_table = found.difference(&listed).cloned().collect();

    Ok(DiscrepancyReport {
        n,
        bound,
        missing_from_table,
        table_failures,
        equivalent_duplicates,
        unmatched_entries,
        matched_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(a: i64, b: i64) -> (BigInt, BigInt) {
        (BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn n5_agrees_exactly() {
        let r = verify_table(5, 200).unwrap();
        assert!(r.is_exact_agreement(), "{r:?}");
        assert!(r.matched_count > 10);
    }

    #[test]
    fn n4_reports_the_six_two_pair() {
        let r = verify_table(4, 10).unwrap();
        assert_eq!(r.missing_from_table, vec![ab(6, 2)]);
        assert!(r.table_failures.is_empty());
        assert!(r.equivalent_duplicates.is_empty());
        assert!(r.unmatched_entries.is_empty());
        assert!(!r.is_exact_agreement());
    }
}
