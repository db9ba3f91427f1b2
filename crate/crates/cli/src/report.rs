//! Output documents. Field order in the structs is the JSON key order, and
//! every `tsv` method emits its `#` header first. Integers that can outgrow
//! 64 bits are decimal strings in JSON.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use lehmer_core::families::{Enumeration, FamilyEntry, Provenance};
use lehmer_core::harness::{ChangeCheck, DiscrepancyReport, FailureReason, SearchResult, TableRef};
use lehmer_core::{DefectWitness, FamilyParams};

use crate::args::OutputFormat;

pub trait Document: Serialize {
    fn text(&self) -> String;
    fn tsv(&self) -> String;

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text(),
            OutputFormat::Tsv => self.tsv(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn pair_strings(ab: &(BigInt, BigInt)) -> [String; 2] {
    [ab.0.to_string(), ab.1.to_string()]
}

fn show(ab: &(BigInt, BigInt)) -> String {
    format!("({}, {})", ab.0, ab.1)
}

/// Parameters of a table tuple; absent slots are omitted.
#[derive(Debug, Serialize)]
pub struct ParamsDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eps: Option<i64>,
}

impl From<&FamilyParams> for ParamsDoc {
    fn from(p: &FamilyParams) -> Self {
        ParamsDoc {
            k: p.k,
            l: p.l,
            q: p.q,
            eps: p.eps.map(|e| e.value()),
        }
    }
}

fn tsv_params(p: &FamilyParams) -> String {
    let cell = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
    format!(
        "{}\t{}\t{}\t{}",
        cell(p.k),
        cell(p.l),
        cell(p.q),
        cell(p.eps.map(|e| e.value()))
    )
}

#[derive(Debug, Serialize)]
pub struct SeqDoc {
    pub sequence: String,
    pub k: i64,
    pub value: String,
}

impl Document for SeqDoc {
    fn text(&self) -> String {
        format!("{}\n", self.value)
    }

    fn tsv(&self) -> String {
        format!("#sequence\tk\tvalue\n{}\t{}\t{}\n", self.sequence, self.k, self.value)
    }
}

#[derive(Debug, Serialize)]
pub struct UDoc {
    pub a: String,
    pub b: String,
    pub n: u32,
    pub u_n: String,
}

impl Document for UDoc {
    fn text(&self) -> String {
        format!("{}\n", self.u_n)
    }

    fn tsv(&self) -> String {
        format!("#a\tb\tn\tu_n\n{}\t{}\t{}\t{}\n", self.a, self.b, self.n, self.u_n)
    }
}

/// Output of `pq` and `ab`: both coordinate systems of one pair.
#[derive(Debug, Serialize)]
pub struct CoordsDoc {
    pub a: String,
    pub b: String,
    pub p: String,
    pub q: String,
    #[serde(skip)]
    pub show_pq: bool,
}

impl Document for CoordsDoc {
    fn text(&self) -> String {
        if self.show_pq {
            format!("{} {}\n", self.p, self.q)
        } else {
            format!("{} {}\n", self.a, self.b)
        }
    }

    fn tsv(&self) -> String {
        format!("#a\tb\tp\tq\n{}\t{}\t{}\t{}\n", self.a, self.b, self.p, self.q)
    }
}

#[derive(Debug, Serialize)]
pub struct CheckDoc {
    pub a: String,
    pub b: String,
    pub p: String,
    pub q: String,
    pub n: u32,
    pub u_n: String,
    pub nonprim_product: String,
    pub residual: String,
    pub primitive_primes: Vec<String>,
    pub defective: bool,
}

impl From<&DefectWitness> for CheckDoc {
    fn from(w: &DefectWitness) -> Self {
        CheckDoc {
            a: w.pair.a().to_string(),
            b: w.pair.b().to_string(),
            p: w.pair.p().to_string(),
            q: w.pair.q().to_string(),
            n: w.n,
            u_n: w.u_n.to_string(),
            nonprim_product: w.nonprim_product.to_string(),
            residual: w.residual.to_string(),
            primitive_primes: w
                .primitive_primes
                .iter()
                .flatten()
                .map(|p| p.to_string())
                .collect(),
            defective: w.defective,
        }
    }
}

impl Document for CheckDoc {
    fn text(&self) -> String {
        let primes = if self.primitive_primes.is_empty() {
            "none".to_string()
        } else {
            self.primitive_primes.join(" ")
        };
        format!(
            "pair             ({}, {})  p={} q={}\n\
             n                {}\n\
             u_n              {}\n\
             non-primitive    {}\n\
             residual         {}\n\
             primitive primes {}\n\
             defective        {}\n",
            self.a, self.b, self.p, self.q, self.n, self.u_n, self.nonprim_product, self.residual, primes, self.defective
        )
    }

    fn tsv(&self) -> String {
        format!(
            "#a\tb\tp\tq\tn\tu_n\tnonprim_product\tresidual\tprimitive_primes\tdefective\n\
             {}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            self.a,
            self.b,
            self.p,
            self.q,
            self.n,
            self.u_n,
            self.nonprim_product,
            self.residual,
            self.primitive_primes.join(","),
            self.defective
        )
    }
}

#[derive(Debug, Serialize)]
pub struct ProvenanceDoc {
    row: &'static str,
    params: ParamsDoc,
    raw_ab: [String; 2],
}

impl From<&Provenance> for ProvenanceDoc {
    fn from(p: &Provenance) -> Self {
        ProvenanceDoc {
            row: p.row.name(),
            params: (&p.params).into(),
            raw_ab: pair_strings(&p.raw_ab),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EntryDoc {
    row: &'static str,
    params: ParamsDoc,
    raw_ab: [String; 2],
    canonical_ab: [String; 2],
    duplicates: Vec<ProvenanceDoc>,
    #[serde(skip)]
    source: FamilyEntry,
}

impl From<&FamilyEntry> for EntryDoc {
    fn from(e: &FamilyEntry) -> Self {
        EntryDoc {
            row: e.row.name(),
            params: (&e.params).into(),
            raw_ab: pair_strings(&e.raw_ab),
            canonical_ab: pair_strings(&e.canonical_ab),
            duplicates: e.duplicates.iter().map(Into::into).collect(),
            source: e.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyDoc {
    n: u32,
    bound: u64,
    count: usize,
    entries: Vec<EntryDoc>,
}

impl From<&Enumeration> for FamilyDoc {
    fn from(e: &Enumeration) -> Self {
        FamilyDoc {
            n: e.n,
            bound: e.bound,
            count: e.entries.len(),
            entries: e.entries.iter().map(Into::into).collect(),
        }
    }
}

impl Document for FamilyDoc {
    fn text(&self) -> String {
        let mut s = format!("n={} bound={}: {} pairs\n", self.n, self.bound, self.count);
        for e in &self.entries {
            let e = &e.source;
            let _ = write!(
                s,
                "{:<10} {:<16} {} ~ {}",
                e.row.name(),
                e.params.to_string(),
                show(&e.raw_ab),
                show(&e.canonical_ab)
            );
            for d in &e.duplicates {
                let _ = write!(s, "  [also {} {} {}]", d.row, d.params, show(&d.raw_ab));
            }
            s.push('\n');
        }
        s
    }

    fn tsv(&self) -> String {
        let mut s = String::from("#row\tk\tl\tq\teps\traw_a\traw_b\ta\tb\n");
        for e in &self.entries {
            let e = &e.source;
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}",
                e.row.name(),
                tsv_params(&e.params),
                e.raw_ab.0,
                e.raw_ab.1,
                e.canonical_ab.0,
                e.canonical_ab.1
            );
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct SearchDoc {
    n: u32,
    bound: u64,
    count: usize,
    pairs: Vec<[String; 2]>,
}

impl From<&SearchResult> for SearchDoc {
    fn from(r: &SearchResult) -> Self {
        SearchDoc {
            n: r.n,
            bound: r.bound,
            count: r.pairs.len(),
            pairs: r.pairs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        }
    }
}

impl Document for SearchDoc {
    fn text(&self) -> String {
        let mut s = format!("n={} bound={}: {} pairs\n", self.n, self.bound, self.count);
        for [a, b] in &self.pairs {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }

    fn tsv(&self) -> String {
        let mut s = String::from("#a\tb\n");
        for [a, b] in &self.pairs {
            let _ = writeln!(s, "{a}\t{b}");
        }
        s
    }
}

/// A scan stopped by `--max-chunks`; rerun with the same checkpoint.
#[derive(Debug, Serialize)]
pub struct InterruptedDoc {
    pub n: u32,
    pub bound: u64,
    pub status: &'static str,
    pub completed_chunks: usize,
    pub total_chunks: usize,
}

impl Document for InterruptedDoc {
    fn text(&self) -> String {
        format!(
            "n={} bound={}: interrupted after {}/{} chunks\n",
            self.n, self.bound, self.completed_chunks, self.total_chunks
        )
    }

    fn tsv(&self) -> String {
        format!(
            "#n\tbound\tstatus\tcompleted_chunks\ttotal_chunks\n{}\t{}\t{}\t{}\t{}\n",
            self.n, self.bound, self.status, self.completed_chunks, self.total_chunks
        )
    }
}

#[derive(Debug, Serialize)]
pub struct TableRefDoc {
    row: &'static str,
    params: ParamsDoc,
    raw_ab: [String; 2],
    canonical_ab: [String; 2],
}

impl From<&TableRef> for TableRefDoc {
    fn from(t: &TableRef) -> Self {
        TableRefDoc {
            row: t.row.name(),
            params: (&t.params).into(),
            raw_ab: pair_strings(&t.raw_ab),
            canonical_ab: pair_strings(&t.canonical_ab),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FailureDoc {
    entry: TableRefDoc,
    reason: String,
}

#[derive(Debug, Serialize)]
pub struct DuplicateDoc {
    kept: TableRefDoc,
    duplicate: TableRefDoc,
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    n: u32,
    bound: u64,
    exact_agreement: bool,
    matched_count: usize,
    missing_from_table: Vec<[String; 2]>,
    table_failures: Vec<FailureDoc>,
    equivalent_duplicates: Vec<DuplicateDoc>,
    unmatched_entries: Vec<TableRefDoc>,
    #[serde(skip)]
    report: DiscrepancyReport,
}

fn reason_text(r: &FailureReason) -> String {
    match r {
        FailureReason::InvalidPair(e) => format!("InvalidPair({})", e.describe()),
        FailureReason::NotDefective => "NotDefective".to_string(),
    }
}

impl VerifyDoc {
    pub fn exact(&self) -> bool {
        self.exact_agreement
    }
}

impl From<DiscrepancyReport> for VerifyDoc {
    fn from(r: DiscrepancyReport) -> Self {
        VerifyDoc {
            n: r.n,
            bound: r.bound,
            exact_agreement: r.is_exact_agreement(),
            matched_count: r.matched_count,
            missing_from_table: r.missing_from_table.iter().map(pair_strings).collect(),
            table_failures: r
                .table_failures
                .iter()
                .map(|f| FailureDoc {
                    entry: (&f.entry).into(),
                    reason: reason_text(&f.reason),
                })
                .collect(),
            equivalent_duplicates: r
                .equivalent_duplicates
                .iter()
                .map(|(k, d)| DuplicateDoc {
                    kept: k.into(),
                    duplicate: d.into(),
                })
                .collect(),
            unmatched_entries: r.unmatched_entries.iter().map(Into::into).collect(),
            report: r,
        }
    }
}

fn ref_text(t: &TableRef) -> String {
    format!("{} {} {} ~ {}", t.row.name(), t.params, show(&t.raw_ab), show(&t.canonical_ab))
}

impl Document for VerifyDoc {
    fn text(&self) -> String {
        let r = &self.report;
        let mut s = format!("verify n={} bound={}\n", r.n, r.bound);
        let _ = writeln!(s, "matched               {}", r.matched_count);
        let _ = writeln!(s, "missing_from_table    {}", r.missing_from_table.len());
        for ab in &r.missing_from_table {
            let _ = writeln!(s, "  {}", show(ab));
        }
        let _ = writeln!(s, "table_failures        {}", r.table_failures.len());
        for f in &r.table_failures {
            let _ = writeln!(s, "  {}: {}", ref_text(&f.entry), reason_text(&f.reason));
        }
        let _ = writeln!(s, "equivalent_duplicates {}", r.equivalent_duplicates.len());
        for (k, d) in &r.equivalent_duplicates {
            let _ = writeln!(s, "  {} == {}", ref_text(d), ref_text(k));
        }
        let _ = writeln!(s, "unmatched_entries     {}", r.unmatched_entries.len());
        for t in &r.unmatched_entries {
            let _ = writeln!(s, "  {}", ref_text(t));
        }
        let verdict = if self.exact_agreement { "EXACT" } else { "DISCREPANCY" };
        let _ = writeln!(s, "result                {verdict}");
        s
    }

    fn tsv(&self) -> String {
        let r = &self.report;
        let mut s = format!(
            "# verify n={} bound={} matched={} exact={}\n#kind\ta\tb\trow\tk\tl\tq\teps\tdetail\n",
            r.n, r.bound, r.matched_count, self.exact_agreement
        );
        let row = |t: &TableRef| format!("{}\t{}", t.row.name(), tsv_params(&t.params));
        for (a, b) in &r.missing_from_table {
            let _ = writeln!(s, "missing\t{a}\t{b}\t-\t-\t-\t-\t-\t-");
        }
        for f in &r.table_failures {
            let (a, b) = &f.entry.canonical_ab;
            let _ = writeln!(s, "failure\t{a}\t{b}\t{}\t{}", row(&f.entry), reason_text(&f.reason));
        }
        for (k, d) in &r.equivalent_duplicates {
            let (a, b) = &d.canonical_ab;
            let _ = writeln!(s, "duplicate\t{a}\t{b}\t{}\tof {} {}", row(d), k.row.name(), k.params);
        }
        for t in &r.unmatched_entries {
            let (a, b) = &t.canonical_ab;
            let _ = writeln!(s, "unmatched\t{a}\t{b}\t{}\t-", row(t));
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct CheckItemDoc {
    id: String,
    passed: bool,
    evidence: String,
}

#[derive(Debug, Serialize)]
pub struct AuditDoc {
    all_passed: bool,
    checks: Vec<CheckItemDoc>,
}

impl AuditDoc {
    pub fn all_passed(&self) -> bool {
        self.all_passed
    }
}

impl From<Vec<ChangeCheck>> for AuditDoc {
    fn from(checks: Vec<ChangeCheck>) -> Self {
        AuditDoc {
            all_passed: checks.iter().all(|c| c.passed),
            checks: checks
                .into_iter()
                .map(|c| CheckItemDoc {
                    id: c.id,
                    passed: c.passed,
                    evidence: c.evidence,
                })
                .collect(),
        }
    }
}

impl Document for AuditDoc {
    fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{verdict} {:<8} {}", c.id, c.evidence);
        }
        s
    }

    fn tsv(&self) -> String {
        let mut s = String::from("#id\tpassed\tevidence\n");
        for c in &self.checks {
            let _ = writeln!(s, "{}\t{}\t{}", c.id, c.passed, c.evidence);
        }
        s
    }
}
