//! Mechanical re-check of every correction the table makes to the earlier
//! published versions, plus the boundary eliminations for n = 8 and n = 12.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::families::{
    audit_exclusion, enumerate, instantiate, row_formula, AuditReason, Eps, FamilyParams, FamilyRowId,
};
use crate::pairs::{canonical_ab, validate_ab, ValidationError};
use crate::primdiv;
use crate::sequences::Zeta;

/// One audited item: an identifier such as `n=5(2)`, the verdict, and a
/// human-readable account of what was checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeCheck {
    pub id: String,
    pub passed: bool,
    pub evidence: String,
}

fn ab(a: i64, b: i64) -> (BigInt, BigInt) {
    (BigInt::from(a), BigInt::from(b))
}

fn show(ab: &(BigInt, BigInt)) -> String {
    format!("({}, {})", ab.0, ab.1)
}

/// Accumulates sub-checks; the item passes only if every one holds.
struct Item {
    id: &'static str,
    passed: bool,
    notes: Vec<String>,
}

impl Item {
    fn new(id: &'static str) -> Self {
        Item { id, passed: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: String) {
        self.passed &= ok;
        self.notes.push(if ok { note } else { format!("FAILED {note}") });
    }

    /// `row params` must be rejected by validation with exactly `want`.
    fn invalid(&mut self, row: FamilyRowId, params: FamilyParams, want: ValidationError) {
        let got = row_formula(row, &params).map(|(a, b)| (validate_ab(a.clone(), b.clone()).err(), (a, b)));
        match got {
            Ok((err, raw)) => self.check(
                err == Some(want),
                format!(
                    "{row} {params} -> {}: {}",
                    show(&raw),
                    err.map_or("valid".to_string(), |e| e.describe())
                ),
            ),
            Err(e) => self.check(false, format!("{row} {params}: {e}")),
        }
    }

    /// The exclusion audit must explain the tuple as a duplicate of `of`.
    fn duplicate(&mut self, row: FamilyRowId, params: FamilyParams, of: (FamilyRowId, FamilyParams)) {
        match audit_exclusion(row.n(), row, &params) {
            Ok(AuditReason::DuplicateOf { row: r, params: p, canonical_ab }) => self.check(
                (r, p) == of,
                format!("{row} {params} duplicates {r} {p}: {}", show(&canonical_ab)),
            ),
            Ok(other) => self.check(false, format!("{row} {params}: {other}")),
            Err(e) => self.check(false, format!("{row} {params}: {e}")),
        }
    }

    /// Admitted tuple giving `raw`, valid and n-defective.
    fn addition(&mut self, row: FamilyRowId, params: FamilyParams, raw: (BigInt, BigInt)) {
        match instantiate(row, &params) {
            Ok(e) => {
                let defective = primdiv::is_defective(&e.pair, e.n).unwrap_or(false);
                self.check(
                    e.raw_ab == raw && defective,
                    format!(
                        "{row} {params} admitted -> {}, {}-defective={defective}",
                        show(&e.raw_ab),
                        e.n
                    ),
                );
            }
            Err(err) => self.check(false, format!("{row} {params}: {err}")),
        }
    }

    fn finish(self) -> ChangeCheck {
        ChangeCheck {
            id: self.id.to_string(),
            passed: self.passed,
            evidence: self.notes.join("; "),
        }
    }
}

fn n3_1() -> ChangeCheck {
    let mut it = Item::new("n=3(1)");
    it.invalid(FamilyRowId::N3Q, FamilyParams::q(-1), ValidationError::ZeroA);
    it.finish()
}

/// The power row reads (3^k + q, 3^k - 3q); the misprint (3^k, 3^k - 3q)
/// gives a - b = 3q, which is never a Lehmer pair for 3 not dividing q.
fn n3_2() -> ChangeCheck {
    let mut it = Item::new("n=3(2)");
    let params = FamilyParams::kq(1, 2);
    match row_formula(FamilyRowId::N3Pow3, &params) {
        Ok(raw) => it.check(raw == ab(5, -3), format!("N3_POW3 {params} -> {}", show(&raw))),
        Err(e) => it.check(false, format!("N3_POW3 {params}: {e}")),
    }
    it.addition(FamilyRowId::N3Pow3, params, ab(5, -3));
    let misprint = validate_ab(3, -3).err();
    it.check(
        misprint == Some(ValidationError::NotCongruentMod4),
        format!("misprinted form -> (3, -3): {}", misprint.map_or("valid".into(), |e| e.describe())),
    );
    it.finish()
}

fn n4_1() -> ChangeCheck {
    let mut it = Item::new("n=4(1)");
    it.invalid(FamilyRowId::N4Q, FamilyParams::q(-1), ValidationError::DegenerateRatio { p: -1, q: -1 });
    it.finish()
}

fn n4_2() -> ChangeCheck {
    let mut it = Item::new("n=4(2)");
    it.invalid(FamilyRowId::N4Pow2, FamilyParams::kq(1, -1), ValidationError::ZeroA);
    it.finish()
}

fn n5_1() -> ChangeCheck {
    let mut it = Item::new("n=5(1)");
    it.addition(FamilyRowId::N5Psi, FamilyParams::keps(1, Eps::Plus), ab(-1, -5));
    match validate_ab(-1, -5) {
        Ok(pair) => {
            let prefix: Vec<BigInt> = pair.lehmer_prefix(5);
            let want: Vec<BigInt> = [0, 1, 1, -2, -3, 5].into_iter().map(BigInt::from).collect();
            let shown: Vec<String> = prefix.iter().map(|x| x.to_string()).collect();
            it.check(prefix == want, format!("u_0..u_5 = [{}]", shown.join(", ")));
        }
        Err(e) => it.check(false, format!("(-1, -5): {}", e.describe())),
    }
    it.finish()
}

fn psi_duplicate(id: &'static str, row: FamilyRowId, raw: (BigInt, BigInt)) -> ChangeCheck {
    let mut it = Item::new(id);
    let minus = FamilyParams::keps(0, Eps::Minus);
    let plus = FamilyParams::keps(0, Eps::Plus);
    let pair = (row_formula(row, &minus), row_formula(row, &plus));
    match pair {
        (Ok(m), Ok(p)) => it.check(
            m == raw && p == raw,
            format!("{row} {minus} -> {}, {row} {plus} -> {}", show(&m), show(&p)),
        ),
        _ => it.check(false, format!("{row} k=0 is undefined")),
    }
    it.duplicate(row, minus, (row, plus));
    it.finish()
}

fn n6_1() -> ChangeCheck {
    let mut it = Item::new("n=6(1)");
    it.invalid(FamilyRowId::N6Q, FamilyParams::q(-1), ValidationError::DegenerateRatio { p: -2, q: -1 });
    it.finish()
}

fn n6_2() -> ChangeCheck {
    let mut it = Item::new("n=6(2)");
    it.invalid(FamilyRowId::N6Pow2, FamilyParams::kq(1, -1), ValidationError::DegenerateRatio { p: -1, q: -1 });
    it.invalid(FamilyRowId::N6Pow3, FamilyParams::lq(1, -1), ValidationError::ZeroA);
    it.finish()
}

/// No corrections for n = 8, but both rows start at k = 2; the k = 0, 1
/// tuples with eps = +1 are the ones that need an argument.
fn n8() -> ChangeCheck {
    use FamilyRowId::{N8Pi, N8Rho};
    let mut it = Item::new("n=8");
    let k0 = FamilyParams::keps(0, Eps::Plus);
    let k1 = FamilyParams::keps(1, Eps::Plus);
    it.invalid(N8Rho, k0, ValidationError::ZeroQ);
    it.invalid(N8Pi, k0, ValidationError::DegenerateRatio { p: 2, q: 1 });
    it.invalid(N8Rho, k1, ValidationError::DegenerateRatio { p: 1, q: 1 });
    it.invalid(N8Pi, k1, ValidationError::ZeroA);
    for row in [N8Rho, N8Pi] {
        for k in 0..2 {
            let params = FamilyParams::keps(k, Eps::Minus);
            match audit_exclusion(8, row, &params) {
                Ok(r @ (AuditReason::InvalidPair(_) | AuditReason::DuplicateOf { .. })) => {
                    it.check(true, format!("{row} {params}: {r}"))
                }
                Ok(r) => it.check(false, format!("{row} {params}: {r}")),
                Err(e) => it.check(false, format!("{row} {params}: {e}")),
            }
        }
    }
    it.finish()
}

fn n10_1() -> ChangeCheck {
    let mut it = Item::new("n=10(1)");
    it.addition(FamilyRowId::N10Psi, FamilyParams::keps(1, Eps::Plus), ab(-5, -1));
    it.finish()
}

/// Bound for the n = 12 duplicate scan.
const N12_DISTINCT_BOUND: u64 = 500;

/// Only four of the six earlier sequences are kept, so no two admitted
/// tuples may give equivalent pairs.
fn n12_1() -> ChangeCheck {
    let mut it = Item::new("n=12(1)");
    match crate::families::enumerate_full(12, N12_DISTINCT_BOUND) {
        Ok(e) => {
            let dups: usize = e.entries.iter().map(|x| x.duplicates.len()).sum();
            it.check(
                dups == 0,
                format!(
                    "{} distinct pairs up to {N12_DISTINCT_BOUND}, {dups} equivalent duplicates",
                    e.entries.len()
                ),
            );
        }
        Err(e) => it.check(false, e.to_string()),
    }
    it.finish()
}

/// The tuples the table drops for n = 12, each with its stated (p, q).
fn n12_2() -> ChangeCheck {
    use Zeta::*;
    let mut it = Item::new("n=12(2)");
    let row = FamilyRowId::N12Zeta;
    let cases = [
        (Z0, 0, Eps::Plus, ValidationError::ZeroQ),
        (Z1, 0, Eps::Plus, ValidationError::DegenerateRatio { p: 2, q: 1 }),
        (Z2, 0, Eps::Plus, ValidationError::DegenerateRatio { p: 1, q: 1 }),
        (Z0, 0, Eps::Minus, ValidationError::ZeroQ),
        (Z1, 0, Eps::Minus, ValidationError::DegenerateRatio { p: 2, q: 1 }),
        (Z2, 0, Eps::Minus, ValidationError::DegenerateRatio { p: 3, q: 1 }),
        (Z0, 1, Eps::Plus, ValidationError::ZeroA),
        // (p, q) = (4, 1), but b = 0 is checked first
        (Z0, 1, Eps::Minus, ValidationError::ZeroB),
    ];
    for (z, k, eps, want) in cases {
        it.invalid(row(z), FamilyParams::keps(k, eps), want);
    }
    it.finish()
}

fn n12_3() -> ChangeCheck {
    let mut it = Item::new("n=12(3)");
    it.addition(FamilyRowId::N12Zeta(Zeta::Z3), FamilyParams::keps(0, Eps::Plus), ab(-1, -5));
    let target = canonical_ab(&BigInt::from(-1), &BigInt::from(-5));
    match enumerate(12, 5) {
        Ok(entries) => {
            let hit = entries.iter().find(|e| e.canonical_ab == target);
            let mut note = format!("canonical {} ", show(&target));
            match hit {
                Some(e) => {
                    let _ = write!(note, "listed by {} {} within bound 5", e.row, e.params);
                }
                None => note.push_str("absent from enumerate(12, 5)"),
            }
            it.check(hit.is_some(), note);
        }
        Err(e) => it.check(false, e.to_string()),
    }
    it.finish()
}

/// Runs every audited item, in table order.
pub fn audit_changes() -> Vec<ChangeCheck> {
    vec![
        n3_1(),
        n3_2(),
        n4_1(),
        n4_2(),
        n5_1(),
        psi_duplicate("n=5(2)", FamilyRowId::N5Psi, ab(3, -5)),
        n6_1(),
        n6_2(),
        n8(),
        n10_1(),
        psi_duplicate("n=10(2)", FamilyRowId::N10Psi, ab(-5, 3)),
        n12_1(),
        n12_2(),
        n12_3(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_item_passes() {
        let checks = audit_changes();
        assert_eq!(checks.len(), 14);
        for c in &checks {
            assert!(c.passed, "{}: {}", c.id, c.evidence);
            assert!(!c.evidence.contains("FAILED"));
        }
    }

    #[test]
    fn evidence_names_the_reason() {
        let checks = audit_changes();
        let find = |id: &str| checks.iter().find(|c| c.id == id).unwrap().evidence.clone();
        assert!(find("n=3(1)").contains("ZeroA"));
        assert!(find("n=4(1)").contains("DegenerateRatio(-1,-1)"));
        assert!(find("n=5(2)").contains("duplicates"));
        assert!(find("n=5(1)").contains("[0, 1, 1, -2, -3, 5]"));
    }
}
