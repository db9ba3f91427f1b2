use std::collections::BTreeSet;

use num_bigint::BigInt;

use lehmer_core::families::{enumerate, enumerate_full};
use lehmer_core::harness::{search_defective, verify_table};
use lehmer_core::SUPPORTED_N;

fn ab(a: i64, b: i64) -> (BigInt, BigInt) {
    (BigInt::from(a), BigInt::from(b))
}

/// Frozen from an independent scan: (n, number of canonical n-defective
/// pairs with max(|a|, |b|) <= 500).
const COUNTS_500: [(u32, usize); 7] = [(3, 1440), (4, 2240), (5, 39), (6, 4577), (8, 20), (10, 39), (12, 28)];

#[test]
fn search_counts_at_500() {
    for (n, count) in COUNTS_500 {
        assert_eq!(search_defective(n, 500).unwrap().pairs.len(), count, "n={n}");
    }
}

#[test]
fn table_agrees_with_search_at_500() {
    for n in SUPPORTED_N {
        let r = verify_table(n, 500).unwrap();
        if n == 4 {
            // (6, 2): (p, q) = (6, 1), u_4 = 4, not produced by any row
            assert_eq!(r.missing_from_table, vec![ab(6, 2)]);
            assert!(r.table_failures.is_empty() && r.equivalent_duplicates.is_empty());
            assert!(r.unmatched_entries.is_empty());
        } else {
            assert!(r.is_exact_agreement(), "n={n}: {r:?}");
        }
    }
}

#[test]
fn small_bound_examples() {
    let five: Vec<_> = enumerate(5, 7).unwrap().into_iter().map(|e| e.canonical_ab).collect();
    let want: BTreeSet<_> = [(1, -7), (1, 5), (3, -5), (5, -3), (7, -5)].into_iter().map(|(a, b)| ab(a, b)).collect();
    assert_eq!(five.iter().cloned().collect::<BTreeSet<_>>(), want);
    let ten: BTreeSet<_> = enumerate(10, 7).unwrap().into_iter().map(|e| e.canonical_ab).collect();
    let want: BTreeSet<_> = [(3, -5), (5, -7), (5, -3), (5, 1), (7, -1)].into_iter().map(|(a, b)| ab(a, b)).collect();
    assert_eq!(ten, want);
}

#[test]
fn nested_bounds_nest() {
    for n in [5, 8, 12] {
        let mut prev: BTreeSet<(i64, i64)> = BTreeSet::new();
        for bound in [50, 150, 400] {
            let cur: BTreeSet<_> = search_defective(n, bound).unwrap().pairs.into_iter().collect();
            assert!(prev.is_subset(&cur), "n={n} bound={bound}");
            let table = enumerate_full(n, bound).unwrap();
            assert!(table.entries.iter().all(|e| {
                let (a, b) = &e.canonical_ab;
                a.magnitude() <= &bound.into() && b.magnitude() <= &bound.into()
            }));
            prev = cur;
        }
    }
}

fn swapped_canonical(pairs: impl IntoIterator<Item = (i64, i64)>) -> BTreeSet<(i64, i64)> {
    pairs
        .into_iter()
        .map(|(a, b)| if b > 0 { (b, a) } else { (-b, -a) })
        .collect()
}

#[test]
fn ten_is_five_swapped() {
    for bound in [100, 500] {
        let five: BTreeSet<_> = search_defective(5, bound).unwrap().pairs.into_iter().collect();
        let ten = search_defective(10, bound).unwrap().pairs;
        assert_eq!(swapped_canonical(ten), five, "bound={bound}");
    }
}
