//! Independent oracles against the library paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lehmer_core::pairs::{lehmer_prefix, validate_ab};
use lehmer_core::primdiv::{is_defective, is_defective_by_factorization};
use lehmer_core::SUPPORTED_N;

/// Plain Fibonacci by the textbook recurrence, in i128.
fn fibonacci(count: usize) -> Vec<i128> {
    let mut f = vec![0i128, 1];
    while f.len() < count {
        let k = f.len();
        f.push(f[k - 1] + f[k - 2]);
    }
    f.truncate(count);
    f
}

#[test]
fn one_five_gives_fibonacci() {
    let pair = validate_ab(1, 5).unwrap();
    let got = lehmer_prefix(&pair, 30);
    let want: Vec<BigInt> = fibonacci(31).into_iter().map(BigInt::from).collect();
    assert_eq!(got, want);
}

#[test]
fn stripping_matches_factorization_small_box() {
    // the full |a|, |b| <= 200 sweep runs in the acceptance target
    let mut checked = 0;
    for a in -60i64..=60 {
        for b in (-60i64..=60).filter(|b| (a - b) % 4 == 0) {
            let Ok(pair) = validate_ab(a, b) else { continue };
            for n in SUPPORTED_N {
                assert_eq!(
                    is_defective(&pair, n).unwrap(),
                    is_defective_by_factorization(&pair, n).unwrap(),
                    "({a},{b}) n={n}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 5000);
}

fn sample_pairs(count: usize, seed: u64) -> Vec<(i64, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a: i64 = rng.gen_range(-10_000..=10_000);
        let b: i64 = rng.gen_range(-10_000..=10_000);
        if validate_ab(a, b).is_ok() {
            out.push((a, b));
        }
    }
    out
}

#[test]
fn sampled_invariants() {
    for (a, b) in sample_pairs(300, 7) {
        let pair = validate_ab(a, b).unwrap();
        let (p, q) = pair.pq();
        let u = lehmer_prefix(&pair, 30);
        assert!(u[1].is_one() && u[2].is_one());
        assert_eq!(u[3], &p - &q);
        assert_eq!(u[4], &p - BigInt::from(2) * &q);
        for (n, x) in u.iter().enumerate().skip(1) {
            assert!(!x.is_zero(), "({a},{b}) u_{n} = 0");
            if n <= 12 {
                assert!(x.gcd(&q).is_one(), "({a},{b}) gcd(u_{n}, q)");
            }
        }
        let neg = lehmer_prefix(&validate_ab(-a, -b).unwrap(), 30);
        assert!(u.iter().zip(&neg).all(|(x, y)| x.abs() == y.abs()));
    }
}
