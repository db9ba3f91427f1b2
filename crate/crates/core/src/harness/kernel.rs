//! Machine-word inner loop for the grid scan.
//!
//! Mirrors [`crate::pairs::validate_ab`] and [`crate::primdiv::is_defective`]
//! on `i64` inputs with checked `i128` Lehmer numbers. Stripping is done
//! factor by factor instead of against the product `D`, which keeps every
//! intermediate within one word. Any overflow hands the pair back to the
//! big-integer path.

use num_integer::Integer;

use crate::pairs::{validate_ab, DEGENERATE_PQ};
use crate::primdiv;

/// Largest index the word kernel evaluates; larger n go to the big-integer path.
const MAX_N: usize = 12;

pub(crate) fn is_lehmer(a: i64, b: i64) -> bool {
    if a == 0 || b == 0 {
        return false;
    }
    let diff = a as i128 - b as i128;
    if diff % 4 != 0 {
        return false;
    }
    let q = diff / 4;
    if q == 0 {
        return false;
    }
    if (a as i128).unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
        return false;
    }
    !(q.abs() == 1 && DEGENERATE_PQ.contains(&(a, q as i64)))
}

#[inline]
fn gcd_u128(x: u128, y: u128) -> u128 {
    if x <= u64::MAX as u128 && y <= u64::MAX as u128 {
        (x as u64).gcd(&(y as u64)) as u128
    } else {
        x.gcd(&y)
    }
}

/// Removes from `m` every prime dividing `f`.
#[inline]
fn strip_by(mut m: u128, f: u128) -> u128 {
    let mut g = gcd_u128(m, f);
    while g > 1 {
        m /= g;
        g = gcd_u128(m, g);
    }
    m
}

/// `Some(defective)` when every value fits, `None` on overflow.
pub(crate) fn defective_word(a: i64, b: i64, n: u32) -> Option<bool> {
    let n = n as usize;
    if !(3..=MAX_N).contains(&n) {
        return None;
    }
    let p = a as i128;
    let q = (a as i128 - b as i128) / 4;
    let mut u = [0i128; MAX_N + 1];
    u[1] = 1;
    for i in 2..=n {
        let step = q.checked_mul(u[i - 2])?;
        let lead = if i % 2 == 0 { u[i - 1] } else { p.checked_mul(u[i - 1])? };
        u[i] = lead.checked_sub(step)?;
    }
    let mut m = u[n].unsigned_abs();
    if m <= 1 {
        return Some(m == 1);
    }
    m = strip_by(m, a.unsigned_abs() as u128);
    m = strip_by(m, b.unsigned_abs() as u128);
    // u_1 = u_2 = 1 contribute nothing
    for x in &u[3..n] {
        if m == 1 {
            break;
        }
        m = strip_by(m, x.unsigned_abs());
    }
    Some(m == 1)
}

/// Full decision for one grid point: valid Lehmer pair and n-defective.
pub(crate) fn is_hit(a: i64, b: i64, n: u32) -> bool {
    if !is_lehmer(a, b) {
        return false;
    }
    match defective_word(a, b, n) {
        Some(d) => d,
        None => {
            let pair = validate_ab(a, b).expect("word validation agrees with validate_ab");
            primdiv::is_defective(&pair, n).unwrap_or(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SUPPORTED_N;

    #[test]
    fn validation_matches_big_path() {
        for a in -60..=60 {
            for b in -60..=60 {
                assert_eq!(is_lehmer(a, b), validate_ab(a, b).is_ok(), "({a},{b})");
            }
        }
    }

    #[test]
    fn decision_matches_big_path() {
        for a in -120i64..=120 {
            for b in (-120i64..=120).filter(|b| (a - b) % 4 == 0) {
                let Ok(pair) = validate_ab(a, b) else { continue };
                for n in SUPPORTED_N {
                    assert_eq!(
                        defective_word(a, b, n),
                        Some(primdiv::is_defective(&pair, n).unwrap()),
                        "({a},{b}) n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn overflow_falls_back() {
        // u_12 grows like p^5; p near 10^13 is far past i128
        let a = 10_000_000_000_001i64;
        let b = a - 4 * 3;
        assert!(is_lehmer(a, b));
        assert_eq!(defective_word(a, b, 12), None);
        let pair = validate_ab(a, b).unwrap();
        assert_eq!(is_hit(a, b, 12), primdiv::is_defective(&pair, 12).unwrap());
    }
}
