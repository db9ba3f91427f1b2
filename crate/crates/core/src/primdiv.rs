//! Primitive divisors of Lehmer numbers.
//!
//! A prime is a primitive divisor of `u_n` when it divides `u_n` but not
//! `D = (alpha^2 - beta^2)^2 u_1 ... u_{n-1} = a b u_1 ... u_{n-1}`. The
//! decision is made without factoring: `|u_n|` is divided by its gcd with `D`
//! until the two are coprime, and the pair is defective exactly when nothing
//! is left. Full factorization is kept for reports and as an independent
//! cross-check.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::factor;
use crate::pairs::{abs_uint, LehmerPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PrimDivError {
    #[error("index {0} is not supported; defectiveness is tested for n >= 3")]
    UnsupportedIndex(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectWitness {
    pub pair: LehmerPair,
    pub n: u32,
    pub u_n: BigInt,
    /// `|a b u_1 ... u_{n-1}|`.
    pub nonprim_product: BigUint,
    /// Largest divisor of `|u_n|` coprime to `nonprim_product`.
    pub residual: BigUint,
    /// Prime factors of `residual`; `None` unless factorization was requested.
    pub primitive_primes: Option<Vec<BigUint>>,
    pub defective: bool,
}

/// Removes from `m` every prime that divides `d`.
pub fn strip(mut m: BigUint, d: &BigUint) -> BigUint {
    if m.is_zero() {
        return m;
    }
    loop {
        let g = m.gcd(d);
        if g.is_one() {
            return m;
        }
        m /= g;
    }
}

fn check_index(n: u32) -> Result<(), PrimDivError> {
    if n < 3 {
        Err(PrimDivError::UnsupportedIndex(n))
    } else {
        Ok(())
    }
}

pub fn defect_witness(pair: &LehmerPair, n: u32) -> Result<DefectWitness, PrimDivError> {
    check_index(n)?;
    let u = pair.lehmer_prefix(n);
    let mut d = abs_uint(&pair.discriminant_sq());
    for x in &u[1..n as usize] {
        d *= abs_uint(x);
    }
    let u_n = u[n as usize].clone();
    let residual = strip(abs_uint(&u_n), &d);
    Ok(DefectWitness {
        pair: pair.clone(),
        n,
        u_n,
        defective: residual.is_one(),
        nonprim_product: d,
        residual,
        primitive_primes: None,
    })
}

/// [`defect_witness`] with `primitive_primes` filled in.
pub fn defect_witness_factored(pair: &LehmerPair, n: u32) -> Result<DefectWitness, PrimDivError> {
    let mut w = defect_witness(pair, n)?;
    w.primitive_primes = Some(factor::prime_divisors(&w.residual));
    Ok(w)
}

pub fn is_defective(pair: &LehmerPair, n: u32) -> Result<bool, PrimDivError> {
    Ok(defect_witness(pair, n)?.defective)
}

pub fn primitive_divisors(pair: &LehmerPair, n: u32) -> Result<Vec<BigUint>, PrimDivError> {
    let w = defect_witness_factored(pair, n)?;
    Ok(w.primitive_primes.unwrap_or_default())
}

/// Defectiveness decided by factoring `|u_n|` and testing each prime against
/// the individual factors of `D`. Shares nothing with the stripping route
/// beyond the Lehmer numbers themselves.
pub fn is_defective_by_factorization(pair: &LehmerPair, n: u32) -> Result<bool, PrimDivError> {
    check_index(n)?;
    let u = pair.lehmer_prefix(n);
    let mut earlier: Vec<BigUint> = vec![abs_uint(pair.a()), abs_uint(pair.b())];
    earlier.extend(u[1..n as usize].iter().map(abs_uint));
    let primes = factor::prime_divisors(&abs_uint(&u[n as usize]));
    Ok(primes
        .iter()
        .all(|p| earlier.iter().any(|x| (x % p).is_zero())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::validate_ab;

    fn pair(a: i64, b: i64) -> LehmerPair {
        validate_ab(a, b).unwrap()
    }

    #[test]
    fn worked_example_is_five_defective() {
        let w = defect_witness(&pair(-1, -5), 5).unwrap();
        assert_eq!(w.u_n, BigInt::from(5));
        assert!(w.defective);
        assert!(w.residual.is_one());
        assert!(primitive_divisors(&pair(-1, -5), 5).unwrap().is_empty());
    }

    #[test]
    fn five_one_has_primitive_eleven() {
        let w = defect_witness_factored(&pair(5, 1), 5).unwrap();
        assert_eq!(w.u_n, BigInt::from(11));
        assert_eq!(w.nonprim_product, BigUint::from(60u32));
        assert_eq!(w.residual, BigUint::from(11u32));
        assert_eq!(w.primitive_primes, Some(vec![BigUint::from(11u32)]));
        assert!(!w.defective);
        assert!(!is_defective(&pair(5, 1), 5).unwrap());
    }

    #[test]
    fn other_examples() {
        assert!(is_defective(&pair(1, 5), 12).unwrap());
        assert!(primitive_divisors(&pair(1, 5), 12).unwrap().is_empty());
        // u_3 = p - q = 1
        assert!(is_defective(&pair(3, -5), 3).unwrap());
        assert!(is_defective_by_factorization(&pair(3, -5), 3).unwrap());
    }

    #[test]
    fn index_below_three_is_rejected() {
        for n in 0..3 {
            assert_eq!(
                defect_witness(&pair(5, 1), n).unwrap_err(),
                PrimDivError::UnsupportedIndex(n)
            );
            assert!(is_defective_by_factorization(&pair(5, 1), n).is_err());
        }
    }

    #[test]
    fn witness_invariants_and_oracle_agree() {
        for a in -40i64..=40 {
            for b in -40i64..=40 {
                let Ok(p) = validate_ab(a, b) else { continue };
                for n in [3, 4, 5, 6, 8, 10, 12] {
                    let w = defect_witness_factored(&p, n).unwrap();
                    let m = abs_uint(&w.u_n);
                    assert!((&m % &w.residual).is_zero());
                    assert!(w.residual.gcd(&w.nonprim_product).is_one());
                    assert_eq!(w.defective, w.residual.is_one());
                    for q in w.primitive_primes.as_ref().unwrap() {
                        assert!((&m % q).is_zero());
                        assert!(!(&w.nonprim_product % q).is_zero());
                    }
                    assert_eq!(
                        w.defective,
                        is_defective_by_factorization(&p, n).unwrap(),
                        "({a},{b}) n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn strip_removes_shared_primes_only() {
        let m = BigUint::from(2u32 * 2 * 2 * 3 * 7 * 7 * 11);
        assert_eq!(strip(m, &BigUint::from(42u32)), BigUint::from(11u32));
        assert_eq!(strip(BigUint::from(13u32), &BigUint::from(1u32)), BigUint::from(13u32));
    }
}
