//! Exact integer factorization for reports and for the factorization-based
//! defectiveness oracle.
//!
//! Trial division by the primes below 10^6, then Brent's variant of Pollard
//! rho on the cofactor. Every factor that is reported as prime has passed a
//! Miller-Rabin test with a base set that is deterministic for its size:
//! the twelve primes up to 37 cover all of `u64`, the thirteen up to 41 cover
//! everything below 3.3e24, and beyond that the bases run over all primes
//! up to `2 ln(n)^2` (Miller's bound).
//!
//! The rho iteration constant is derived from the number being split, so the
//! result never depends on scheduling or global state.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub const TRIAL_DIVISION_LIMIT: u32 = 1_000_000;

const SMALL_BATCH: usize = 168; // primes below 1000

fn primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(TRIAL_DIVISION_LIMIT))
}

fn sieve(limit: u32) -> Vec<u32> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Prime factorization of `m` as `(prime, exponent)` pairs sorted by prime.
/// `m = 0` and `m = 1` both yield an empty list.
pub fn factorize(m: &BigUint) -> Vec<(BigUint, u32)> {
    let mut found: Vec<BigUint> = Vec::new();
    if m.is_zero() {
        return Vec::new();
    }
    let mut rest = m.clone();
    trial_divide(&mut rest, &mut found);
    if !rest.is_one() {
        split_fully(rest, &mut found);
    }
    found.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in found {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Distinct prime divisors of `m`, ascending.
pub fn prime_divisors(m: &BigUint) -> Vec<BigUint> {
    factorize(m).into_iter().map(|(p, _)| p).collect()
}

fn trial_divide(rest: &mut BigUint, found: &mut Vec<BigUint>) {
    let ps = primes();
    let mut i = 0;
    // Big cofactors: divide with BigUint until the value fits a machine word.
    while rest.to_u64().is_none() && i < ps.len() {
        let pb = BigUint::from(ps[i]);
        let mut divided = false;
        loop {
            let (quo, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            *rest = quo;
            found.push(pb.clone());
            divided = true;
        }
        i += 1;
        if (i == SMALL_BATCH || (divided && i > SMALL_BATCH)) && is_prime(rest) {
            found.push(std::mem::replace(rest, BigUint::one()));
            return;
        }
    }
    let Some(mut small) = rest.to_u64() else {
        return;
    };
    while i < ps.len() && small > 1 {
        let p = u64::from(ps[i]);
        if p * p > small {
            break;
        }
        let mut divided = false;
        while small % p == 0 {
            small /= p;
            found.push(BigUint::from(p));
            divided = true;
        }
        i += 1;
        // A prime cofactor ends the scan early; checked once after the
        // small batch and after every later hit.
        if (i == SMALL_BATCH || (divided && i > SMALL_BATCH)) && small > 1 && is_prime_u64(small) {
            break;
        }
    }
    if small > 1 && (is_prime_u64(small) || i < ps.len()) {
        found.push(BigUint::from(small));
        small = 1;
    }
    *rest = BigUint::from(small);
}

fn split_fully(m: BigUint, found: &mut Vec<BigUint>) {
    let mut stack = vec![m];
    while let Some(x) = stack.pop() {
        if x.is_one() {
            continue;
        }
        if is_prime(&x) {
            found.push(x);
            continue;
        }
        let d = find_factor(&x);
        let other = &x / &d;
        stack.push(d);
        stack.push(other);
    }
}

/// A nontrivial divisor of the odd composite `n`.
fn find_factor(n: &BigUint) -> BigUint {
    if let Some(small) = n.to_u64() {
        return BigUint::from(find_factor_u64(small));
    }
    if let Some(r) = perfect_square_root(n) {
        return r;
    }
    let seed = (n % 1_000_003u32).to_u64().unwrap();
    let mut c = 1 + seed % 97;
    loop {
        if let Some(d) = brent_big(n, &BigUint::from(c)) {
            return d;
        }
        c += 1;
    }
}

fn perfect_square_root(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn find_factor_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let r = (n as f64).sqrt() as u64;
    for s in r.saturating_sub(1)..=r + 1 {
        if s > 1 && s.checked_mul(s) == Some(n) {
            return s;
        }
    }
    let mut c = 1 + n % 97;
    loop {
        if let Some(d) = brent_u64(n, c) {
            return d;
        }
        c += 1;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn brent_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
    let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
    let m = 128;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn brent_big(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let diff = |x: &BigUint, y: &BigUint| if x > y { x - y } else { y - x };
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let m = 128u64;
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

const U64_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in U64_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in U64_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Exact primality for every size this crate meets; see the module docs for
/// the base sets.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &primes()[..SMALL_BATCH] {
        if (n % p).is_zero() {
            return false;
        }
    }
    // 3_317_044_064_679_887_385_961_981
    let thirteen_base_limit: BigUint = "3317044064679887385961981".parse().unwrap();
    let bases: Vec<u32> = if *n < thirteen_base_limit {
        primes()[..13].to_vec()
    } else {
        let ln = n.bits() as f64 * std::f64::consts::LN_2;
        let cap = (2.0 * ln * ln).ceil() as u32;
        primes().iter().copied().take_while(|&p| p <= cap).collect()
    };
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'bases: for a in bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(m: u128) -> Vec<(u128, u32)> {
        factorize(&BigUint::from(m))
            .into_iter()
            .map(|(p, e)| (p.to_u128().unwrap(), e))
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(fac(144), vec![(2, 4), (3, 2)]);
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(10403), vec![(101, 1), (103, 1)]);
        assert_eq!(fac(2), vec![(2, 1)]);
        assert_eq!(fac(999_983 * 999_983), vec![(999_983, 2)]);
    }

    #[test]
    fn beyond_trial_division() {
        // two primes just above 10^6, and a product of two ~10^9 primes
        assert_eq!(fac(1_000_003 * 1_000_033), vec![(1_000_003, 1), (1_000_033, 1)]);
        let (p, q) = (1_000_000_007u128, 998_244_353u128);
        assert_eq!(fac(p * q * 12), vec![(2, 2), (3, 1), (q, 1), (p, 1)]);
        // beyond u64: (2^61 - 1) * (2^31 - 1) * 1_000_000_007
        let m61 = (1u128 << 61) - 1;
        let m31 = (1u128 << 31) - 1;
        assert_eq!(fac(m61 * m31 * p), vec![(p, 1), (m31, 1), (m61, 1)]);
    }

    #[test]
    fn products_recover_input() {
        for m in (1u64..5000).chain([600851475143, 9_999_999_967 * 3, 4_294_967_297]) {
            let f = factorize(&BigUint::from(m));
            let prod = f.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
            assert_eq!(prod, BigUint::from(m));
            for (p, _) in &f {
                assert!(is_prime(p));
            }
        }
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let ps = sieve(20_000);
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), ps.binary_search(&(n as u32)).is_ok(), "{n}");
        }
        // strong pseudoprime to bases 2, 3, 5 and 7
        assert!(!is_prime_u64(3_215_031_751));
        assert!(is_prime(&BigUint::from((1u128 << 89) - 1)));
        assert!(!is_prime(&BigUint::from(((1u128 << 61) - 1) * ((1u128 << 31) - 1))));
    }
}
