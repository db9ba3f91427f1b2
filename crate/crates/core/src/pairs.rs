//! Lehmer pairs in `(a, b)` coordinates.
//!
//! A pair `(a, b)` stands for `(alpha, beta) = ((sqrt a - sqrt b)/2, (sqrt a + sqrt b)/2)`,
//! so that `a = (alpha + beta)^2 = p`, `b = (alpha - beta)^2 = p - 4q` and
//! `q = alpha*beta = (a - b)/4`. Everything here is exact integer arithmetic;
//! `alpha` and `beta` themselves are never materialised.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// `(p, q)` values for which `alpha/beta` is a root of unity of order 1, 2,
/// 3, 4 or 6 while `p, q` are coprime and nonzero.
pub const DEGENERATE_PQ: [(i64, i64); 8] = [
    (1, 1),
    (-1, -1),
    (2, 1),
    (-2, -1),
    (3, 1),
    (-3, -1),
    (4, 1),
    (-4, -1),
];

/// The first violated Lehmer-pair condition, checked in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum ValidationError {
    #[error("a = 0, so (alpha + beta)^2 vanishes")]
    ZeroA,
    #[error("b = 0, so alpha = beta")]
    ZeroB,
    #[error("a - b is not divisible by 4, so q is not an integer")]
    NotCongruentMod4,
    #[error("q = 0")]
    ZeroQ,
    #[error("p and q are not coprime")]
    NotCoprime,
    #[error("(p, q) = ({p}, {q}) makes alpha/beta a root of unity")]
    DegenerateRatio { p: i64, q: i64 },
}

impl ValidationError {
    /// Stable short name used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            ValidationError::ZeroA => "ZeroA",
            ValidationError::ZeroB => "ZeroB",
            ValidationError::NotCongruentMod4 => "NotCongruentMod4",
            ValidationError::ZeroQ => "ZeroQ",
            ValidationError::NotCoprime => "NotCoprime",
            ValidationError::DegenerateRatio { .. } => "DegenerateRatio",
        }
    }

    /// Kind plus the offending `(p, q)` for degenerate ratios, e.g.
    /// `DegenerateRatio(-1,-1)`.
    pub fn describe(&self) -> String {
        match self {
            ValidationError::DegenerateRatio { p, q } => format!("DegenerateRatio({p},{q})"),
            other => other.kind().to_string(),
        }
    }
}

/// A validated Lehmer pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LehmerPair {
    a: BigInt,
    b: BigInt,
    q: BigInt,
}

impl LehmerPair {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self, ValidationError> {
        validate_ab(a, b)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn p(&self) -> &BigInt {
        &self.a
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn ab(&self) -> (BigInt, BigInt) {
        (self.a.clone(), self.b.clone())
    }

    pub fn pq(&self) -> (BigInt, BigInt) {
        pq_of(self)
    }

    pub fn lehmer_number(&self, n: u32) -> BigInt {
        lehmer_number(self, n)
    }

    pub fn lehmer_prefix(&self, n: u32) -> Vec<BigInt> {
        lehmer_prefix(self, n)
    }

    pub fn discriminant_sq(&self) -> BigInt {
        discriminant_sq(self)
    }

    pub fn canonical(&self) -> LehmerPair {
        canonicalize(self)
    }

    pub fn is_canonical(&self) -> bool {
        self.a.is_positive()
    }

    pub fn is_equivalent(&self, other: &LehmerPair) -> bool {
        equivalent(self, other)
    }

    /// The pair for `(i*alpha, i*beta)`, i.e. `(-a, -b)`.
    pub fn negated(&self) -> LehmerPair {
        LehmerPair {
            a: -&self.a,
            b: -&self.b,
            q: -&self.q,
        }
    }
}

impl fmt::Display for LehmerPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Validates `(a, b)` as a Lehmer pair, reporting the first failed rule in
/// the order ZeroA, ZeroB, NotCongruentMod4, ZeroQ, NotCoprime,
/// DegenerateRatio.
pub fn validate_ab(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<LehmerPair, ValidationError> {
    let a = a.into();
    let b = b.into();
    if a.is_zero() {
        return Err(ValidationError::ZeroA);
    }
    if b.is_zero() {
        return Err(ValidationError::ZeroB);
    }
    let diff = &a - &b;
    let (q, rem) = diff.div_rem(&BigInt::from(4));
    if !rem.is_zero() {
        return Err(ValidationError::NotCongruentMod4);
    }
    if q.is_zero() {
        return Err(ValidationError::ZeroQ);
    }
    if !a.gcd(&q).is_one() {
        return Err(ValidationError::NotCoprime);
    }
    if let (Some(p), Some(qs)) = (a.to_i64(), q.to_i64()) {
        if DEGENERATE_PQ.contains(&(p, qs)) {
            return Err(ValidationError::DegenerateRatio { p, q: qs });
        }
    }
    Ok(LehmerPair { a, b, q })
}

pub fn pq_of(pair: &LehmerPair) -> (BigInt, BigInt) {
    (pair.a.clone(), pair.q.clone())
}

/// `(a, b) = (p, p - 4q)`. No validation.
pub fn ab_of(p: impl Into<BigInt>, q: impl Into<BigInt>) -> (BigInt, BigInt) {
    let p = p.into();
    let b = &p - q.into() * 4;
    (p, b)
}

/// Lehmer numbers `u_0..=u_n` for the pair with parameters `(p, q)`.
///
/// With `L_n = (alpha^n - beta^n)/(alpha - beta)` one has
/// `L_{n+2} = sqrt(p) L_{n+1} - q L_n`, and `L_n = u_n` for odd `n`,
/// `L_n = sqrt(p) u_n` for even `n`. Eliminating `sqrt(p)` gives
/// `u_n = u_{n-1} - q u_{n-2}` (n even) and `u_n = p u_{n-1} - q u_{n-2}` (n odd).
pub fn lehmer_prefix_pq(p: &BigInt, q: &BigInt, n: u32) -> Vec<BigInt> {
    let mut u = Vec::with_capacity(n as usize + 1);
    u.push(BigInt::zero());
    if n == 0 {
        return u;
    }
    u.push(BigInt::one());
    for i in 2..=n as usize {
        let step = q * &u[i - 2];
        let next = if i % 2 == 0 {
            &u[i - 1] - step
        } else {
            p * &u[i - 1] - step
        };
        u.push(next);
    }
    u
}

pub fn lehmer_prefix(pair: &LehmerPair, n: u32) -> Vec<BigInt> {
    lehmer_prefix_pq(&pair.a, &pair.q, n)
}

pub fn lehmer_number(pair: &LehmerPair, n: u32) -> BigInt {
    lehmer_prefix(pair, n).pop().unwrap()
}

/// `(alpha^2 - beta^2)^2 = p (p - 4q) = a b`.
pub fn discriminant_sq(pair: &LehmerPair) -> BigInt {
    &pair.a * &pair.b
}

/// The representative of the equivalence class `{(a, b), (-a, -b)}` with `a > 0`.
pub fn canonicalize(pair: &LehmerPair) -> LehmerPair {
    if pair.a.is_positive() {
        pair.clone()
    } else {
        pair.negated()
    }
}

/// Same as [`canonicalize`] on raw coordinates.
pub fn canonical_ab(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    if a.is_negative() {
        (-a, -b)
    } else {
        (a.clone(), b.clone())
    }
}

pub fn equivalent(p1: &LehmerPair, p2: &LehmerPair) -> bool {
    canonicalize(p1) == canonicalize(p2)
}

/// `|x|` as an unsigned integer.
pub(crate) fn abs_uint(x: &BigInt) -> BigUint {
    x.magnitude().clone()
}
