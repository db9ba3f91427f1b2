//! The parametric families of n-defective Lehmer pairs, one generator per
//! table row, with the exact side conditions of each row.
//!
//! Rows for n = 3, 4 and 6 all have the shape `(T + s q, T - t q)` with
//! `s + t = 4`, where `T` is 1 or a power term; rows for n = 5, 8 and 12
//! are indexed by `k` and a sign `eps` through the recurrences of
//! [`crate::sequences`]. The n = 10 rows are the n = 5 rows with the two
//! coordinates swapped.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::pairs::{canonical_ab, validate_ab, LehmerPair, ValidationError};
use crate::primdiv;
use crate::sequences::{SequenceCache, SequenceError, SequenceId, Zeta};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eps {
    Plus,
    Minus,
}

impl Eps {
    /// Iteration order used by enumeration.
    pub const ORDER: [Eps; 2] = [Eps::Plus, Eps::Minus];

    pub fn value(self) -> i64 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Eps> {
        match v {
            1 => Some(Eps::Plus),
            -1 => Some(Eps::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eps::Plus => "+1",
            Eps::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyRowId {
    N3Q,
    N3Pow3,
    N4Q,
    N4Pow2,
    N5Phi,
    N5Psi,
    N6Q,
    N6Pow3,
    N6Pow2,
    N6Pow6,
    N8Rho,
    N8Pi,
    N10Phi,
    N10Psi,
    N12Zeta(Zeta),
}

/// Which parameters a row takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamShape {
    pub k: bool,
    pub l: bool,
    pub q: bool,
    pub eps: bool,
}

impl ParamShape {
    fn describe(self) -> String {
        let mut parts = Vec::new();
        for (on, name) in [(self.k, "k"), (self.l, "l"), (self.q, "q"), (self.eps, "eps")] {
            if on {
                parts.push(name);
            }
        }
        parts.join(",")
    }
}

impl FamilyRowId {
    pub const ALL: [FamilyRowId; 18] = [
        FamilyRowId::N3Q,
        FamilyRowId::N3Pow3,
        FamilyRowId::N4Q,
        FamilyRowId::N4Pow2,
        FamilyRowId::N5Phi,
        FamilyRowId::N5Psi,
        FamilyRowId::N6Q,
        FamilyRowId::N6Pow3,
        FamilyRowId::N6Pow2,
        FamilyRowId::N6Pow6,
        FamilyRowId::N8Rho,
        FamilyRowId::N8Pi,
        FamilyRowId::N10Phi,
        FamilyRowId::N10Psi,
        FamilyRowId::N12Zeta(Zeta::Z0),
        FamilyRowId::N12Zeta(Zeta::Z1),
        FamilyRowId::N12Zeta(Zeta::Z2),
        FamilyRowId::N12Zeta(Zeta::Z3),
    ];

    pub fn n(self) -> u32 {
        use FamilyRowId::*;
        match self {
            N3Q | N3Pow3 => 3,
            N4Q | N4Pow2 => 4,
            N5Phi | N5Psi => 5,
            N6Q | N6Pow3 | N6Pow2 | N6Pow6 => 6,
            N8Rho | N8Pi => 8,
            N10Phi | N10Psi => 10,
            N12Zeta(_) => 12,
        }
    }

    pub fn name(self) -> &'static str {
        use FamilyRowId::*;
        match self {
            N3Q => "N3_Q",
            N3Pow3 => "N3_POW3",
            N4Q => "N4_Q",
            N4Pow2 => "N4_POW2",
            N5Phi => "N5_PHI",
            N5Psi => "N5_PSI",
            N6Q => "N6_Q",
            N6Pow3 => "N6_POW3",
            N6Pow2 => "N6_POW2",
            N6Pow6 => "N6_POW6",
            N8Rho => "N8_RHO",
            N8Pi => "N8_PI",
            N10Phi => "N10_PHI",
            N10Psi => "N10_PSI",
            N12Zeta(Zeta::Z0) => "N12_ZETA0",
            N12Zeta(Zeta::Z1) => "N12_ZETA1",
            N12Zeta(Zeta::Z2) => "N12_ZETA2",
            N12Zeta(Zeta::Z3) => "N12_ZETA3",
        }
    }

    pub fn shape(self) -> ParamShape {
        use FamilyRowId::*;
        let (k, l, q, eps) = match self {
            N3Q | N4Q | N6Q => (false, false, true, false),
            N3Pow3 | N4Pow2 | N6Pow2 => (true, false, true, false),
            N6Pow3 => (false, true, true, false),
            N6Pow6 => (true, true, true, false),
            N5Phi | N5Psi | N8Rho | N8Pi | N10Phi | N10Psi | N12Zeta(_) => (true, false, false, true),
        };
        ParamShape { k, l, q, eps }
    }

    /// `(s, t)` for rows of the form `(T + s q, T - t q)`.
    fn linear_coeffs(self) -> Option<(i64, i64)> {
        use FamilyRowId::*;
        match self {
            N3Q | N3Pow3 => Some((1, 3)),
            N4Q | N4Pow2 => Some((2, 2)),
            N6Q | N6Pow3 | N6Pow2 | N6Pow6 => Some((3, 1)),
            _ => None,
        }
    }

    /// Smallest `k` allowed by the row's side conditions.
    fn min_k(self) -> i64 {
        use FamilyRowId::*;
        match self {
            N5Phi | N10Phi => 3,
            N8Rho | N8Pi => 2,
            N3Pow3 | N4Pow2 | N6Pow2 | N6Pow6 => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for FamilyRowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown family row {0:?}")]
pub struct UnknownRow(pub String);

impl FromStr for FamilyRowId {
    type Err = UnknownRow;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyRowId::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownRow(s.to_string()))
    }
}

/// Parameters of one table row; only the fields the row uses are set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    pub k: Option<i64>,
    pub l: Option<i64>,
    pub q: Option<i64>,
    pub eps: Option<Eps>,
}

impl FamilyParams {
    pub fn q(q: i64) -> Self {
        FamilyParams { q: Some(q), ..Default::default() }
    }

    pub fn kq(k: i64, q: i64) -> Self {
        FamilyParams { k: Some(k), q: Some(q), ..Default::default() }
    }

    pub fn lq(l: i64, q: i64) -> Self {
        FamilyParams { l: Some(l), q: Some(q), ..Default::default() }
    }

    pub fn klq(k: i64, l: i64, q: i64) -> Self {
        FamilyParams { k: Some(k), l: Some(l), q: Some(q), eps: None }
    }

    pub fn keps(k: i64, eps: Eps) -> Self {
        FamilyParams { k: Some(k), eps: Some(eps), ..Default::default() }
    }

    fn matches(&self, shape: ParamShape) -> bool {
        self.k.is_some() == shape.k
            && self.l.is_some() == shape.l
            && self.q.is_some() == shape.q
            && self.eps.is_some() == shape.eps
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(l) = self.l {
            parts.push(format!("l={l}"));
        }
        if let Some(q) = self.q {
            parts.push(format!("q={q}"));
        }
        if let Some(e) = self.eps {
            parts.push(format!("eps={e}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// The side condition of a row that a parameter tuple fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ConstraintViolation {
    #[error("q = {0} is excluded (q must avoid -1, 0, 1)")]
    ExcludedQ(i64),
    #[error("{param} = {value} is below the minimum {min}")]
    IndexTooSmall { param: &'static str, min: i64, value: i64 },
    #[error("q = {q} shares a factor with {modulus}")]
    SharedFactor { modulus: i64, q: i64 },
    #[error("the parameter tuple is explicitly excluded by the table")]
    ExcludedTuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("n = {0} is not one of 3, 4, 5, 6, 8, 10, 12")]
    UnsupportedN(u32),
    #[error("row {row} takes parameters ({expected})")]
    ShapeMismatch { row: FamilyRowId, expected: String },
    #[error("exponent {0} is out of range")]
    BadExponent(i64),
    #[error(transparent)]
    Undefined(#[from] SequenceError),
    #[error("side condition failed: {0}")]
    Constraint(ConstraintViolation),
    #[error("not a Lehmer pair: {0}")]
    Invalid(ValidationError),
}

pub fn family_rows(n: u32) -> Result<Vec<FamilyRowId>, FamilyError> {
    use FamilyRowId::*;
    Ok(match n {
        3 => vec![N3Q, N3Pow3],
        4 => vec![N4Q, N4Pow2],
        5 => vec![N5Phi, N5Psi],
        6 => vec![N6Q, N6Pow3, N6Pow2, N6Pow6],
        8 => vec![N8Rho, N8Pi],
        10 => vec![N10Phi, N10Psi],
        12 => Zeta::ALL.into_iter().map(N12Zeta).collect(),
        _ => return Err(FamilyError::UnsupportedN(n)),
    })
}

/// Checks the row's side conditions. Assumes the parameter shape matches.
pub fn check_constraints(row: FamilyRowId, params: &FamilyParams) -> Result<(), ConstraintViolation> {
    use ConstraintViolation::*;
    use FamilyRowId::*;
    let k = params.k.unwrap_or(0);
    let l = params.l.unwrap_or(0);
    let q = params.q.unwrap_or(0);
    let eps = params.eps.map(Eps::value).unwrap_or(0);
    let min = |param: &'static str, value: i64, min: i64| {
        if value < min {
            Err(IndexTooSmall { param, min, value })
        } else {
            Ok(())
        }
    };
    let coprime = |modulus: i64| {
        if q.gcd(&modulus) != 1 {
            Err(SharedFactor { modulus, q })
        } else {
            Ok(())
        }
    };
    let tuple_not_in = |excluded: &[(i64, i64)], x: (i64, i64)| {
        if excluded.contains(&x) {
            Err(ExcludedTuple)
        } else {
            Ok(())
        }
    };
    match row {
        N3Q | N4Q | N6Q => {
            if (-1..=1).contains(&q) {
                return Err(ExcludedQ(q));
            }
        }
        N3Pow3 => {
            min("k", k, 1)?;
            coprime(3)?;
            tuple_not_in(&[(1, 1)], (k, q))?;
        }
        N4Pow2 => {
            min("k", k, 1)?;
            coprime(2)?;
            tuple_not_in(&[(1, -1), (1, 1), (2, 1)], (k, q))?;
        }
        N6Pow3 => {
            min("l", l, 1)?;
            coprime(3)?;
            tuple_not_in(&[(1, -1)], (l, q))?;
        }
        N6Pow2 => {
            min("k", k, 1)?;
            coprime(2)?;
            tuple_not_in(&[(1, -1)], (k, q))?;
        }
        N6Pow6 => {
            min("k", k, 1)?;
            min("l", l, 1)?;
            coprime(6)?;
        }
        N5Phi | N10Phi => min("k", k, 3)?,
        N5Psi | N10Psi => {
            min("k", k, 0)?;
            tuple_not_in(&[(0, -1), (1, -1)], (k, eps))?;
        }
        N8Rho | N8Pi => min("k", k, 2)?,
        N12Zeta(z) => {
            min("k", k, 0)?;
            let excluded = match z {
                Zeta::Z0 => k == 0 || k == 1,
                Zeta::Z1 | Zeta::Z2 => k == 0,
                Zeta::Z3 => false,
            };
            if excluded {
                return Err(ExcludedTuple);
            }
        }
    }
    Ok(())
}

fn pow_term(base: u32, exp: i64) -> Result<BigInt, FamilyError> {
    if !(0..=100_000).contains(&exp) {
        return Err(FamilyError::BadExponent(exp));
    }
    Ok(num_traits::pow(BigInt::from(base), exp as usize))
}

fn power_term(row: FamilyRowId, params: &FamilyParams) -> Result<BigInt, FamilyError> {
    use FamilyRowId::*;
    let k = params.k.unwrap_or(0);
    let l = params.l.unwrap_or(0);
    match row {
        N3Q | N4Q | N6Q => Ok(BigInt::from(1)),
        N3Pow3 => pow_term(3, k),
        N4Pow2 | N6Pow2 => pow_term(2, k),
        N6Pow3 => pow_term(3, l),
        N6Pow6 => Ok(pow_term(2, k)? * pow_term(3, l)?),
        _ => unreachable!("not a linear row"),
    }
}

/// Evaluates the row formula at `params`, ignoring side conditions.
pub fn row_formula(row: FamilyRowId, params: &FamilyParams) -> Result<(BigInt, BigInt), FamilyError> {
    row_formula_cached(row, params, &mut SequenceCache::new())
}

fn row_formula_cached(
    row: FamilyRowId,
    params: &FamilyParams,
    cache: &mut SequenceCache,
) -> Result<(BigInt, BigInt), FamilyError> {
    use FamilyRowId::*;
    if !params.matches(row.shape()) {
        return Err(FamilyError::ShapeMismatch {
            row,
            expected: row.shape().describe(),
        });
    }
    if let Some((s, t)) = row.linear_coeffs() {
        let big_t = power_term(row, params)?;
        let q = BigInt::from(params.q.unwrap());
        return Ok((&big_t + &q * s, &big_t - &q * t));
    }
    let k = params.k.unwrap();
    let e = params.eps.unwrap().value();
    let mut seq = |id: SequenceId, idx: i64| cache.eval(id, idx);
    Ok(match row {
        N5Phi | N5Psi => {
            let id = if row == N5Phi { SequenceId::Phi } else { SequenceId::Psi };
            let p = seq(id, k - 2 * e)?;
            let q = seq(id, k)?;
            let b = &p - q * 4;
            (p, b)
        }
        N10Phi => {
            let (a, b) = row_formula_cached(N5Phi, params, cache)?;
            (b, a)
        }
        N10Psi => {
            let (a, b) = row_formula_cached(N5Psi, params, cache)?;
            (b, a)
        }
        N8Rho => {
            let p = seq(SequenceId::Rho, k - e)?;
            let q = seq(SequenceId::Pi, k)?;
            let b = &p - q * 4;
            (p, b)
        }
        N8Pi => {
            let p = seq(SequenceId::Pi, k - e)? * 2;
            let q = seq(SequenceId::Rho, k)?;
            let b = &p - q * 4;
            (p, b)
        }
        N12Zeta(z) => {
            let id = SequenceId::Zeta(z);
            (seq(id, k - e)?, -seq(id, k + e)?)
        }
        _ => unreachable!("linear rows handled above"),
    })
}

/// One instantiated table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub n: u32,
    pub row: FamilyRowId,
    pub params: FamilyParams,
    pub raw_ab: (BigInt, BigInt),
    pub canonical_ab: (BigInt, BigInt),
    pub pair: LehmerPair,
    /// Later tuples of the same n whose pair is equivalent to this one.
    pub duplicates: Vec<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub row: FamilyRowId,
    pub params: FamilyParams,
    pub raw_ab: (BigInt, BigInt),
}

pub fn instantiate(row: FamilyRowId, params: &FamilyParams) -> Result<FamilyEntry, FamilyError> {
    instantiate_cached(row, params, &mut SequenceCache::new())
}

fn instantiate_cached(
    row: FamilyRowId,
    params: &FamilyParams,
    cache: &mut SequenceCache,
) -> Result<FamilyEntry, FamilyError> {
    if !params.matches(row.shape()) {
        return Err(FamilyError::ShapeMismatch {
            row,
            expected: row.shape().describe(),
        });
    }
    check_constraints(row, params).map_err(FamilyError::Constraint)?;
    let raw_ab = row_formula_cached(row, params, cache)?;
    let pair = validate_ab(raw_ab.0.clone(), raw_ab.1.clone()).map_err(FamilyError::Invalid)?;
    Ok(FamilyEntry {
        n: row.n(),
        row,
        params: *params,
        canonical_ab: canonical_ab(&raw_ab.0, &raw_ab.1),
        raw_ab,
        pair,
        duplicates: Vec::new(),
    })
}

/// A tuple that satisfies its row's side conditions but does not give a
/// Lehmer pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidInstance {
    pub row: FamilyRowId,
    pub params: FamilyParams,
    pub raw_ab: (BigInt, BigInt),
    pub error: ValidationError,
}

/// Everything a bounded walk over the table produced for one n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub n: u32,
    pub bound: u64,
    pub entries: Vec<FamilyEntry>,
    pub invalid: Vec<InvalidInstance>,
}

fn in_bound(ab: &(BigInt, BigInt), bound: &BigInt) -> bool {
    ab.0.abs() <= *bound && ab.1.abs() <= *bound
}

/// Parameter tuples of `row` whose raw pair could satisfy
/// `max(|a|, |b|) <= bound`, in enumeration order. Side conditions are not
/// applied here.
fn candidate_params(row: FamilyRowId, bound: i64, cache: &mut SequenceCache) -> Vec<FamilyParams> {
    use FamilyRowId::*;
    let mut out = Vec::new();
    if let Some((s, t)) = row.linear_coeffs() {
        // |T + s q| <= B and |T - t q| <= B
        let q_range = |big_t: i64| {
            let lo = Integer::div_ceil(&(-bound - big_t), &s).max(Integer::div_ceil(&(big_t - bound), &t));
            let hi = Integer::div_floor(&(bound - big_t), &s).min(Integer::div_floor(&(bound + big_t), &t));
            lo..=hi
        };
        // t a + s b = 4T forces T <= B; walking powers up to 2B is a safe superset.
        let limit = 2 * bound;
        let powers = |base: i64| {
            let mut v = Vec::new();
            let mut e = 1i64;
            let mut t = base;
            while t <= limit {
                v.push((e, t));
                e += 1;
                t *= base;
            }
            v
        };
        match row {
            N3Q | N4Q | N6Q => out.extend(q_range(1).map(FamilyParams::q)),
            N3Pow3 => {
                for (k, t3) in powers(3) {
                    out.extend(q_range(t3).map(|q| FamilyParams::kq(k, q)));
                }
            }
            N4Pow2 | N6Pow2 => {
                for (k, t2) in powers(2) {
                    out.extend(q_range(t2).map(|q| FamilyParams::kq(k, q)));
                }
            }
            N6Pow3 => {
                for (l, t3) in powers(3) {
                    out.extend(q_range(t3).map(|q| FamilyParams::lq(l, q)));
                }
            }
            N6Pow6 => {
                for (k, t2) in powers(2) {
                    for (l, t3) in powers(3) {
                        if t2 * t3 > limit {
                            break;
                        }
                        out.extend(q_range(t2 * t3).map(|q| FamilyParams::klq(k, l, q)));
                    }
                }
            }
            _ => unreachable!(),
        }
        return out;
    }
    // Sequence rows: a - b = 4q with q = +-seq(k), and max(|a|,|b|) >= 2|q|.
    // |seq(k)| is strictly increasing from k = 2, so the first k >= 2 whose
    // spread exceeds 2B ends the walk.
    let big_bound = BigInt::from(bound) * 2;
    let mut k = row.min_k();
    loop {
        let mut spread = None;
        for eps in Eps::ORDER {
            let params = FamilyParams::keps(k, eps);
            if let Ok((a, b)) = row_formula_cached(row, &params, cache) {
                spread = Some((a - b).abs());
            }
            out.push(params);
        }
        if k >= 2 && spread.is_some_and(|s| s > big_bound) {
            // the last two pushed are out of range
            out.truncate(out.len() - 2);
            return out;
        }
        k += 1;
    }
}

/// Every table tuple for `n` with `max(|a|, |b|) <= bound`, including those
/// that fail validation, deduplicated by canonical pair.
pub fn enumerate_full(n: u32, bound: u64) -> Result<Enumeration, FamilyError> {
    let rows = family_rows(n)?;
    let bound_i = i64::try_from(bound).unwrap_or(i64::MAX / 4).min(i64::MAX / 4);
    let big_bound = BigInt::from(bound_i);
    let mut cache = SequenceCache::new();
    let mut entries: Vec<FamilyEntry> = Vec::new();
    let mut invalid = Vec::new();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    for row in rows {
        for params in candidate_params(row, bound_i, &mut cache) {
            if check_constraints(row, &params).is_err() {
                continue;
            }
            let Ok(raw_ab) = row_formula_cached(row, &params, &mut cache) else {
                continue;
            };
            if !in_bound(&raw_ab, &big_bound) {
                continue;
            }
            match validate_ab(raw_ab.0.clone(), raw_ab.1.clone()) {
                Err(error) => invalid.push(InvalidInstance { row, params, raw_ab, error }),
                Ok(pair) => {
                    let canonical = canonical_ab(&raw_ab.0, &raw_ab.1);
                    if let Some(&i) = seen.get(&canonical) {
                        entries[i].duplicates.push(Provenance { row, params, raw_ab });
                        continue;
                    }
                    seen.insert(canonical.clone(), entries.len());
                    entries.push(FamilyEntry {
                        n,
                        row,
                        params,
                        raw_ab,
                        canonical_ab: canonical,
                        pair,
                        duplicates: Vec::new(),
                    });
                }
            }
        }
    }
    Ok(Enumeration { n, bound, entries, invalid })
}

/// Valid table entries for `n` with `max(|a|, |b|) <= bound`, first
/// occurrence per equivalence class, in (row, k/l, q, eps) order.
pub fn enumerate(n: u32, bound: u64) -> Result<Vec<FamilyEntry>, FamilyError> {
    Ok(enumerate_full(n, bound)?.entries)
}

/// Why the table leaves out a parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditReason {
    /// The tuple does not give a Lehmer pair.
    InvalidPair(ValidationError),
    /// The tuple gives a pair equivalent to one produced by an admitted tuple.
    DuplicateOf {
        row: FamilyRowId,
        params: FamilyParams,
        canonical_ab: (BigInt, BigInt),
    },
    /// Neither: the pair is valid and no admitted tuple produces it.
    Unaccounted {
        canonical_ab: (BigInt, BigInt),
        defective: bool,
    },
}

impl fmt::Display for AuditReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditReason::InvalidPair(e) => write!(f, "InvalidPair({})", e.describe()),
            AuditReason::DuplicateOf { row, params, canonical_ab } => write!(
                f,
                "DuplicateOf({row} {params}; ({}, {}))",
                canonical_ab.0, canonical_ab.1
            ),
            AuditReason::Unaccounted { canonical_ab, defective } => write!(
                f,
                "Unaccounted(({}, {}); defective={defective})",
                canonical_ab.0, canonical_ab.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("{row} {params} satisfies the row's side conditions")]
    NotAnExclusion { row: FamilyRowId, params: FamilyParams },
    #[error("row {row} belongs to n = {}, not n = {n}", row.n())]
    RowNotForN { row: FamilyRowId, n: u32 },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Machine-checks why `(row, params)` is excluded from the table for `n`.
pub fn audit_exclusion(n: u32, row: FamilyRowId, params: &FamilyParams) -> Result<AuditReason, AuditError> {
    family_rows(n)?;
    if row.n() != n {
        return Err(AuditError::RowNotForN { row, n });
    }
    if !params.matches(row.shape()) {
        return Err(FamilyError::ShapeMismatch {
            row,
            expected: row.shape().describe(),
        }
        .into());
    }
    if check_constraints(row, params).is_ok() {
        return Err(AuditError::NotAnExclusion { row, params: *params });
    }
    let (a, b) = row_formula(row, params)?;
    let pair = match validate_ab(a.clone(), b.clone()) {
        Err(e) => return Ok(AuditReason::InvalidPair(e)),
        Ok(p) => p,
    };
    let canonical = canonical_ab(&a, &b);
    let reach = a.abs().max(b.abs()).to_u64().unwrap_or(u64::MAX);
    if let Some(hit) = enumerate(n, reach)?.into_iter().find(|e| e.canonical_ab == canonical) {
        return Ok(AuditReason::DuplicateOf {
            row: hit.row,
            params: hit.params,
            canonical_ab: canonical,
        });
    }
    Ok(AuditReason::Unaccounted {
        canonical_ab: canonical,
        defective: primdiv::is_defective(&pair, n).unwrap_or(false),
    })
}

/// The tuples the table rules out by name: every explicitly listed tuple and
/// every `q`/`k` value cut off by a lower bound or `q != -1, 0, 1`.
pub fn table_exclusions() -> Vec<(FamilyRowId, FamilyParams)> {
    use FamilyRowId::*;
    let mut out = Vec::new();
    for row in [N3Q, N4Q, N6Q] {
        for q in -1..=1 {
            out.push((row, FamilyParams::q(q)));
        }
    }
    out.push((N3Pow3, FamilyParams::kq(1, 1)));
    for (k, q) in [(1, -1), (1, 1), (2, 1)] {
        out.push((N4Pow2, FamilyParams::kq(k, q)));
    }
    out.push((N6Pow3, FamilyParams::lq(1, -1)));
    out.push((N6Pow2, FamilyParams::kq(1, -1)));
    for row in [N5Phi, N10Phi] {
        for k in 0..3 {
            for eps in Eps::ORDER {
                out.push((row, FamilyParams::keps(k, eps)));
            }
        }
    }
    for row in [N5Psi, N10Psi] {
        for k in 0..2 {
            out.push((row, FamilyParams::keps(k, Eps::Minus)));
        }
    }
    for row in [N8Rho, N8Pi] {
        for k in 0..2 {
            for eps in Eps::ORDER {
                out.push((row, FamilyParams::keps(k, eps)));
            }
        }
    }
    for (z, k) in [(Zeta::Z0, 0), (Zeta::Z0, 1), (Zeta::Z1, 0), (Zeta::Z2, 0)] {
        for eps in Eps::ORDER {
            out.push((N12Zeta(z), FamilyParams::keps(k, eps)));
        }
    }
    out
}
