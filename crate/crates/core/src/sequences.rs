//! The second-order integer recurrences that parametrise the n = 5, 8, 10
//! and 12 families.
//!
//! Every sequence satisfies `s(k+1) = A*s(k) + B*s(k-1)` and is seeded at a
//! (possibly negative) minimum index. The negative-index seeds are chosen so
//! the recurrence holds across them, which is what lets the boundary
//! parameters of the families be evaluated at all.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

/// Superscript of the four n = 12 sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Zeta {
    Z0,
    Z1,
    Z2,
    Z3,
}

impl Zeta {
    pub const ALL: [Zeta; 4] = [Zeta::Z0, Zeta::Z1, Zeta::Z2, Zeta::Z3];

    pub fn index(self) -> u8 {
        match self {
            Zeta::Z0 => 0,
            Zeta::Z1 => 1,
            Zeta::Z2 => 2,
            Zeta::Z3 => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<Zeta> {
        Zeta::ALL.get(usize::from(i)).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    /// Fibonacci numbers, extended down to index -2.
    Phi,
    /// Companion (Lucas) numbers 2, 1, 3, 4, ..., extended down to index -2.
    Psi,
    /// Pell numbers 0, 1, 2, 5, ..., extended down to index -1.
    Pi,
    /// 1, 1, 3, 7, 17, ..., extended down to index -1.
    Rho,
    /// The four n = 12 sequences with `s(k+1) = 4 s(k) - s(k-1)`.
    Zeta(Zeta),
}

impl SequenceId {
    pub const ALL: [SequenceId; 8] = [
        SequenceId::Phi,
        SequenceId::Psi,
        SequenceId::Pi,
        SequenceId::Rho,
        SequenceId::Zeta(Zeta::Z0),
        SequenceId::Zeta(Zeta::Z1),
        SequenceId::Zeta(Zeta::Z2),
        SequenceId::Zeta(Zeta::Z3),
    ];

    pub fn spec(self) -> SequenceSpec {
        let (coeff_a, coeff_b, min_index, seed0, seed1) = match self {
            SequenceId::Phi => (1, 1, -2, -1, 1),
            SequenceId::Psi => (1, 1, -2, 3, -1),
            SequenceId::Pi => (2, 1, -1, 1, 0),
            SequenceId::Rho => (2, 1, -1, -1, 1),
            SequenceId::Zeta(z) => {
                let (s0, s1) = match z {
                    Zeta::Z0 => (-1, 0),
                    Zeta::Z1 => (2, 1),
                    Zeta::Z2 => (1, 1),
                    Zeta::Z3 => (-1, 1),
                };
                (4, -1, -1, s0, s1)
            }
        };
        SequenceSpec {
            id: self,
            coeff_a,
            coeff_b,
            min_index,
            seed0,
            seed1,
        }
    }

    pub fn min_index(self) -> i64 {
        self.spec().min_index
    }

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Phi => "phi",
            SequenceId::Psi => "psi",
            SequenceId::Pi => "pi",
            SequenceId::Rho => "rho",
            SequenceId::Zeta(Zeta::Z0) => "zeta0",
            SequenceId::Zeta(Zeta::Z1) => "zeta1",
            SequenceId::Zeta(Zeta::Z2) => "zeta2",
            SequenceId::Zeta(Zeta::Z3) => "zeta3",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown sequence {0:?} (expected phi, psi, pi, rho or zeta0..zeta3)")]
pub struct UnknownSequence(pub String);

impl FromStr for SequenceId {
    type Err = UnknownSequence;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownSequence(s.to_string()))
    }
}

/// Recurrence `s(k+1) = coeff_a*s(k) + coeff_b*s(k-1)` seeded with
/// `s(min_index) = seed0` and `s(min_index+1) = seed1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceSpec {
    pub id: SequenceId,
    pub coeff_a: i64,
    pub coeff_b: i64,
    pub min_index: i64,
    pub seed0: i64,
    pub seed1: i64,
}

impl SequenceSpec {
    fn step(&self, prev: &BigInt, cur: &BigInt) -> BigInt {
        cur * self.coeff_a + prev * self.coeff_b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("index {k} is below the minimum index {min} of {id}")]
    IndexBelowMinimum { id: SequenceId, k: i64, min: i64 },
}

fn check_index(id: SequenceId, k: i64) -> Result<SequenceSpec, SequenceError> {
    let spec = id.spec();
    if k < spec.min_index {
        return Err(SequenceError::IndexBelowMinimum {
            id,
            k,
            min: spec.min_index,
        });
    }
    Ok(spec)
}

/// Exact value of the `k`-th element of `id`.
pub fn seq_eval(id: SequenceId, k: i64) -> Result<BigInt, SequenceError> {
    let spec = check_index(id, k)?;
    let mut prev = BigInt::from(spec.seed0);
    let mut cur = BigInt::from(spec.seed1);
    if k == spec.min_index {
        return Ok(prev);
    }
    for _ in spec.min_index + 1..k {
        let next = spec.step(&prev, &cur);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Elements `k_from..=k_to` of `id`. An inverted range yields an empty list.
pub fn seq_range(id: SequenceId, k_from: i64, k_to: i64) -> Result<Vec<BigInt>, SequenceError> {
    let spec = check_index(id, k_from)?;
    if k_to < k_from {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity((k_to - k_from + 1) as usize);
    let mut prev = BigInt::from(spec.seed0);
    let mut cur = BigInt::from(spec.seed1);
    let mut k = spec.min_index;
    loop {
        if k >= k_from {
            out.push(prev.clone());
        }
        if k == k_to {
            return Ok(out);
        }
        let next = spec.step(&prev, &cur);
        prev = std::mem::replace(&mut cur, next);
        k += 1;
    }
}

/// Append-only memo of sequence values, one per worker.
///
/// Values are only ever pushed, never rewritten, so a lookup returns the same
/// integer that [`seq_eval`] would.
#[derive(Debug, Default, Clone)]
pub struct SequenceCache {
    tables: [Vec<BigInt>; 8],
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn slot(id: SequenceId) -> usize {
        SequenceId::ALL.iter().position(|x| *x == id).unwrap()
    }

    pub fn eval(&mut self, id: SequenceId, k: i64) -> Result<BigInt, SequenceError> {
        let spec = check_index(id, k)?;
        let table = &mut self.tables[Self::slot(id)];
        if table.is_empty() {
            table.push(BigInt::from(spec.seed0));
            table.push(BigInt::from(spec.seed1));
        }
        let offset = (k - spec.min_index) as usize;
        while table.len() <= offset {
            let n = table.len();
            let next = spec.step(&table[n - 2], &table[n - 1]);
            table.push(next);
        }
        Ok(table[offset].clone())
    }

    /// Number of memoised values across all sequences.
    pub fn len(&self) -> usize {
        self.tables.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
