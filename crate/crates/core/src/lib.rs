//! Exact arithmetic for Lehmer pairs and the classification of pairs whose
//! n-th Lehmer number has no primitive divisor, for n in {3, 4, 5, 6, 8, 10, 12}.
//!
//! The crate is organised bottom-up:
//!
//! * [`sequences`]: the auxiliary second-order recurrences used to
//!   parametrise the n = 5, 8, 10, 12 families.
//! * [`pairs`]: validated `(a, b)` pairs, the `(p, q)` correspondence,
//!   Lehmer numbers and equivalence.
//! * [`primdiv`] and [`factor`]: primitive-divisor tests, by gcd stripping
//!   and by full factorization.
//! * [`families`]: generators for every row of the classification table.
//! * [`harness`]: exhaustive search, table verification and the exclusion
//!   audit.

pub mod factor;
pub mod families;
pub mod harness;
pub mod pairs;
pub mod primdiv;
pub mod sequences;

pub use families::{FamilyEntry, FamilyParams, FamilyRowId, Eps};
pub use pairs::{LehmerPair, ValidationError};
pub use primdiv::DefectWitness;
pub use sequences::{SequenceId, Zeta};

/// The indices for which the classification table is stated.
pub const SUPPORTED_N: [u32; 7] = [3, 4, 5, 6, 8, 10, 12];

/// Returns true when `n` is one of [`SUPPORTED_N`].
pub fn is_supported_n(n: u32) -> bool {
    SUPPORTED_N.contains(&n)
}
