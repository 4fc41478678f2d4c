//! The fixed-point sequence of `J_3`.
//!
//! Starting from `n_1 = 1`, each term determines the next through
//!
//! ```text
//! m       = v2(3 n + 2)
//! n_next  = (3^m (3 n + 2) - 2^m) / 2^(m + 1)
//! ```
//!
//! Values grow by at least a factor 3/2 per step, so everything is computed
//! with arbitrary-precision integers.

use crate::frac_base::{encode, Base, Expansion};
use crate::{Error, Natural, Result};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One term of the sequence together with its valuation and base-3/2
/// expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRecord {
    pub ell: u64,
    #[serde(with = "decimal")]
    pub n: Natural,
    pub m_bar: u64,
    #[serde(with = "three_halves")]
    pub expansion: Expansion,
}

impl FixedPointRecord {
    pub fn new(ell: u64, n: Natural) -> Self {
        let m_bar = m_bar(&n);
        let expansion = encode(&n, Base::THREE_HALVES);
        FixedPointRecord {
            ell,
            n,
            m_bar,
            expansion,
        }
    }
}

/// Largest `m` with `2^m | x`.
pub fn valuation2(x: &Natural) -> Result<u64> {
    x.trailing_zeros()
        .ok_or_else(|| Error::domain("the 2-adic valuation of 0 is infinite"))
}

/// `v2(3 n + 2)`. Total on all naturals since `3 n + 2 > 0`.
pub fn m_bar(n: &Natural) -> u64 {
    valuation2(&(n * 3u32 + 2u32)).expect("3n + 2 is positive")
}

/// Successor of `n` in the fixed-point sequence.
///
/// # Panics
///
/// If the division by `2^(m + 1)` is inexact, which would mean the
/// arithmetic above is broken.
pub fn next_fixed_point(n: &Natural) -> Natural {
    let m = m_bar(n);
    let three_m = Natural::from(3u32).pow(m);
    let two_m = Natural::one() << m;
    let numerator = three_m * (n * 3u32 + 2u32) - &two_m;
    let (quot, rem) = numerator.div_rem(&(two_m << 1u32));
    assert!(
        rem.is_zero(),
        "inexact division computing the successor of {n}"
    );
    quot
}

/// Streams the records for `ell = 1, 2, ...`.
#[derive(Debug, Clone)]
pub struct FixedPoints {
    ell: u64,
    next: Natural,
}

impl FixedPoints {
    pub fn new() -> Self {
        FixedPoints {
            ell: 1,
            next: Natural::one(),
        }
    }
}

impl Default for FixedPoints {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for FixedPoints {
    type Item = FixedPointRecord;

    fn next(&mut self) -> Option<FixedPointRecord> {
        let following = next_fixed_point(&self.next);
        let n = std::mem::replace(&mut self.next, following);
        let record = FixedPointRecord::new(self.ell, n);
        self.ell += 1;
        Some(record)
    }
}

/// The first `count` records.
pub fn generate_sequence(count: usize) -> Result<Vec<FixedPointRecord>> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    Ok(FixedPoints::new().take(count).collect())
}

/// `2^m (2 n_next + 1) = 3^m (3 n + 2)` with `m = m_bar(n)`.
pub fn check_eq2_identity(n: &Natural, n_next: &Natural) -> bool {
    let m = m_bar(n);
    let lhs = (n_next * 2u32 + 1u32) << m;
    let rhs = Natural::from(3u32).pow(m) * (n * 3u32 + 2u32);
    lhs == rhs
}

/// `n_next = (3/2)^(m+1) n + (3/2)^m - 1/2`, compared after multiplying
/// through by `2^(m+1)`: `2^(m+1) n_next + 2^m = 3^(m+1) n + 2 * 3^m`.
pub fn check_eq7_identity(n: &Natural, n_next: &Natural) -> bool {
    let m = m_bar(n);
    let three_m = Natural::from(3u32).pow(m);
    let lhs = (n_next << (m + 1)) + (Natural::one() << m);
    let rhs = &three_m * 3u32 * n + three_m * 2u32;
    lhs == rhs
}

mod decimal {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Natural, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Natural, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

mod three_halves {
    use super::*;

    pub fn serialize<S: Serializer>(e: &Expansion, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(e)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Expansion, D::Error> {
        let text = String::deserialize(d)?;
        Expansion::parse(&text, Base::THREE_HALVES).map_err(serde::de::Error::custom)
    }
}
