//! Survivor seats of the Josephus elimination game.
//!
//! People occupy seats `1..=n` around a circle. Counting starts at seat 1,
//! every `k`-th person still seated is removed, and counting resumes at the
//! seat right after the one just removed. `J_k(n)` is the seat of the last
//! person left.

use crate::{Error, Natural, Result};
use num_traits::{One, Zero};

/// Largest `n` accepted by [`survivor_simulate`]. The ring needs one `u32`
/// per seat, so this caps memory at about 40 MB.
pub const SIMULATE_MAX_N: u64 = 10_000_000;

/// Largest `n` accepted by the recurrence-based operations. The loop is
/// `O(n)`; at this bound it takes on the order of ten seconds in a release
/// build.
pub const RECURRENCE_MAX_N: u64 = 1 << 32;

fn check_query(n: u64, k: u32, max_n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    if k < 2 {
        return Err(Error::domain(format!(
            "elimination step k must be at least 2, got {k}"
        )));
    }
    if n > max_n {
        return Err(Error::domain(format!(
            "n = {n} exceeds the supported bound {max_n}"
        )));
    }
    Ok(())
}

/// Plays the game on an explicit circular linked list of seats.
///
/// Cost is `O(n * min(k, n))`. This is the slow, obviously-correct oracle for
/// [`survivor_recurrence`].
pub fn survivor_simulate(n: u64, k: u32) -> Result<u64> {
    check_query(n, k, SIMULATE_MAX_N)?;
    let n = n as usize;

    // next[s] is the seat after s; seats are 0-based internally.
    let mut next: Vec<u32> = (1..=n as u32).collect();
    next[n - 1] = 0;

    // `prev` always sits just before the seat that will be counted as 1.
    let mut prev = n - 1;
    let mut remaining = n;
    while remaining > 1 {
        let steps = (k as usize - 1) % remaining;
        for _ in 0..steps {
            prev = next[prev] as usize;
        }
        let victim = next[prev] as usize;
        next[prev] = next[victim];
        remaining -= 1;
    }
    Ok(next[prev] as u64 + 1)
}

/// Yields `J_k(1), J_k(2), ...` using `J_k(i) = (J_k(i - 1) + k - 1) mod i + 1`.
#[derive(Debug, Clone)]
pub struct Survivors {
    k: u64,
    size: u64,
    // 0-based survivor for the current `size`
    pos: u64,
}

impl Survivors {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!(
                "elimination step k must be at least 2, got {k}"
            )));
        }
        Ok(Survivors {
            k: k as u64,
            size: 0,
            pos: 0,
        })
    }
}

impl Iterator for Survivors {
    /// `(n, J_k(n))`
    type Item = (u64, u64);

    fn next(&mut self) -> Option<Self::Item> {
        self.size = self.size.checked_add(1)?;
        if self.size == 1 {
            self.pos = 0;
        } else {
            self.pos = (self.pos + self.k % self.size) % self.size;
        }
        Some((self.size, self.pos + 1))
    }
}

/// `J_k(n)` in `O(n)` time and `O(1)` space.
pub fn survivor_recurrence(n: u64, k: u32) -> Result<u64> {
    check_query(n, k, RECURRENCE_MAX_N)?;
    let (_, survivor) = Survivors::new(k)?
        .nth((n - 1) as usize)
        .expect("survivor iterator is unbounded below u64::MAX");
    Ok(survivor)
}

/// `J_2(n)` by moving the leading binary digit of `n` to the units place.
///
/// For `n = 2^m` the digits below the leading one are all zero and the
/// result is 1.
pub fn j2_rotate(n: &Natural) -> Result<Natural> {
    if n.is_zero() {
        return Err(Error::domain("n must be at least 1"));
    }
    let top = n.bits() - 1;
    let mut rest = n.clone();
    rest.set_bit(top, false);
    Ok((rest << 1u32) + Natural::one())
}

/// Whether `J_k(n) = n`.
pub fn is_fixed_point(n: u64, k: u32) -> Result<bool> {
    Ok(survivor_recurrence(n, k)? == n)
}

/// Every fixed point of `J_k` in `1..=bound`, found in one pass of the
/// recurrence.
pub fn fixed_points_up_to(bound: u64, k: u32) -> Result<Vec<u64>> {
    if bound == 0 {
        return Ok(Vec::new());
    }
    check_query(bound, k, RECURRENCE_MAX_N)?;
    Ok(Survivors::new(k)?
        .take(bound as usize)
        .filter(|&(n, s)| n == s)
        .map(|(n, _)| n)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simulate_small_cases() {
        assert_eq!(survivor_simulate(1, 3).unwrap(), 1);
        assert_eq!(survivor_simulate(2, 3).unwrap(), 2);
        assert_eq!(survivor_simulate(5, 3).unwrap(), 4);
        assert_eq!(survivor_simulate(13, 3).unwrap(), 13);
        // k larger than the circle wraps around
        assert_eq!(
            survivor_simulate(3, 100).unwrap(),
            survivor_recurrence(3, 100).unwrap()
        );
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(survivor_recurrence(5, 3).unwrap(), 4);
        assert_eq!(survivor_recurrence(4045, 3).unwrap(), 4045);
        assert_eq!(survivor_recurrence(1, 2).unwrap(), 1);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(survivor_simulate(0, 3), Err(Error::Domain(_))));
        assert!(matches!(survivor_simulate(5, 1), Err(Error::Domain(_))));
        assert!(matches!(survivor_recurrence(0, 2), Err(Error::Domain(_))));
        assert!(matches!(survivor_recurrence(4, 0), Err(Error::Domain(_))));
        assert!(matches!(
            survivor_simulate(SIMULATE_MAX_N + 1, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(j2_rotate(&Natural::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn rotation_examples() {
        let rot = |n: u32| j2_rotate(&Natural::from(n)).unwrap();
        assert_eq!(rot(1), Natural::from(1u32));
        assert_eq!(rot(7), Natural::from(7u32));
        assert_eq!(rot(5), Natural::from(3u32));
        assert_eq!(rot(64), Natural::from(1u32));
    }

    #[test]
    fn fixed_point_examples() {
        assert!(is_fixed_point(46, 3).unwrap());
        assert!(!is_fixed_point(47, 3).unwrap());
        assert!(is_fixed_point(1023, 2).unwrap());
        for ell in 1..=10u32 {
            assert!(is_fixed_point((1 << ell) - 1, 2).unwrap());
        }
    }

    #[test]
    fn one_pass_scan_matches_pointwise() {
        let scanned = fixed_points_up_to(5000, 3).unwrap();
        let pointwise: Vec<u64> = (1..=5000)
            .filter(|&n| is_fixed_point(n, 3).unwrap())
            .collect();
        assert_eq!(scanned, pointwise);
        assert_eq!(scanned, vec![1, 2, 13, 20, 46, 157, 236, 532, 1198, 4045]);
    }

    #[test]
    fn simulation_agrees_with_recurrence() {
        for k in 2..=4 {
            let mut survivors = Survivors::new(k).unwrap();
            for n in 1..=1500 {
                let (_, s) = survivors.next().unwrap();
                assert_eq!(survivor_simulate(n, k).unwrap(), s, "n={n} k={k}");
                assert!((1..=n).contains(&s));
            }
        }
    }

    #[test]
    fn rotation_agrees_with_recurrence() {
        let survivors = Survivors::new(2).unwrap();
        for (n, s) in survivors.take(1 << 12) {
            assert_eq!(
                j2_rotate(&Natural::from(n)).unwrap(),
                Natural::from(s),
                "n={n}"
            );
        }
    }
}
