//! Modular fractional-base numeration.
//!
//! In base `a/b` (coprime, `1 <= b < a`) every natural number `N` has a unique
//! expansion `N = (1/b) * sum d_i (a/b)^i` with digits `d_i` in `0..a`. The
//! digits come out of the recursion
//!
//! ```text
//! b * N_i = a * N_{i+1} + d_i,    d_i = (b * N_i) mod a,    N_0 = N,
//! ```
//!
//! which stops once `N_{i+1} = 0`. Base 3/2 with digits `{0, 1, 2}` is the
//! case the fixed points of `J_3` live in; base 2/1 is ordinary binary.
//!
//! Not every digit string is the expansion of something: decoding runs the
//! recursion backwards and rejects any step whose division by `b` is inexact.

use crate::{Error, Natural, Result};
use num_integer::{gcd, Integer};
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

/// A fractional base `a/b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Base {
    num: u32,
    den: u32,
}

impl Base {
    pub const THREE_HALVES: Base = Base { num: 3, den: 2 };
    pub const BINARY: Base = Base { num: 2, den: 1 };

    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || den >= num {
            return Err(Error::domain(format!("base {num}/{den} needs 1 <= b < a")));
        }
        if gcd(num, den) != 1 {
            return Err(Error::domain(format!(
                "base {num}/{den} is not in lowest terms"
            )));
        }
        Ok(Base { num, den })
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }

    /// Digit strings are written without separators when every digit is a
    /// single decimal character.
    fn compact_digits(self) -> bool {
        self.num <= 10
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Usage(format!("base must look like a/b, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Usage(format!("bad base component {t:?} in {s:?}")))
        };
        Base::new(parse(a)?, parse(b)?)
    }
}

/// A canonical digit string in some base, most significant digit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expansion {
    base: Base,
    digits: Vec<u32>,
}

impl Expansion {
    /// Validates `digits` against `base`: range, no leading zero and
    /// membership in the image of [`encode`].
    pub fn new(base: Base, digits: Vec<u32>) -> Result<Self> {
        decode_digits(base, &digits)?;
        Ok(Expansion { base, digits })
    }

    /// Parses the textual form produced by `Display`.
    pub fn parse(s: &str, base: Base) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::invalid_expansion(0, "empty digit string"));
        }
        let digits = if base.compact_digits() {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::invalid_expansion(i, format!("{c:?} is not a digit")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.split(',')
                .enumerate()
                .map(|(i, t)| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::invalid_expansion(i, format!("{t:?} is not a digit")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Expansion::new(base, digits)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; the shortest expansion is the single digit `0`.
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.compact_digits() {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
        } else {
            for (i, d) in self.digits.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

/// Canonical expansion of `n` in `base`. Zero encodes as the single digit 0.
pub fn encode(n: &Natural, base: Base) -> Expansion {
    if n.is_zero() {
        return Expansion {
            base,
            digits: vec![0],
        };
    }
    let a = Natural::from(base.num);
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (quot, digit) = (rest * base.den).div_rem(&a);
        digits.push(digit.to_u32_digits().first().copied().unwrap_or(0));
        rest = quot;
    }
    digits.reverse();
    Expansion { base, digits }
}

/// Value of `e`. Fails only for expansions that skipped validation, which
/// [`append_suffix`] can build from a bad precondition.
pub fn decode(e: &Expansion) -> Result<Natural> {
    decode_digits(e.base, &e.digits)
}

/// Runs the digit recursion backwards: `N <- (a * N + d) / b` for each digit
/// from the most significant end, demanding exact division every time.
pub fn decode_digits(base: Base, digits: &[u32]) -> Result<Natural> {
    if digits.is_empty() {
        return Err(Error::invalid_expansion(0, "empty digit string"));
    }
    if digits.len() > 1 && digits[0] == 0 {
        return Err(Error::invalid_expansion(0, "leading zero"));
    }
    let b = Natural::from(base.den);
    let mut value = Natural::zero();
    for (position, &d) in digits.iter().enumerate() {
        if d >= base.num {
            return Err(Error::invalid_expansion(
                position,
                format!("digit {d} is out of range for base {base}"),
            ));
        }
        let (quot, rem) = (value * base.num + d).div_rem(&b);
        if !rem.is_zero() {
            return Err(Error::invalid_expansion(
                position,
                format!("{} does not divide {}", base.den, quot * base.den + rem),
            ));
        }
        value = quot;
    }
    Ok(value)
}

/// The digits appended to the base-3/2 expansion of a fixed point of `J_3`
/// to get the next one: `1` when `m_bar = 0`, otherwise `0`, then
/// `m_bar - 1` ones, then `2`. Always `m_bar + 1` digits long.
pub fn theorem_suffix(m_bar: u64) -> Vec<u32> {
    if m_bar == 0 {
        return vec![1];
    }
    let mut suffix = Vec::with_capacity(m_bar as usize + 1);
    suffix.push(0);
    suffix.extend(std::iter::repeat_n(1, m_bar as usize - 1));
    suffix.push(2);
    suffix
}

/// Appends [`theorem_suffix`] to `e`.
///
/// When `e` is the expansion of a fixed point `n` and `m_bar` its valuation,
/// the result is the expansion of the next fixed point. The result is not
/// revalidated; use [`decode`] to check it.
pub fn append_suffix(e: &Expansion, m_bar: u64) -> Expansion {
    let mut digits = e.digits.clone();
    digits.extend(theorem_suffix(m_bar));
    Expansion {
        base: e.base,
        digits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(n: u64, base: Base) -> String {
        encode(&Natural::from(n), base).to_string()
    }

    fn dec(s: &str, base: Base) -> Result<Natural> {
        Expansion::parse(s, base).map(|e| decode(&e).unwrap())
    }

    #[test]
    fn base_validation() {
        assert!(Base::new(3, 2).is_ok());
        assert!(Base::new(2, 2).is_err());
        assert!(Base::new(2, 3).is_err());
        assert!(Base::new(6, 4).is_err());
        assert!(Base::new(5, 0).is_err());
        assert_eq!("4/3".parse::<Base>().unwrap(), Base::new(4, 3).unwrap());
        assert!(matches!("4".parse::<Base>(), Err(Error::Usage(_))));
        assert!(matches!("4/x".parse::<Base>(), Err(Error::Usage(_))));
        assert!(matches!("3/3".parse::<Base>(), Err(Error::Domain(_))));
    }

    #[test]
    fn encode_examples() {
        let b = Base::THREE_HALVES;
        assert_eq!(enc(13, b), "210112");
        assert_eq!(enc(0, b), "0");
        assert_eq!(enc(4, b), "212");
        assert_eq!(enc(103690, b), "2101121020121020201210201202");
        assert_eq!(enc(7, Base::BINARY), "111");
    }

    #[test]
    fn decode_examples() {
        let b = Base::THREE_HALVES;
        assert_eq!(dec("21", b).unwrap(), Natural::from(2u32));
        assert_eq!(dec("2", b).unwrap(), Natural::from(1u32));
        assert_eq!(dec("0", b).unwrap(), Natural::from(0u32));
        assert_eq!(dec("212", b).unwrap(), Natural::from(4u32));
    }

    #[test]
    fn decode_rejects_strings_outside_the_image() {
        let b = Base::THREE_HALVES;
        // 2 -> N = 1 exactly; then (3 * 1 + 2) / 2 is not an integer
        assert!(matches!(
            dec("22", b),
            Err(Error::InvalidExpansion { position: 1, .. })
        ));
        assert!(matches!(
            dec("0112", b),
            Err(Error::InvalidExpansion { position: 0, .. })
        ));
        assert!(matches!(
            dec("213", b),
            Err(Error::InvalidExpansion { position: 2, .. })
        ));
        assert!(matches!(
            dec("2a", b),
            Err(Error::InvalidExpansion { position: 1, .. })
        ));
        assert!(matches!(
            dec("", b),
            Err(Error::InvalidExpansion { position: 0, .. })
        ));
        assert!(matches!(
            dec("1", b),
            Err(Error::InvalidExpansion { position: 0, .. })
        ));
    }

    #[test]
    fn twenty_two_is_never_encoded() {
        let b = Base::THREE_HALVES;
        assert!((0..=100_000u64).all(|n| enc(n, b) != "22"));
    }

    #[test]
    fn wide_bases_use_commas() {
        let base = Base::new(11, 7).unwrap();
        let e = encode(&Natural::from(1000u32), base);
        let text = e.to_string();
        assert!(text.contains(','));
        assert_eq!(Expansion::parse(&text, base).unwrap(), e);
        assert_eq!(decode(&e).unwrap(), Natural::from(1000u32));
    }

    #[test]
    fn suffixes() {
        assert_eq!(theorem_suffix(0), vec![1]);
        assert_eq!(theorem_suffix(1), vec![0, 2]);
        assert_eq!(theorem_suffix(3), vec![0, 1, 1, 2]);
        for m in 0..50 {
            assert_eq!(theorem_suffix(m).len() as u64, m + 1);
        }
    }

    #[test]
    fn append_examples() {
        let b = Base::THREE_HALVES;
        let e = |s: &str| Expansion::parse(s, b).unwrap();
        assert_eq!(append_suffix(&e("2"), 0), e("21"));
        assert_eq!(append_suffix(&e("21"), 3), e("210112"));
        assert_eq!(
            append_suffix(&e("21011210201210202012102"), 2),
            e("21011210201210202012102012")
        );
    }

    #[test]
    fn binary_matches_std_formatting() {
        for n in 1..=10_000u64 {
            assert_eq!(enc(n, Base::BINARY), format!("{n:b}"));
        }
    }
}
