//! Residues of consecutive `J_3` fixed points modulo `3^p` and `2^q`.
//!
//! With `p = m_bar(n_l)` and `q = m_bar(n_{l+1})`, the term `n_{l+1}`
//! satisfies `2x + 1 = 0 (mod 3^p)` and `3x + 2 = 0 (mod 2^q)`. Those reduce
//! to `x = a1 (mod 3^p)` and `x = a2 (mod 2^q)`, which the CRT merges into a
//! single residue `z` modulo `3^p 2^q` once a Bézout pair
//! `3^p x + 2^q y = 1` is known.
//!
//! Signed values (`y`, the unreduced `z`) use [`BigInt`].

use crate::fixed_points::FixedPointRecord;
use crate::{Error, Natural, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

fn pow3(p: u32) -> Natural {
    Natural::from(3u32).pow(p)
}

fn pow2(q: u32) -> Natural {
    Natural::one() << q
}

fn signed(n: &Natural) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

fn check_exponents(p: u32, q: u32) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::domain(format!(
            "exponents must be positive, got p={p} q={q}"
        )));
    }
    Ok(())
}

/// Integers `x`, `y` with `3^p x + 2^q y = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutPair {
    pub p: u32,
    pub q: u32,
    pub x: BigInt,
    pub y: BigInt,
}

impl BezoutPair {
    pub fn holds(&self) -> bool {
        signed(&pow3(self.p)) * &self.x + signed(&pow2(self.q)) * &self.y == BigInt::one()
    }

    /// Whether the two pairs differ by an integer multiple of `(2^q, -3^p)`.
    pub fn same_lattice_class(&self, other: &BezoutPair) -> bool {
        if (self.p, self.q) != (other.p, other.q) {
            return false;
        }
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        let (t, rem) = dx.div_rem(&signed(&pow2(self.q)));
        rem.is_zero() && dy == -t * signed(&pow3(self.p))
    }
}

/// `(3^p - 1) / 2`, the residue class of solutions to `2x + 1 = 0 (mod 3^p)`.
pub fn a1_closed_form(p: u32) -> Result<Natural> {
    if p == 0 {
        return Err(Error::domain("p must be at least 1"));
    }
    Ok((pow3(p) - 1u32) >> 1u32)
}

/// `(2/3)(2^q - 1)` for even `q`, `(2/3)(2^(q-1) - 1)` for odd `q`: the
/// residue class of solutions to `3x + 2 = 0 (mod 2^q)`.
pub fn a2_closed_form(q: u32) -> Result<Natural> {
    if q == 0 {
        return Err(Error::domain("q must be at least 1"));
    }
    let e = if q.is_multiple_of(2) { q } else { q - 1 };
    let (third, rem) = (pow2(e) - 1u32).div_rem(&Natural::from(3u32));
    debug_assert!(rem.is_zero());
    Ok(third * 2u32)
}

/// Extended Euclid on `(a, b)`: returns `(g, s, t)` with `a s + b t = g`.
fn extended_euclid(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let quot = &r0 / &r1;
        let r2 = &r0 - &quot * &r1;
        let s2 = &s0 - &quot * &s1;
        let t2 = &t0 - &quot * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

/// Bézout pair for `(3^p, 2^q)` normalized to `0 < x < 2^q`.
pub fn extended_gcd_pow(p: u32, q: u32) -> Result<BezoutPair> {
    check_exponents(p, q)?;
    let three_p = signed(&pow3(p));
    let two_q = signed(&pow2(q));
    let (g, x, _) = extended_euclid(&three_p, &two_q);
    debug_assert!(g.is_one());
    let x = x.mod_floor(&two_q);
    let (y, rem) = (BigInt::one() - &three_p * &x).div_rem(&two_q);
    debug_assert!(rem.is_zero());
    Ok(BezoutPair { p, q, x, y })
}

/// One case of the closed-form table: `x`, and `y = (1 + c 3^(p+s)) / 2^q`.
struct TableCase {
    x: i64,
    c: i64,
    s: u32,
}

const fn case(x: i64, c: i64, s: u32) -> TableCase {
    TableCase { x, c, s }
}

const Q1: [TableCase; 1] = [case(1, -1, 0)];
const Q2: [TableCase; 2] = [case(1, -1, 0), case(-1, 1, 0)];
const Q3: [TableCase; 2] = [case(1, -1, 0), case(3, -1, 1)];
const Q4: [TableCase; 4] = [
    case(1, -1, 0),
    case(-5, 5, 0),
    case(-7, 7, 0),
    case(3, -1, 1),
];
const Q5: [TableCase; 8] = [
    case(1, -1, 0),
    case(11, -11, 0),
    case(-7, 7, 0),
    case(-13, 13, 0),
    case(-15, 5, 1),
    case(-5, 5, 0),
    case(9, -1, 2),
    case(3, -1, 1),
];

/// Closed-form Bézout pair from the case table for `q = 1..=5`, the case
/// chosen by `p` modulo the table's period for that `q`.
///
/// These representatives are not normalized (e.g. `x = -7`); compare them
/// with [`extended_gcd_pow`] through [`BezoutPair::same_lattice_class`].
pub fn bezout_table_formula(p: u32, q: u32) -> Result<BezoutPair> {
    check_exponents(p, q)?;
    let cases: &[TableCase] = match q {
        1 => &Q1,
        2 => &Q2,
        3 => &Q3,
        4 => &Q4,
        5 => &Q5,
        _ => {
            return Err(Error::Unsupported(format!(
                "closed-form Bézout table covers q = 1..=5, got q = {q}"
            )))
        }
    };
    let case = &cases[p as usize % cases.len()];
    let numerator = BigInt::one() + BigInt::from(case.c) * signed(&pow3(p + case.s));
    let (y, rem) = numerator.div_rem(&signed(&pow2(q)));
    assert!(rem.is_zero(), "table entry for p={p} q={q} is not integral");
    Ok(BezoutPair {
        p,
        q,
        x: BigInt::from(case.x),
        y,
    })
}

/// The CRT data tying a fixed point to `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceLink {
    pub p: u32,
    pub q: u32,
    pub a1: Natural,
    pub a2: Natural,
    pub bezout: BezoutPair,
    /// `a1 2^q y + a2 3^p x` before reduction.
    pub raw_z: BigInt,
    /// `raw_z` reduced into `[0, modulus)`.
    pub z: Natural,
    pub modulus: Natural,
}

/// Solves `x = a1 (mod 3^p)`, `x = a2 (mod 2^q)`.
pub fn crt_solve(p: u32, q: u32) -> Result<CongruenceLink> {
    let bezout = extended_gcd_pow(p, q)?;
    let a1 = a1_closed_form(p)?;
    let a2 = a2_closed_form(q)?;
    let three_p = pow3(p);
    let two_q = pow2(q);
    let modulus = &three_p * &two_q;
    let raw_z =
        signed(&a1) * signed(&two_q) * &bezout.y + signed(&a2) * signed(&three_p) * &bezout.x;
    let z = raw_z
        .mod_floor(&signed(&modulus))
        .to_biguint()
        .expect("mod_floor by a positive modulus is non-negative");
    Ok(CongruenceLink {
        p,
        q,
        a1,
        a2,
        bezout,
        raw_z,
        z,
        modulus,
    })
}

/// Outcome of checking the CRT characterization for `n_{ell+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkReport {
    pub ell: u64,
    pub p: u64,
    pub q: u64,
    pub n_next: Natural,
    pub outcome: LinkOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkOutcome {
    /// `p q = 0`; there is no pair of congruences to check.
    NotApplicable,
    Checked(Box<LinkCheck>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkCheck {
    pub link: CongruenceLink,
    pub matches_a1: bool,
    pub matches_a2: bool,
    pub matches_z: bool,
    /// `floor((n_next - z) / modulus)`; exact when `matches_z`.
    pub quotient: BigInt,
}

impl LinkCheck {
    pub fn passed(&self) -> bool {
        self.matches_a1 && self.matches_a2 && self.matches_z
    }
}

impl LinkReport {
    /// `None` when the check does not apply.
    pub fn passed(&self) -> Option<bool> {
        match &self.outcome {
            LinkOutcome::NotApplicable => None,
            LinkOutcome::Checked(check) => Some(check.passed()),
        }
    }
}

/// Checks `n_{ell+1}` against `a1 (mod 3^p)`, `a2 (mod 2^q)` and `z (mod 3^p 2^q)`
/// with `p = m_bar_ell`, `q = m_bar_{ell+1}`. `seq` must contain the records
/// for `ell` and `ell + 1`.
pub fn verify_link(ell: u64, seq: &[FixedPointRecord]) -> Result<LinkReport> {
    let find = |wanted: u64| {
        seq.iter()
            .find(|r| r.ell == wanted)
            .ok_or_else(|| Error::Usage(format!("sequence has no record for ell = {wanted}")))
    };
    let current = find(ell)?;
    let following = find(ell + 1)?;
    let (p, q) = (current.m_bar, following.m_bar);
    let n_next = following.n.clone();

    if p == 0 || q == 0 {
        return Ok(LinkReport {
            ell,
            p,
            q,
            n_next,
            outcome: LinkOutcome::NotApplicable,
        });
    }
    let to_u32 = |e: u64| {
        u32::try_from(e).map_err(|_| Error::Unsupported(format!("exponent {e} too large")))
    };
    let link = crt_solve(to_u32(p)?, to_u32(q)?)?;

    let matches_a1 = &n_next % pow3(link.p) == link.a1;
    let matches_a2 = &n_next % pow2(link.q) == link.a2;
    let matches_z = &n_next % &link.modulus == link.z;
    let quotient = (signed(&n_next) - signed(&link.z)).div_floor(&signed(&link.modulus));
    Ok(LinkReport {
        ell,
        p,
        q,
        n_next,
        outcome: LinkOutcome::Checked(Box::new(LinkCheck {
            link,
            matches_a1,
            matches_a2,
            matches_z,
            quotient,
        })),
    })
}

impl CongruenceLink {
    /// Whether `z` lies in range and meets both congruences.
    pub fn is_consistent(&self) -> bool {
        self.z < self.modulus
            && &self.z % pow3(self.p) == self.a1
            && &self.z % pow2(self.q) == self.a2
            && signed(&self.z) == self.raw_z.mod_floor(&signed(&self.modulus))
    }
}
