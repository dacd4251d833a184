//! Finite shadows of the 2-adic game tournaments.
//!
//! Elements are nonnegative integers read as zero-extended 2-adic digit
//! strings: bit `i` (1-indexed) is the `i`-th binary digit from the bottom.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Largest truncation depth materialized as a tournament.
pub const MAX_DEPTH: u32 = 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyadicElement(pub BigUint);

impl DyadicElement {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    /// Bit `i`, 1-indexed.
    pub fn bit(&self, i: u64) -> bool {
        i >= 1 && self.0.bit(i - 1)
    }

    /// Equal in the lowest `m` bits.
    pub fn congruent(&self, other: &DyadicElement, m: u64) -> bool {
        (0..m).all(|b| self.0.bit(b) == other.0.bit(b))
    }
}

impl From<u64> for DyadicElement {
    fn from(v: u64) -> Self {
        DyadicElement(BigUint::from(v))
    }
}

impl fmt::Display for DyadicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word `ε_1 ε_2 …`, zero beyond its stored length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EpsilonWord {
    bits: Vec<bool>,
}

impl EpsilonWord {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(bits: Vec<bool>) -> Self {
        EpsilonWord { bits }
    }

    /// `ε` whose first `len` letters are the low bits of `mask`.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        EpsilonWord::new((0..len).map(|i| mask >> i & 1 == 1).collect())
    }

    /// Parses `0101…`, first character is `ε_1`.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    line: 1,
                    msg: format!("epsilon word {s:?} has a character other than 0/1"),
                }),
            })
            .collect::<Result<_>>()?;
        Ok(EpsilonWord { bits })
    }

    /// `ε_i`, 1-indexed.
    pub fn get(&self, i: u64) -> bool {
        i >= 1 && self.bits.get((i - 1) as usize).copied().unwrap_or(false)
    }

    /// `σ^k(ε)`.
    pub fn shift(&self, k: usize) -> Self {
        EpsilonWord {
            bits: self.bits.iter().skip(k).copied().collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    /// Largest `i` with `ε_i = 1`, or 0.
    pub fn support(&self) -> usize {
        self.bits.iter().rposition(|&b| b).map_or(0, |p| p + 1)
    }

    /// Agreement on `ε_1 … ε_m`.
    pub fn congruent(&self, other: &EpsilonWord, m: u64) -> bool {
        (1..=m).all(|i| self.get(i) == other.get(i))
    }
}

impl fmt::Display for EpsilonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b as u8)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcDirection {
    /// `x -> y`.
    Forward,
    /// `y -> x`.
    Backward,
}

impl ArcDirection {
    pub fn from_forward(forward: bool) -> Self {
        if forward {
            ArcDirection::Forward
        } else {
            ArcDirection::Backward
        }
    }

    pub fn is_forward(self) -> bool {
        self == ArcDirection::Forward
    }
}

/// Orientation of the pair `(x, y)` in the tournament of `A(ε)`.
///
/// With `d = y - x`, `i` the position of the lowest set bit of `d` and `b` the
/// bit above it, `x -> y` iff `b = ε_i`. Negative `d` is read in two's
/// complement.
pub fn dyadic_arc(x: &DyadicElement, y: &DyadicElement, eps: &EpsilonWord) -> Result<ArcDirection> {
    let d = BigInt::from_biguint(Sign::Plus, y.0.clone()) - BigInt::from_biguint(Sign::Plus, x.0.clone());
    if d.is_zero() {
        return Err(Error::EqualElements);
    }
    let tz = d.magnitude().trailing_zeros().expect("nonzero");
    let widened: BigUint = if d.sign() == Sign::Minus {
        // a multiple of 2^(tz + 2) larger than |d| leaves the low bits alone
        let guard = BigInt::from_biguint(Sign::Plus, (d.magnitude() >> (tz + 2)) + 1u32) << (tz + 2);
        (d + guard).to_biguint().expect("guard exceeds |d|")
    } else {
        d.magnitude().clone()
    };
    let b = widened.bit(tz + 1);
    Ok(ArcDirection::from_forward(b == eps.get(tz + 1)))
}

/// Fast path of [`dyadic_arc`] for a machine-size difference `d = y - x != 0`.
#[inline]
pub fn arc_from_difference(d: i128, eps: &EpsilonWord) -> bool {
    let tz = d.trailing_zeros();
    let b = (d >> (tz + 1)) & 1 == 1;
    b == eps.get(tz as u64 + 1)
}

fn check_depth(k: u32) -> Result<()> {
    if k > MAX_DEPTH {
        return Err(Error::cap("truncation depth", k as u128, MAX_DEPTH as u128));
    }
    Ok(())
}

/// `A(ε)` restricted to `{0, …, 2^k - 1}`.
pub fn dyadic_restriction(k: u32, eps: &EpsilonWord) -> Result<Tournament> {
    check_depth(k)?;
    Ok(Tournament::from_fn_unchecked(1 << k, |x, y| {
        arc_from_difference(y as i128 - x as i128, eps)
    }))
}

/// `(D_j, complement of D_j)` in `{0, …, 2^k - 1}` where `D_j` has bit `j` clear.
pub fn d_partition(k: u32, j: u32) -> Result<(VertexSet, VertexSet)> {
    check_depth(k)?;
    if j < 1 || j > k {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            max: k as usize,
        });
    }
    let n = 1usize << k;
    let d = VertexSet::from_indices(n, (0..n).filter(|x| x >> (j - 1) & 1 == 0));
    let complement = d.complement();
    Ok((d, complement))
}

/// `τ_j`: `w0x ↦ w1(x + 1)`, `w1x ↦ w0x` with `|w| = j - 1`.
pub fn twist(v: &DyadicElement, j: u64) -> DyadicElement {
    assert!(j >= 1, "twist index is 1-based");
    let low = BigUint::one() << (j - 1);
    if v.bit(j) {
        DyadicElement(&v.0 - low)
    } else {
        DyadicElement(&v.0 + &low + (BigUint::one() << j))
    }
}

/// Inverse of [`twist`].
pub fn untwist(v: &DyadicElement, j: u64) -> Result<DyadicElement> {
    let low = BigUint::one() << (j - 1);
    if v.bit(j) {
        let carry = low.clone() + (BigUint::one() << j);
        if v.0 < carry {
            return Err(Error::Precondition(format!("{v} has no preimage under twist {j}")));
        }
        Ok(DyadicElement(&v.0 - carry))
    } else {
        Ok(DyadicElement(&v.0 + low))
    }
}

/// The isomorphism `h[ε]` from the standard tournament onto that of `A(ε)`.
pub fn h_epsilon(v: &DyadicElement, eps: &EpsilonWord) -> DyadicElement {
    DyadicElement(h_rec(&v.0, eps))
}

fn h_rec(v: &BigUint, eps: &EpsilonWord) -> BigUint {
    if eps.is_zero() {
        return v.clone();
    }
    if !v.bit(0) {
        return h_rec(&(v >> 1u32), &eps.shift(1)) << 1u32;
    }
    let three_mod_4 = v.bit(1);
    let g = h_rec(&(v >> 2u32), &eps.shift(2));
    let one = BigUint::one();
    let three = BigUint::from(3u32);
    let (e1, e2) = (eps.get(1), eps.get(2));
    match (e1, e2, three_mod_4) {
        (false, false, false) => one + (g << 2u32),
        (false, false, true) => three + (g << 2u32),
        (false, true, false) => one + ((g + 1u32) << 2u32),
        (false, true, true) => three + (g << 2u32),
        (true, false, false) => three + ((g + 1u32) << 2u32),
        (true, false, true) => one + (g << 2u32),
        (true, true, false) => three + (g << 2u32),
        (true, true, true) => one + (g << 2u32),
    }
}

/// Which copy of the 2-adics a vertex of `P[j,k]` lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Minus,
    Plus,
}

/// Arc test in `P[j,k]` between arbitrary copy-tagged elements: each copy
/// carries the standard tournament and `z- -> z'+` iff bit `k` of `z` equals
/// bit `j` of `z'`.
pub fn pjk_arc(j: u64, k: u64, a: (Side, &DyadicElement), b: (Side, &DyadicElement)) -> Result<ArcDirection> {
    match (a.0, b.0) {
        (Side::Minus, Side::Plus) => Ok(ArcDirection::from_forward(a.1.bit(k) == b.1.bit(j))),
        (Side::Plus, Side::Minus) => Ok(ArcDirection::from_forward(b.1.bit(k) != a.1.bit(j))),
        _ => dyadic_arc(a.1, b.1, &EpsilonWord::zero()),
    }
}

/// Truncation of `P[j,k]`: vertex `z` is `z-`, vertex `2^depth + z` is `z+`.
pub fn pjk_truncation(j: u32, k: u32, depth: u32) -> Result<Tournament> {
    check_depth(depth + 1)?;
    for idx in [j, k] {
        if idx < 1 || idx + 2 > depth {
            return Err(Error::IndexOutOfRange {
                index: idx as usize,
                max: depth.saturating_sub(2) as usize,
            });
        }
    }
    let half = 1usize << depth;
    let eps = EpsilonWord::zero();
    Ok(Tournament::from_fn_unchecked(2 * half, |u, v| {
        let (cu, zu) = (u >= half, u % half);
        let (cv, zv) = (v >= half, v % half);
        let bit = |z: usize, i: u32| z >> (i - 1) & 1 == 1;
        match (cu, cv) {
            (false, true) => bit(zu, k) == bit(zv, j),
            (true, false) => bit(zv, k) != bit(zu, j),
            _ => arc_from_difference(zv as i128 - zu as i128, &eps),
        }
    }))
}

/// `τ_{j,k}`: `τ_j` on the plus copy, `τ_k` on the minus copy.
pub fn twist_jk(j: u64, k: u64, v: (Side, &DyadicElement)) -> (Side, DyadicElement) {
    match v.0 {
        Side::Plus => (Side::Plus, twist(v.1, j)),
        Side::Minus => (Side::Minus, twist(v.1, k)),
    }
}

/// Interchange `ρ_{j,k}`: `z+ ↦ z-`, `z- ↦ τ_k(z)+`. Carries `P[j,k]` onto `P[k,j]`.
pub fn interchange(_j: u64, k: u64, v: (Side, &DyadicElement)) -> (Side, DyadicElement) {
    match v.0 {
        Side::Plus => (Side::Minus, v.1.clone()),
        Side::Minus => (Side::Plus, twist(v.1, k)),
    }
}
