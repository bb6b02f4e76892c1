//! Basis blades of the complex Clifford algebra on `m` anticommuting generators.
//!
//! A blade `e_S = e_{s1} e_{s2} ... e_{sr}` (with `s1 < s2 < ... < sr`) is stored as a
//! bitmask: bit `j - 1` is set when generator `e_j` occurs in `S`. Products of blades
//! are again blades up to a sign,
//!
//! ```text
//! e_S e_T = eps(S, T) e_{S xor T}
//! ```
//!
//! where `eps(S, T)` is `-1` raised to the number of pairs `(s, t)` in `S x T` with
//! `s > t`. Pairs with `s = t` contribute `+1`, so overlapping index sets need no
//! special handling: `e_j e_j = I` falls out of the same rule.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Largest supported generator count; blade indices fit in one `u64`.
pub const MAX_GENERATORS: u32 = 62;

/// A sign in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    #[inline]
    pub fn from_parity(n: u32) -> Sign {
        if n & 1 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    #[inline]
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The index set `S` of a basis blade `e_S` in `Cl_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeIndex {
    bits: u64,
    m: u32,
}

fn check_m(m: u32) -> Result<()> {
    if m > MAX_GENERATORS {
        return Err(Error::guard("generator count", m, MAX_GENERATORS));
    }
    Ok(())
}

#[inline]
fn mask(m: u32) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

impl BladeIndex {
    /// Blade from a raw bitmask; rejects bits at positions `>= m`.
    pub fn new(bits: u64, m: u32) -> Result<Self> {
        check_m(m)?;
        if bits & !mask(m) != 0 {
            return Err(Error::InvalidBlade(format!(
                "bitmask {bits:#b} has bits outside {m} generators"
            )));
        }
        Ok(BladeIndex { bits, m })
    }

    /// Blade from 1-based generator indices. Order is irrelevant; repeats are rejected.
    pub fn from_generators(generators: &[u32], m: u32) -> Result<Self> {
        check_m(m)?;
        let mut bits = 0u64;
        for &j in generators {
            if j == 0 || j > m {
                return Err(Error::InvalidBlade(format!(
                    "generator index {j} out of range 1..={m}"
                )));
            }
            let bit = 1u64 << (j - 1);
            if bits & bit != 0 {
                return Err(Error::InvalidBlade(format!("generator index {j} repeated")));
            }
            bits |= bit;
        }
        Ok(BladeIndex { bits, m })
    }

    /// `e_∅ = I`.
    pub fn identity(m: u32) -> Result<Self> {
        Self::new(0, m)
    }

    /// The single generator `e_j` (1-based).
    pub fn generator(j: u32, m: u32) -> Result<Self> {
        Self::from_generators(&[j], m)
    }

    /// The top blade `e_{1..m}`.
    pub fn top(m: u32) -> Result<Self> {
        check_m(m)?;
        Ok(BladeIndex { bits: mask(m), m })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn m(self) -> u32 {
        self.m
    }

    #[inline]
    pub fn grade(self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.bits == 0
    }

    /// Generators of the blade in ascending order, 1-based.
    pub fn generators(self) -> impl Iterator<Item = u32> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            Some(j + 1)
        })
    }

    pub(crate) fn same_m(self, other: BladeIndex) -> Result<()> {
        if self.m != other.m {
            return Err(Error::Dimension {
                expected: self.m,
                found: other.m,
            });
        }
        Ok(())
    }

    /// Every blade index of `Cl_m`, in ascending bitmask order.
    pub fn all(m: u32) -> Result<impl Iterator<Item = BladeIndex>> {
        check_m(m)?;
        if m > 32 {
            return Err(Error::guard("blade enumeration", m, 32u32));
        }
        Ok((0..=mask(m)).map(move |bits| BladeIndex { bits, m }))
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("I");
        }
        f.write_str("e{")?;
        for (i, j) in self.generators().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}

/// An element `±e_S` of the Clifford group `C_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    pub sign: Sign,
    pub index: BladeIndex,
}

impl SignedBlade {
    pub fn new(sign: Sign, index: BladeIndex) -> Self {
        SignedBlade { sign, index }
    }

    pub fn plus(index: BladeIndex) -> Self {
        SignedBlade::new(Sign::Plus, index)
    }

    pub fn minus(index: BladeIndex) -> Self {
        SignedBlade::new(Sign::Minus, index)
    }

    /// `+I` in `Cl_m`.
    pub fn one(m: u32) -> Result<Self> {
        Ok(SignedBlade::plus(BladeIndex::identity(m)?))
    }

    pub fn m(self) -> u32 {
        self.index.m
    }

    /// All `2 * 2^m` elements of `C_m`, `+` before `-` for each index.
    pub fn group(m: u32) -> Result<impl Iterator<Item = SignedBlade>> {
        Ok(BladeIndex::all(m)?
            .flat_map(|ix| [SignedBlade::plus(ix), SignedBlade::minus(ix)]))
    }
}

impl Neg for SignedBlade {
    type Output = SignedBlade;

    fn neg(self) -> SignedBlade {
        SignedBlade::new(-self.sign, self.index)
    }
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.index)
    }
}

/// `eps(S, T)`: the sign with `e_S e_T = eps(S, T) e_{S xor T}`.
///
/// For each `t` in `T`, counts the elements of `S` strictly above `t` with one
/// shifted popcount, so the cost is `O(|T|)` word operations.
#[inline]
pub fn sign_eps(s: BladeIndex, t: BladeIndex) -> Sign {
    let s = s.bits;
    let mut rest = t.bits;
    let mut inversions = 0u32;
    while rest != 0 {
        let pos = rest.trailing_zeros();
        rest &= rest - 1;
        // pos <= 61, so the shift is in range.
        inversions += (s >> (pos + 1)).count_ones();
    }
    Sign::from_parity(inversions)
}

/// Reference implementation of [`sign_eps`]: an explicit double loop over
/// `(s, t)` pairs applying `eps_st = -1` iff `s > t`.
pub fn sign_eps_bruteforce(s: BladeIndex, t: BladeIndex) -> Sign {
    let mut sign = Sign::Plus;
    for a in s.generators() {
        for b in t.generators() {
            if a > b {
                sign = -sign;
            }
        }
    }
    sign
}

/// Product in the Clifford group.
pub fn blade_mul(a: SignedBlade, b: SignedBlade) -> Result<SignedBlade> {
    a.index.same_m(b.index)?;
    let sign = a.sign * b.sign * sign_eps(a.index, b.index);
    Ok(SignedBlade::new(
        sign,
        BladeIndex {
            bits: a.index.bits ^ b.index.bits,
            m: a.index.m,
        },
    ))
}

/// `a * a`, always `±I`: the sign is `(-1)^(r(r-1)/2)` for a grade-`r` blade.
pub fn blade_square(a: SignedBlade) -> SignedBlade {
    let r = a.index.grade();
    let sign = Sign::from_parity((r * r.saturating_sub(1) / 2) & 1);
    SignedBlade::new(
        sign,
        BladeIndex {
            bits: 0,
            m: a.index.m,
        },
    )
}

/// Whether `e_S` and `e_T` commute: `|S||T| - |S ∩ T|` is even.
#[inline]
pub fn commutes(s: BladeIndex, t: BladeIndex) -> bool {
    let overlap = (s.bits & t.bits).count_ones();
    (s.grade() * t.grade() + overlap) & 1 == 0
}

/// Value of a commutator `[a, b] = ab - ba`: zero, or `±2` times a blade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommutatorResult {
    /// One of `0`, `2`, `-2`.
    pub coefficient: i8,
    /// `S xor T`; only meaningful when `coefficient != 0`.
    pub blade: BladeIndex,
}

impl CommutatorResult {
    pub fn is_zero(&self) -> bool {
        self.coefficient == 0
    }
}

impl fmt::Display for CommutatorResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient == 0 {
            f.write_str("0")
        } else {
            write!(f, "{}{}", self.coefficient, self.blade)
        }
    }
}

/// `[a, b] = (1 - eps(S,T) eps(T,S)) ab`.
pub fn commutator(a: SignedBlade, b: SignedBlade) -> Result<CommutatorResult> {
    let ab = blade_mul(a, b)?;
    let coefficient = if commutes(a.index, b.index) {
        0
    } else {
        2 * ab.sign.to_i32() as i8
    };
    Ok(CommutatorResult {
        coefficient,
        blade: ab.index,
    })
}

/// Grade parity of `e_S`: 0 for even, 1 for odd.
#[inline]
pub fn parity(s: BladeIndex) -> u8 {
    (s.grade() & 1) as u8
}

/// Image of `a ⊗ b` under `Cl_n ⊗ Cl_m ≅ Cl_{n+m}` (graded tensor product).
///
/// Generators of the second factor are shifted up by `n`. Inside the image every
/// first-factor generator precedes every second-factor generator, so no extra
/// sign appears.
pub fn embed_super_tensor(a: SignedBlade, b: SignedBlade) -> Result<SignedBlade> {
    let n = a.index.m;
    let m = b.index.m;
    let total = n + m;
    if total > MAX_GENERATORS {
        return Err(Error::guard("super tensor generator count", total, MAX_GENERATORS));
    }
    Ok(SignedBlade::new(
        a.sign * b.sign,
        BladeIndex {
            bits: a.index.bits | (b.index.bits << n),
            m: total,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(gens: &[u32], m: u32) -> BladeIndex {
        BladeIndex::from_generators(gens, m).unwrap()
    }

    fn pb(gens: &[u32], m: u32) -> SignedBlade {
        SignedBlade::plus(ix(gens, m))
    }

    /// Rewrites a word of generators into ascending order by adjacent swaps,
    /// cancelling `e_j e_j = I`. Independent of the bitmask arithmetic.
    fn rewrite(word: &[u32]) -> (Sign, Vec<u32>) {
        let mut w = word.to_vec();
        let mut sign = Sign::Plus;
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < w.len() {
                if w[i] == w[i + 1] {
                    w.drain(i..i + 2);
                    changed = true;
                } else if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                    i += 1;
                } else {
                    i += 1;
                }
            }
            if !changed {
                return (sign, w);
            }
        }
    }

    #[test]
    fn sign_eps_examples() {
        assert_eq!(sign_eps(ix(&[1], 3), ix(&[2], 3)), Sign::Plus);
        assert_eq!(sign_eps(ix(&[2], 3), ix(&[1], 3)), Sign::Minus);
        assert_eq!(sign_eps(ix(&[1, 2], 3), ix(&[1, 2], 3)), Sign::Minus);
        for (s, t) in [(&[1][..], &[2][..]), (&[2], &[1]), (&[1, 2], &[1, 2])] {
            assert_eq!(
                sign_eps_bruteforce(ix(s, 3), ix(t, 3)),
                sign_eps(ix(s, 3), ix(t, 3))
            );
        }
    }

    #[test]
    fn blade_mul_examples() {
        assert_eq!(blade_mul(pb(&[1], 3), pb(&[2], 3)).unwrap(), pb(&[1, 2], 3));
        assert_eq!(
            blade_mul(pb(&[1, 2], 3), pb(&[1, 2], 3)).unwrap(),
            SignedBlade::minus(ix(&[], 3))
        );
        assert_eq!(blade_mul(pb(&[1, 2], 3), pb(&[2, 3], 3)).unwrap(), pb(&[1, 3], 3));
    }

    #[test]
    fn blade_mul_matches_word_rewriting() {
        let m = 5;
        for a in BladeIndex::all(m).unwrap() {
            for b in BladeIndex::all(m).unwrap() {
                let word: Vec<u32> = a.generators().chain(b.generators()).collect();
                let (sign, rest) = rewrite(&word);
                let got = blade_mul(SignedBlade::plus(a), SignedBlade::plus(b)).unwrap();
                assert_eq!(got, SignedBlade::new(sign, ix(&rest, m)), "{a} * {b}");
            }
        }
    }

    #[test]
    fn mismatched_m_is_a_dimension_error() {
        let err = blade_mul(pb(&[1], 3), pb(&[1], 4)).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 3, found: 4 });
    }

    #[test]
    fn blade_square_examples() {
        let id = SignedBlade::plus(ix(&[], 3));
        assert_eq!(blade_square(pb(&[1], 3)), id);
        assert_eq!(blade_square(pb(&[1, 2], 3)), -id);
        assert_eq!(blade_square(pb(&[1, 2, 3], 3)), -id);
        assert_eq!(blade_square(SignedBlade::one(3).unwrap()), id);
    }

    #[test]
    fn commutes_examples() {
        assert!(!commutes(ix(&[1], 5), ix(&[2], 5)));
        assert!(commutes(ix(&[1], 5), ix(&[1], 5)));
        assert!(commutes(ix(&[1, 4], 5), ix(&[2, 5], 5)));
    }

    #[test]
    fn commutator_examples() {
        let c = commutator(pb(&[1], 3), pb(&[2], 3)).unwrap();
        assert_eq!(c, CommutatorResult { coefficient: 2, blade: ix(&[1, 2], 3) });
        assert!(commutator(pb(&[1], 3), pb(&[1], 3)).unwrap().is_zero());
        assert!(commutator(pb(&[1, 2], 3), pb(&[3], 3)).unwrap().is_zero());
        let c = commutator(pb(&[2], 3), pb(&[1], 3)).unwrap();
        assert_eq!(c.coefficient, -2);
        let c = commutator(-pb(&[2], 3), pb(&[1], 3)).unwrap();
        assert_eq!(c.coefficient, 2);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity(ix(&[], 4)), 0);
        assert_eq!(parity(ix(&[1, 2, 3], 4)), 1);
        assert_eq!(parity(ix(&[1, 4], 4)), 0);
    }

    #[test]
    fn embed_examples() {
        assert_eq!(
            embed_super_tensor(pb(&[1], 3), pb(&[1], 3)).unwrap(),
            pb(&[1, 4], 6)
        );
        assert_eq!(
            embed_super_tensor(pb(&[], 3), pb(&[], 3)).unwrap(),
            pb(&[], 6)
        );
        assert_eq!(
            embed_super_tensor(pb(&[1, 2], 3), pb(&[2, 3], 3)).unwrap(),
            pb(&[1, 2, 5, 6], 6)
        );
        assert!(embed_super_tensor(pb(&[1], 40), pb(&[1], 40))
            .unwrap_err()
            .is_guard());
    }

    #[test]
    fn blade_index_validation() {
        assert!(BladeIndex::new(0b1000, 3).is_err());
        assert!(BladeIndex::from_generators(&[0], 3).is_err());
        assert!(BladeIndex::from_generators(&[2, 2], 3).is_err());
        assert!(BladeIndex::new(0, 63).unwrap_err().is_guard());
        assert_eq!(ix(&[3, 1], 3).generators().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(ix(&[1, 3], 3).to_string(), "e{1,3}");
        assert_eq!(SignedBlade::group(3).unwrap().count(), 16);
    }
}
