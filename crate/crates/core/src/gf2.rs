//! The quotient `V_m = C_m / {±I}` as a vector space over the two-element field.
//!
//! Forgetting the sign of `±e_S` leaves the bitmask of `S`; the group product
//! becomes XOR. Subspaces are kept in reduced row-echelon form with the pivot of
//! each row at its lowest set bit, which makes the basis a canonical key.

use std::fmt;
use std::ops::{Add, BitXor};

use crate::clifford::{SignedBlade, MAX_GENERATORS};
use crate::error::{Error, Result};

/// Default bound on `m` for [`enumerate_subspaces`].
pub const DEFAULT_ENUMERATION_GUARD: u32 = 6;

/// An element of `V_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    bits: u64,
    m: u32,
}

impl Gf2Vector {
    pub fn new(bits: u64, m: u32) -> Result<Self> {
        if m > MAX_GENERATORS {
            return Err(Error::guard("vector dimension", m, MAX_GENERATORS));
        }
        if m < 64 && bits >> m != 0 {
            return Err(Error::InvalidInput(format!(
                "vector {bits:#b} does not fit in dimension {m}"
            )));
        }
        Ok(Gf2Vector { bits, m })
    }

    pub fn zero(m: u32) -> Self {
        Gf2Vector { bits: 0, m }
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
    pub fn is_zero(self) -> bool {
        self.bits == 0
    }
}

impl Add for Gf2Vector {
    type Output = Gf2Vector;

    #[inline]
    fn add(self, rhs: Gf2Vector) -> Gf2Vector {
        debug_assert_eq!(self.m, rhs.m);
        Gf2Vector {
            bits: self.bits ^ rhs.bits,
            m: self.m,
        }
    }
}

impl BitXor for Gf2Vector {
    type Output = Gf2Vector;

    #[inline]
    fn bitxor(self, rhs: Gf2Vector) -> Gf2Vector {
        debug_assert_eq!(self.m, rhs.m);
        Gf2Vector {
            bits: self.bits ^ rhs.bits,
            m: self.m,
        }
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Most significant coordinate first, like a binary literal.
        for i in (0..self.m).rev() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// The quotient homomorphism `C_m -> V_m`.
#[inline]
pub fn blade_to_vector(a: SignedBlade) -> Gf2Vector {
    Gf2Vector {
        bits: a.index.bits(),
        m: a.index.m(),
    }
}

/// A subspace of `V_m` given by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Subspace {
    m: u32,
    basis: Vec<u64>,
}

impl Gf2Subspace {
    pub fn zero(m: u32) -> Self {
        Gf2Subspace { m, basis: Vec::new() }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of vectors, `2^dim`.
    pub fn cardinality(&self) -> u64 {
        1u64 << self.basis.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        self.basis.iter().map(move |&bits| Gf2Vector { bits, m: self.m })
    }

    fn reduce(&self, mut v: u64) -> u64 {
        for &row in &self.basis {
            let p = row.trailing_zeros();
            if v >> p & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    /// Adds `v` to the span, keeping the basis reduced. Returns whether the
    /// dimension grew.
    fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let p = r.trailing_zeros();
        for row in &mut self.basis {
            if *row >> p & 1 == 1 {
                *row ^= r;
            }
        }
        let at = self
            .basis
            .partition_point(|row| row.trailing_zeros() < p);
        self.basis.insert(at, r);
        true
    }

    /// All vectors of the subspace, zero first, in Gray-code order of the basis.
    pub fn elements(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        let mut acc = 0u64;
        (0..self.cardinality()).map(move |i| {
            if i > 0 {
                acc ^= self.basis[i.trailing_zeros() as usize];
            }
            Gf2Vector { bits: acc, m: self.m }
        })
    }

    /// The nonzero vectors, i.e. the projective points of the subspace.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        self.elements().skip(1)
    }

    /// Checks the echelon invariants. Used by tests and after deserialisation.
    pub fn is_reduced(&self) -> bool {
        let pivots: Vec<u32> = self.basis.iter().map(|r| r.trailing_zeros()).collect();
        self.basis.iter().all(|&r| r != 0 && (self.m >= 64 || r >> self.m == 0))
            && pivots.windows(2).all(|w| w[0] < w[1])
            && self.basis.iter().enumerate().all(|(i, &r)| {
                pivots
                    .iter()
                    .enumerate()
                    .all(|(j, &p)| i == j || r >> p & 1 == 0)
            })
    }
}

/// Reduced-echelon basis of the span of `vs` in `V_m`.
pub fn span(m: u32, vs: &[Gf2Vector]) -> Result<Gf2Subspace> {
    let mut out = Gf2Subspace::zero(m);
    for v in vs {
        if v.m != m {
            return Err(Error::Dimension { expected: m, found: v.m });
        }
        out.insert(v.bits);
    }
    Ok(out)
}

/// Membership test by reduction against the echelon basis.
pub fn subspace_contains(u: &Gf2Subspace, v: Gf2Vector) -> Result<bool> {
    if u.m != v.m {
        return Err(Error::Dimension { expected: u.m, found: v.m });
    }
    Ok(u.reduce(v.bits) == 0)
}

/// Gaussian binomial coefficient `[m choose k]_2`.
pub fn gaussian_binomial(m: u32, k: u32) -> u64 {
    if k > m {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (m - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    (num / den) as u64
}

/// Every `k`-dimensional subspace of `V_m`, each exactly once.
///
/// Generated directly in echelon form: choose pivot columns `p_1 < ... < p_k`,
/// then fill each row's free positions (columns above its pivot that are not
/// pivots of other rows). Output is ordered by pivot set, then by free bits.
pub fn enumerate_subspaces(m: u32, k: u32, guard: u32) -> Result<Vec<Gf2Subspace>> {
    if m > guard {
        return Err(Error::guard("subspace enumeration dimension", m, guard));
    }
    if k > m {
        return Err(Error::InvalidInput(format!(
            "subspace dimension {k} exceeds ambient dimension {m}"
        )));
    }
    let mut out = Vec::with_capacity(gaussian_binomial(m, k) as usize);
    for pivot_set in 0u64..(1u64 << m) {
        if pivot_set.count_ones() != k {
            continue;
        }
        let pivots: Vec<u32> = (0..m).filter(|&c| pivot_set >> c & 1 == 1).collect();
        let free: Vec<Vec<u32>> = pivots
            .iter()
            .map(|&p| (p + 1..m).filter(|&c| pivot_set >> c & 1 == 0).collect())
            .collect();
        let total_free: usize = free.iter().map(Vec::len).sum();
        for assignment in 0u64..(1u64 << total_free) {
            let mut shift = 0;
            let basis = pivots
                .iter()
                .zip(&free)
                .map(|(&p, cols)| {
                    let mut row = 1u64 << p;
                    for (i, &c) in cols.iter().enumerate() {
                        if assignment >> (shift + i) & 1 == 1 {
                            row |= 1u64 << c;
                        }
                    }
                    shift += cols.len();
                    row
                })
                .collect();
            out.push(Gf2Subspace { m, basis });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::clifford::{blade_mul, BladeIndex};

    fn v(bits: u64, m: u32) -> Gf2Vector {
        Gf2Vector::new(bits, m).unwrap()
    }

    /// All subspaces of V_m of size 2^k by filtering every subset of vectors.
    fn brute_force_subspaces(m: u32, k: u32) -> BTreeSet<Vec<u64>> {
        let n = 1u32 << m;
        let mut found = BTreeSet::new();
        for subset in 0u64..(1u64 << n) {
            if subset & 1 == 0 || subset.count_ones() != 1 << k {
                continue;
            }
            let members: Vec<u64> = (0..n as u64).filter(|&x| subset >> x & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| subset >> (a ^ b) & 1 == 1));
            if closed {
                found.insert(members);
            }
        }
        found
    }

    #[test]
    fn blade_to_vector_examples() {
        let s = BladeIndex::from_generators(&[1, 3], 3).unwrap();
        assert_eq!(blade_to_vector(SignedBlade::plus(s)), v(0b101, 3));
        assert_eq!(blade_to_vector(SignedBlade::minus(s)), v(0b101, 3));
        assert!(blade_to_vector(SignedBlade::one(3).unwrap()).is_zero());
    }

    #[test]
    fn quotient_is_a_homomorphism() {
        for m in 0..=8 {
            for a in SignedBlade::group(m).unwrap() {
                for b in BladeIndex::all(m).unwrap() {
                    let b = SignedBlade::plus(b);
                    let ab = blade_mul(a, b).unwrap();
                    assert_eq!(blade_to_vector(ab), blade_to_vector(a) + blade_to_vector(b));
                }
            }
        }
    }

    #[test]
    fn span_examples() {
        let u = span(3, &[v(0b110, 3), v(0b011, 3)]).unwrap();
        assert_eq!(u.dim(), 2);
        assert!(subspace_contains(&u, v(0b101, 3)).unwrap());
        assert!(u.is_reduced());

        let z = span(3, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(subspace_contains(&z, v(0, 3)).unwrap());

        assert_eq!(span(3, &[v(0b111, 3), v(0b111, 3)]).unwrap().dim(), 1);

        let line = span(3, &[v(0b100, 3)]).unwrap();
        assert!(!subspace_contains(&line, v(0b010, 3)).unwrap());
        assert!(subspace_contains(&line, v(0, 3)).unwrap());
        assert!(subspace_contains(&line, v(0, 4)).is_err());
        assert!(span(3, &[v(1, 4)]).is_err());
    }

    #[test]
    fn span_is_order_independent_and_idempotent() {
        let vs = [v(0b0110, 4), v(0b1010, 4), v(0b1100, 4), v(0b0001, 4)];
        let a = span(4, &vs).unwrap();
        let mut rev = vs;
        rev.reverse();
        assert_eq!(a, span(4, &rev).unwrap());
        let all: Vec<_> = a.elements().collect();
        assert_eq!(span(4, &all).unwrap(), a);
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_subspaces(3, 2, 6).unwrap().len(), 7);
        assert_eq!(enumerate_subspaces(3, 0, 6).unwrap().len(), 1);
        assert_eq!(enumerate_subspaces(3, 3, 6).unwrap().len(), 1);
        for m in 0..=6 {
            for k in 0..=m {
                let subs = enumerate_subspaces(m, k, 6).unwrap();
                assert_eq!(subs.len() as u64, gaussian_binomial(m, k), "m={m} k={k}");
                assert!(subs.iter().all(|u| u.is_reduced() && u.dim() == k as usize));
                let keys: BTreeSet<_> = subs.iter().collect();
                assert_eq!(keys.len(), subs.len());
            }
            assert_eq!(
                enumerate_subspaces(m, 1.min(m), 6).unwrap().len() as u64,
                if m == 0 { 1 } else { (1 << m) - 1 }
            );
        }
        assert_eq!(gaussian_binomial(6, 3), 1395);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for m in 0..=4 {
            for k in 0..=m {
                let ours: BTreeSet<Vec<u64>> = enumerate_subspaces(m, k, 6)
                    .unwrap()
                    .iter()
                    .map(|u| {
                        let mut e: Vec<u64> = u.elements().map(|x| x.bits()).collect();
                        e.sort();
                        e
                    })
                    .collect();
                assert_eq!(ours, brute_force_subspaces(m, k), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        assert!(enumerate_subspaces(7, 2, 6).unwrap_err().is_guard());
        assert_eq!(enumerate_subspaces(7, 1, 7).unwrap().len(), 127);
        assert!(enumerate_subspaces(3, 4, 6).is_err());
    }
}
