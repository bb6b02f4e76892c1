//! The Jordan–Wigner representation of `Cl_m` on `⌊m/2⌋` qubits.
//!
//! With `n = ⌊m/2⌋` and `k = 1..=n`:
//!
//! ```text
//! e_{2k-1} ↦ σ₃ ⊗ … ⊗ σ₃ ⊗ σ₁ ⊗ I ⊗ … ⊗ I      (k-1 copies of σ₃)
//! e_{2k}   ↦ σ₃ ⊗ … ⊗ σ₃ ⊗ σ₂ ⊗ I ⊗ … ⊗ I
//! e_m      ↦ σ₃ ⊗ … ⊗ σ₃                        (m odd, n copies)
//! ```
//!
//! For `m = 3` this is `e_j ↦ σ_j`. For odd `m` the dimension is `2^((m-1)/2)`
//! and the image spans the full matrix algebra; negating the image of `e_m`
//! gives the other irreducible representation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::matrix::{kron, rank};
use super::{GaussInt, GaussMatrix};
use crate::clifford::{blade_mul, BladeIndex, SignedBlade};
use crate::error::{Error, Result};

/// Largest `m` for which representation matrices are built by default.
pub const DEFAULT_REP_GUARD: u32 = 13;
/// Largest odd `m` for [`span_rank`] and [`two_irreps_distinct`] by default.
pub const DEFAULT_RANK_GUARD: u32 = 9;
/// Largest `m` checked exhaustively by [`verify_representation_hom`].
pub const HOM_EXHAUSTIVE_MAX: u32 = 7;
pub const DEFAULT_HOM_SAMPLES: u64 = 10_000;

/// `σ₀ = I`, `σ₁`, `σ₂`, `σ₃` as exact 2×2 matrices.
pub fn pauli(alpha: u8) -> Result<GaussMatrix> {
    let z = GaussInt::zero;
    let rows = match alpha {
        0 => vec![vec![GaussInt::one(), z()], vec![z(), GaussInt::one()]],
        1 => vec![vec![z(), GaussInt::one()], vec![GaussInt::one(), z()]],
        2 => vec![vec![z(), -GaussInt::i()], vec![GaussInt::i(), z()]],
        3 => vec![vec![GaussInt::one(), z()], vec![z(), GaussInt::from(-1)]],
        _ => {
            return Err(Error::InvalidInput(format!(
                "Pauli index {alpha} is not in 0..=3"
            )))
        }
    };
    GaussMatrix::from_rows(rows)
}

fn check_guard(m: u32, guard: u32) -> Result<()> {
    if m > guard {
        return Err(Error::guard("representation generator count", m, guard));
    }
    Ok(())
}

fn kron_all(factors: &[GaussMatrix]) -> GaussMatrix {
    factors
        .iter()
        .fold(GaussMatrix::identity(1).expect("1 is a power of two"), |acc, f| kron(&acc, f))
}

/// Image of generator `e_j` (1-based) in the Jordan–Wigner representation of `Cl_m`.
pub fn jw_generator(j: u32, m: u32, guard: u32) -> Result<GaussMatrix> {
    check_guard(m, guard)?;
    if j == 0 || j > m {
        return Err(Error::InvalidInput(format!("generator {j} out of range 1..={m}")));
    }
    let n = (m / 2) as usize;
    let sz = pauli(3)?;
    let id = pauli(0)?;
    let factors: Vec<GaussMatrix> = if m % 2 == 1 && j == m {
        vec![sz; n]
    } else {
        let k = j.div_ceil(2) as usize;
        let mid = pauli(if j % 2 == 1 { 1 } else { 2 })?;
        (1..=n)
            .map(|q| match q.cmp(&k) {
                std::cmp::Ordering::Less => sz.clone(),
                std::cmp::Ordering::Equal => mid.clone(),
                std::cmp::Ordering::Greater => id.clone(),
            })
            .collect()
    };
    Ok(kron_all(&factors))
}

/// A representation of `Cl_m` given by its generator images.
#[derive(Clone, Debug)]
pub struct Representation {
    m: u32,
    generators: Vec<GaussMatrix>,
}

impl Representation {
    pub fn jordan_wigner(m: u32, guard: u32) -> Result<Self> {
        check_guard(m, guard)?;
        let generators = (1..=m)
            .map(|j| jw_generator(j, m, guard))
            .collect::<Result<_>>()?;
        Ok(Representation { m, generators })
    }

    /// The same representation with the image of `e_m` negated.
    pub fn with_last_negated(&self) -> Self {
        let mut generators = self.generators.clone();
        if let Some(last) = generators.last_mut() {
            *last = last.neg();
        }
        Representation { m: self.m, generators }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> usize {
        1 << (self.m / 2)
    }

    pub fn generator(&self, j: u32) -> &GaussMatrix {
        &self.generators[(j - 1) as usize]
    }

    /// `sign · ρ(e_{s1}) ρ(e_{s2}) …` over `S` ascending.
    pub fn blade(&self, a: SignedBlade) -> Result<GaussMatrix> {
        if a.m() != self.m {
            return Err(Error::Dimension { expected: self.m, found: a.m() });
        }
        let mut out = GaussMatrix::identity(self.dim())?;
        for j in a.index.generators() {
            out = out.mul(self.generator(j))?;
        }
        Ok(if a.sign.is_plus() { out } else { out.neg() })
    }

    /// `ρ(e_j)ρ(e_k) + ρ(e_k)ρ(e_j) = 2δ_jk I` for all `j <= k`.
    pub fn satisfies_clifford_relations(&self) -> Result<bool> {
        let two = GaussMatrix::scalar(self.dim(), GaussInt::from(2))?;
        let zero = GaussMatrix::zeros(self.dim())?;
        for j in 1..=self.m {
            for k in j..=self.m {
                let (a, b) = (self.generator(j), self.generator(k));
                let anti = a.mul(b)?.add(&b.mul(a)?)?;
                let want = if j == k { &two } else { &zero };
                if anti != *want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `rep_blade(a)` in the Jordan–Wigner representation of `Cl_m`.
pub fn rep_blade(a: SignedBlade, m: u32, guard: u32) -> Result<GaussMatrix> {
    Representation::jordan_wigner(m, guard)?.blade(a)
}

pub fn verify_clifford_relations(m: u32, guard: u32) -> Result<bool> {
    Representation::jordan_wigner(m, guard)?.satisfies_clifford_relations()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    pub passed: bool,
    pub exhaustive: bool,
    pub pairs_checked: u64,
    /// First failing pair as bitmasks.
    pub violation: Option<(u64, u64)>,
}

/// Checks `ρ(ab) = ρ(a)ρ(b)` on pairs of basis blades: every pair for
/// `m <= 7`, otherwise `samples` seeded random pairs.
pub fn verify_representation_hom(
    m: u32,
    samples: u64,
    seed: u64,
    guard: u32,
) -> Result<HomomorphismReport> {
    let rep = Representation::jordan_wigner(m, guard)?;
    let check = |a: BladeIndex, b: BladeIndex| -> Result<bool> {
        let (a, b) = (SignedBlade::plus(a), SignedBlade::plus(b));
        let lhs = rep.blade(blade_mul(a, b)?)?;
        let rhs = rep.blade(a)?.mul(&rep.blade(b)?)?;
        Ok(lhs == rhs)
    };
    let mut report = HomomorphismReport {
        passed: true,
        exhaustive: m <= HOM_EXHAUSTIVE_MAX,
        pairs_checked: 0,
        violation: None,
    };
    let mut record = |a: BladeIndex, b: BladeIndex, ok: bool| {
        report.pairs_checked += 1;
        if !ok && report.violation.is_none() {
            report.passed = false;
            report.violation = Some((a.bits(), b.bits()));
        }
    };
    if m <= HOM_EXHAUSTIVE_MAX {
        let images: Vec<GaussMatrix> = BladeIndex::all(m)?
            .map(|b| rep.blade(SignedBlade::plus(b)))
            .collect::<Result<_>>()?;
        for a in BladeIndex::all(m)? {
            for b in BladeIndex::all(m)? {
                let ab = blade_mul(SignedBlade::plus(a), SignedBlade::plus(b))?;
                let lhs = &images[ab.index.bits() as usize];
                let lhs = if ab.sign.is_plus() { lhs.clone() } else { lhs.neg() };
                let rhs = images[a.bits() as usize].mul(&images[b.bits() as usize])?;
                record(a, b, lhs == rhs);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let top = (1u64 << m) - 1;
        for _ in 0..samples {
            let a = BladeIndex::new(rng.gen_range(0..=top), m)?;
            let b = BladeIndex::new(rng.gen_range(0..=top), m)?;
            record(a, b, check(a, b)?);
        }
    }
    Ok(report)
}

fn odd_in_guard(m: u32, guard: u32) -> Result<()> {
    if m.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "m = {m} is even; only odd m has a full-matrix-algebra image"
        )));
    }
    if m > guard {
        return Err(Error::guard("rank generator count", m, guard));
    }
    Ok(())
}

/// Rank over `Q(i)` of the `2^m` flattened blade images, expected `2^(m-1)`.
pub fn span_rank(m: u32, guard: u32) -> Result<usize> {
    odd_in_guard(m, guard)?;
    let rep = Representation::jordan_wigner(m, guard.max(m))?;
    let rows = BladeIndex::all(m)?
        .map(|b| Ok(rep.blade(SignedBlade::plus(b))?.entries().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok(rank(rows))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepReport {
    pub holds: bool,
    pub dim: usize,
    /// Top-blade scalar in the Jordan–Wigner representation.
    pub lambda: Option<String>,
    /// Top-blade scalar with `e_m` negated.
    pub lambda_negated: Option<String>,
}

/// Builds the second representation by negating `ρ(e_m)` and checks that both
/// satisfy the Clifford relations and send the central top blade `e_{1..m}` to
/// scalars `λI` and `-λI`, which no change of basis can identify.
pub fn two_irreps_distinct(m: u32, guard: u32) -> Result<IrrepReport> {
    odd_in_guard(m, guard)?;
    let first = Representation::jordan_wigner(m, guard.max(m))?;
    let second = first.with_last_negated();
    let top = SignedBlade::plus(BladeIndex::top(m)?);
    let l1 = first.blade(top)?.as_scalar();
    let l2 = second.blade(top)?.as_scalar();
    let relations = first.satisfies_clifford_relations()? && second.satisfies_clifford_relations()?;
    let opposite = match (&l1, &l2) {
        (Some(a), Some(b)) => !a.is_zero() && *a == -b.clone(),
        _ => false,
    };
    Ok(IrrepReport {
        holds: relations && opposite,
        dim: first.dim(),
        lambda: l1.map(|l| l.to_string()),
        lambda_negated: l2.map(|l| l.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    fn mat(rows: &[[(i64, i64); 2]; 2]) -> GaussMatrix {
        GaussMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| g(a, b)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pauli_matrices_as_printed() {
        assert_eq!(pauli(1).unwrap(), mat(&[[(0, 0), (1, 0)], [(1, 0), (0, 0)]]));
        assert_eq!(pauli(2).unwrap(), mat(&[[(0, 0), (0, -1)], [(0, 1), (0, 0)]]));
        assert_eq!(pauli(3).unwrap(), mat(&[[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]));
        assert!(pauli(0).unwrap().is_identity());
        assert!(pauli(4).is_err());
    }

    #[test]
    fn pauli_properties() {
        for a in 1..=3 {
            let s = pauli(a).unwrap();
            assert!(s.trace().is_zero());
            assert!(s.is_hermitian());
            assert!(s.is_unitary());
            assert!(s.mul(&s).unwrap().is_identity());
        }
    }

    #[test]
    fn kron_sigma3_identity() {
        let d = kron(&pauli(3).unwrap(), &pauli(0).unwrap());
        for i in 0..4 {
            for j in 0..4 {
                let want = match (i == j, i < 2) {
                    (false, _) => g(0, 0),
                    (true, true) => g(1, 0),
                    (true, false) => g(-1, 0),
                };
                assert_eq!(*d.get(i, j), want);
            }
        }
    }

    #[test]
    fn generator_examples() {
        assert_eq!(jw_generator(1, 3, DEFAULT_REP_GUARD).unwrap(), pauli(1).unwrap());
        assert_eq!(jw_generator(2, 3, DEFAULT_REP_GUARD).unwrap(), pauli(2).unwrap());
        assert_eq!(jw_generator(3, 3, DEFAULT_REP_GUARD).unwrap(), pauli(3).unwrap());
        let e5 = jw_generator(5, 5, DEFAULT_REP_GUARD).unwrap();
        assert_eq!(e5, kron(&pauli(3).unwrap(), &pauli(3).unwrap()));
        assert_eq!(e5.dim(), 4);
        assert!(jw_generator(1, 14, DEFAULT_REP_GUARD).unwrap_err().is_guard());
        assert!(jw_generator(4, 3, DEFAULT_REP_GUARD).is_err());
        // m = 1: the 1×1 representation e₁ ↦ 1.
        assert!(jw_generator(1, 1, DEFAULT_REP_GUARD).unwrap().is_identity());
    }

    #[test]
    fn blade_images() {
        let ix = |gens: &[u32]| BladeIndex::from_generators(gens, 3).unwrap();
        let e12 = rep_blade(SignedBlade::plus(ix(&[1, 2])), 3, DEFAULT_REP_GUARD).unwrap();
        assert_eq!(e12, pauli(3).unwrap().scale(&GaussInt::i()));
        let e123 = rep_blade(SignedBlade::plus(ix(&[1, 2, 3])), 3, DEFAULT_REP_GUARD).unwrap();
        assert_eq!(e123.as_scalar(), Some(GaussInt::i()));
        let minus_one = rep_blade(SignedBlade::minus(ix(&[])), 3, DEFAULT_REP_GUARD).unwrap();
        assert_eq!(minus_one.as_scalar(), Some(g(-1, 0)));
    }

    #[test]
    fn relations() {
        for m in 1..=11 {
            assert!(verify_clifford_relations(m, DEFAULT_REP_GUARD).unwrap(), "m={m}");
        }
    }

    #[test]
    fn homomorphism() {
        let r = verify_representation_hom(3, 0, 0, DEFAULT_REP_GUARD).unwrap();
        assert!(r.passed && r.exhaustive);
        assert_eq!(r.pairs_checked, 64);
        let r = verify_representation_hom(9, 500, 1, DEFAULT_REP_GUARD).unwrap();
        assert!(r.passed && !r.exhaustive);
        assert_eq!(r.pairs_checked, 500);
        let e1 = SignedBlade::plus(BladeIndex::generator(1, 3).unwrap());
        let lhs = rep_blade(blade_mul(e1, e1).unwrap(), 3, DEFAULT_REP_GUARD).unwrap();
        assert!(lhs.is_identity());
    }

    #[test]
    fn ranks() {
        assert_eq!(span_rank(1, DEFAULT_RANK_GUARD).unwrap(), 1);
        assert_eq!(span_rank(3, DEFAULT_RANK_GUARD).unwrap(), 4);
        assert_eq!(span_rank(5, DEFAULT_RANK_GUARD).unwrap(), 16);
        assert!(matches!(span_rank(4, DEFAULT_RANK_GUARD), Err(Error::Unsupported(_))));
        assert!(span_rank(11, DEFAULT_RANK_GUARD).unwrap_err().is_guard());
    }

    #[test]
    fn irreps() {
        let r = two_irreps_distinct(3, DEFAULT_RANK_GUARD).unwrap();
        assert!(r.holds);
        assert_eq!(r.lambda.as_deref(), Some("i"));
        assert_eq!(r.lambda_negated.as_deref(), Some("-i"));
        let r = two_irreps_distinct(1, DEFAULT_RANK_GUARD).unwrap();
        assert!(r.holds);
        assert_eq!((r.lambda.as_deref(), r.lambda_negated.as_deref()), (Some("1"), Some("-1")));
        let r = two_irreps_distinct(5, DEFAULT_RANK_GUARD).unwrap();
        assert!(r.holds);
        assert_eq!(r.dim, 4);
        assert_eq!((r.lambda.as_deref(), r.lambda_negated.as_deref()), (Some("-1"), Some("1")));
    }
}
