use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::GaussInt;
use crate::error::{Error, Result};

/// A square matrix over the Gaussian integers, side length a power of two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussMatrix {
    dim: usize,
    entries: Vec<GaussInt>,
}

impl GaussMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if !dim.is_power_of_two() {
            return Err(Error::InvalidInput(format!("matrix side {dim} is not a power of two")));
        }
        Ok(GaussMatrix {
            dim,
            entries: vec![GaussInt::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::scalar(dim, GaussInt::one())
    }

    /// `λI`.
    pub fn scalar(dim: usize, lambda: GaussInt) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = lambda.clone();
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<GaussInt>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidInput("matrix rows are not square".into()));
        }
        let mut m = Self::zeros(dim)?;
        m.entries = rows.into_iter().flatten().collect();
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussInt {
        &self.entries[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[GaussInt] {
        &self.entries
    }

    fn same_dim(&self, other: &GaussMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::InvalidInput(format!(
                "matrix sizes differ: {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Exact product. Zero entries of `self` are skipped, so products of
    /// monomial matrices (Pauli words) cost `O(dim²)`.
    pub fn mul(&self, rhs: &GaussMatrix) -> Result<GaussMatrix> {
        self.same_dim(rhs)?;
        let n = self.dim;
        let mut out = vec![GaussInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(GaussMatrix { dim: n, entries: out })
    }

    pub fn add(&self, rhs: &GaussMatrix) -> Result<GaussMatrix> {
        self.same_dim(rhs)?;
        Ok(GaussMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, rhs: &GaussMatrix) -> Result<GaussMatrix> {
        self.same_dim(rhs)?;
        Ok(GaussMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &GaussInt) -> GaussMatrix {
        GaussMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> GaussMatrix {
        GaussMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn conj_transpose(&self) -> GaussMatrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entries[j * n + i].conj());
            }
        }
        GaussMatrix { dim: n, entries }
    }

    pub fn trace(&self) -> GaussInt {
        let mut t = GaussInt::zero();
        for i in 0..self.dim {
            t += &self.entries[i * self.dim + i];
        }
        t
    }

    /// `Some(λ)` when the matrix equals `λI`.
    pub fn as_scalar(&self) -> Option<GaussInt> {
        let n = self.dim;
        let lambda = self.entries[0].clone();
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let e = &self.entries[i * n + j];
                if i == j {
                    *e == lambda
                } else {
                    e.is_zero()
                }
            })
        });
        ok.then_some(lambda)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|l| l.is_one())
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.conj_transpose()
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.conj_transpose())
            .map(|p| p.is_identity())
            .unwrap_or(false)
    }
}

impl fmt::Display for GaussMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// Kronecker product `A ⊗ B`; the first factor indexes the outer blocks.
pub fn kron(a: &GaussMatrix, b: &GaussMatrix) -> GaussMatrix {
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    let mut entries = vec![GaussInt::zero(); n * n];
    for i in 0..na {
        for j in 0..na {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..nb {
                for l in 0..nb {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        entries[(i * nb + k) * n + (j * nb + l)] = x * y;
                    }
                }
            }
        }
    }
    GaussMatrix { dim: n, entries }
}

/// Divides a row by the integer gcd of all its real and imaginary parts.
fn remove_content(row: &mut [GaussInt]) {
    let mut g = BigInt::zero();
    for e in row.iter() {
        for part in [&e.re, &e.im] {
            if !part.is_zero() {
                g = g.gcd(part);
                if g.is_one() {
                    return;
                }
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        e.re /= &g;
        e.im /= &g;
    }
}

/// Rank over `Q(i)` of a list of equal-length Gaussian-integer vectors.
///
/// Fraction-free elimination: each step replaces a row by
/// `pivot * row - lead * pivot_row`, which stays inside `Z[i]`, then strips the
/// integer content of the row to bound coefficient growth.
pub fn rank(mut rows: Vec<Vec<GaussInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        // Prefer a unit pivot so the update is a plain subtraction.
        let candidates = (rank..rows.len()).filter(|&r| !rows[r][col].is_zero());
        let mut chosen = None;
        for r in candidates {
            if rows[r][col].is_unit() {
                chosen = Some(r);
                break;
            }
            chosen.get_or_insert(r);
        }
        let Some(p) = chosen else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        let support: Vec<usize> = (col..ncols).filter(|&c| !pivot_row[c].is_zero()).collect();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let lead = row[col].clone();
            if pivot.is_unit() {
                // row -= (lead / pivot) * pivot_row, with 1/u = conj(u) for units.
                let factor = &lead * &pivot.conj();
                for &c in &support {
                    let t = &factor * &pivot_row[c];
                    row[c] = &row[c] - &t;
                }
            } else {
                for c in col..ncols {
                    let scaled = pivot * &row[c];
                    row[c] = &scaled - &(&lead * &pivot_row[c]);
                }
                remove_content(row);
            }
            debug_assert!(row[col].is_zero());
        }
        rank += 1;
    }
    rank
}
