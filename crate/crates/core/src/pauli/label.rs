use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::clifford::BladeIndex;
use crate::error::{Error, Result};

/// A phase-free Pauli word over `N` tensor factors, e.g. `σ₁σ₃ ⊗ I ⊗ σ₂`.
///
/// Each factor is an increasing list of σ indices from `{1, 2, 3}`; an empty
/// list is `I`. Labels name projective points, which are `±` classes, so the
/// phase carried by reordering (`σ₂σ₁ = -σ₁σ₂`) is dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PauliLabel {
    factors: Vec<Vec<u8>>,
}

impl PauliLabel {
    pub fn factors(&self) -> &[Vec<u8>] {
        &self.factors
    }
}

const SUBSCRIPTS: [char; 4] = ['₀', '₁', '₂', '₃'];

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, word) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ⊗ ")?;
            }
            if word.is_empty() {
                f.write_str("I")?;
            }
            for &s in word {
                write!(f, "σ{}", SUBSCRIPTS[s as usize])?;
            }
        }
        Ok(())
    }
}

/// Parses words such as `I⊗σ₂σ₁`, `s1s2 x I` or `σ1 ⊗ σ3`. Letters within a
/// factor may come in any order; the result is canonical.
impl FromStr for PauliLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidInput(format!("bad Pauli label {s:?}: {why}"));
        let mut factors = Vec::new();
        for part in s.split(['⊗', 'x']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(bad("empty factor"));
            }
            let mut word = Vec::new();
            if part != "I" {
                let mut chars = part.chars().peekable();
                while let Some(c) = chars.next() {
                    if c != 'σ' && c != 's' {
                        return Err(bad("expected σ"));
                    }
                    let d = chars.next().ok_or_else(|| bad("missing σ index"))?;
                    let idx = SUBSCRIPTS
                        .iter()
                        .position(|&x| x == d)
                        .or_else(|| d.to_digit(10).map(|v| v as usize))
                        .filter(|&v| (1..=3).contains(&v))
                        .ok_or_else(|| bad("σ index must be 1, 2 or 3"))?;
                    word.push(idx as u8);
                }
                word.sort_unstable();
                if word.windows(2).any(|w| w[0] == w[1]) {
                    return Err(bad("repeated σ within a factor"));
                }
            }
            factors.push(word);
        }
        Ok(PauliLabel { factors })
    }
}

/// Labels `e_S` in `Cl_{3N} ≅ Cl_3 ⊗ … ⊗ Cl_3`: factor `k` (1-based) receives the
/// generators of `S` in `{3k-2, 3k-1, 3k}`, renumbered `1..=3`.
pub fn label_blade_as_pauli(s: BladeIndex, n: u32) -> Result<PauliLabel> {
    if s.m() != 3 * n {
        return Err(Error::InvalidInput(format!(
            "blade lives in Cl_{}, which is not Cl_3 tensored {n} times",
            s.m()
        )));
    }
    let mut factors = vec![Vec::new(); n as usize];
    for j in s.generators() {
        let k = ((j - 1) / 3) as usize;
        factors[k].push(((j - 1) % 3 + 1) as u8);
    }
    Ok(PauliLabel { factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(gens: &[u32], n: u32) -> String {
        label_blade_as_pauli(BladeIndex::from_generators(gens, 3 * n).unwrap(), n)
            .unwrap()
            .to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(label(&[1, 2], 2), "σ₁σ₂ ⊗ I");
        assert_eq!(label(&[1, 4], 2), "σ₁ ⊗ σ₁");
        assert_eq!(label(&[4, 5], 2), "I ⊗ σ₁σ₂");
        assert_eq!(label(&[], 1), "I");
        assert!(label_blade_as_pauli(BladeIndex::identity(4).unwrap(), 1).is_err());
    }

    #[test]
    fn injective_for_two_factors() {
        let labels: std::collections::HashSet<_> = BladeIndex::all(6)
            .unwrap()
            .map(|b| label_blade_as_pauli(b, 2).unwrap())
            .collect();
        assert_eq!(labels.len(), 64);
    }

    #[test]
    fn parse_up_to_order() {
        let want = label_blade_as_pauli(BladeIndex::from_generators(&[4, 5], 6).unwrap(), 2).unwrap();
        assert_eq!("I⊗σ₂σ₁".parse::<PauliLabel>().unwrap(), want);
        assert_eq!("I x s2s1".parse::<PauliLabel>().unwrap(), want);
        assert_eq!(want.to_string().parse::<PauliLabel>().unwrap(), want);
        assert!("σ₄".parse::<PauliLabel>().is_err());
        assert!("σ₁σ₁".parse::<PauliLabel>().is_err());
        assert!("I ⊗ ".parse::<PauliLabel>().is_err());
    }
}
