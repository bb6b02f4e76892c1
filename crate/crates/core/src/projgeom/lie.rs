use std::collections::HashSet;

use serde::Serialize;

use crate::clifford::{commutator, BladeIndex, SignedBlade};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieClosureReport {
    pub passed: bool,
    pub pairs_checked: u64,
    /// Number of pairs that anticommute, i.e. have a nonzero bracket.
    pub nonzero_brackets: u64,
    /// First pair whose bracket leaves the span, as bitmasks.
    pub violation: Option<(u64, u64)>,
}

/// Checks that the span of the blades `e_S`, `S` in `xs`, is closed under the
/// commutator: for each pair either `[e_S, e_T] = 0` or `S xor T` is in `xs`.
pub fn lie_closure_check(xs: &[BladeIndex], m: u32) -> Result<LieClosureReport> {
    if xs.is_empty() {
        return Err(Error::InvalidInput("blade set is empty".into()));
    }
    for &x in xs {
        if x.m() != m {
            return Err(Error::Dimension { expected: m, found: x.m() });
        }
        if x.is_identity() {
            return Err(Error::InvalidInput("identity blade is not a point".into()));
        }
    }
    let members: HashSet<u64> = xs.iter().map(|x| x.bits()).collect();
    let mut report = LieClosureReport {
        passed: true,
        pairs_checked: 0,
        nonzero_brackets: 0,
        violation: None,
    };
    for (i, &s) in xs.iter().enumerate() {
        for &t in &xs[i + 1..] {
            if s == t {
                continue;
            }
            report.pairs_checked += 1;
            let bracket = commutator(SignedBlade::plus(s), SignedBlade::plus(t))?;
            if bracket.is_zero() {
                continue;
            }
            report.nonzero_brackets += 1;
            if !members.contains(&bracket.blade.bits()) {
                report.passed = false;
                report.violation = Some((s.bits(), t.bits()));
                return Ok(report);
            }
        }
    }
    Ok(report)
}
