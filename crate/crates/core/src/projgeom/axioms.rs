use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{DesarguesReport, Geometry, WITNESS_CAP};

/// Result of one exhaustive or sampled check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Number of cases examined.
    pub checked: u64,
    /// Number of failing cases (exact, even when witnesses are capped).
    pub violations: u64,
    /// Up to [`WITNESS_CAP`] failing cases as point or line index tuples.
    pub witnesses: Vec<Vec<usize>>,
}

impl CheckOutcome {
    fn from_parts(checked: u64, violations: u64, witnesses: Vec<Vec<usize>>) -> Self {
        CheckOutcome {
            passed: violations == 0,
            checked,
            violations,
            witnesses,
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    violations: u64,
    witnesses: Vec<Vec<usize>>,
}

impl Tally {
    fn fail(&mut self, w: impl FnOnce() -> Vec<usize>) {
        self.violations += 1;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(w());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.violations += other.violations;
        let room = WITNESS_CAP - self.witnesses.len();
        self.witnesses.extend(other.witnesses.into_iter().take(room));
        self
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome::from_parts(self.checked, self.violations, self.witnesses)
    }
}

/// How axiom (ii) quantifies over point quadruples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum AxiomIiMode {
    /// Every ordered quadruple of distinct points.
    Exhaustive,
    /// `samples` ordered quadruples of distinct points drawn from a seeded ChaCha8 stream.
    Sampled { samples: u64, seed: u64 },
}

impl AxiomIiMode {
    /// Largest point count checked exhaustively by [`AxiomIiMode::auto`].
    pub const EXHAUSTIVE_MAX_POINTS: usize = 31;

    /// Exhaustive up to 31 points (`PG(4, 2)`), sampled beyond.
    pub fn auto(num_points: usize, samples: u64, seed: u64) -> Self {
        if num_points <= Self::EXHAUSTIVE_MAX_POINTS {
            AxiomIiMode::Exhaustive
        } else {
            AxiomIiMode::Sampled { samples, seed }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AxiomOptions {
    pub axiom_ii: AxiomIiMode,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            axiom_ii: AxiomIiMode::Exhaustive,
        }
    }
}

/// Outcome of the three projective-geometry axioms, plus Desargues when run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    /// (i): every two distinct points lie on exactly one line. Witnesses are pairs.
    pub axiom_i: CheckOutcome,
    /// (ii): if `AB` and `CD` meet then `AC` and `BD` meet. Witnesses are `[A, B, C, D]`.
    pub axiom_ii: CheckOutcome,
    pub axiom_ii_mode: AxiomIiMode,
    /// (iii): every line has at least three points. Witnesses are `[line]`.
    pub axiom_iii: CheckOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub desargues: Option<DesarguesReport>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axiom_i.passed
            && self.axiom_ii.passed
            && self.axiom_iii.passed
            && self.desargues.as_ref().is_none_or(|d| d.passed)
    }
}

fn check_axiom_i(g: &Geometry) -> CheckOutcome {
    let n = g.num_points();
    let multi = g.has_multi_pairs();
    (0..n)
        .into_par_iter()
        .map(|a| {
            let mut t = Tally::default();
            for b in a + 1..n {
                t.checked += 1;
                let ok = match g.line_index(a, b) {
                    None => false,
                    Some(_) if multi => g.lines_through_pair(a, b) == 1,
                    Some(_) => true,
                };
                if !ok {
                    t.fail(|| vec![a, b]);
                }
            }
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
        .finish()
}

fn check_axiom_iii(g: &Geometry) -> CheckOutcome {
    let mut t = Tally::default();
    for (j, line) in g.lines().iter().enumerate() {
        t.checked += 1;
        if line.len() < 3 {
            t.fail(|| vec![j]);
        }
    }
    t.finish()
}

/// Evaluates one quadruple of distinct points. `None` when the hypothesis is
/// vacuous (a line `AB` or `CD` is missing or they do not meet).
#[inline]
fn quadruple_holds(g: &Geometry, a: usize, b: usize, c: usize, d: usize) -> Option<bool> {
    let ab = g.line_index(a, b)?;
    let cd = g.line_index(c, d)?;
    g.meet(ab, cd)?;
    Some(match (g.line_index(a, c), g.line_index(b, d)) {
        (Some(ac), Some(bd)) => g.meet(ac, bd).is_some(),
        _ => false,
    })
}

fn check_axiom_ii(g: &Geometry, mode: AxiomIiMode) -> CheckOutcome {
    let n = g.num_points();
    match mode {
        AxiomIiMode::Exhaustive => (0..n)
            .into_par_iter()
            .map(|a| {
                let mut t = Tally::default();
                for b in (0..n).filter(|&b| b != a) {
                    for c in (0..n).filter(|&c| c != a && c != b) {
                        for d in (0..n).filter(|&d| d != a && d != b && d != c) {
                            t.checked += 1;
                            if quadruple_holds(g, a, b, c, d) == Some(false) {
                                t.fail(|| vec![a, b, c, d]);
                            }
                        }
                    }
                }
                t
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Tally::default(), Tally::merge)
            .finish(),
        AxiomIiMode::Sampled { samples, seed } => {
            let mut t = Tally::default();
            if n < 4 {
                return t.finish();
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let mut q = [0usize; 4];
                let mut k = 0;
                while k < 4 {
                    let x = rng.gen_range(0..n);
                    if !q[..k].contains(&x) {
                        q[k] = x;
                        k += 1;
                    }
                }
                let [a, b, c, d] = q;
                t.checked += 1;
                if quadruple_holds(g, a, b, c, d) == Some(false) {
                    t.fail(|| vec![a, b, c, d]);
                }
            }
            t.finish()
        }
    }
}

/// Checks axioms (i)-(iii) on `g`. Desargues is left to
/// [`desargues_exhaustive`](super::desargues_exhaustive).
pub fn check_axioms(g: &Geometry, opts: AxiomOptions) -> AxiomReport {
    AxiomReport {
        axiom_i: check_axiom_i(g),
        axiom_ii: check_axiom_ii(g, opts.axiom_ii),
        axiom_ii_mode: opts.axiom_ii,
        axiom_iii: check_axiom_iii(g),
        desargues: None,
    }
}
