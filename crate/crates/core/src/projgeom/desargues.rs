use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{Geometry, WITNESS_CAP};
use crate::error::{Error, Result};

/// Largest point count accepted by [`desargues_exhaustive`] by default.
pub const DEFAULT_DESARGUES_GUARD: usize = 63;

/// Two triangles `ABC`, `A'B'C'` and a proposed centre of perspective `D`,
/// all as point indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DesarguesConfig {
    pub center: usize,
    pub triangle: [usize; 3],
    pub perspective: [usize; 3],
}

/// Side intersections `F = AB ∩ A'B'`, `G = BC ∩ B'C'`, `H = AC ∩ A'C'` and
/// the line through them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DesarguesAxis {
    pub f: usize,
    pub g: usize,
    pub h: usize,
    pub line: usize,
}

/// A genuine configuration whose side intersections are missing or not collinear.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesarguesFailure {
    pub config: DesarguesConfig,
    pub f: Option<usize>,
    pub g: Option<usize>,
    pub h: Option<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DesarguesOutcome {
    Axis(DesarguesAxis),
    Failure(DesarguesFailure),
}

impl DesarguesOutcome {
    pub fn axis(&self) -> Option<&DesarguesAxis> {
        match self {
            DesarguesOutcome::Axis(a) => Some(a),
            DesarguesOutcome::Failure(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Degeneracy {
    RepeatedVertex { primed: bool },
    Collinear { primed: bool },
    CenterIsVertex,
    VertexFixed(usize),
    NotPerspective(usize),
    MissingSide(usize, usize),
    CoincidentSides(usize, usize),
}

const NAMES: [&str; 3] = ["A", "B", "C"];

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tri = |p: bool| if p { "A'B'C'" } else { "ABC" };
        match *self {
            Degeneracy::RepeatedVertex { primed } => {
                write!(f, "triangle {} has repeated vertices", tri(primed))
            }
            Degeneracy::Collinear { primed } => {
                write!(f, "triangle {} is collinear", tri(primed))
            }
            Degeneracy::CenterIsVertex => f.write_str("centre D coincides with a vertex"),
            Degeneracy::VertexFixed(x) => write!(f, "{0} = {0}'", NAMES[x]),
            Degeneracy::NotPerspective(x) => {
                write!(f, "D, {0} and {0}' are not collinear", NAMES[x])
            }
            Degeneracy::MissingSide(x, y) => {
                write!(f, "no line through {0}{1} or {0}'{1}'", NAMES[x], NAMES[y])
            }
            Degeneracy::CoincidentSides(x, y) => {
                write!(f, "sides {0}{1} and {0}'{1}' are the same line", NAMES[x], NAMES[y])
            }
        }
    }
}

const SIDES: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];

fn classify(
    g: &Geometry,
    cfg: &DesarguesConfig,
) -> std::result::Result<DesarguesOutcome, Degeneracy> {
    let DesarguesConfig {
        center: d,
        triangle: t,
        perspective: tp,
    } = *cfg;
    for (primed, tri) in [(false, t), (true, tp)] {
        if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
            return Err(Degeneracy::RepeatedVertex { primed });
        }
        if g.collinear(&tri).is_some() {
            return Err(Degeneracy::Collinear { primed });
        }
    }
    if t.contains(&d) || tp.contains(&d) {
        return Err(Degeneracy::CenterIsVertex);
    }
    for x in 0..3 {
        if t[x] == tp[x] {
            return Err(Degeneracy::VertexFixed(x));
        }
        if g.collinear(&[d, t[x], tp[x]]).is_none() {
            return Err(Degeneracy::NotPerspective(x));
        }
    }
    let mut meets = [None; 3];
    for (k, &(x, y)) in SIDES.iter().enumerate() {
        let (Some(side), Some(side_p)) = (g.line_index(t[x], t[y]), g.line_index(tp[x], tp[y]))
        else {
            return Err(Degeneracy::MissingSide(x, y));
        };
        if side == side_p {
            return Err(Degeneracy::CoincidentSides(x, y));
        }
        meets[k] = g.meet(side, side_p);
    }
    let [f, gg, h] = meets;
    let failure = |reason: &str| {
        DesarguesOutcome::Failure(DesarguesFailure {
            config: *cfg,
            f,
            g: gg,
            h,
            reason: reason.to_string(),
        })
    };
    let (Some(fp), Some(gp), Some(hp)) = (f, gg, h) else {
        return Ok(failure("corresponding sides do not meet"));
    };
    let mut distinct = vec![fp, gp, hp];
    distinct.sort_unstable();
    distinct.dedup();
    Ok(match g.collinear(&distinct) {
        Some(line) => DesarguesOutcome::Axis(DesarguesAxis {
            f: fp,
            g: gp,
            h: hp,
            line,
        }),
        None => failure("side intersections are not collinear"),
    })
}

/// Checks one centrally perspective pair of triangles.
///
/// Returns the axis when the three side intersections are collinear, a
/// [`DesarguesFailure`] when they are not, and [`Error::Degenerate`] naming the
/// failed condition when the input is not a genuine configuration.
pub fn desargues_check(g: &Geometry, cfg: &DesarguesConfig) -> Result<DesarguesOutcome> {
    let n = g.num_points();
    let all = std::iter::once(cfg.center)
        .chain(cfg.triangle)
        .chain(cfg.perspective);
    if let Some(bad) = all.into_iter().find(|&p| p >= n) {
        return Err(Error::InvalidInput(format!(
            "point index {bad} out of range for {n} points"
        )));
    }
    classify(g, cfg).map_err(|d| Error::Degenerate(d.to_string()))
}

/// Summary of an exhaustive Desargues search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DesarguesReport {
    pub passed: bool,
    /// Nondegenerate configurations checked.
    pub tested: u64,
    /// Candidate configurations skipped as degenerate.
    pub degenerate_skipped: u64,
    pub failures: u64,
    /// Up to [`WITNESS_CAP`] failing configurations.
    pub counterexamples: Vec<DesarguesFailure>,
}

/// Runs [`desargues_check`] on every pair of triangles perspective from a point.
///
/// For each centre `D` and unordered triangle `{A, B, C}` avoiding `D`, every
/// choice of `X'` on line `DX` other than `D` and `X` is tried. Results do not
/// depend on thread count.
pub fn desargues_exhaustive(g: &Geometry, guard: usize) -> Result<DesarguesReport> {
    let n = g.num_points();
    if n > guard {
        return Err(Error::guard("Desargues search point count", n as u64, guard as u64));
    }
    let per_center: Vec<DesarguesReport> = (0..n)
        .into_par_iter()
        .map(|d| {
            let mut r = DesarguesReport::default();
            let others: Vec<usize> = (0..n).filter(|&p| p != d).collect();
            // Points X' on line DX other than D and X, per X.
            let images: Vec<Vec<usize>> = (0..n)
                .map(|x| match g.line_index(d, x) {
                    Some(j) => g.line(j).iter().copied().filter(|&p| p != d && p != x).collect(),
                    None => Vec::new(),
                })
                .collect();
            for (i, &a) in others.iter().enumerate() {
                for (k, &b) in others.iter().enumerate().skip(i + 1) {
                    for &c in &others[k + 1..] {
                        for &ap in &images[a] {
                            for &bp in &images[b] {
                                for &cp in &images[c] {
                                    let cfg = DesarguesConfig {
                                        center: d,
                                        triangle: [a, b, c],
                                        perspective: [ap, bp, cp],
                                    };
                                    match classify(g, &cfg) {
                                        Err(_) => r.degenerate_skipped += 1,
                                        Ok(DesarguesOutcome::Axis(_)) => r.tested += 1,
                                        Ok(DesarguesOutcome::Failure(fail)) => {
                                            r.tested += 1;
                                            r.failures += 1;
                                            if r.counterexamples.len() < WITNESS_CAP {
                                                r.counterexamples.push(fail);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            r
        })
        .collect();
    let mut out = DesarguesReport::default();
    for r in per_center {
        out.tested += r.tested;
        out.degenerate_skipped += r.degenerate_skipped;
        out.failures += r.failures;
        let room = WITNESS_CAP - out.counterexamples.len();
        out.counterexamples.extend(r.counterexamples.into_iter().take(room));
    }
    out.passed = out.failures == 0;
    Ok(out)
}
