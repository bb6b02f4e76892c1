//! Finite incidence geometries and the projective spaces `PG(m-1, 2)`.
//!
//! Over the two-element field a one-dimensional subspace `{0, v}` is identified
//! with its nonzero vector `v`, and a two-dimensional subspace with the triple
//! `{a, b, a xor b}`. [`build_pg`] materialises these as a generic [`Geometry`],
//! the same structure that parsed incidence files produce, so every checker in
//! this module runs unchanged on both.

mod axioms;
mod desargues;
mod iso;
mod lie;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::BladeIndex;
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;

pub use axioms::{check_axioms, AxiomIiMode, AxiomOptions, AxiomReport, CheckOutcome};
pub use desargues::{
    desargues_check, desargues_exhaustive, DesarguesAxis, DesarguesConfig, DesarguesFailure,
    DesarguesOutcome, DesarguesReport, DEFAULT_DESARGUES_GUARD,
};
pub use iso::{blade_geometry_isomorphism, IsomorphismReport};
pub use lie::{lie_closure_check, LieClosureReport};

/// Default bound on `m` when lines of `PG(m-1, 2)` are materialised.
pub const DEFAULT_LINE_GUARD: u32 = 12;
/// Default bound on `m` when only points are enumerated.
pub const DEFAULT_POINT_GUARD: u32 = 16;

/// Most witnesses any check records; the violation count is always exact.
pub const WITNESS_CAP: usize = 32;

/// A point of `PG(m-1, 2)`: a nonzero vector of `V_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Gf2Vector);

impl Point {
    pub fn new(v: Gf2Vector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::Degenerate("the zero vector is not a projective point".into()));
        }
        Ok(Point(v))
    }

    pub fn from_bits(bits: u64, m: u32) -> Result<Self> {
        Point::new(Gf2Vector::new(bits, m)?)
    }

    pub fn vector(self) -> Gf2Vector {
        self.0
    }

    pub fn bits(self) -> u64 {
        self.0.bits()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A line of `PG(m-1, 2)`: three points summing to zero, ascending by bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line([Point; 3]);

impl Line {
    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// The unique line through two distinct points: `{a, b, a xor b}`.
pub fn line_through(a: Point, b: Point) -> Result<Line> {
    if a.0.m() != b.0.m() {
        return Err(Error::Dimension {
            expected: a.0.m(),
            found: b.0.m(),
        });
    }
    if a == b {
        return Err(Error::Degenerate(format!("no unique line through {a} and itself")));
    }
    let mut pts = [a, b, Point(a.0 + b.0)];
    pts.sort();
    Ok(Line(pts))
}

/// Label of a point in a [`Geometry`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointLabel {
    /// A blade index set, as a bitmask (bit `j - 1` for generator `e_j`).
    Subset(u64),
    /// An opaque name from an external geometry.
    Name(String),
}

impl PointLabel {
    pub fn subset_bits(&self) -> Option<u64> {
        match self {
            PointLabel::Subset(b) => Some(*b),
            PointLabel::Name(_) => None,
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Subset(bits) => {
                if *bits == 0 {
                    return f.write_str("I");
                }
                f.write_str("e")?;
                let mut rest = *bits;
                let mut first = true;
                f.write_str("{")?;
                while rest != 0 {
                    if !first {
                        f.write_str(",")?;
                    }
                    first = false;
                    write!(f, "{}", rest.trailing_zeros() + 1)?;
                    rest &= rest - 1;
                }
                f.write_str("}")
            }
            PointLabel::Name(s) => f.write_str(s),
        }
    }
}

/// Pairs below this point count get a dense pair-to-line table.
const DENSE_PAIR_LIMIT: usize = 1024;

#[derive(Clone, Debug)]
enum PairIndex {
    Dense { n: usize, table: Vec<u32> },
    Sparse(HashMap<(u32, u32), u32>),
}

const NO_LINE: u32 = u32::MAX;

/// A finite incidence structure: labelled points and lines as point sets.
///
/// Lines are stored sorted, and the line list is sorted lexicographically, so two
/// geometries with the same incidence compare equal.
#[derive(Clone, Debug)]
pub struct Geometry {
    name: String,
    m: Option<u32>,
    points: Vec<PointLabel>,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    pairs: PairIndex,
    /// Pairs of distinct points lying together on more than one line.
    multi_pairs: Vec<(usize, usize)>,
}

impl PartialEq for Geometry {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.lines == other.lines
    }
}

impl Geometry {
    pub fn new(
        name: impl Into<String>,
        m: Option<u32>,
        points: Vec<PointLabel>,
        mut lines: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = points.len();
        if n >= NO_LINE as usize {
            return Err(Error::guard("point count", n as u64, NO_LINE as u64 - 1));
        }
        {
            let mut seen = std::collections::HashSet::with_capacity(n);
            for p in &points {
                if !seen.insert(p) {
                    return Err(Error::InvalidInput(format!("duplicate point label {p}")));
                }
            }
        }
        for (j, line) in lines.iter_mut().enumerate() {
            line.sort_unstable();
            if let Some(&bad) = line.iter().find(|&&i| i >= n) {
                return Err(Error::InvalidInput(format!(
                    "line {j} references point {bad}, but there are only {n} points"
                )));
            }
            if line.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("line {j} repeats a point")));
            }
        }
        lines.sort_unstable();
        if let Some(w) = lines.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate line {:?}", w[0])));
        }
        Ok(Self::from_canonical(name.into(), m, points, lines))
    }

    /// `lines` must already be sorted and validated.
    fn from_canonical(
        name: String,
        m: Option<u32>,
        points: Vec<PointLabel>,
        lines: Vec<Vec<usize>>,
    ) -> Self {
        let n = points.len();
        let mut point_lines = vec![Vec::new(); n];
        for (j, line) in lines.iter().enumerate() {
            for &p in line {
                point_lines[p].push(j);
            }
        }
        let mut multi_pairs = Vec::new();
        let mut record = |a: usize, b: usize, j: usize, slot: &mut u32| {
            if *slot == NO_LINE {
                *slot = j as u32;
            } else if *slot != j as u32 {
                multi_pairs.push((a, b));
            }
        };
        let pairs = if n <= DENSE_PAIR_LIMIT {
            let mut table = vec![NO_LINE; n * n];
            for (j, line) in lines.iter().enumerate() {
                for (x, &a) in line.iter().enumerate() {
                    for &b in &line[x + 1..] {
                        record(a, b, j, &mut table[a * n + b]);
                        table[b * n + a] = table[a * n + b];
                    }
                }
            }
            PairIndex::Dense { n, table }
        } else {
            let mut map = HashMap::new();
            for (j, line) in lines.iter().enumerate() {
                for (x, &a) in line.iter().enumerate() {
                    for &b in &line[x + 1..] {
                        record(a, b, j, map.entry((a as u32, b as u32)).or_insert(NO_LINE));
                    }
                }
            }
            PairIndex::Sparse(map)
        };
        multi_pairs.sort_unstable();
        multi_pairs.dedup();
        Geometry {
            name,
            m,
            points,
            lines,
            point_lines,
            pairs,
            multi_pairs,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn m(&self) -> Option<u32> {
        self.m
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn points(&self) -> &[PointLabel] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, j: usize) -> &[usize] {
        &self.lines[j]
    }

    /// Lines through point `p`, ascending.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    pub fn index_of(&self, label: &PointLabel) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    /// Some line through two distinct points, if any. When several lines
    /// contain both (an axiom (i) violation) the first in line order is returned.
    pub fn line_index(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        let j = match &self.pairs {
            PairIndex::Dense { n, table } => table[a * n + b],
            PairIndex::Sparse(map) => {
                let key = if a < b { (a as u32, b as u32) } else { (b as u32, a as u32) };
                map.get(&key).copied().unwrap_or(NO_LINE)
            }
        };
        (j != NO_LINE).then_some(j as usize)
    }

    /// Number of lines through both `a` and `b`.
    pub fn lines_through_pair(&self, a: usize, b: usize) -> usize {
        let (la, lb) = (&self.point_lines[a], &self.point_lines[b]);
        let (mut i, mut k, mut count) = (0, 0, 0);
        while i < la.len() && k < lb.len() {
            match la[i].cmp(&lb[k]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => k += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    k += 1;
                }
            }
        }
        count
    }

    pub(crate) fn has_multi_pairs(&self) -> bool {
        !self.multi_pairs.is_empty()
    }

    pub fn on_line(&self, p: usize, j: usize) -> bool {
        self.lines[j].binary_search(&p).is_ok()
    }

    /// First common point of two lines, if any.
    pub fn meet(&self, j: usize, k: usize) -> Option<usize> {
        let (a, b) = (&self.lines[j], &self.lines[k]);
        let (mut i, mut r) = (0, 0);
        while i < a.len() && r < b.len() {
            match a[i].cmp(&b[r]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => r += 1,
                std::cmp::Ordering::Equal => return Some(a[i]),
            }
        }
        None
    }

    /// Whether some single line contains every given point.
    pub fn collinear(&self, pts: &[usize]) -> Option<usize> {
        let (&first, rest) = pts.split_first()?;
        self.point_lines[first]
            .iter()
            .copied()
            .find(|&j| rest.iter().all(|&p| self.on_line(p, j)))
    }

    /// Blade index of a point, when the geometry carries subset labels and `m`.
    pub fn blade(&self, p: usize) -> Option<BladeIndex> {
        let m = self.m?;
        BladeIndex::new(self.points[p].subset_bits()?, m).ok()
    }
}

/// `PG(m-1, 2)` as a [`Geometry`]: points are the `2^m - 1` nonzero vectors in
/// ascending order (point `i` has bitmask `i + 1`), lines the triples
/// `{a, b, a xor b}`.
pub fn build_pg(m: u32, guard: u32) -> Result<Geometry> {
    if m == 0 {
        return Err(Error::InvalidInput("PG needs at least one generator".into()));
    }
    if m > guard {
        return Err(Error::guard("PG line enumeration dimension", m, guard));
    }
    let n = (1u64 << m) - 1;
    let points = (1..=n).map(PointLabel::Subset).collect();
    let mut lines = Vec::with_capacity(pg_line_count(m) as usize);
    for a in 1..=n {
        for b in a + 1..=n {
            let c = a ^ b;
            if c > b {
                lines.push(vec![(a - 1) as usize, (b - 1) as usize, (c - 1) as usize]);
            }
        }
    }
    // Generated in lexicographic order already.
    debug_assert!(lines.windows(2).all(|w| w[0] < w[1]));
    Ok(Geometry::from_canonical(
        format!("PG({}, 2)", m - 1),
        Some(m),
        points,
        lines,
    ))
}

/// `(2^m - 1)(2^(m-1) - 1) / 3`.
pub fn pg_line_count(m: u32) -> u64 {
    if m == 0 {
        return 0;
    }
    ((1u64 << m) - 1) * ((1u64 << (m - 1)) - 1) / 3
}

/// Point and line counts of `PG(m-1, 2)` by direct enumeration, without storing
/// lines. Allowed up to `guard` (default [`DEFAULT_POINT_GUARD`]).
pub fn pg_counts(m: u32, guard: u32) -> Result<(u64, u64)> {
    if m == 0 {
        return Err(Error::InvalidInput("PG needs at least one generator".into()));
    }
    if m > guard {
        return Err(Error::guard("PG point enumeration dimension", m, guard));
    }
    let n = (1u64 << m) - 1;
    let lines = (1..=n)
        .into_par_iter()
        .map(|a| (a + 1..=n).filter(|&b| (a ^ b) > b).count() as u64)
        .sum();
    Ok((n, lines))
}

/// Whether `xs` (point indices) is closed under joining: every line through two
/// of its points lies entirely inside it.
pub fn is_projective_subspace(xs: &[usize], g: &Geometry) -> bool {
    let mut member = vec![false; g.num_points()];
    for &x in xs {
        if x >= member.len() {
            return false;
        }
        member[x] = true;
    }
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            if a == b {
                continue;
            }
            match g.line_index(a, b) {
                Some(j) if g.line(j).iter().all(|&p| member[p]) => {}
                _ => return false,
            }
        }
    }
    true
}
