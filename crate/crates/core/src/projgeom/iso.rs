use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{build_pg, PointLabel};
use crate::clifford::{blade_mul, BladeIndex, SignedBlade};
use crate::error::Result;
use crate::gf2::blade_to_vector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub holds: bool,
    pub blade_points: usize,
    pub blade_lines: usize,
    pub pg_points: usize,
    pub pg_lines: usize,
    /// `(blade bitmask, PG point index)` for each blade point, in blade order.
    pub mapping: Vec<(u64, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
}

/// Builds the geometry whose points are the blades `e_S` (`S` nonempty, one
/// point per `±` pair) and whose lines are the triples where the product of two
/// is `±` the third, then checks that the quotient map to `V_m` carries it
/// bijectively onto `PG(m-1, 2)`, lines onto lines.
pub fn blade_geometry_isomorphism(m: u32, guard: u32) -> Result<IsomorphismReport> {
    let pg = build_pg(m, guard)?;
    let blades: Vec<BladeIndex> = BladeIndex::all(m)?.filter(|b| !b.is_identity()).collect();

    let is_pm = |x: BladeIndex, y: BladeIndex, z: BladeIndex| -> Result<bool> {
        Ok(blade_mul(SignedBlade::plus(x), SignedBlade::plus(y))?.index == z)
    };
    let mut lines: BTreeSet<[BladeIndex; 3]> = BTreeSet::new();
    let mut problem = None;
    for (i, &a) in blades.iter().enumerate() {
        for &b in &blades[i + 1..] {
            let c = blade_mul(SignedBlade::plus(a), SignedBlade::plus(b))?.index;
            if c.is_identity() || c == a || c == b {
                problem.get_or_insert_with(|| format!("product of {a} and {b} is not a third point"));
                continue;
            }
            if !(is_pm(a, c, b)? && is_pm(b, c, a)?) {
                problem.get_or_insert_with(|| format!("triple {a}, {b}, {c} is not closed"));
                continue;
            }
            let mut t = [a, b, c];
            t.sort();
            lines.insert(t);
        }
    }

    let pg_index: HashMap<&PointLabel, usize> =
        pg.points().iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut mapping = Vec::with_capacity(blades.len());
    let mut hit = vec![false; pg.num_points()];
    for &b in &blades {
        let v = blade_to_vector(SignedBlade::plus(b));
        match pg_index.get(&PointLabel::Subset(v.bits())) {
            Some(&i) if !hit[i] => {
                hit[i] = true;
                mapping.push((b.bits(), i));
            }
            _ => {
                problem.get_or_insert_with(|| format!("{b} does not map injectively"));
            }
        }
    }
    if !hit.iter().all(|&h| h) {
        problem.get_or_insert_with(|| "quotient map is not onto the PG points".into());
    }

    let to_pg: HashMap<u64, usize> = mapping.iter().copied().collect();
    let pg_lines: BTreeSet<&[usize]> = pg.lines().iter().map(Vec::as_slice).collect();
    let mut image: BTreeSet<Vec<usize>> = BTreeSet::new();
    for t in &lines {
        let mut img: Vec<usize> = t.iter().filter_map(|b| to_pg.get(&b.bits()).copied()).collect();
        img.sort_unstable();
        if !pg_lines.contains(img.as_slice()) {
            problem.get_or_insert_with(|| format!("blade line {t:?} is not a PG line"));
        }
        image.insert(img);
    }
    if image.len() != pg.num_lines() {
        problem.get_or_insert_with(|| {
            format!("{} blade lines cover {} of {} PG lines", lines.len(), image.len(), pg.num_lines())
        });
    }

    Ok(IsomorphismReport {
        holds: problem.is_none(),
        blade_points: blades.len(),
        blade_lines: lines.len(),
        pg_points: pg.num_points(),
        pg_lines: pg.num_lines(),
        mapping,
        problem,
    })
}
