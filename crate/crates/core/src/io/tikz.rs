use std::fmt::Write as _;

use crate::projgeom::{Geometry, PointLabel};

/// Fano-plane positions keyed by bitmask: triangle vertices `e1 e2 e3`, edge
/// midpoints for the pairwise products, centroid for `e1e2e3`.
const FANO_LAYOUT: [(u64, f64, f64); 7] = [
    (0b001, -1.0, 0.0),
    (0b010, 1.0, 0.0),
    (0b100, 0.0, 1.732),
    (0b011, 0.0, 0.0),
    (0b110, 0.5, 0.866),
    (0b101, -0.5, 0.866),
    (0b111, 0.0, 0.577),
];

const INCIRCLE: [u64; 3] = [0b011, 0b101, 0b110];

fn tex_label(p: &PointLabel) -> String {
    match p {
        PointLabel::Subset(bits) => {
            let mut s = String::from("$");
            for i in (0..64).filter(|i| bits >> i & 1 == 1) {
                let _ = write!(s, "e_{{{}}}", i + 1);
            }
            s.push('$');
            s
        }
        PointLabel::Name(n) => n.replace(['{', '}', '$', '\\'], ""),
    }
}

fn fano_positions(g: &Geometry) -> Option<Vec<(f64, f64)>> {
    if g.num_points() != 7 {
        return None;
    }
    g.points()
        .iter()
        .map(|p| {
            let bits = p.subset_bits()?;
            FANO_LAYOUT
                .iter()
                .find(|(b, _, _)| *b == bits)
                .map(|&(_, x, y)| (x, y))
        })
        .collect()
}

/// Deterministic force-directed layout: points start on a circle, collinear
/// points attract, all pairs repel.
fn spring_positions(g: &Geometry) -> Vec<(f64, f64)> {
    let n = g.num_points();
    let mut pos: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n.max(1) as f64;
            (t.cos(), t.sin())
        })
        .collect();
    let k = 1.0 / (n.max(1) as f64).sqrt();
    let mut temp = 0.1;
    for _ in 0..200 {
        let mut disp = vec![(0.0, 0.0); n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (dx, dy) = (pos[i].0 - pos[j].0, pos[i].1 - pos[j].1);
                let d = (dx * dx + dy * dy).sqrt().max(1e-6);
                let rep = k * k / d;
                disp[i].0 += dx / d * rep;
                disp[i].1 += dy / d * rep;
            }
        }
        for line in g.lines() {
            for (x, &a) in line.iter().enumerate() {
                for &b in &line[x + 1..] {
                    let (dx, dy) = (pos[a].0 - pos[b].0, pos[a].1 - pos[b].1);
                    let d = (dx * dx + dy * dy).sqrt().max(1e-6);
                    let att = d * d / k;
                    disp[a].0 -= dx / d * att;
                    disp[a].1 -= dy / d * att;
                    disp[b].0 += dx / d * att;
                    disp[b].1 += dy / d * att;
                }
            }
        }
        for i in 0..n {
            let (dx, dy) = disp[i];
            let d = (dx * dx + dy * dy).sqrt().max(1e-9);
            let step = d.min(temp);
            pos[i].0 += dx / d * step;
            pos[i].1 += dy / d * step;
        }
        temp *= 0.98;
    }
    pos
}

/// TikZ picture of a geometry. For the Fano plane the points sit on a
/// triangle with its medians and incircle; other inputs get a spring layout
/// with each line drawn as a path through its points.
pub fn export_tikz(g: &Geometry) -> String {
    let fano = fano_positions(g);
    let pos = fano.clone().unwrap_or_else(|| spring_positions(g));
    let mut out = String::from("\\begin{tikzpicture}[scale=3]\n");
    for (i, p) in g.points().iter().enumerate() {
        let _ = writeln!(
            out,
            "  \\node[shape=circle,draw] (p{i}) at ({:.3},{:.3}) {{{}}};",
            pos[i].0,
            pos[i].1,
            tex_label(p)
        );
    }
    for (j, line) in g.lines().iter().enumerate() {
        let bits: Option<Vec<u64>> = line.iter().map(|&p| g.points()[p].subset_bits()).collect();
        if fano.is_some() && bits.is_some_and(|mut b| {
            b.sort_unstable();
            b == INCIRCLE
        }) {
            let _ = writeln!(out, "  \\draw (0,0.577) circle (0.577); % l{j}");
            continue;
        }
        if fano.is_some() && line.len() == 3 {
            // Straight line: join the two points farthest apart.
            let d = |a: usize, b: usize| (pos[a].0 - pos[b].0).hypot(pos[a].1 - pos[b].1);
            let (a, b) = [(line[0], line[1]), (line[0], line[2]), (line[1], line[2])]
                .into_iter()
                .max_by(|x, y| d(x.0, x.1).total_cmp(&d(y.0, y.1)))
                .expect("three pairs");
            let _ = writeln!(out, "  \\draw (p{a}) -- (p{b}); % l{j}");
            continue;
        }
        let path: Vec<String> = line.iter().map(|p| format!("(p{p})")).collect();
        let _ = writeln!(out, "  \\draw {}; % l{j}", path.join(" -- "));
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
