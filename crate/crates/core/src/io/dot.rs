use std::fmt::Write as _;

use crate::projgeom::Geometry;

fn quote(s: &str) -> String {
    serde_json::Value::String(s.to_string()).to_string()
}

/// Point–line incidence graph in DOT syntax.
///
/// Point nodes are `p<i>` (circles labelled with the point label), line nodes
/// `l<j>` (boxes); one undirected edge per incidence, ordered by line then point.
pub fn export_dot(g: &Geometry) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(g.name()));
    if g.num_points() > 0 {
        out.push_str("  node [shape=circle];\n");
    }
    for (i, p) in g.points().iter().enumerate() {
        let _ = writeln!(out, "  p{i} [label={}];", quote(&p.to_string()));
    }
    for j in 0..g.num_lines() {
        let _ = writeln!(out, "  l{j} [shape=box, label=\"l{j}\"];");
    }
    for (j, line) in g.lines().iter().enumerate() {
        for &p in line {
            let _ = writeln!(out, "  p{p} -- l{j};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::{build_pg, PointLabel, DEFAULT_LINE_GUARD};

    #[test]
    fn fano_graph_shape() {
        let dot = export_dot(&build_pg(3, DEFAULT_LINE_GUARD).unwrap());
        let nodes = dot.lines().filter(|l| l.contains("[label=") || l.contains("[shape=box")).count();
        let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
        assert_eq!((nodes, edges), (14, 21));
        assert!(dot.starts_with("graph \"PG(2, 2)\" {\n"));
        assert!(dot.contains("  p2 [label=\"e{1,2}\"];\n"));
        assert_eq!(dot, export_dot(&build_pg(3, DEFAULT_LINE_GUARD).unwrap()));
    }

    #[test]
    fn empty_graph() {
        let g = Geometry::new("", None, Vec::<PointLabel>::new(), vec![]).unwrap();
        assert_eq!(export_dot(&g), "graph \"\" {\n}\n");
    }
}
