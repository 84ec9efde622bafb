//! Transitive reduction of finite posets and Graphviz DOT output.

use std::fmt::Write;

use fixedbitset::FixedBitSet;

/// Cover relations `a ⋖ b` of the partial order `leq` on `0..n`:
/// `a < b` with nothing strictly between.
pub fn covers(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut above = vec![FixedBitSet::with_capacity(n); n];
    let mut below = vec![FixedBitSet::with_capacity(n); n];
    for a in 0..n {
        for b in 0..n {
            if a != b && leq(a, b) {
                above[a].insert(b);
                below[b].insert(a);
            }
        }
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in above[a].ones() {
            if above[a].is_disjoint(&below[b]) {
                out.push((a, b));
            }
        }
    }
    out
}

/// A Hasse diagram in DOT, drawn bottom-up (edges point from the smaller
/// element to the cover).
pub fn to_dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for (i, label) in labels.iter().enumerate() {
        writeln!(s, "  n{i} [label=\"{}\"];", escape(label)).unwrap();
    }
    for (a, b) in edges {
        writeln!(s, "  n{a} -> n{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_reduces_to_successors() {
        let e = covers(4, |a, b| a <= b);
        assert_eq!(e, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn divisibility_poset() {
        // 1, 2, 3, 6 under divisibility
        let v = [1, 2, 3, 6];
        let e = covers(4, |a, b| v[b] % v[a] == 0);
        assert_eq!(e, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn dot_shape() {
        let dot = to_dot("g", &["e".into(), "s\"1".into()], &[(0, 1)]);
        assert!(dot.starts_with("digraph \"g\" {"));
        assert!(dot.contains("n1 [label=\"s\\\"1\"];"));
        assert!(dot.contains("n0 -> n1;"));
    }
}
