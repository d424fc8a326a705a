//! Exhaustive small-graph catalogues, one representative per isomorphism
//! class. Used by the self-check sweep and the test suites.

use std::collections::BTreeMap;

use super::Graph;

/// All labeled graphs on `n` vertices, filtered, deduplicated up to
/// isomorphism. Feasible for `n <= 6`.
fn classes_where(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive catalogue limited to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("pairs are in range");
        if keep(&g) {
            seen.entry(g.canonical_key()).or_insert(g);
        }
    }
    let mut out: Vec<Graph> = seen.into_values().collect();
    out.sort_by_key(|g| g.edge_count());
    out
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    classes_where(n, Graph::is_connected)
}

/// Trees on exactly `n` vertices, one per isomorphism class.
pub fn trees(n: usize) -> Vec<Graph> {
    classes_where(n, Graph::is_tree)
}

/// Forests whose components have the given orders; one labeled instance per
/// combination of tree shapes, components laid out on consecutive blocks.
/// A zero-size part admits no forest and yields an empty list.
pub fn forests_with_profile(parts: &[usize]) -> Vec<Graph> {
    let mut out = vec![Graph::edgeless(0)];
    for &size in parts {
        let shapes = if size == 0 { Vec::new() } else { trees(size) };
        out = out
            .iter()
            .flat_map(|f| shapes.iter().map(move |t| f.disjoint_union(t)))
            .collect();
    }
    out
}
