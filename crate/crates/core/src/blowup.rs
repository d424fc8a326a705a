//! The b-fold blow-up `G^b`: each vertex becomes a `b`-clique and each edge a
//! complete bipartite join between the two cliques. Ordinary colourings of
//! `G^b` correspond to b-fold colourings of `G`, up to the `b!` orderings of
//! each vertex's colour set.
//!
//! Vertex `u` of `G` owns the block `u*b .. u*b + b`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn blow_up(g: &Graph, b: usize) -> Result<Graph> {
    if b == 0 {
        return Err(Error::InvalidArgument("b must be at least 1".into()));
    }
    let n = g.vertex_count();
    let intra = (0..n)
        .flat_map(|u| (0..b).flat_map(move |i| (i + 1..b).map(move |j| (u * b + i, u * b + j))));
    let cross = g
        .edges()
        .flat_map(|(u, v)| (0..b).flat_map(move |i| (0..b).map(move |j| (u * b + i, v * b + j))));
    Graph::from_edges(n * b, intra.chain(cross))
}

/// Index in `G^b` of copy `i` of vertex `u` (`0 <= i < b`).
pub fn block_vertex(u: usize, i: usize, b: usize) -> usize {
    u * b + i
}

/// The vertex of `G` whose block contains blown-up vertex `x`.
pub fn block_owner(x: usize, b: usize) -> usize {
    x / b
}

/// Maps "pair (u, v) of G, copies (i, j)" to the corresponding vertex pair of
/// `G^b`.
pub fn resolve_pair(
    g: &Graph,
    b: usize,
    (u, v): (usize, usize),
    (i, j): (usize, usize),
) -> Result<(usize, usize)> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                vertex_count: n,
            });
        }
    }
    if i >= b || j >= b {
        return Err(Error::InvalidArgument(format!(
            "copy index out of range for b = {b}"
        )));
    }
    let (x, y) = (block_vertex(u, i, b), block_vertex(v, j, b));
    if x == y {
        return Err(Error::SelfLoop(x));
    }
    Ok((x, y))
}
