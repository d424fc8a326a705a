//! Simple undirected graphs and the edge surgeries used by the reduction
//! recurrences.

mod canon;
mod catalog;
mod generate;
mod io;

use std::collections::BTreeSet;
use std::fmt;

pub use canon::{CanonicalKey, DEFAULT_CANON_BOUND, MAX_CANON_BOUND};
pub use catalog::{connected_graphs, forests_with_profile, trees};
pub use generate::{generate, GraphKind};
pub use io::{parse_dimacs, parse_edge_list, to_dimacs, to_edge_list};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Values are immutable: every surgery returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(vertex_count);
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.insert(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Unordered vertex pairs that are not edges, `u < v`, lexicographic.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |v| !self.adjacency[u].contains(v))
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.contains(&v))
    }

    pub fn neighbors(&self, u: usize) -> &BTreeSet<usize> {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    /// Number of unordered vertex pairs, `C(n, 2)`.
    pub fn pair_count(&self) -> usize {
        let n = self.vertex_count();
        n * n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.edge_count == 0
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.pair_count()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Returns `G - uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adjacency[u].remove(&v);
        g.adjacency[v].remove(&u);
        g.edge_count -= 1;
        Ok(g)
    }

    /// Returns `G + uv`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    /// Returns `G / uv`: `u` and `v` merge into one vertex adjacent to the
    /// union of their neighbourhoods. `u` and `v` need not be adjacent.
    ///
    /// The merged vertex takes index `min(u, v)`; every index above
    /// `max(u, v)` shifts down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |w: usize| match w.cmp(&gone) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => w - 1,
        };
        let mut g = Graph::edgeless(self.vertex_count() - 1);
        for (a, b) in self.edges() {
            let (x, y) = (relabel(a), relabel(b));
            if x != y {
                g.insert(x, y);
            }
        }
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::edgeless(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adjacency[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidArgument(
                "relabeling is not a permutation".into(),
            ));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut g = self.clone();
        g.adjacency
            .extend(std::iter::repeat_n(BTreeSet::new(), other.vertex_count()));
        for (u, v) in other.edges() {
            g.insert(u + offset, v + offset);
        }
        g
    }

    /// Checks the simple-graph invariants. Every constructor upholds them;
    /// this exists for tests and for callers that build graphs by hand.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        let mut half_edges = 0;
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count: n,
                    });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if !self.adjacency[v].contains(&u) {
                    return Err(Error::Invariant(format!(
                        "asymmetric adjacency at ({u}, {v})"
                    )));
                }
                half_edges += 1;
            }
        }
        if half_edges != 2 * self.edge_count {
            return Err(Error::Invariant(
                "edge count out of sync with adjacency".into(),
            ));
        }
        Ok(())
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey::new(self, DEFAULT_CANON_BOUND)
    }

    pub fn canonical_key_with_bound(&self, bound: usize) -> CanonicalKey {
        CanonicalKey::new(self, bound)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn insert(&mut self, u: usize, v: usize) {
        if self.adjacency[u].insert(v) {
            self.adjacency[v].insert(u);
            self.edge_count += 1;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, {:?})",
            self.vertex_count(),
            self.edges().collect::<Vec<_>>()
        )
    }
}
