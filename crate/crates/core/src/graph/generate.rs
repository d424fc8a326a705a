//! Deterministic graph families and seeded random generators.
//!
//! Seeded kinds draw from `ChaCha8Rng::seed_from_u64(seed)`. ChaCha8 is a
//! fixed, platform-independent stream cipher, so a given seed yields the same
//! graph everywhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum GraphKind {
    Complete(usize),
    Path(usize),
    /// Requires at least 3 vertices.
    Cycle(usize),
    /// Vertex 0 is the centre.
    Star(usize),
    Edgeless(usize),
    /// Uniform labeled tree, decoded from a uniform Prüfer sequence.
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Erdős–Rényi `G(n, p)`; pairs are visited in lexicographic order.
    RandomGraph {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// One uniform random tree per part, on consecutive vertex blocks.
    Forest {
        parts: Vec<usize>,
        seed: u64,
    },
}

pub fn generate(kind: &GraphKind) -> Result<Graph> {
    match *kind {
        GraphKind::Complete(n) => {
            positive(n)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GraphKind::Path(n) => {
            positive(n)?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        GraphKind::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidArgument(format!(
                    "a simple cycle needs at least 3 vertices, got {n}"
                )));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        GraphKind::Star(n) => {
            positive(n)?;
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        GraphKind::Edgeless(n) => {
            positive(n)?;
            Ok(Graph::edgeless(n))
        }
        GraphKind::RandomTree { n, seed } => {
            positive(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Graph::from_edges(n, random_tree_edges(n, &mut rng))
        }
        GraphKind::RandomGraph { n, p, seed } => {
            positive(n)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!(
                    "edge probability {p} not in [0, 1]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        GraphKind::Forest { ref parts, seed } => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(Error::InvalidArgument(
                    "forest needs at least one part and every part size >= 1".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            let mut offset = 0;
            for &size in parts {
                edges.extend(
                    random_tree_edges(size, &mut rng)
                        .into_iter()
                        .map(|(u, v)| (u + offset, v + offset)),
                );
                offset += size;
            }
            Graph::from_edges(offset, edges)
        }
    }
}

fn positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "vertex count must be at least 1".into(),
        ));
    }
    Ok(())
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(n, &seq)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into the edges of
/// the corresponding labeled tree. This is a bijection between `n^(n-2)`
/// sequences and labeled trees on `n` vertices.
pub(crate) fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}
