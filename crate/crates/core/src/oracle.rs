//! Brute-force enumeration of b-fold λ-colourings.
//!
//! This module is the ground truth the formula and polynomial paths are
//! checked against, so it depends on nothing but the graph type.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest palette the enumerator supports (colour sets are `u128` masks).
pub const MAX_PALETTE: u32 = 128;

/// Assignment of a `b`-element subset of `{1..=λ}` to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    lambda: u32,
    b: u32,
    sets: Vec<u128>,
}

impl Coloring {
    pub fn new(lambda: u32, b: u32, sets: &[Vec<u32>]) -> Result<Self> {
        if b == 0 {
            return Err(Error::MalformedColoring("b must be at least 1".into()));
        }
        if lambda > MAX_PALETTE {
            return Err(Error::MalformedColoring(format!(
                "palette larger than {MAX_PALETTE}"
            )));
        }
        let mut masks = Vec::with_capacity(sets.len());
        for (v, set) in sets.iter().enumerate() {
            let mut mask = 0u128;
            for &c in set {
                if c == 0 || c > lambda {
                    return Err(Error::MalformedColoring(format!(
                        "vertex {v}: colour {c} outside 1..={lambda}"
                    )));
                }
                mask |= 1 << (c - 1);
            }
            if set.len() != b as usize || mask.count_ones() != b {
                return Err(Error::MalformedColoring(format!(
                    "vertex {v}: expected {b} distinct colours, got {set:?}"
                )));
            }
            masks.push(mask);
        }
        Ok(Coloring {
            lambda,
            b,
            sets: masks,
        })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn vertex_count(&self) -> usize {
        self.sets.len()
    }

    /// Colours of vertex `v`, ascending.
    pub fn colours(&self, v: usize) -> Vec<u32> {
        (0..self.lambda)
            .filter(|c| self.sets[v] >> c & 1 == 1)
            .map(|c| c + 1)
            .collect()
    }

    /// Renames colours: colour `c` becomes `perm[c - 1]`.
    pub fn permute_colours(&self, perm: &[u32]) -> Result<Coloring> {
        let sets: Vec<Vec<u32>> = (0..self.sets.len())
            .map(|v| {
                self.colours(v)
                    .into_iter()
                    .map(|c| perm[(c - 1) as usize])
                    .collect()
            })
            .collect();
        Coloring::new(self.lambda, self.b, &sets)
    }
}

/// True iff adjacent vertices receive disjoint colour sets.
pub fn is_legal(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.vertex_count() != g.vertex_count() {
        return Err(Error::MalformedColoring(format!(
            "coloring covers {} vertices, graph has {}",
            c.vertex_count(),
            g.vertex_count()
        )));
    }
    Ok(g.edges().all(|(u, v)| c.sets[u] & c.sets[v] == 0))
}

/// All `b`-subsets of `{0..λ}` as bitmasks, lexicographic order.
pub fn subsets(lambda: u32, b: u32) -> Vec<u128> {
    fn go(start: u32, lambda: u32, left: u32, mask: u128, out: &mut Vec<u128>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        for c in start..=lambda - left {
            go(c + 1, lambda, left - 1, mask | 1 << c, out);
        }
    }
    let mut out = Vec::new();
    if b <= lambda {
        go(0, lambda, b, 0, &mut out);
    }
    out
}

/// Number of candidate assignments, `C(λ, b)^n`.
pub fn search_space(n: usize, lambda: u32, b: u32) -> BigUint {
    let per_vertex = if b > lambda {
        BigUint::ZERO
    } else {
        (0..b).fold(BigUint::one(), |acc, i| acc * (lambda - i) / (i + 1))
    };
    num_traits::pow(per_vertex, n)
}

pub fn enumerate_count(g: &Graph, lambda: u32, b: u32, budget: u64) -> Result<u64> {
    enumerate_count_with(g, lambda, b, budget, Execution::default())
}

/// Exact number of legal b-fold λ-colourings. Two colourings differ iff some
/// vertex gets a different colour set.
///
/// Vertices are assigned in index order; a partial assignment is abandoned as
/// soon as it conflicts with an earlier neighbour. Fails with
/// [`Error::BudgetExceeded`] rather than truncating.
pub fn enumerate_count_with(
    g: &Graph,
    lambda: u32,
    b: u32,
    budget: u64,
    exec: Execution,
) -> Result<u64> {
    if b == 0 {
        return Err(Error::InvalidArgument("b must be at least 1".into()));
    }
    let n = g.vertex_count();
    let space = search_space(n, lambda, b);
    if space > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            required: space.to_string(),
            budget,
        });
    }
    if n == 0 {
        return Ok(1);
    }
    if lambda > MAX_PALETTE {
        return Err(Error::InvalidArgument(format!(
            "palette larger than {MAX_PALETTE}"
        )));
    }
    let sets = subsets(lambda, b);
    // Earlier neighbours of each vertex.
    let back: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).range(..v).copied().collect())
        .collect();

    let counts = exec.map(&sets, |&first| {
        let mut assigned = vec![0u128; n];
        assigned[0] = first;
        extend(1, &sets, &back, &mut assigned)
    });
    // Bounded by the search space, itself within the u64 budget.
    Ok(counts.iter().sum())
}

fn extend(v: usize, sets: &[u128], back: &[Vec<usize>], assigned: &mut [u128]) -> u64 {
    if v == assigned.len() {
        return 1;
    }
    let forbidden = back[v].iter().fold(0u128, |acc, &w| acc | assigned[w]);
    let mut total = 0;
    for &s in sets {
        if s & forbidden == 0 {
            assigned[v] = s;
            total += extend(v + 1, sets, back, assigned);
        }
    }
    total
}
