//! Ordinary chromatic polynomials by memoized deletion–contraction.
//!
//! Two recurrences drive the engine:
//!
//! * deletion: `P(G) = P(G - uv) - P(G / uv)` for an edge `uv`,
//! * addition: `P(G) = P(G + uv) + P(G / uv)` for a non-adjacent pair `uv`.
//!
//! Sparse graphs are reduced by deletion toward the edgeless graph, dense
//! graphs by addition toward the complete graph. Edgeless, complete, tree and
//! disconnected graphs are closed out directly. Intermediate results are
//! memoized on [`CanonicalKey`].

use std::sync::OnceLock;

use dashmap::DashMap;

use crate::exec::Execution;
use crate::graph::{CanonicalKey, Graph, DEFAULT_CANON_BOUND};
use crate::poly::{falling_factorial_poly, Polynomial};

#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Use the addition recurrence when `|E| > density_threshold * C(n, 2)`.
    pub density_threshold: f64,
    /// Graphs up to this order get isomorphism-invariant memo keys.
    pub canon_bound: usize,
    /// Maximum memo entries; once full, new results are simply not stored.
    pub cache_capacity: usize,
    pub memoize: bool,
    pub execution: Execution,
    /// Smallest graph order at which the two branches are forked.
    pub parallel_min_vertices: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            density_threshold: 0.5,
            canon_bound: DEFAULT_CANON_BOUND,
            cache_capacity: 1 << 20,
            memoize: true,
            execution: Execution::default(),
            parallel_min_vertices: 9,
        }
    }
}

impl EngineConfig {
    pub fn sequential() -> Self {
        EngineConfig {
            execution: Execution::Sequential,
            ..Default::default()
        }
    }

    pub fn uncached() -> Self {
        EngineConfig {
            memoize: false,
            ..Default::default()
        }
    }
}

#[derive(Debug)]
pub struct ChromaticEngine {
    config: EngineConfig,
    memo: DashMap<CanonicalKey, Polynomial>,
}

impl Default for ChromaticEngine {
    fn default() -> Self {
        ChromaticEngine::new(EngineConfig::default())
    }
}

impl ChromaticEngine {
    pub fn new(config: EngineConfig) -> Self {
        ChromaticEngine {
            config,
            memo: DashMap::new(),
        }
    }

    /// Process-wide engine with the default configuration and a shared memo.
    pub fn global() -> &'static ChromaticEngine {
        static ENGINE: OnceLock<ChromaticEngine> = OnceLock::new();
        ENGINE.get_or_init(ChromaticEngine::default)
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn cached_entries(&self) -> usize {
        self.memo.len()
    }

    pub fn clear_cache(&self) {
        self.memo.clear();
    }

    pub fn polynomial(&self, g: &Graph) -> Polynomial {
        let n = g.vertex_count();
        if n == 0 {
            return Polynomial::one();
        }
        if g.is_edgeless() {
            return Polynomial::monomial(n);
        }
        if g.is_complete() {
            return falling_factorial_poly(n);
        }
        let comps = g.components();
        if comps.len() > 1 {
            return comps.iter().fold(Polynomial::one(), |acc, c| {
                &acc * &self.polynomial(&g.induced_subgraph(c))
            });
        }
        if g.edge_count() + 1 == n {
            return tree_polynomial(n);
        }

        let key = self
            .config
            .memoize
            .then(|| CanonicalKey::new(g, self.config.canon_bound));
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return hit.clone();
        }

        let dense = g.edge_count() as f64 > self.config.density_threshold * g.pair_count() as f64;
        let fork = if n >= self.config.parallel_min_vertices {
            self.config.execution
        } else {
            Execution::Sequential
        };
        let result = if dense {
            let (u, v) =
                pick_max_degree_pair(g, g.non_edges()).expect("non-complete graph has a non-edge");
            let added = g.add_edge(u, v).expect("pair is non-adjacent");
            let merged = g.contract_edge(u, v).expect("distinct in-range pair");
            let (a, b) = fork.join(|| self.polynomial(&added), || self.polynomial(&merged));
            &a + &b
        } else {
            let (u, v) =
                pick_max_degree_pair(g, g.edges()).expect("non-edgeless graph has an edge");
            let deleted = g.delete_edge(u, v).expect("pair is an edge");
            let merged = g.contract_edge(u, v).expect("distinct in-range pair");
            let (a, b) = fork.join(|| self.polynomial(&deleted), || self.polynomial(&merged));
            &a - &b
        };

        if let Some(k) = key {
            if self.memo.len() < self.config.cache_capacity {
                self.memo.insert(k, result.clone());
            }
        }
        result
    }
}

/// First pair with the largest degree sum; pairs arrive in lexicographic
/// order, so ties go to the smallest `(u, v)`.
fn pick_max_degree_pair(
    g: &Graph,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), usize)> = None;
    for (u, v) in pairs {
        let score = g.degree(u) + g.degree(v);
        if best.is_none_or(|(_, s)| score > s) {
            best = Some(((u, v), score));
        }
    }
    best.map(|(p, _)| p)
}

/// Chromatic polynomial of `g` on the shared global engine.
pub fn chromatic_polynomial(g: &Graph) -> Polynomial {
    ChromaticEngine::global().polynomial(g)
}

/// `λ(λ-1)^(n-1)`, the chromatic polynomial of every tree on `n >= 1` vertices.
pub fn tree_polynomial(n: usize) -> Polynomial {
    assert!(n >= 1, "a tree has at least one vertex");
    &Polynomial::monomial(1) * &Polynomial::linear_root(1).pow((n - 1) as u32)
}

/// Smallest non-negative integer at which `p` is positive, searching up to
/// `limit` inclusive.
pub fn first_positive_point(p: &Polynomial, limit: u64) -> Option<u64> {
    (0..=limit).find(|&x| p.evaluate_u64(x) > 0.into())
}

/// Chromatic number by exact backtracking search. Independent of the
/// polynomial engine.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    // Static order: repeatedly take the vertex with most already-ordered
    // neighbours, ties by degree then index.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    (1..=n)
        .find(|&k| colourable(g, &order, k))
        .expect("n colours always suffice")
}

fn colourable(g: &Graph, order: &[usize], k: usize) -> bool {
    fn go(
        g: &Graph,
        order: &[usize],
        k: usize,
        pos: usize,
        used: usize,
        colour: &mut [usize],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // A fresh colour is interchangeable with any other fresh colour.
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().all(|&w| colour[w] != c) {
                colour[v] = c;
                if go(g, order, k, pos + 1, used.max(c + 1), colour) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }
    let mut colour = vec![usize::MAX; g.vertex_count()];
    go(g, order, k, 0, 0, &mut colour)
}
