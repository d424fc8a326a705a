//! Isomorphism-invariant graph keys for memoization.
//!
//! For graphs with at most `bound` vertices the key is the lexicographically
//! smallest upper-triangular adjacency string over all vertex orderings that
//! respect an equitable colour refinement seeded by vertex degree. Larger
//! graphs get their labeled adjacency string, tagged so the two regimes never
//! collide.

use super::Graph;

pub const DEFAULT_CANON_BOUND: usize = 10;

/// Largest bound supported: 16 vertices give 120 adjacency bits, one `u128`.
pub const MAX_CANON_BOUND: usize = 16;

const CANONICAL: u8 = 0;
const LABELED: u8 = 1;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Box<[u8]>);

impl CanonicalKey {
    pub fn new(g: &Graph, bound: usize) -> Self {
        let n = g.vertex_count();
        let mut bytes = Vec::with_capacity(5 + n * n / 16);
        if n <= bound.min(MAX_CANON_BOUND) {
            bytes.push(CANONICAL);
            bytes.extend_from_slice(&(n as u32).to_be_bytes());
            let bits = minimal_adjacency_bits(g);
            let len = triangle_len(n).div_ceil(8);
            bytes.extend_from_slice(&bits.to_be_bytes()[..len]);
        } else {
            bytes.push(LABELED);
            bytes.extend_from_slice(&(n as u32).to_be_bytes());
            let mut acc = 0u8;
            let mut filled = 0;
            for j in 1..n {
                for i in 0..j {
                    acc = (acc << 1) | u8::from(g.has_edge(i, j));
                    filled += 1;
                    if filled == 8 {
                        bytes.push(acc);
                        acc = 0;
                        filled = 0;
                    }
                }
            }
            if filled > 0 {
                bytes.push(acc << (8 - filled));
            }
        }
        CanonicalKey(bytes.into_boxed_slice())
    }

    /// True when the key identifies an isomorphism class rather than a
    /// labeled graph.
    pub fn is_canonical(&self) -> bool {
        self.0[0] == CANONICAL
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalKey(")?;
        for b in self.0.iter() {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

fn triangle_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Equitable refinement of the degree partition. Colours are renumbered by
/// sorted signature, so the result depends only on the isomorphism class.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    slots: Vec<usize>,
    colour: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<u128>,
}

/// Smallest adjacency string, packed most-significant-bit first so integer
/// order is lexicographic order. Bit order is column-wise over the upper
/// triangle: (0,1), (0,2), (1,2), (0,3), ...
fn minimal_adjacency_bits(g: &Graph) -> u128 {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    let colour = refine(g);
    let mut slots = colour.clone();
    slots.sort_unstable();
    let mut search = Search {
        g,
        slots,
        colour,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.extend(0);
    search.best.expect("at least one ordering exists")
}

impl Search<'_> {
    fn extend(&mut self, bits: u128) {
        let p = self.order.len();
        let n = self.slots.len();
        if p == n {
            if self.best.is_none_or(|b| bits < b) {
                self.best = Some(bits);
            }
            return;
        }
        let start = triangle_len(p);
        let end = start + p;
        let mask = if end == 0 { 0 } else { !0u128 << (128 - end) };
        for v in 0..n {
            if self.used[v] || self.colour[v] != self.slots[p] {
                continue;
            }
            let mut next = bits;
            for (i, &w) in self.order.iter().enumerate() {
                if self.g.has_edge(w, v) {
                    next |= 1u128 << (127 - (start + i));
                }
            }
            if let Some(best) = self.best {
                if next & mask > best & mask {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.extend(next);
            self.order.pop();
            self.used[v] = false;
        }
    }
}
