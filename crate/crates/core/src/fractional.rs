//! b-fold colouring counts.
//!
//! The number of b-fold λ-colourings of `G` is `P(G^b, λ) / (b!)^n`: each
//! b-fold colouring of `G` lifts to exactly `(b!)^n` ordinary colourings of
//! the blow-up, one per way of distributing each vertex's colour set over its
//! clique. Everything here is built on that identity, plus closed forms for
//! complete graphs, trees and forests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::blowup::{blow_up, resolve_pair};
use crate::chromatic::{chromatic_number, chromatic_polynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;

/// `numerator(λ) / denominator` counts b-fold λ-colourings, where
/// `denominator = (b!)^order` and the division is exact at every
/// non-negative integer λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalPolynomial {
    numerator: Polynomial,
    denominator: BigInt,
    b: usize,
    order: usize,
}

impl FractionalPolynomial {
    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Order of the base graph.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn evaluate(&self, lambda: u64) -> Result<BigInt> {
        let value = self.numerator.evaluate_u64(lambda);
        let (q, r) = value.div_rem(&self.denominator);
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "numerator value {value} at λ = {lambda} is not divisible by {}",
                self.denominator
            )));
        }
        Ok(q)
    }
}

fn check_b(b: usize) -> Result<()> {
    if b == 0 {
        return Err(Error::InvalidArgument("b must be at least 1".into()));
    }
    Ok(())
}

/// `(b!)^n`.
pub fn blowup_denominator(b: usize, n: usize) -> BigInt {
    let fact: BigInt = (1..=b).map(BigInt::from).product();
    num_traits::pow(fact, n)
}

pub fn fractional_polynomial(g: &Graph, b: usize) -> Result<FractionalPolynomial> {
    check_b(b)?;
    let blown = blow_up(g, b)?;
    Ok(FractionalPolynomial {
        numerator: chromatic_polynomial(&blown),
        denominator: blowup_denominator(b, g.vertex_count()),
        b,
        order: g.vertex_count(),
    })
}

/// Number of b-fold λ-colourings, via the blow-up polynomial.
pub fn fractional_count(g: &Graph, lambda: u64, b: usize) -> Result<BigInt> {
    fractional_polynomial(g, b)?.evaluate(lambda)
}

/// `C(m, k)` with the counting convention: zero whenever `m < k`, including
/// every negative `m`.
pub fn binom(m: i64, k: u64) -> BigInt {
    if m < 0 || (m as u64) < k {
        return BigInt::zero();
    }
    let m = m as u64;
    let k = k.min(m - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (m - i) / (i + 1))
}

fn signed(lambda: u64) -> i64 {
    i64::try_from(lambda).expect("λ fits in i64")
}

/// `∏_{j=0}^{n-1} C(λ - bj, b)`: b-fold λ-colourings of `K_n`.
pub fn complete_closed_form(n: usize, lambda: u64, b: usize) -> BigInt {
    let (lambda, b) = (signed(lambda), b as i64);
    (0..n as i64)
        .map(|j| binom(lambda - b * j, b as u64))
        .product()
}

/// `C(λ, b) · C(λ - b, b)^(order - 1)`: b-fold λ-colourings of any tree.
pub fn tree_closed_form(order: usize, lambda: u64, b: usize) -> BigInt {
    assert!(order >= 1, "a tree has at least one vertex");
    forest_closed_form(&[order], lambda, b)
}

/// `C(λ, b)^k · C(λ - b, b)^(|V| - k)` for a forest with `k` components of
/// the given orders.
pub fn forest_closed_form(component_orders: &[usize], lambda: u64, b: usize) -> BigInt {
    assert!(
        component_orders.iter().all(|&c| c >= 1),
        "components are non-empty"
    );
    let k = component_orders.len();
    let total: usize = component_orders.iter().sum();
    let l = signed(lambda);
    num_traits::pow(binom(l, b as u64), k)
        * num_traits::pow(binom(l - b as i64, b as u64), total - k)
}

/// Smallest λ admitting a b-fold λ-colouring, found by searching the count
/// upward from `b`, cross-checked against the chromatic number of `G^b`.
pub fn b_fold_chromatic_number(g: &Graph, b: usize) -> Result<u64> {
    check_b(b)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let fp = fractional_polynomial(g, b)?;
    let limit = (n * b) as u64;
    let mut found = None;
    for lambda in b as u64..=limit {
        if fp.evaluate(lambda)?.is_positive() {
            found = Some(lambda);
            break;
        }
    }
    let by_count = found
        .ok_or_else(|| Error::Invariant(format!("no b-fold colouring with {limit} colours")))?;
    let by_search = chromatic_number(&blow_up(g, b)?) as u64;
    if by_count != by_search {
        return Err(Error::Invariant(format!(
            "b-fold chromatic number {by_count} disagrees with χ(G^b) = {by_search}"
        )));
    }
    Ok(by_count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveFrtReport {
    pub lhs: BigInt,
    /// `P(G - uv, λ, b) - P(G / uv, λ, b)`.
    pub rhs: BigInt,
    pub holds: bool,
}

/// Applies ordinary deletion–contraction directly to b-fold counts. This is
/// exact for `b = 1` and generally wrong for `b > 1`.
pub fn naive_frt_check(
    g: &Graph,
    (u, v): (usize, usize),
    lambda: u64,
    b: usize,
) -> Result<NaiveFrtReport> {
    let deleted = g.delete_edge(u, v)?;
    let merged = g.contract_edge(u, v)?;
    let lhs = fractional_count(g, lambda, b)?;
    let rhs = fractional_count(&deleted, lambda, b)? - fractional_count(&merged, lambda, b)?;
    let holds = lhs == rhs;
    Ok(NaiveFrtReport { lhs, rhs, holds })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrtMode {
    /// `(P(G^b - uv) - P(G^b / uv)) / (b!)^n`, `uv` an edge of `G^b`.
    Deletion,
    /// `(P(G^b + uv) + P(G^b / uv)) / (b!)^n`, `uv` a non-edge of `G^b`.
    Addition,
}

/// Reduction applied inside the blow-up. `pair` is in `G^b` coordinates.
pub fn generalized_frt_polynomial(
    g: &Graph,
    b: usize,
    pair: (usize, usize),
    mode: FrtMode,
) -> Result<FractionalPolynomial> {
    check_b(b)?;
    let blown = blow_up(g, b)?;
    let (u, v) = pair;
    let numerator = match mode {
        FrtMode::Deletion => {
            let deleted = blown.delete_edge(u, v)?;
            let merged = blown.contract_edge(u, v)?;
            &chromatic_polynomial(&deleted) - &chromatic_polynomial(&merged)
        }
        FrtMode::Addition => {
            let added = blown.add_edge(u, v)?;
            let merged = blown.contract_edge(u, v)?;
            &chromatic_polynomial(&added) + &chromatic_polynomial(&merged)
        }
    };
    Ok(FractionalPolynomial {
        numerator,
        denominator: blowup_denominator(b, g.vertex_count()),
        b,
        order: g.vertex_count(),
    })
}

pub fn generalized_frt_count(
    g: &Graph,
    b: usize,
    lambda: u64,
    pair: (usize, usize),
    mode: FrtMode,
) -> Result<BigInt> {
    generalized_frt_polynomial(g, b, pair, mode)?.evaluate(lambda)
}

/// Side-by-side comparison of the naive and the blow-up reductions for one
/// edge of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrtReport {
    pub lhs: BigInt,
    pub naive_rhs: BigInt,
    pub naive_holds: bool,
    /// The surgery pair in `G^b` coordinates.
    pub blowup_edge: (usize, usize),
    pub generalized_rhs: BigInt,
    pub generalized_holds: bool,
}

/// Runs both reductions on edge `(u, v)` of `G`. The generalized form
/// operates on the edge between copy 0 of `u` and copy 0 of `v`.
pub fn frt_demo(g: &Graph, edge: (usize, usize), lambda: u64, b: usize) -> Result<FrtReport> {
    check_b(b)?;
    let naive = naive_frt_check(g, edge, lambda, b)?;
    let blowup_edge = resolve_pair(g, b, edge, (0, 0))?;
    let generalized_rhs = generalized_frt_count(g, b, lambda, blowup_edge, FrtMode::Deletion)?;
    Ok(FrtReport {
        generalized_holds: generalized_rhs == naive.lhs,
        lhs: naive.lhs,
        naive_rhs: naive.rhs,
        naive_holds: naive.holds,
        blowup_edge,
        generalized_rhs,
    })
}
