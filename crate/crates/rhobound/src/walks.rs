//! Exact walk counting.
//!
//! [`WalkTable`] holds the k-outdegrees d_i^{k+} (row sums of A^k) for
//! k = 0..=kmax as arbitrary-precision integers, computed by sparse
//! matrix-vector iteration from the all-ones vector. Counts grow like
//! rho^k and overflow machine words quickly on multiarc graphs, so
//! exactness here is what makes the downstream equality checks reliable;
//! floating point enters only at report time.
//!
//! [`ReachPattern`] captures the sparsity pattern of A^M (which ordered
//! pairs are joined by a length-M walk) via saturating boolean products.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Table of exact k-outdegrees: `count(k, i)` = number of length-k
/// directed walks starting at vertex i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    labels: Vec<String>,
    counts: Vec<Vec<BigUint>>,
}

impl WalkTable {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Largest walk order stored.
    pub fn kmax(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, k: usize, i: usize) -> &BigUint {
        &self.counts[k][i]
    }

    pub fn row(&self, k: usize) -> &[BigUint] {
        &self.counts[k]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// True when every vertex has at least one outgoing arc.
    pub fn sink_free(&self) -> bool {
        self.counts
            .get(1)
            .map(|row| row.iter().all(|c| !c.is_zero()))
            .unwrap_or(true)
    }

    pub(crate) fn require_order(&self, needed: usize) -> Result<()> {
        if needed > self.kmax() {
            Err(Error::BudgetExceeded {
                needed,
                kmax: self.kmax(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_nonzero(&self, k: usize, i: usize) -> Result<()> {
        if self.counts[k][i].is_zero() {
            Err(Error::ZeroCount {
                label: self.labels[i].clone(),
                k,
            })
        } else {
            Ok(())
        }
    }
}

/// Computes d_i^{k+} for k = 0..=kmax by iterating x_{k+1} = A x_k from
/// the all-ones vector; d_i^{0+} = 1 for every vertex.
pub fn walk_table(g: &Digraph, kmax: usize) -> WalkTable {
    let n = g.n();
    let mut counts = Vec::with_capacity(kmax + 1);
    counts.push(vec![BigUint::one(); n]);
    for _ in 0..kmax {
        let prev = counts.last().expect("at least one row");
        let mut next = vec![BigUint::zero(); n];
        for ((u, v), m) in g.arcs() {
            next[u] += &prev[v] * m;
        }
        counts.push(next);
    }
    WalkTable {
        labels: g.labels().to_vec(),
        counts,
    }
}

/// Sparsity pattern of A^M: the ordered pairs joined by a length-M walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachPattern {
    m: usize,
    rows: Vec<Vec<usize>>,
}

impl ReachPattern {
    /// Walk length this pattern describes.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&j).is_ok()
    }

    /// Targets reachable from i by a length-M walk, ascending.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    /// All present pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&j| (i, j)))
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }
}

/// Boolean sparse power: the support of A^M, with no counting (saturates).
pub fn reach_pattern(g: &Digraph, m: usize) -> ReachPattern {
    let n = g.n();
    let adj = g.out_neighbors();
    // A^0 = I.
    let mut rows: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for _ in 0..m {
        let mut next = Vec::with_capacity(n);
        for targets in adj.iter() {
            let mut merged: Vec<usize> = Vec::new();
            for &j in targets {
                merged.extend_from_slice(&rows[j]);
            }
            merged.sort_unstable();
            merged.dedup();
            next.push(merged);
        }
        rows = next;
    }
    ReachPattern { m, rows }
}

/// Exact ordering of a/b versus c/d by cross-multiplication; b and d must
/// be positive. Never touches floating point.
pub fn ratio_compare(a: &BigUint, b: &BigUint, c: &BigUint, d: &BigUint) -> Result<Ordering> {
    if b.is_zero() || d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok((a * d).cmp(&(c * b)))
}

/// Rounds the exact ratio p/q to f64 with ~2^-52 relative error, scaling
/// through a 64-bit shift so magnitudes beyond f64 integer range stay
/// accurate.
pub fn ratio_to_f64(p: &BigUint, q: &BigUint) -> f64 {
    assert!(!q.is_zero(), "ratio_to_f64 requires a positive denominator");
    if p.is_zero() {
        return 0.0;
    }
    if p.bits() <= 52 && q.bits() <= 52 {
        return p.to_f64().unwrap() / q.to_f64().unwrap();
    }
    let scaled: BigUint = (p << 64u32) / q;
    scaled.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(64)
}

/// The root-th root of p/q as exp(ln(p/q)/root), reducing the fraction
/// first so algebraically equal inputs give bit-identical results.
pub fn root_of_ratio(p: &BigUint, q: &BigUint, root: usize) -> f64 {
    assert!(root >= 1);
    if p.is_zero() {
        return 0.0;
    }
    let g = num_integer::Integer::gcd(p, q);
    let value = ratio_to_f64(&(p / &g), &(q / &g));
    if root == 1 {
        value
    } else {
        (value.ln() / root as f64).exp()
    }
}
