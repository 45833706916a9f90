//! Spectral-radius bound families over walk tables.
//!
//! All bounds sandwich rho(G) between a min and a max of outdegree-ratio
//! expressions. Extrema for the Liu and Xu families are selected by exact
//! integer cross-multiplication; floating point enters only when roots are
//! taken for reporting. The alpha-weighted (Kolotilina) family is
//! inherently real-valued and is evaluated in floating point.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::walks::{ratio_compare, ratio_to_f64, root_of_ratio, ReachPattern, WalkTable};

use num_bigint::BigUint;
use num_traits::Zero;

/// Alpha handling for the Kolotilina family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaSpec {
    /// Evaluate at one fixed alpha in [0, 1].
    Fixed(f64),
    /// Sweep alpha over {0, step, 2 step, ..., 1}.
    Grid { step: f64 },
}

/// Parameters identifying one evaluated bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum BoundParams {
    Frobenius,
    Weighted { weights: Vec<f64> },
    Liu { k: usize, l: usize },
    Xu { k: usize, m: usize, n: usize },
    Kolotilina { k: usize, l: usize, alpha: AlphaSpec },
}

/// Vertex or vertex pair attaining an extremum, by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremumArg {
    Vertex(String),
    Pair(String, String),
}

impl std::fmt::Display for ExtremumArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtremumArg::Vertex(v) => write!(f, "{v}"),
            ExtremumArg::Pair(i, j) => write!(f, "{i}->{j}"),
        }
    }
}

/// One evaluated lower/upper bound pair on the spectral radius.
#[derive(Debug, Clone, Serialize)]
pub struct BoundResult {
    pub params: BoundParams,
    pub lower: f64,
    pub upper: f64,
    pub arg_lower: ExtremumArg,
    pub arg_upper: ExtremumArg,
    /// Grid search only: alpha attaining the best lower bound, or None
    /// when that side does not depend on alpha.
    pub alpha_lower: Option<f64>,
    /// Grid search only: alpha attaining the best upper bound.
    pub alpha_upper: Option<f64>,
    /// True when neither side varies with alpha (always true for the
    /// alpha-free families).
    pub alpha_independent: bool,
}

impl BoundResult {
    fn new(
        params: BoundParams,
        lower: f64,
        upper: f64,
        arg_lower: ExtremumArg,
        arg_upper: ExtremumArg,
    ) -> Self {
        Self {
            params,
            lower,
            upper,
            arg_lower,
            arg_upper,
            alpha_lower: None,
            alpha_upper: None,
            alpha_independent: true,
        }
    }
}

/// Classical row-sum bounds: min and max outdegree.
pub fn frobenius_bounds(g: &Digraph) -> Result<BoundResult> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let degrees = g.outdegrees();
    let (mut lo, mut hi) = (0usize, 0usize);
    for (i, &d) in degrees.iter().enumerate() {
        if d < degrees[lo] {
            lo = i;
        }
        if d > degrees[hi] {
            hi = i;
        }
    }
    Ok(BoundResult::new(
        BoundParams::Frobenius,
        degrees[lo] as f64,
        degrees[hi] as f64,
        ExtremumArg::Vertex(g.label(lo).to_string()),
        ExtremumArg::Vertex(g.label(hi).to_string()),
    ))
}

/// Weighted row-sum bounds: min and max of (Ax)_i / x_i for positive x.
/// Both collapse to rho exactly when x is the Perron vector.
pub fn weighted_bounds(g: &Digraph, x: &[f64]) -> Result<BoundResult> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if x.len() != g.n() {
        return Err(Error::WeightLength {
            expected: g.n(),
            got: x.len(),
        });
    }
    for (i, &w) in x.iter().enumerate() {
        if w <= 0.0 || !w.is_finite() || w.is_nan() {
            return Err(Error::NonPositiveWeight { index: i, value: w });
        }
    }
    let mut ax = vec![0.0f64; g.n()];
    for ((u, v), m) in g.arcs() {
        ax[u] += m as f64 * x[v];
    }
    let ratios: Vec<f64> = ax.iter().zip(x).map(|(num, den)| num / den).collect();
    let (mut lo, mut hi) = (0usize, 0usize);
    for (i, &r) in ratios.iter().enumerate() {
        if r < ratios[lo] {
            lo = i;
        }
        if r > ratios[hi] {
            hi = i;
        }
    }
    Ok(BoundResult::new(
        BoundParams::Weighted { weights: x.to_vec() },
        ratios[lo],
        ratios[hi],
        ExtremumArg::Vertex(g.label(lo).to_string()),
        ExtremumArg::Vertex(g.label(hi).to_string()),
    ))
}

/// High-order outdegree ratio bounds: the L-th root of
/// d_i^{(k+L)+} / d_i^{k+}, minimized and maximized over vertices.
///
/// Extrema are chosen by exact cross-multiplication; only the reported
/// roots are floating point. With k > 0 the table must be sink-free.
pub fn liu_bounds(wt: &WalkTable, k: usize, l: usize) -> Result<BoundResult> {
    if l == 0 {
        return Err(Error::InvalidParameter("L must be positive".into()));
    }
    if wt.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    wt.require_order(k + l)?;
    let mut min_i = 0usize;
    let mut max_i = 0usize;
    for i in 0..wt.n() {
        if k > 0 {
            wt.require_nonzero(k, i)?;
        }
        if i == 0 {
            continue;
        }
        let (p, q) = (wt.count(k + l, i), wt.count(k, i));
        if ratio_compare(p, q, wt.count(k + l, min_i), wt.count(k, min_i))?.is_lt() {
            min_i = i;
        }
        if ratio_compare(p, q, wt.count(k + l, max_i), wt.count(k, max_i))?.is_gt() {
            max_i = i;
        }
    }
    Ok(BoundResult::new(
        BoundParams::Liu { k, l },
        root_of_ratio(wt.count(k + l, min_i), wt.count(k, min_i), l),
        root_of_ratio(wt.count(k + l, max_i), wt.count(k, max_i), l),
        ExtremumArg::Vertex(wt.label(min_i).to_string()),
        ExtremumArg::Vertex(wt.label(max_i).to_string()),
    ))
}

/// Arc-pair outdegree bounds: the (M+N)-th root of
/// d_i^{(k+M)+} d_j^{(k+N)+} / (d_i^{k+} d_j^{k+}), extremized over pairs
/// (i, j) with a length-M walk from i to j.
///
/// Pair extrema are found by exact integer cross-multiplication.
pub fn xu_bounds(
    wt: &WalkTable,
    pat: &ReachPattern,
    k: usize,
    m: usize,
    n: usize,
) -> Result<BoundResult> {
    if m == 0 {
        return Err(Error::InvalidParameter("M must be positive".into()));
    }
    if pat.m() != m {
        return Err(Error::PatternMismatch {
            expected: m,
            got: pat.m(),
        });
    }
    if wt.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    wt.require_order(k + m.max(n))?;
    if pat.is_empty() {
        return Err(Error::NilpotentPower { m });
    }
    if k > 0 {
        for i in 0..wt.n() {
            wt.require_nonzero(k, i)?;
        }
    }

    let value = |i: usize, j: usize| -> (BigUint, BigUint) {
        let num = wt.count(k + m, i) * wt.count(k + n, j);
        let den = wt.count(k, i) * wt.count(k, j);
        (num, den)
    };

    let mut pairs = pat.pairs();
    let first = pairs.next().expect("pattern is nonempty");
    let mut min_pair = first;
    let mut max_pair = first;
    let (mut min_val, mut max_val) = (value(first.0, first.1), value(first.0, first.1));
    for (i, j) in pairs {
        let (num, den) = value(i, j);
        if ratio_compare(&num, &den, &min_val.0, &min_val.1)?.is_lt() {
            min_pair = (i, j);
            min_val = (num.clone(), den.clone());
        }
        if ratio_compare(&num, &den, &max_val.0, &max_val.1)?.is_gt() {
            max_pair = (i, j);
            max_val = (num, den);
        }
    }

    Ok(BoundResult::new(
        BoundParams::Xu { k, m, n },
        root_of_ratio(&min_val.0, &min_val.1, m + n),
        root_of_ratio(&max_val.0, &max_val.1, m + n),
        ExtremumArg::Pair(
            wt.label(min_pair.0).to_string(),
            wt.label(min_pair.1).to_string(),
        ),
        ExtremumArg::Pair(
            wt.label(max_pair.0).to_string(),
            wt.label(max_pair.1).to_string(),
        ),
    ))
}

/// Log-ratios ln(d_i^{(k+L)+} / d_i^{k+}) per vertex, reduced exactly
/// before conversion so equal rationals give identical floats.
fn log_ratios(wt: &WalkTable, k: usize, l: usize) -> Vec<f64> {
    (0..wt.n())
        .map(|i| {
            let p = wt.count(k + l, i);
            let q = wt.count(k, i);
            let g = num_integer::Integer::gcd(p, q);
            ratio_to_f64(&(p / &g), &(q / &g)).ln()
        })
        .collect()
}

/// A bound value together with the pair attaining it.
type PairExtremum = (f64, (usize, usize));

/// One alpha evaluation over the pattern: min and max of
/// exp((alpha t_i + (1 - alpha) t_j) / L) with their pairs.
fn alpha_extrema(
    t: &[f64],
    pat: &ReachPattern,
    l: usize,
    alpha: f64,
) -> (PairExtremum, PairExtremum) {
    let mut min_s = f64::INFINITY;
    let mut max_s = f64::NEG_INFINITY;
    let mut min_pair = (0, 0);
    let mut max_pair = (0, 0);
    for (i, j) in pat.pairs() {
        let s = alpha * t[i] + (1.0 - alpha) * t[j];
        if s < min_s {
            min_s = s;
            min_pair = (i, j);
        }
        if s > max_s {
            max_s = s;
            max_pair = (i, j);
        }
    }
    let root = l as f64;
    (
        ((min_s / root).exp(), min_pair),
        ((max_s / root).exp(), max_pair),
    )
}

fn check_kolotilina_inputs(
    wt: &WalkTable,
    pat: &ReachPattern,
    k: usize,
    l: usize,
) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidParameter("L must be positive".into()));
    }
    if pat.m() != l {
        return Err(Error::PatternMismatch {
            expected: l,
            got: pat.m(),
        });
    }
    if wt.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    wt.require_order(k + l)?;
    if !wt.sink_free() {
        let sinks = (0..wt.n())
            .filter(|&i| wt.count(1, i).is_zero())
            .count();
        return Err(Error::SinkPresent(sinks));
    }
    if pat.is_empty() {
        return Err(Error::NilpotentPower { m: l });
    }
    Ok(())
}

/// Alpha-weighted pair bounds: the L-th root of
/// r_i^alpha(A^{k+L}) r_j^(1-alpha)(A^{k+L}) / (r_i^alpha(A^k) r_j^(1-alpha)(A^k))
/// over pairs joined by a length-L walk, at one fixed alpha.
///
/// At alpha = 1 the j-factor drops and the values collapse to the Liu
/// family; at alpha = 0.5 with L = M = N they match the Xu family.
pub fn kolotilina_bounds(
    wt: &WalkTable,
    pat: &ReachPattern,
    k: usize,
    l: usize,
    alpha: f64,
) -> Result<BoundResult> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    check_kolotilina_inputs(wt, pat, k, l)?;
    let t = log_ratios(wt, k, l);
    let ((lower, min_pair), (upper, max_pair)) = alpha_extrema(&t, pat, l, alpha);

    // Sample a coarse grid to flag values that cannot depend on alpha.
    let mut spread_lower: f64 = 0.0;
    let mut spread_upper: f64 = 0.0;
    let samples = [0.0, 0.25, 0.5, 0.75, 1.0];
    let base = alpha_extrema(&t, pat, l, samples[0]);
    for &a in &samples[1..] {
        let ((lo, _), (hi, _)) = alpha_extrema(&t, pat, l, a);
        spread_lower = spread_lower.max((lo - base.0 .0).abs());
        spread_upper = spread_upper.max((hi - base.1 .0).abs());
    }

    Ok(BoundResult {
        params: BoundParams::Kolotilina {
            k,
            l,
            alpha: AlphaSpec::Fixed(alpha),
        },
        lower,
        upper,
        arg_lower: ExtremumArg::Pair(
            wt.label(min_pair.0).to_string(),
            wt.label(min_pair.1).to_string(),
        ),
        arg_upper: ExtremumArg::Pair(
            wt.label(max_pair.0).to_string(),
            wt.label(max_pair.1).to_string(),
        ),
        alpha_lower: None,
        alpha_upper: None,
        alpha_independent: spread_lower < 1e-12 && spread_upper < 1e-12,
    })
}

fn alpha_grid(step: f64) -> Vec<f64> {
    let mut grid = Vec::new();
    let mut k = 0u32;
    loop {
        // Snap accumulated float error so reported alphas are clean grid points.
        let a = (k as f64 * step * 1e12).round() / 1e12;
        if a >= 1.0 - 1e-12 {
            break;
        }
        grid.push(a);
        k += 1;
    }
    grid.push(1.0);
    grid
}

/// Sweeps alpha over a grid and keeps the best (largest) lower and best
/// (smallest) upper bound. Ties resolve toward smaller alpha; a side
/// whose spread over the grid stays below 1e-12 is flagged
/// alpha-independent and reports no alpha argument.
pub fn kolotilina_best(
    wt: &WalkTable,
    pat: &ReachPattern,
    k: usize,
    l: usize,
    grid_step: f64,
) -> Result<BoundResult> {
    if !(grid_step > 0.0 && grid_step <= 0.5) {
        return Err(Error::InvalidParameter(format!(
            "grid step must lie in (0, 0.5], got {grid_step}"
        )));
    }
    check_kolotilina_inputs(wt, pat, k, l)?;
    let t = log_ratios(wt, k, l);

    let mut best_lower: Option<(f64, f64, (usize, usize))> = None; // (value, alpha, pair)
    let mut best_upper: Option<(f64, f64, (usize, usize))> = None;
    let mut lower_range = (f64::INFINITY, f64::NEG_INFINITY);
    let mut upper_range = (f64::INFINITY, f64::NEG_INFINITY);

    for alpha in alpha_grid(grid_step) {
        let ((lo, lo_pair), (hi, hi_pair)) = alpha_extrema(&t, pat, l, alpha);
        lower_range = (lower_range.0.min(lo), lower_range.1.max(lo));
        upper_range = (upper_range.0.min(hi), upper_range.1.max(hi));
        if best_lower.map(|(v, _, _)| lo > v).unwrap_or(true) {
            best_lower = Some((lo, alpha, lo_pair));
        }
        if best_upper.map(|(v, _, _)| hi < v).unwrap_or(true) {
            best_upper = Some((hi, alpha, hi_pair));
        }
    }

    let (lower, alpha_lo, min_pair) = best_lower.expect("grid is nonempty");
    let (upper, alpha_hi, max_pair) = best_upper.expect("grid is nonempty");
    let lower_independent = lower_range.1 - lower_range.0 < 1e-12;
    let upper_independent = upper_range.1 - upper_range.0 < 1e-12;

    Ok(BoundResult {
        params: BoundParams::Kolotilina {
            k,
            l,
            alpha: AlphaSpec::Grid { step: grid_step },
        },
        lower,
        upper,
        arg_lower: ExtremumArg::Pair(
            wt.label(min_pair.0).to_string(),
            wt.label(min_pair.1).to_string(),
        ),
        arg_upper: ExtremumArg::Pair(
            wt.label(max_pair.0).to_string(),
            wt.label(max_pair.1).to_string(),
        ),
        alpha_lower: (!lower_independent).then_some(alpha_lo),
        alpha_upper: (!upper_independent).then_some(alpha_hi),
        alpha_independent: lower_independent && upper_independent,
    })
}

/// One row of a bound sweep with its compute tier and per-tier flags.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    #[serde(flatten)]
    pub result: BoundResult,
    /// Largest walk order the row consumes (k+L, or k+N for pairs).
    pub tier: usize,
    pub best_lower_at_tier: bool,
    pub best_upper_at_tier: bool,
}

/// All bound families evaluated over a walk budget.
#[derive(Debug, Clone, Serialize)]
pub struct SweepTable {
    pub budget: usize,
    pub grid_step: f64,
    pub liu: Vec<SweepRow>,
    pub xu: Vec<SweepRow>,
    pub kolotilina: Vec<BoundResult>,
}

/// Evaluates every Liu row with k+L <= budget, every Xu row with M = 1
/// and k+N <= budget, and a Kolotilina grid search per k with L = 1,
/// annotating the tightest lower and upper bound within each tier.
pub fn bound_sweep(g: &Digraph, budget: usize, grid_step: f64) -> Result<SweepTable> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be positive".into()));
    }
    if g.has_sinks() {
        return Err(Error::SinkPresent(g.sinks().len()));
    }
    let wt = crate::walks::walk_table(g, budget);
    let pat1 = crate::walks::reach_pattern(g, 1);

    let mut liu = Vec::new();
    for tier in 1..=budget {
        for k in 0..tier {
            let result = liu_bounds(&wt, k, tier - k)?;
            liu.push(SweepRow {
                result,
                tier,
                best_lower_at_tier: false,
                best_upper_at_tier: false,
            });
        }
    }
    let mut xu = Vec::new();
    for tier in 1..=budget {
        for k in 0..tier {
            let result = xu_bounds(&wt, &pat1, k, 1, tier - k)?;
            xu.push(SweepRow {
                result,
                tier,
                best_lower_at_tier: false,
                best_upper_at_tier: false,
            });
        }
    }
    let mut kolotilina = Vec::new();
    for k in 0..budget {
        kolotilina.push(kolotilina_best(&wt, &pat1, k, 1, grid_step)?);
    }

    mark_tier_best(&mut liu);
    mark_tier_best(&mut xu);

    Ok(SweepTable {
        budget,
        grid_step,
        liu,
        xu,
        kolotilina,
    })
}

fn mark_tier_best(rows: &mut [SweepRow]) {
    let tiers: std::collections::BTreeSet<usize> = rows.iter().map(|r| r.tier).collect();
    for tier in tiers {
        let mut best_lo: Option<usize> = None;
        let mut best_hi: Option<usize> = None;
        for (idx, row) in rows.iter().enumerate() {
            if row.tier != tier {
                continue;
            }
            if best_lo.map(|b| rows[b].result.lower < row.result.lower).unwrap_or(true) {
                best_lo = Some(idx);
            }
            if best_hi.map(|b| rows[b].result.upper > row.result.upper).unwrap_or(true) {
                best_hi = Some(idx);
            }
        }
        if let Some(i) = best_lo {
            rows[i].best_lower_at_tier = true;
        }
        if let Some(i) = best_hi {
            rows[i].best_upper_at_tier = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::{reach_pattern, walk_table};

    fn g1() -> Digraph {
        Digraph::from_dense(
            None,
            &[
                vec![0, 0, 0, 1, 1],
                vec![1, 0, 1, 1, 0],
                vec![1, 1, 0, 0, 0],
                vec![0, 0, 1, 0, 1],
                vec![0, 1, 1, 0, 0],
            ],
        )
        .unwrap()
    }

    fn cycle(n: usize) -> Digraph {
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(j == (i + 1) % n)).collect())
            .collect();
        Digraph::from_dense(None, &rows).unwrap()
    }

    fn round4(x: f64) -> f64 {
        (x * 1e4).round() / 1e4
    }

    #[test]
    fn frobenius_on_g1() {
        let b = frobenius_bounds(&g1()).unwrap();
        assert_eq!((b.lower, b.upper), (2.0, 3.0));
        assert_eq!(b.arg_upper, ExtremumArg::Vertex("2".into()));
    }

    #[test]
    fn frobenius_regular_cycle() {
        let b = frobenius_bounds(&cycle(4)).unwrap();
        assert_eq!((b.lower, b.upper), (1.0, 1.0));
    }

    #[test]
    fn frobenius_with_sink_has_zero_lower() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1)]).unwrap();
        let b = frobenius_bounds(&g).unwrap();
        assert_eq!(b.lower, 0.0);
    }

    #[test]
    fn weighted_all_ones_reduces_to_frobenius() {
        let b = weighted_bounds(&g1(), &[1.0; 5]).unwrap();
        assert_eq!((b.lower, b.upper), (2.0, 3.0));
    }

    #[test]
    fn weighted_by_outdegrees_matches_table_row() {
        let b = weighted_bounds(&g1(), &[2.0, 3.0, 2.0, 2.0, 2.0]).unwrap();
        assert_eq!((b.lower, b.upper), (2.0, 2.5));
    }

    #[test]
    fn weighted_by_perron_vector_collapses() {
        let g = g1();
        let oracle = crate::oracle::spectral_radius_oracle(&g, 1e-13).unwrap();
        let b = weighted_bounds(&g, &oracle.perron.unwrap()).unwrap();
        assert!((b.lower - oracle.rho).abs() < 1e-6);
        assert!((b.upper - oracle.rho).abs() < 1e-6);
    }

    #[test]
    fn weighted_rejects_nonpositive_entries() {
        assert!(matches!(
            weighted_bounds(&g1(), &[1.0, 1.0, 0.0, 1.0, 1.0]),
            Err(Error::NonPositiveWeight { index: 2, .. })
        ));
        assert!(matches!(
            weighted_bounds(&g1(), &[1.0; 3]),
            Err(Error::WeightLength {
                expected: 5,
                got: 3
            })
        ));
    }

    // Table of Liu bounds for G_1 at 4 decimals, rows (k, L) with k+L <= 4.
    #[test]
    fn liu_rows_match_reference_table() {
        let wt = walk_table(&g1(), 4);
        let expect = [
            ((0, 1), 2.0, 3.0),
            ((0, 2), 2.0, 2.4495),
            ((1, 1), 2.0, 2.5),
            ((0, 3), 2.0801, 2.3513),
            ((1, 2), 2.0817, 2.3452),
            ((2, 1), 2.0, 2.5),
            ((0, 4), 2.1407, 2.3206),
            ((1, 3), 2.1302, 2.2572),
            ((2, 2), 2.0976, 2.2913),
            ((3, 1), 2.0909, 2.3333),
        ];
        for ((k, l), lo, hi) in expect {
            let b = liu_bounds(&wt, k, l).unwrap();
            assert_eq!(round4(b.lower), lo, "(k,L)=({k},{l}) lower");
            assert_eq!(round4(b.upper), hi, "(k,L)=({k},{l}) upper");
        }
    }

    #[test]
    fn liu_intermediate_values_for_0_2() {
        // sqrt(d_i^{2+}): 2, 2.4495, 2.2361, 2, 2.2361.
        let wt = walk_table(&g1(), 2);
        let values: Vec<f64> = (0..5)
            .map(|i| round4(root_of_ratio(wt.count(2, i), wt.count(0, i), 2)))
            .collect();
        assert_eq!(values, vec![2.0, 2.4495, 2.2361, 2.0, 2.2361]);
    }

    #[test]
    fn liu_on_cycle_is_exact() {
        let wt = walk_table(&cycle(4), 3);
        let b = liu_bounds(&wt, 0, 1).unwrap();
        assert_eq!((b.lower, b.upper), (1.0, 1.0));
    }

    #[test]
    fn liu_budget_is_enforced() {
        let wt = walk_table(&g1(), 3);
        assert!(matches!(
            liu_bounds(&wt, 1, 3),
            Err(Error::BudgetExceeded { needed: 4, kmax: 3 })
        ));
    }

    #[test]
    fn liu_rejects_sink_with_positive_k() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1)]).unwrap();
        let wt = walk_table(&g, 3);
        assert!(liu_bounds(&wt, 0, 1).is_ok());
        assert!(matches!(liu_bounds(&wt, 1, 1), Err(Error::ZeroCount { .. })));
    }

    // Table of Xu bounds for G_1, rows (k, N) with M = 1 and k+N <= 4.
    #[test]
    fn xu_rows_match_reference_table() {
        let g = g1();
        let wt = walk_table(&g, 4);
        let pat = reach_pattern(&g, 1);
        let expect = [
            ((0, 1), 2.0, 2.4495),
            ((0, 2), 2.0, 2.4662),
            ((1, 1), 2.0, 2.5),
            ((0, 3), 2.0598, 2.3403),
            ((1, 2), 2.0801, 2.3208),
            ((2, 1), 2.0817, 2.3717),
            ((0, 4), 2.1118, 2.3116),
            ((1, 3), 2.1407, 2.29),
            ((2, 2), 2.1204, 2.2774),
            ((3, 1), 2.0954, 2.2815),
        ];
        for ((k, n), lo, hi) in expect {
            let b = xu_bounds(&wt, &pat, k, 1, n).unwrap();
            assert_eq!(round4(b.lower), lo, "(k,N)=({k},{n}) lower");
            assert_eq!(round4(b.upper), hi, "(k,N)=({k},{n}) upper");
        }
    }

    #[test]
    fn xu_general_m_matches_brute_force() {
        // Independent float evaluation over the same admissible pairs.
        let g = g1();
        let wt = walk_table(&g, 5);
        for (k, m, n) in [(0usize, 2usize, 1usize), (1, 2, 2), (0, 3, 0), (1, 2, 0)] {
            let pat = reach_pattern(&g, m);
            let b = xu_bounds(&wt, &pat, k, m, n).unwrap();
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            let count = |k: usize, i: usize| {
                use num_traits::ToPrimitive;
                wt.count(k, i).to_f64().unwrap()
            };
            for (i, j) in pat.pairs() {
                let v = ((count(k + m, i) * count(k + n, j)) / (count(k, i) * count(k, j)))
                    .powf(1.0 / (m + n) as f64);
                lo = lo.min(v);
                hi = hi.max(v);
            }
            assert!((b.lower - lo).abs() < 1e-12, "(k,M,N)=({k},{m},{n})");
            assert!((b.upper - hi).abs() < 1e-12, "(k,M,N)=({k},{m},{n})");
        }
    }

    #[test]
    fn xu_with_zero_n_equals_liu_exactly() {
        let g = g1();
        let wt = walk_table(&g, 5);
        for (k, m) in [(0usize, 1usize), (0, 2), (1, 2), (2, 3), (1, 1)] {
            let pat = reach_pattern(&g, m);
            let xu = xu_bounds(&wt, &pat, k, m, 0).unwrap();
            let liu = liu_bounds(&wt, k, m).unwrap();
            assert_eq!(xu.lower.to_bits(), liu.lower.to_bits());
            assert_eq!(xu.upper.to_bits(), liu.upper.to_bits());
        }
    }

    #[test]
    fn xu_rejects_mismatched_pattern() {
        let g = g1();
        let wt = walk_table(&g, 4);
        let pat = reach_pattern(&g, 2);
        assert!(matches!(
            xu_bounds(&wt, &pat, 0, 1, 1),
            Err(Error::PatternMismatch { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn xu_signals_nilpotent_power() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1), ("b", "c", 1)]).unwrap();
        let wt = walk_table(&g, 4);
        let pat = reach_pattern(&g, 3);
        assert!(matches!(
            xu_bounds(&wt, &pat, 0, 3, 0),
            Err(Error::NilpotentPower { m: 3 })
        ));
    }

    #[test]
    fn kolotilina_alpha_one_collapses_to_liu() {
        let g = g1();
        let wt = walk_table(&g, 4);
        for (k, l) in [(0usize, 1usize), (1, 1), (0, 2), (2, 1), (1, 2)] {
            let pat = reach_pattern(&g, l);
            let kolo = kolotilina_bounds(&wt, &pat, k, l, 1.0).unwrap();
            let liu = liu_bounds(&wt, k, l).unwrap();
            assert!((kolo.lower - liu.lower).abs() < 1e-12, "(k,L)=({k},{l})");
            assert!((kolo.upper - liu.upper).abs() < 1e-12, "(k,L)=({k},{l})");
        }
    }

    #[test]
    fn kolotilina_half_alpha_matches_xu_diagonal() {
        let g = g1();
        let wt = walk_table(&g, 4);
        for (k, l) in [(0usize, 1usize), (1, 1), (0, 2), (2, 1)] {
            let pat = reach_pattern(&g, l);
            let kolo = kolotilina_bounds(&wt, &pat, k, l, 0.5).unwrap();
            let xu = xu_bounds(&wt, &pat, k, l, l).unwrap();
            assert!((kolo.lower - xu.lower).abs() < 1e-12);
            assert!((kolo.upper - xu.upper).abs() < 1e-12);
        }
    }

    #[test]
    fn kolotilina_fixed_alpha_row_1_1_is_independent() {
        let g = g1();
        let wt = walk_table(&g, 2);
        let pat = reach_pattern(&g, 1);
        for alpha in [0.0, 0.3, 0.5, 0.9, 1.0] {
            let b = kolotilina_bounds(&wt, &pat, 1, 1, alpha).unwrap();
            assert_eq!((round4(b.lower), round4(b.upper)), (2.0, 2.5));
            assert!(b.alpha_independent, "alpha = {alpha}");
        }
    }

    #[test]
    fn kolotilina_rejects_alpha_outside_unit_interval() {
        let g = g1();
        let wt = walk_table(&g, 2);
        let pat = reach_pattern(&g, 1);
        assert!(kolotilina_bounds(&wt, &pat, 0, 1, 1.5).is_err());
        assert!(kolotilina_bounds(&wt, &pat, 0, 1, -0.1).is_err());
    }

    #[test]
    fn kolotilina_requires_sink_free_graph() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1)]).unwrap();
        let wt = walk_table(&g, 2);
        let pat = reach_pattern(&g, 1);
        assert!(matches!(
            kolotilina_bounds(&wt, &pat, 0, 1, 0.5),
            Err(Error::SinkPresent(1))
        ));
    }

    // Grid-search table for G_1 with step 0.01, rows (k, 1).
    #[test]
    fn kolotilina_grid_rows_match_reference_table() {
        let g = g1();
        let wt = walk_table(&g, 4);
        let pat = reach_pattern(&g, 1);

        let b = kolotilina_best(&wt, &pat, 0, 1, 0.01).unwrap();
        assert_eq!(round4(b.lower), 2.0);
        assert_eq!(b.alpha_lower, None, "lower side is alpha-independent");
        assert_eq!(round4(b.upper), 2.4495);
        assert_eq!(b.alpha_upper, Some(0.5));

        let b = kolotilina_best(&wt, &pat, 1, 1, 0.01).unwrap();
        assert_eq!((round4(b.lower), round4(b.upper)), (2.0, 2.5));
        assert!(b.alpha_independent);

        // The alpha = 0.5 evaluation here equals the Xu (2,1) row by the
        // half-alpha equivalence, and 0.50 is the grid argmax.
        let b = kolotilina_best(&wt, &pat, 2, 1, 0.01).unwrap();
        assert_eq!(round4(b.lower), 2.0817);
        assert_eq!(b.alpha_lower, Some(0.5));
        assert_eq!(round4(b.upper), 2.3602);
        assert_eq!(b.alpha_upper, Some(0.55));

        let b = kolotilina_best(&wt, &pat, 3, 1, 0.01).unwrap();
        assert_eq!(round4(b.lower), 2.0993);
        assert_eq!(b.alpha_lower, Some(0.92));
        assert_eq!(round4(b.upper), 2.2611);
        assert_eq!(b.alpha_upper, Some(0.7));
    }

    #[test]
    fn kolotilina_grid_on_regular_graph_is_flat() {
        let g = cycle(5);
        let wt = walk_table(&g, 3);
        let pat = reach_pattern(&g, 1);
        let b = kolotilina_best(&wt, &pat, 1, 1, 0.05).unwrap();
        assert_eq!((b.lower, b.upper), (1.0, 1.0));
        assert!(b.alpha_independent);
    }

    #[test]
    fn sweep_covers_expected_rows() {
        let table = bound_sweep(&g1(), 4, 0.01).unwrap();
        assert_eq!(table.liu.len(), 10);
        assert_eq!(table.xu.len(), 10);
        assert_eq!(table.kolotilina.len(), 4);

        let tiers: Vec<usize> = table.liu.iter().map(|r| r.tier).collect();
        assert_eq!(tiers, vec![1, 2, 2, 3, 3, 3, 4, 4, 4, 4]);

        // Tier-4 best: lower at (0,4), upper at (1,3).
        let best_lower: Vec<_> = table
            .liu
            .iter()
            .filter(|r| r.tier == 4 && r.best_lower_at_tier)
            .map(|r| r.result.params.clone())
            .collect();
        assert_eq!(best_lower, vec![BoundParams::Liu { k: 0, l: 4 }]);
        let best_upper: Vec<_> = table
            .liu
            .iter()
            .filter(|r| r.tier == 4 && r.best_upper_at_tier)
            .map(|r| r.result.params.clone())
            .collect();
        assert_eq!(best_upper, vec![BoundParams::Liu { k: 1, l: 3 }]);
    }

    #[test]
    fn sweep_on_cycle_is_all_ones() {
        let table = bound_sweep(&cycle(4), 3, 0.05).unwrap();
        for row in table.liu.iter().chain(&table.xu) {
            assert_eq!((row.result.lower, row.result.upper), (1.0, 1.0));
        }
    }

    #[test]
    fn sweep_rejects_sinks_and_empty() {
        let g = Digraph::from_labeled_arcs(&[("a", "b", 1)]).unwrap();
        assert!(matches!(
            bound_sweep(&g, 3, 0.01),
            Err(Error::SinkPresent(1))
        ));
        let empty = Digraph::from_dense(None, &[]).unwrap();
        assert!(matches!(bound_sweep(&empty, 3, 0.01), Err(Error::EmptyGraph)));
    }
}
