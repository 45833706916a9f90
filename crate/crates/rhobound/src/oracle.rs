//! Independent spectral-radius reference computations.
//!
//! Two routes are provided and cross-checked in tests: shifted power
//! iteration per strongly connected component, and an exact integer
//! characteristic polynomial (Faddeev-LeVerrier) whose largest real root
//! is isolated by Sturm-sequence bisection. Neither is used by the bound
//! evaluations themselves; they exist to validate the bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Which reference route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMethod {
    ShiftedPower,
    ExactCharpoly,
}

/// Spectral radius estimate with convergence metadata.
#[derive(Debug, Clone, serde::Serialize)]
pub struct OracleResult {
    pub rho: f64,
    pub method: OracleMethod,
    /// Total matrix-vector products across components.
    pub iterations: usize,
    /// Largest final enclosure width among components: a certified bound
    /// on |rho - reported|.
    pub residual: f64,
    pub converged: bool,
    /// Spectral radius per strongly connected component.
    pub per_component: Vec<f64>,
    /// Positive eigenvector (unit L2 norm) when the graph is strongly
    /// connected; the quotient iteration's fixed point.
    pub perron: Option<Vec<f64>>,
}

const ITERATION_CAP: usize = 1_000_000;

/// Spectral radius by power iteration on (A + I) per strongly connected
/// component, reporting the Rayleigh quotient minus one once the
/// min/max ratio enclosure is narrower than tol.
///
/// The shift makes every irreducible block primitive, so the iteration
/// cannot oscillate on imprimitive components. Deterministic all-ones
/// start vector. A reducible graph is handled per component because the
/// spectrum of A is the union of the component block spectra.
pub fn spectral_radius_oracle(g: &Digraph, tol: f64) -> Result<OracleResult> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if tol <= 0.0 {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let scc = g.scc()?;
    let mut per_component = Vec::with_capacity(scc.components.len());
    let mut iterations = 0usize;
    let mut residual = 0.0f64;
    let mut converged = true;
    let mut rho = 0.0f64;
    let mut perron = None;

    for comp in &scc.components {
        let sub = g.induced(comp);
        let (lambda, vec, iters, res, ok) = component_power(&sub, tol);
        iterations += iters;
        residual = residual.max(res);
        converged &= ok;
        if lambda > rho {
            rho = lambda;
        }
        per_component.push(lambda);
        if scc.is_strongly_connected {
            perron = Some(vec);
        }
    }

    Ok(OracleResult {
        rho,
        method: OracleMethod::ShiftedPower,
        iterations,
        residual,
        converged,
        per_component,
        perron,
    })
}

fn component_power(g: &Digraph, tol: f64) -> (f64, Vec<f64>, usize, f64, bool) {
    let n = g.n();
    let arcs: Vec<((usize, usize), u64)> = g.arcs().collect();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut quotient = 1.0f64;
    let mut width = f64::INFINITY;
    for iter in 1..=ITERATION_CAP {
        // y = (A + I) x; the shift keeps x positive, so the quotients
        // y_i / x_i enclose rho(A + I) at every step (weighted row sums of
        // a positive similarity of A + I).
        let mut y = x.clone();
        for &((u, v), m) in &arcs {
            y[u] += m as f64 * x[v];
        }
        let mut cw_min = f64::INFINITY;
        let mut cw_max = f64::NEG_INFINITY;
        for (xi, yi) in x.iter().zip(&y) {
            let ratio = yi / xi;
            cw_min = cw_min.min(ratio);
            cw_max = cw_max.max(ratio);
        }
        let dot: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm_x: f64 = x.iter().map(|a| a * a).sum();
        quotient = dot / norm_x;
        let norm_y = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        for a in &mut y {
            *a /= norm_y;
        }
        x = y;
        // The Rayleigh quotient is a weighted mean of the ratios, so the
        // enclosure width certifies |quotient - rho(A + I)|. Stopping on
        // the width cannot fire early the way successive-quotient
        // differences can (they may collide far from the limit).
        width = cw_max - cw_min;
        if width < tol {
            return (quotient - 1.0, x, iter, width, true);
        }
    }
    (quotient - 1.0, x, ITERATION_CAP, width, false)
}

const EXACT_MAX_N: usize = 16;

/// Largest real root of det(mu I - A) to about 1e-12, via exact integer
/// characteristic polynomials per component and Sturm bisection on
/// [0, max outdegree + 1]. Limited to n <= 16 to keep the exact
/// arithmetic cheap.
pub fn exact_charpoly_radius(g: &Digraph) -> Result<f64> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if g.n() > EXACT_MAX_N {
        return Err(Error::TooLarge {
            n: g.n(),
            max: EXACT_MAX_N,
        });
    }
    let scc = g.scc()?;
    let mut rho: f64 = 0.0;
    for comp in &scc.components {
        let sub = g.induced(comp);
        let poly = charpoly(&sub);
        let hi = sub.outdegrees().into_iter().max().unwrap_or(0) as f64 + 1.0;
        rho = rho.max(largest_real_root(&poly, hi));
    }
    Ok(rho)
}

/// Monic characteristic polynomial of A(G) by the Faddeev-LeVerrier
/// recurrence over exact integers; coefficients returned ascending, so
/// index d holds the coefficient of mu^d and index n is 1.
pub fn charpoly(g: &Digraph) -> Vec<BigInt> {
    let n = g.n();
    let a: Vec<Vec<BigInt>> = g
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();

    // coeffs[n - k] accumulates c_k with p(mu) = mu^n + c_1 mu^{n-1} + ...
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = a.clone();
    let mut c_prev = BigInt::zero();
    for k in 1..=n {
        if k > 1 {
            // M_k = A (M_{k-1} + c_{k-1} I)
            let mut shifted = m.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += &c_prev;
            }
            let mut next = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for l in 0..n {
                    if a[i][l].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let t = &a[i][l] * &shifted[l][j];
                        next[i][j] += t;
                    }
                }
            }
            m = next;
        }
        let trace: BigInt = (0..n).map(|i| m[i][i].clone()).sum();
        let (c_k, rem) = num_integer::Integer::div_rem(&(-trace), &BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = c_k.clone();
        c_prev = c_k;
    }
    coeffs
}

/// Largest real root of an integer polynomial known to have one in
/// [0, hi], located by Sturm-chain bisection on the square-free part.
fn largest_real_root(coeffs: &[BigInt], hi: f64) -> f64 {
    let p: Vec<BigRational> = coeffs.iter().map(|c| BigRational::from(c.clone())).collect();
    let p = trim_poly(p);
    if degree(&p) == 0 {
        return 0.0;
    }
    let chain = sturm_chain(&square_free(&p));

    let mut lo = BigRational::from(BigInt::from(-1));
    let mut hi = BigRational::from(BigInt::from(hi.ceil() as i64 + 1));
    debug_assert!(
        roots_in_interval(&chain, &lo, &hi) >= 1,
        "charpoly must have a real root in the bracket"
    );
    // 60 halvings of a width-<=20 bracket reach ~1e-17, well under 1e-12.
    for _ in 0..60 {
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        if roots_in_interval(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
    mid.to_f64().unwrap()
}

fn trim_poly(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn degree(p: &[BigRational]) -> usize {
    p.len() - 1
}

fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
        .collect()
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.len() == 1 && p[0].is_zero()
}

/// Polynomial remainder of a by b (b nonzero). Exact rational arithmetic
/// cancels the leading term completely at each step.
fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = degree(b);
    let lead_b = b.last().unwrap().clone();
    let mut r = trim_poly(a.to_vec());
    while !is_zero_poly(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let factor = r.last().unwrap() / &lead_b;
        let shift = dr - db;
        for i in 0..=db {
            let t = &b[i] * &factor;
            r[i + shift] -= t;
        }
        r.pop();
        if r.is_empty() {
            r.push(BigRational::zero());
        }
        r = trim_poly(r);
    }
    r
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = trim_poly(a.to_vec());
    let mut y = trim_poly(b.to_vec());
    while !is_zero_poly(&y) {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    // Normalize to monic so the quotient below is stable.
    let lead = x.last().unwrap().clone();
    if !lead.is_zero() && !lead.is_one() {
        for c in &mut x {
            *c /= lead.clone();
        }
    }
    x
}

fn poly_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let da = degree(a);
    let db = degree(b);
    if da < db {
        return vec![BigRational::zero()];
    }
    let mut r = a.to_vec();
    let mut q = vec![BigRational::zero(); da - db + 1];
    let lead_b = b.last().unwrap().clone();
    for k in (0..=da - db).rev() {
        let coeff = r[k + db].clone() / lead_b.clone();
        q[k] = coeff.clone();
        for i in 0..=db {
            let t = &b[i] * &coeff;
            r[i + k] -= t;
        }
    }
    trim_poly(q)
}

fn square_free(p: &[BigRational]) -> Vec<BigRational> {
    let d = derivative(p);
    if d.len() == 1 && d[0].is_zero() {
        return p.to_vec();
    }
    let g = poly_gcd(p, &d);
    if degree(&g) == 0 {
        p.to_vec()
    } else {
        poly_div_exact(p, &g)
    }
}

fn sturm_chain(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = vec![trim_poly(p.to_vec()), trim_poly(derivative(p))];
    loop {
        let last = chain.last().unwrap();
        if is_zero_poly(last) {
            chain.pop();
            break;
        }
        if degree(last) == 0 {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let r = rem(prev, last);
        if is_zero_poly(&r) {
            break;
        }
        let negated: Vec<BigRational> = r.iter().map(|c| -c.clone()).collect();
        chain.push(negated);
    }
    chain
}

fn sign_variations(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let mut variations = 0;
    let mut last_sign = 0i8;
    for p in chain {
        let v = eval(p, x);
        let sign = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if sign != 0 {
            if last_sign != 0 && sign != last_sign {
                variations += 1;
            }
            last_sign = sign;
        }
    }
    variations
}

/// Number of distinct real roots in (lo, hi].
fn roots_in_interval(chain: &[Vec<BigRational>], lo: &BigRational, hi: &BigRational) -> usize {
    sign_variations(chain, lo).saturating_sub(sign_variations(chain, hi))
}
