//! Equality diagnosis for the ratio bounds.
//!
//! On a strongly connected digraph the Liu/Xu bounds collapse to equality
//! exactly when the graph is average (k+1)-outdegree regular, or average
//! (k+1)-outdegree r-quasiregular for r = gcd(h, L) resp. gcd(h, M+N),
//! where h is the index of imprimitivity. Equality in turn forces rho^r
//! to be an integer. Everything here is decided by exact integer and
//! rational arithmetic; floating point appears only in the final
//! root-of-integer verdict.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::bounds::BoundParams;
use crate::error::{Error, Result};
use crate::graph::{gcd, CyclicPartition, Digraph};
use crate::walks::{ratio_compare, ratio_to_f64, walk_table, WalkTable};

/// Exact nonnegative rational (reduced).
pub type Rational = num_rational::Ratio<BigUint>;

fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn serialize_rational_opt<S: Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

fn serialize_rational_vec<S: Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// Numerator and denominator of the order-kappa outdegree ratio at vertex i.
fn ratio_at(wt: &WalkTable, kappa: usize, i: usize) -> (&BigUint, &BigUint) {
    (wt.count(kappa, i), wt.count(kappa - 1, i))
}

/// Checks average kappa-outdegree regularity: is d_i^{kappa+} / d_i^{(kappa-1)+}
/// one exact rational constant over all vertices? Returns that constant.
pub fn check_regular(wt: &WalkTable, kappa: usize) -> Result<Option<Rational>> {
    if kappa == 0 {
        return Err(Error::InvalidParameter("kappa must be positive".into()));
    }
    wt.require_order(kappa)?;
    if wt.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    for i in 0..wt.n() {
        if kappa > 1 {
            wt.require_nonzero(kappa - 1, i)?;
        }
    }
    let (p0, q0) = ratio_at(wt, kappa, 0);
    for i in 1..wt.n() {
        let (p, q) = ratio_at(wt, kappa, i);
        if ratio_compare(p, q, p0, q0)? != std::cmp::Ordering::Equal {
            return Ok(None);
        }
    }
    Ok(Some(Rational::new(p0.clone(), q0.clone())))
}

/// A verified quasiregular structure: the cyclic partition and the exact
/// per-block ratio constants.
#[derive(Debug, Clone, Serialize)]
pub struct Quasiregularity {
    pub r: u64,
    #[serde(serialize_with = "serialize_rational_vec")]
    pub constants: Vec<Rational>,
    #[serde(skip)]
    pub partition: CyclicPartition,
}

/// Checks average kappa-outdegree r-quasiregularity for r >= 2: the graph
/// must be cyclically r-partite (r divides h) and the outdegree ratio must
/// be one exact constant within each block.
pub fn check_quasiregular(
    g: &Digraph,
    wt: &WalkTable,
    kappa: usize,
    r: u64,
) -> Result<Option<Quasiregularity>> {
    if r < 2 {
        return Err(Error::InvalidParameter(
            "quasiregularity needs r >= 2".into(),
        ));
    }
    if kappa == 0 {
        return Err(Error::InvalidParameter("kappa must be positive".into()));
    }
    wt.require_order(kappa)?;
    let h = g.index_of_imprimitivity()?;
    if h % r != 0 {
        return Ok(None);
    }
    let partition = g.cyclic_partition(r)?;
    let mut constants = Vec::with_capacity(r as usize);
    for block in &partition.blocks {
        let first = block[0];
        if kappa > 1 {
            for &i in block {
                wt.require_nonzero(kappa - 1, i)?;
            }
        }
        let (p0, q0) = ratio_at(wt, kappa, first);
        for &i in block.iter().skip(1) {
            let (p, q) = ratio_at(wt, kappa, i);
            if ratio_compare(p, q, p0, q0)? != std::cmp::Ordering::Equal {
                return Ok(None);
            }
        }
        constants.push(Rational::new(p0.clone(), q0.clone()));
    }
    Ok(Some(Quasiregularity {
        r,
        constants,
        partition,
    }))
}

/// Block constants of a quasiregular graph with their product and the
/// spectral radius the product implies (rho^r equals the product).
#[derive(Debug, Clone, Serialize)]
pub struct BlockConstants {
    #[serde(serialize_with = "serialize_rational_vec")]
    pub constants: Vec<Rational>,
    #[serde(serialize_with = "serialize_rational")]
    pub product: Rational,
    pub implied_rho: f64,
}

/// Returns the exact block constants c_1..c_r, their exact product, and
/// the implied spectral radius (product)^(1/r). Errors when the graph is
/// not kappa-outdegree r-quasiregular.
pub fn block_constants(
    g: &Digraph,
    wt: &WalkTable,
    kappa: usize,
    r: u64,
) -> Result<BlockConstants> {
    let quasi = check_quasiregular(g, wt, kappa, r)?
        .ok_or(Error::NotQuasiregular { kappa, r })?;
    Ok(block_constants_of(&quasi))
}

fn block_constants_of(quasi: &Quasiregularity) -> BlockConstants {
    let mut product = Rational::one();
    for c in &quasi.constants {
        product *= c.clone();
    }
    let value = ratio_to_f64(product.numer(), product.denom());
    let implied_rho = if quasi.r == 1 {
        value
    } else {
        value.powf(1.0 / quasi.r as f64)
    };
    BlockConstants {
        constants: quasi.constants.clone(),
        product,
        implied_rho,
    }
}

/// Verdict of the rho^r-is-an-integer consequence of bound equality.
#[derive(Debug, Clone, Serialize)]
pub struct RootCheck {
    pub rho: f64,
    pub r: u64,
    /// rho^r as evaluated.
    pub power: f64,
    /// The integer rho^r rounds to.
    pub nearest: u64,
    /// True when |rho^r - nearest| <= tol.
    pub is_integer: bool,
}

/// Checks whether rho^r is within tol of an integer.
pub fn root_of_integer_check(rho: f64, r: u64, tol: f64) -> RootCheck {
    let power = rho.powi(r as i32);
    let nearest = power.round().max(0.0);
    RootCheck {
        rho,
        r,
        power,
        nearest: nearest as u64,
        is_integer: (power - nearest).abs() <= tol,
    }
}

/// Full equality diagnosis for one Liu or Xu bound parameterization.
#[derive(Debug, Clone, Serialize)]
pub struct EqualityReport {
    pub params: BoundParams,
    /// False when the graph is not strongly connected (or has no arcs);
    /// the equality theory then says nothing, though the bounds remain valid.
    pub applicable: bool,
    pub reason_inapplicable: Option<String>,
    /// kappa = k + 1, the outdegree order the regularity conditions inspect.
    pub kappa: usize,
    pub h: Option<u64>,
    /// r = gcd(h, L) for Liu, gcd(h, M+N) for Xu.
    pub r_used: Option<u64>,
    /// The regularity constant when the graph is average kappa-outdegree regular.
    #[serde(serialize_with = "serialize_rational_opt")]
    pub regular: Option<Rational>,
    pub quasiregular: Option<Quasiregularity>,
    /// Whether the theory predicts the bound collapses to equality; the
    /// prediction applies to both sides at once (equality on either side
    /// forces the other).
    pub equality_predicted: bool,
    /// Exact-arithmetic cross-check: do the min and max of the bound
    /// expression coincide exactly?
    pub extrema_coincide: bool,
    pub root_check: Option<RootCheck>,
}

impl EqualityReport {
    fn inapplicable(params: BoundParams, kappa: usize, reason: String) -> Self {
        EqualityReport {
            params,
            applicable: false,
            reason_inapplicable: Some(reason),
            kappa,
            h: None,
            r_used: None,
            regular: None,
            quasiregular: None,
            equality_predicted: false,
            extrema_coincide: false,
            root_check: None,
        }
    }
}

/// Diagnoses whether the Liu/Xu bound with the given parameters holds with
/// equality on the graph, by the exact structural conditions. When equality
/// is predicted the rho^r root-of-integer consequence is evaluated with
/// tolerance 1e-6 and the bound extrema are cross-checked exactly.
pub fn equality_diagnosis(g: &Digraph, params: &BoundParams) -> Result<EqualityReport> {
    let (k, power) = match params {
        BoundParams::Liu { k, l } => {
            if *l == 0 {
                return Err(Error::InvalidParameter("L must be positive".into()));
            }
            (*k, *l)
        }
        BoundParams::Xu { k, m, n } => {
            if *m == 0 {
                return Err(Error::InvalidParameter("M must be positive".into()));
            }
            (*k, *m + *n)
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "equality theory applies to the liu and xu families, not {other:?}"
            )))
        }
    };
    let kappa = k + 1;

    let scc = g.scc()?;
    if !scc.is_strongly_connected {
        return Ok(EqualityReport::inapplicable(
            params.clone(),
            kappa,
            format!(
                "graph is not strongly connected ({} components)",
                scc.components.len()
            ),
        ));
    }
    let h = match g.index_of_imprimitivity() {
        Ok(h) => h,
        Err(Error::InvalidParameter(_)) => {
            return Ok(EqualityReport::inapplicable(
                params.clone(),
                kappa,
                "graph has no arcs".to_string(),
            ));
        }
        Err(e) => return Err(e),
    };

    let kmax = match params {
        BoundParams::Liu { k, l } => k + l,
        BoundParams::Xu { k, m, n } => k + (*m).max(*n),
        _ => unreachable!(),
    };
    let wt = walk_table(g, kmax.max(kappa));

    let r_used = gcd(h, power as u64);
    let regular = check_regular(&wt, kappa)?;
    let quasiregular = if r_used >= 2 {
        check_quasiregular(g, &wt, kappa, r_used)?
    } else {
        None
    };
    let equality_predicted = regular.is_some() || quasiregular.is_some();

    let extrema_coincide = match params {
        BoundParams::Liu { k, l } => liu_extrema_coincide(&wt, *k, *l)?,
        BoundParams::Xu { k, m, n } => xu_extrema_coincide(g, &wt, *k, *m, *n)?,
        _ => unreachable!(),
    };

    let root_check = if equality_predicted {
        let rho = if let Some(c) = &regular {
            ratio_to_f64(c.numer(), c.denom())
        } else {
            let quasi = quasiregular.as_ref().expect("predicted implies one holds");
            block_constants_of(quasi).implied_rho
        };
        Some(root_of_integer_check(rho, r_used, 1e-6))
    } else {
        None
    };

    Ok(EqualityReport {
        params: params.clone(),
        applicable: true,
        reason_inapplicable: None,
        kappa,
        h: Some(h),
        r_used: Some(r_used),
        regular,
        quasiregular,
        equality_predicted,
        extrema_coincide,
        root_check,
    })
}

fn liu_extrema_coincide(wt: &WalkTable, k: usize, l: usize) -> Result<bool> {
    let (p0, q0) = (wt.count(k + l, 0), wt.count(k, 0));
    for i in 1..wt.n() {
        if ratio_compare(wt.count(k + l, i), wt.count(k, i), p0, q0)?
            != std::cmp::Ordering::Equal
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn xu_extrema_coincide(g: &Digraph, wt: &WalkTable, k: usize, m: usize, n: usize) -> Result<bool> {
    let pat = crate::walks::reach_pattern(g, m);
    let mut first: Option<(BigUint, BigUint)> = None;
    for (i, j) in pat.pairs() {
        let num = wt.count(k + m, i) * wt.count(k + n, j);
        let den = wt.count(k, i) * wt.count(k, j);
        match &first {
            None => first = Some((num, den)),
            Some((n0, d0)) => {
                if ratio_compare(&num, &den, n0, d0)? != std::cmp::Ordering::Equal {
                    return Ok(false);
                }
            }
        }
    }
    Ok(first.is_some())
}
