//! Shared fixtures, random-instance generators, and independent oracles
//! for the integration suites.

#![allow(dead_code)]

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rhobound::Digraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The 5-vertex benchmark digraph with indices matching numeric labels.
pub fn g1() -> Digraph {
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

pub fn fixture_path() -> String {
    format!("{}/data/g1.edges", env!("CARGO_MANIFEST_DIR"))
}

pub fn cycle(n: usize) -> Digraph {
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(j == (i + 1) % n)).collect())
        .collect();
    Digraph::from_dense(None, &rows).unwrap()
}

/// Shift-register digraph on d^m states: outdegree d everywhere, h = 1.
pub fn de_bruijn(d: usize, m: usize) -> Digraph {
    let n = d.pow(m as u32);
    let mut rows = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for c in 0..d {
            row[(i * d + c) % n] += 1;
        }
    }
    Digraph::from_dense(None, &rows).unwrap()
}

pub fn two_vertex_multiarc() -> Digraph {
    Digraph::from_labeled_arcs(&[("1", "2", 2), ("2", "1", 1)]).unwrap()
}

pub fn bipartite4() -> Digraph {
    Digraph::from_dense(
        None,
        &[
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
        ],
    )
    .unwrap()
}

/// Random digraph that may contain sinks and sources.
pub fn random_digraph(rng: &mut ChaCha8Rng, max_n: usize, max_mult: u64) -> Digraph {
    let n = rng.gen_range(1..=max_n);
    let mut rows = vec![vec![0u64; n]; n];
    for row in rows.iter_mut() {
        let degree = rng.gen_range(0..=3usize);
        for _ in 0..degree {
            let j = rng.gen_range(0..n);
            row[j] += rng.gen_range(1..=max_mult);
        }
    }
    Digraph::from_dense(None, &rows).unwrap()
}

/// Random digraph in which every vertex keeps at least one outgoing arc.
pub fn random_sink_free(rng: &mut ChaCha8Rng, max_n: usize, max_mult: u64) -> Digraph {
    let n = rng.gen_range(2..=max_n);
    let mut rows = vec![vec![0u64; n]; n];
    for row in rows.iter_mut() {
        let degree = rng.gen_range(1..=3usize);
        for _ in 0..degree {
            let j = rng.gen_range(0..n);
            row[j] += rng.gen_range(1..=max_mult);
        }
    }
    Digraph::from_dense(None, &rows).unwrap()
}

/// Random strongly connected digraph: a spanning cycle plus random arcs.
pub fn random_strongly_connected(rng: &mut ChaCha8Rng, max_n: usize, max_mult: u64) -> Digraph {
    let n = rng.gen_range(2..=max_n);
    let mut rows = vec![vec![0u64; n]; n];
    for i in 0..n {
        rows[i][(i + 1) % n] = 1;
    }
    let extras = rng.gen_range(0..=n);
    for _ in 0..extras {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        rows[i][j] += rng.gen_range(1..=max_mult);
    }
    Digraph::from_dense(None, &rows).unwrap()
}

/// Random strongly connected cyclically r-partite digraph: arcs only
/// advance one block. Falls back to the complete block-cyclic graph when
/// rejection sampling fails to hit strong connectivity.
pub fn random_r_cyclic(rng: &mut ChaCha8Rng, r: usize, max_n: usize) -> Digraph {
    let per_block_max = (max_n / r).max(1);
    let sizes: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=per_block_max)).collect();
    let n: usize = sizes.iter().sum();
    let mut starts = vec![0usize; r];
    for b in 1..r {
        starts[b] = starts[b - 1] + sizes[b - 1];
    }
    let block_range = |b: usize| starts[b]..starts[b] + sizes[b];

    for _ in 0..60 {
        let mut rows = vec![vec![0u64; n]; n];
        for b in 0..r {
            let next = (b + 1) % r;
            for i in block_range(b) {
                for _ in 0..rng.gen_range(1..=2usize) {
                    let j = rng.gen_range(block_range(next).start..block_range(next).end);
                    rows[i][j] += rng.gen_range(1..=2u64);
                }
            }
        }
        let g = Digraph::from_dense(None, &rows).unwrap();
        if g.scc().unwrap().is_strongly_connected {
            return g;
        }
    }
    // Complete block-cyclic fallback is always strongly connected.
    let mut rows = vec![vec![0u64; n]; n];
    for b in 0..r {
        let next = (b + 1) % r;
        for i in block_range(b) {
            for j in block_range(next) {
                rows[i][j] = 1;
            }
        }
    }
    Digraph::from_dense(None, &rows).unwrap()
}

/// Independent dense matrix power over exact big integers.
pub fn dense_power(g: &Digraph, k: usize) -> Vec<Vec<BigUint>> {
    let n = g.n();
    let a: Vec<Vec<BigUint>> = g
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigUint::from).collect())
        .collect();
    let mut acc: Vec<Vec<BigUint>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigUint::from(u64::from(i == j)))
                .collect()
        })
        .collect();
    for _ in 0..k {
        let mut next = vec![vec![BigUint::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if acc[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !a[l][j].is_zero() {
                        let t = &acc[i][l] * &a[l][j];
                        next[i][j] += t;
                    }
                }
            }
        }
        acc = next;
    }
    acc
}

pub fn row_sums(m: &[Vec<BigUint>]) -> Vec<BigUint> {
    m.iter().map(|row| row.iter().sum()).collect()
}

/// Reference spectral radius via the shifted power iteration.
pub fn rho(g: &Digraph) -> f64 {
    rhobound::spectral_radius_oracle(g, 1e-12).unwrap().rho
}
