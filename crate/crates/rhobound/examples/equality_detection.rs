//! When do the ratio bounds collapse to the exact spectral radius?
//! Exactly when the digraph is average (k+1)-outdegree regular or
//! r-quasiregular with r = gcd(h, L) — and then rho^r is an integer.
//!
//! ```bash
//! cargo run -p rhobound --example equality_detection
//! ```

use rhobound::{equality_diagnosis, BoundParams, Digraph};

fn diagnose(name: &str, g: &Digraph, k: usize, l: usize) -> rhobound::Result<()> {
    let report = equality_diagnosis(g, &BoundParams::Liu { k, l })?;
    print!("{name}, (k,L) = ({k},{l}): ");
    if !report.applicable {
        println!("not strongly connected; equality theory says nothing");
        return Ok(());
    }
    if report.equality_predicted {
        let rc = report.root_check.expect("prediction implies a root check");
        println!(
            "equality (rho^{} = {} exactly, so rho = {:.6})",
            rc.r, rc.nearest, rc.rho
        );
    } else {
        println!("strict inequality");
    }
    assert_eq!(report.equality_predicted, report.extrema_coincide);
    Ok(())
}

fn main() -> rhobound::Result<()> {
    // Two vertices, a double arc one way and a single arc back: rho = sqrt(2).
    let pair = Digraph::from_labeled_arcs(&[("1", "2", 2), ("2", "1", 1)])?;
    diagnose("two-vertex multiarc", &pair, 0, 1)?;
    diagnose("two-vertex multiarc", &pair, 0, 2)?;

    // Bipartite 4-vertex digraph with blocks {1,2} and {3,4}: rho = sqrt(2).
    let bipartite = Digraph::from_dense(
        None,
        &[
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
        ],
    )?;
    diagnose("bipartite 4-vertex", &bipartite, 0, 2)?;
    diagnose("bipartite 4-vertex", &bipartite, 0, 3)?;

    // Directed 6-cycle: outdegree-regular with c = 1.
    let six: Vec<Vec<u64>> = (0..6)
        .map(|i| (0..6).map(|j| u64::from(j == (i + 1) % 6)).collect())
        .collect();
    let cycle = Digraph::from_dense(None, &six)?;
    diagnose("directed 6-cycle", &cycle, 0, 1)?;

    // The benchmark digraph is neither regular nor quasiregular.
    let g1 = rhobound::load_digraph_path(
        concat!(env!("CARGO_MANIFEST_DIR"), "/data/g1.edges"),
        rhobound::GraphFormat::EdgeList,
    )?;
    diagnose("benchmark digraph", &g1, 0, 2)?;
    Ok(())
}
