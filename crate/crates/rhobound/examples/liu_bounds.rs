//! The high-order outdegree ratio bounds: for every (k, L) within a walk
//! budget, rho(G) lies between the min and max over vertices of
//! (d_i^{(k+L)+} / d_i^{k+})^(1/L).
//!
//! ```bash
//! cargo run -p rhobound --example liu_bounds
//! ```

use rhobound::{liu_bounds, load_digraph_path, spectral_radius_oracle, walk_table, GraphFormat};

fn main() -> rhobound::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/g1.edges");
    let g = load_digraph_path(path, GraphFormat::EdgeList)?;
    let rho = spectral_radius_oracle(&g, 1e-12)?.rho;
    println!("reference spectral radius: {rho:.6}\n");

    let budget = 4;
    let wt = walk_table(&g, budget);
    println!("(k,L)   lower     upper     width");
    let mut best: Option<(f64, f64, usize, usize)> = None;
    for tier in 1..=budget {
        for k in 0..tier {
            let l = tier - k;
            let b = liu_bounds(&wt, k, l)?;
            println!(
                "({k},{l})   {:<8.4}  {:<8.4}  {:.4}",
                b.lower,
                b.upper,
                b.upper - b.lower
            );
            assert!(b.lower <= rho + 1e-9 && rho <= b.upper + 1e-9);
            if best.map(|(_, w, _, _)| b.upper - b.lower < w).unwrap_or(true) {
                best = Some((b.lower, b.upper - b.lower, k, l));
            }
        }
    }
    let (_, width, k, l) = best.unwrap();
    println!("\ntightest interval within the budget: (k,L) = ({k},{l}), width {width:.4}");
    Ok(())
}
