//! Evaluate every bound family over one walk budget and report the best
//! certified interval, checked against the independent reference.
//!
//! ```bash
//! cargo run -p rhobound --example full_sweep
//! ```

use rhobound::{bound_sweep, load_digraph_path, spectral_radius_oracle, GraphFormat};

fn main() -> rhobound::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/g1.edges");
    let g = load_digraph_path(path, GraphFormat::EdgeList)?;

    let table = bound_sweep(&g, 4, 0.01)?;
    let mut best_lower = f64::NEG_INFINITY;
    let mut best_upper = f64::INFINITY;
    for row in table.liu.iter().chain(&table.xu) {
        best_lower = best_lower.max(row.result.lower);
        best_upper = best_upper.min(row.result.upper);
    }
    for r in &table.kolotilina {
        best_lower = best_lower.max(r.lower);
        best_upper = best_upper.min(r.upper);
    }

    println!(
        "{} liu rows, {} xu rows, {} alpha-grid rows evaluated",
        table.liu.len(),
        table.xu.len(),
        table.kolotilina.len()
    );
    println!("best certified interval: [{best_lower:.4}, {best_upper:.4}]");

    let rho = spectral_radius_oracle(&g, 1e-12)?.rho;
    println!("reference spectral radius: {rho:.6}");
    assert!(best_lower <= rho && rho <= best_upper);
    println!("reference lies inside the interval");
    Ok(())
}
