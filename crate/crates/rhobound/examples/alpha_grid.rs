//! Alpha-weighted pair bounds: each side is optimized over a grid of
//! alpha in [0, 1]; sides that cannot vary with alpha are flagged.
//!
//! ```bash
//! cargo run -p rhobound --example alpha_grid
//! ```

use rhobound::{kolotilina_best, load_digraph_path, reach_pattern, walk_table, GraphFormat};

fn side(value: f64, alpha: Option<f64>) -> String {
    match alpha {
        Some(a) => format!("{value:.4} at alpha = {a:.2}"),
        None => format!("{value:.4} (alpha-independent)"),
    }
}

fn main() -> rhobound::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/g1.edges");
    let g = load_digraph_path(path, GraphFormat::EdgeList)?;

    let wt = walk_table(&g, 4);
    let arcs = reach_pattern(&g, 1);
    for k in 0..4 {
        let b = kolotilina_best(&wt, &arcs, k, 1, 0.01)?;
        println!("(k,L) = ({k},1)");
        println!("  lower: {}", side(b.lower, b.alpha_lower));
        println!("  upper: {}", side(b.upper, b.alpha_upper));
    }
    Ok(())
}
