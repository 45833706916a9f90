//! Load a digraph from an edge-list file and print its structural facts
//! together with the two independent spectral-radius references.
//!
//! ```bash
//! cargo run -p rhobound --example analyze_digraph
//! ```

use rhobound::{exact_charpoly_radius, load_digraph_path, spectral_radius_oracle, GraphFormat};

fn main() -> rhobound::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/g1.edges");
    let g = load_digraph_path(path, GraphFormat::EdgeList)?;

    println!("loaded {} vertices, {} arcs", g.n(), g.arc_count());
    let degrees: Vec<String> = rhobound::format::display_order(g.labels())
        .into_iter()
        .map(|i| format!("{}: {}", g.label(i), g.outdegree(i)))
        .collect();
    println!("outdegrees: {}", degrees.join(", "));

    let scc = g.scc()?;
    println!("strongly connected: {}", scc.is_strongly_connected);
    println!("index of imprimitivity: {}", g.index_of_imprimitivity()?);

    let power = spectral_radius_oracle(&g, 1e-12)?;
    println!(
        "spectral radius (shifted power iteration): {:.9} in {} iterations",
        power.rho, power.iterations
    );
    let exact = exact_charpoly_radius(&g)?;
    println!("spectral radius (exact characteristic polynomial): {exact:.9}");
    println!("methods agree within {:.2e}", (power.rho - exact).abs());
    Ok(())
}
