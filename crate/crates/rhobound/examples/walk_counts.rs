//! Exact k-outdegree tables: the number of length-k walks leaving each
//! vertex, kept as arbitrary-precision integers so high orders never
//! overflow.
//!
//! ```bash
//! cargo run -p rhobound --example walk_counts
//! ```

use rhobound::format::display_order;
use rhobound::{load_digraph_path, reach_pattern, walk_table, Digraph, GraphFormat};

fn main() -> rhobound::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/g1.edges");
    let g = load_digraph_path(path, GraphFormat::EdgeList)?;

    let wt = walk_table(&g, 4);
    let order = display_order(g.labels());
    let header: Vec<&str> = order.iter().map(|&i| g.label(i)).collect();
    println!("k-outdegrees d_i^(k+) per vertex ({}):", header.join(", "));
    for k in 0..=wt.kmax() {
        let row: Vec<String> = order.iter().map(|&i| wt.count(k, i).to_string()).collect();
        println!("  k = {k}: ({})", row.join(", "));
    }

    let pat = reach_pattern(&g, 2);
    println!("\npairs joined by a length-2 walk: {}", pat.pairs().count());

    // Counts grow like rho^k; on a multiarc graph they leave u64 range
    // quickly but stay exact here.
    let pair = Digraph::from_labeled_arcs(&[("a", "b", 3), ("b", "a", 2)])?;
    let deep = walk_table(&pair, 160);
    println!(
        "\nlength-160 walk count from 'a' in a two-vertex multiarc graph\n  = {}",
        deep.count(160, 0)
    );
    println!("  ({} decimal digits)", deep.count(160, 0).to_string().len());
    Ok(())
}
