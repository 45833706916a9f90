//! Sink trimming and the column-sum view. Deleting sinks (zero rows with
//! their columns) never changes the nonzero spectrum, and the transpose
//! bounds the same spectral radius through indegrees.
//!
//! ```bash
//! cargo run -p rhobound --example trim_and_transpose
//! ```

use rhobound::{frobenius_bounds, spectral_radius_oracle, walk_table, Digraph};

fn main() -> rhobound::Result<()> {
    // A strongly connected core with a pendant chain of sinks hanging off.
    let g = Digraph::from_labeled_arcs(&[
        ("a", "b", 1),
        ("b", "c", 1),
        ("c", "a", 2),
        ("c", "x", 1),
        ("x", "y", 1),
    ])?;
    let before = spectral_radius_oracle(&g, 1e-12)?.rho;

    let (trimmed, report) = g.trim(false);
    println!(
        "trimmed {} sink vertex(es) in {} round(s): {:?}",
        report.removed_sinks.len(),
        report.rounds,
        report.removed_sinks
    );
    let after = spectral_radius_oracle(&trimmed, 1e-12)?.rho;
    println!("spectral radius before: {before:.9}");
    println!("spectral radius after:  {after:.9}");

    // Row sums of the trimmed graph vs column sums via the transpose;
    // both intervals contain the same rho.
    let rows = frobenius_bounds(&trimmed)?;
    let cols = frobenius_bounds(&trimmed.transpose())?;
    println!(
        "row-sum interval [{}, {}], column-sum interval [{}, {}]",
        rows.lower, rows.upper, cols.lower, cols.upper
    );

    // Walk counts of the trimmed graph stay positive at every order.
    let wt = walk_table(&trimmed, 6);
    println!(
        "k = 6 outdegrees on the trimmed core: {:?}",
        (0..wt.n()).map(|i| wt.count(6, i).to_string()).collect::<Vec<_>>()
    );
    Ok(())
}
