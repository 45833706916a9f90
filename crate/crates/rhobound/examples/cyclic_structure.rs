//! Imprimitivity and cyclic block structure: for r = gcd(h, L) the L-th
//! power permutes into r irreducible diagonal blocks whose spectral
//! radii all equal rho(G)^L.
//!
//! ```bash
//! cargo run -p rhobound --example cyclic_structure
//! ```

use rhobound::{spectral_radius_oracle, Digraph};

fn main() -> rhobound::Result<()> {
    // Directed 6-cycle with one doubled arc: h = 6, rho = 2^(1/6).
    let mut rows = vec![vec![0u64; 6]; 6];
    for i in 0..6 {
        rows[i][(i + 1) % 6] = 1;
    }
    rows[0][1] = 2;
    let g = Digraph::from_dense(None, &rows)?;

    let h = g.index_of_imprimitivity()?;
    println!("index of imprimitivity: {h}");

    for r in [1u64, 2, 3, 6] {
        let partition = g.cyclic_partition(r)?;
        let blocks: Vec<String> = partition
            .blocks
            .iter()
            .map(|b| {
                let labels: Vec<&str> = b.iter().map(|&v| g.label(v)).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect();
        println!("cyclic {r}-partition: {}", blocks.join(" -> "));
    }

    let rho = spectral_radius_oracle(&g, 1e-12)?.rho;
    for l in [2usize, 3, 6] {
        let r = num_integer::gcd(h, l as u64);
        let blocks = g.verify_cyclic_blocks(r, l)?;
        println!(
            "\nA^{l} splits into {} irreducible diagonal block(s) (r = gcd({h}, {l}))",
            blocks.len()
        );
        for block in &blocks {
            let sub = block.to_digraph(&g)?;
            let block_rho = spectral_radius_oracle(&sub, 1e-12)?.rho;
            println!(
                "  block of size {}: rho = {:.6}, rho(G)^{l} = {:.6}",
                sub.n(),
                block_rho,
                rho.powi(l as i32)
            );
        }
    }
    Ok(())
}
