//! Counts connected graphs per order and prints the smallest ones in graph6.
//!
//! ```bash
//! cargo run --release --example generate_graphs -- 8
//! ```

use std::time::Instant;

use biclique_lab::graph::{enumerate_connected_graphs, write_graph6};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(7);
    for n in 1..=max {
        let start = Instant::now();
        let graphs = enumerate_connected_graphs(n)?;
        println!("n={n}: {} connected graphs ({:.2?})", graphs.len(), start.elapsed());
        if n <= 4 {
            let listing: Vec<String> = graphs.iter().map(write_graph6).collect();
            println!("  {}", listing.join(" "));
        }
    }
    Ok(())
}
