//! Builds the catalogue of small biclique graphs and prints a per-order
//! summary, the unresolved graphs and the negatives that pass the `P_3`
//! condition.
//!
//! ```bash
//! cargo run --release --example catalogue -- 6 8
//! ```

use std::time::Instant;

use biclique_lab::graph::write_graph6;
use biclique_lab::recognition::{build_catalogue, Classification};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let max_g = args.next().transpose()?.unwrap_or(6);
    let max_h = args.next().transpose()?.unwrap_or(8);

    let start = Instant::now();
    let cat = build_catalogue(max_g, max_h)?;
    println!(
        "catalogue up to {max_g} vertices, preimages up to {max_h} ({:.2?})",
        start.elapsed()
    );
    println!("order\tgraphs\tpositive\tnegative\tunknown");
    for s in cat.summary() {
        println!(
            "{}\t{}\t{}\t{}\t{}",
            s.order, s.graphs, s.positive, s.negative, s.unknown
        );
    }

    println!("\nbiclique graphs:");
    for e in cat.positives() {
        if let Classification::BicliqueGraph { preimage } = &e.classification {
            println!("  {}  <- KB({})", write_graph6(&e.graph), write_graph6(preimage));
        }
    }

    let unknown: Vec<String> = cat.unknowns().map(|e| write_graph6(&e.graph)).collect();
    println!(
        "\nunknown within bound: {}",
        if unknown.is_empty() {
            "none".into()
        } else {
            unknown.join(" ")
        }
    );

    println!("\nnegatives passing the P3 condition:");
    for e in cat
        .entries
        .iter()
        .filter(|e| e.classification.is_negative() && e.passes_p3_diamond_gem())
    {
        let checks: Vec<&str> = e.failed_checks.iter().map(|c| c.as_str()).collect();
        println!("  {}  fails {}", write_graph6(&e.graph), checks.join(", "));
    }
    Ok(())
}
