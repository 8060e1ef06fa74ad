//! Lists the bicliques of a graph given in graph6 and prints its biclique
//! graph `KB(G)`.
//!
//! ```bash
//! cargo run --example bicliques -- 'E}Y_'
//! ```

use biclique_lab::biclique::biclique_graph;
use biclique_lab::graph::{canonical_form, named, parse_graph6, write_graph6};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text)?,
        None => named::path(6),
    };
    let (kb, fam) = biclique_graph(&g)?;
    println!("G = {} ({} vertices, {} edges)", write_graph6(&g), g.order(), g.size());
    for (i, b) in fam.bicliques().iter().enumerate() {
        println!("  B{i}: {}", b.display());
    }
    println!(
        "KB(G) = {} ({} vertices, {} edges)",
        write_graph6(&kb),
        kb.order(),
        kb.size()
    );
    println!("canonical: {}", write_graph6(&canonical_form(&kb)?.to_graph()));

    // vertex v of G lies in these bicliques
    for v in g.vertices() {
        println!("  vertex {v} in {:?}", fam.containing(v));
    }
    Ok(())
}
