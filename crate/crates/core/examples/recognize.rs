//! Decides whether small graphs are biclique graphs by combining the
//! obstruction checks with a bounded search for a preimage `H`.
//!
//! ```bash
//! cargo run --release --example recognize -- 9 'E~qG' 'D}o'
//! ```

use biclique_lab::biclique::biclique_graph;
use biclique_lab::graph::{isomorphic, parse_graph6, write_graph6};
use biclique_lab::recognition::{classify_graph, Classification, PreimageIndex, DEFAULT_MAX_H_ORDER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).peekable();
    let max_h = match args.peek().and_then(|a| a.parse::<usize>().ok()) {
        Some(b) => {
            args.next();
            b
        }
        None => DEFAULT_MAX_H_ORDER,
    };
    let mut graphs = args.map(|s| parse_graph6(&s)).collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        graphs = ["Bw", "Bo", "D}o", "E~~w", "E~qG"]
            .iter()
            .map(|s| parse_graph6(s))
            .collect::<Result<_, _>>()?;
    }
    let max_g = graphs.iter().map(|g| g.order()).max().unwrap_or(1);
    let index = PreimageIndex::build(max_g, max_h)?;
    println!("searched {} graphs H on up to {max_h} vertices", index.scanned());

    for g in &graphs {
        let entry = classify_graph(g, &index)?;
        match &entry.classification {
            Classification::BicliqueGraph { preimage } => {
                let (kb, _) = biclique_graph(preimage)?;
                println!(
                    "{}: biclique graph, KB({}) ≅ G: {}",
                    write_graph6(g),
                    write_graph6(preimage),
                    isomorphic(&kb, g)?
                );
            }
            Classification::NotBicliqueGraph { obstruction } => {
                println!(
                    "{}: not a biclique graph ({})",
                    write_graph6(g),
                    obstruction.kind().as_str()
                );
            }
            Classification::UnknownWithinBound => {
                println!(
                    "{}: no preimage on up to {max_h} vertices and no obstruction",
                    write_graph6(g)
                );
            }
        }
    }
    Ok(())
}
