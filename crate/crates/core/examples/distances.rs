//! Compares distances between bicliques in `G` with distances in `KB(G)`,
//! and shows the witnesses and bridging bicliques between a far pair.
//!
//! ```bash
//! cargo run --example distances -- 'GhCGGC'
//! ```

use biclique_lab::biclique::enumerate_bicliques;
use biclique_lab::distance::{find_bridging_bicliques, find_witnesses, verify_distance_formula};
use biclique_lab::graph::{named, parse_graph6, write_graph6};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text)?,
        None => named::path(8),
    };
    println!("G = {}", write_graph6(&g));
    println!("pair\td_G\td_KB\tformula\tholds");
    let reports = verify_distance_formula(&g)?;
    for r in &reports {
        println!(
            "{},{}\t{}\t{}\t{}\t{}",
            r.b_index,
            r.b_prime_index,
            r.d_g,
            r.d_kb,
            r.formula_value,
            r.holds()
        );
    }

    let Some(far) = reports.iter().max_by_key(|r| r.d_g) else {
        println!("a single biclique, nothing to compare");
        return Ok(());
    };
    if far.d_g == 0 {
        println!("all bicliques intersect");
        return Ok(());
    }
    let fam = enumerate_bicliques(&g)?;
    let (i, j) = (far.b_index, far.b_prime_index);
    let ws = find_witnesses(&fam, i, j)?;
    println!(
        "\nB{i} and B{j} at distance {}: {} bicliques within {} of both",
        ws.k,
        ws.witnesses.len(),
        ws.k - 1
    );
    for w in &ws.witnesses {
        println!("  B{} ({} from B{i}, {} from B{j})", w.index, w.to_b, w.to_b_prime);
    }
    for c in find_bridging_bicliques(&fam, i, j)? {
        println!("  edge {:?} in B{}: bridge {:?}", c.edge, c.edge_biclique, c.bridge);
    }
    Ok(())
}
