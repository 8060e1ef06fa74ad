//! Scans the certified biclique graphs on up to six vertices for
//! counterexamples to three structural conjectures: Helly neighbourhoods of
//! simplicial vertices, absence of generalised twins, and Hamiltonicity.
//!
//! ```bash
//! cargo run --release --example conjectures -- 6 8
//! ```

use biclique_lab::conjecture::{check_all, FindingVerdict, TwinReading};
use biclique_lab::recognition::{build_catalogue, Classification};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let max_g = args.next().transpose()?.unwrap_or(6);
    let max_h = args.next().transpose()?.unwrap_or(8);
    let cat = build_catalogue(max_g, max_h)?;

    let mut counterexamples = 0;
    let mut scanned = 0;
    for e in cat.positives() {
        let Classification::BicliqueGraph { preimage } = &e.classification else {
            continue;
        };
        scanned += 1;
        for f in check_all(&e.graph, 4, TwinReading::CompleteSubgraph, Some(preimage))? {
            if f.verdict == FindingVerdict::Counterexample {
                counterexamples += 1;
                println!("counterexample: {}", serde_json::to_string(&f)?);
            }
        }
    }
    println!("{scanned} certified graphs scanned, {counterexamples} counterexamples");

    // uncertified graphs may carry the structure without contradicting anything
    for e in cat.entries.iter().filter(|e| !e.classification.is_positive()).take(3) {
        for f in check_all(&e.graph, 4, TwinReading::CompleteSubgraph, None)? {
            if f.witness.is_some() {
                println!(
                    "{} ({}): {}",
                    f.graph6,
                    f.conjecture.as_str(),
                    serde_json::to_string(&f.witness)?
                );
            }
        }
    }
    Ok(())
}
