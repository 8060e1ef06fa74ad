//! Runs every necessary condition for biclique graphs over a few graphs
//! that fail them, printing the witness behind each failure.
//!
//! ```bash
//! cargo run --example obstructions -- 'E}r?' 'G~qa`_'
//! ```

use biclique_lab::graph::{named, parse_graph6, write_graph6, Graph};
use biclique_lab::obstruction::{classify, CheckKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut graphs: Vec<(String, Graph)> = std::env::args()
        .skip(1)
        .map(|s| parse_graph6(&s).map(|g| (s, g)))
        .collect::<Result<_, _>>()?;
    if graphs.is_empty() {
        graphs = vec![
            ("P4".into(), named::path(4)),
            ("crown".into(), named::crown()),
            ("Hajos".into(), named::hajos()),
            ("rising sun".into(), named::rising_sun()),
            ("X1".into(), named::x1()),
        ];
    }
    for (name, g) in &graphs {
        let report = classify(g)?;
        let verdict = if report.excluded {
            "not a biclique graph"
        } else {
            "no obstruction found"
        };
        println!(
            "{name} ({}): {verdict}, {} vertices of degree two",
            write_graph6(g),
            report.degree_two_count
        );
        for o in report.failures() {
            println!("  {}: {}", o.kind().as_str(), serde_json::to_string(&o)?);
        }
        let skipped: Vec<&str> = report
            .not_applicable_checks()
            .into_iter()
            .map(CheckKind::as_str)
            .collect();
        if !skipped.is_empty() {
            println!("  not applicable: {}", skipped.join(", "));
        }
    }
    Ok(())
}
