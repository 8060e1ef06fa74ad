//! Acceptance run: one line per criterion, `PASS` or `FAIL`, followed by
//! indented details. Exits nonzero when any criterion fails.
//!
//! ```bash
//! cargo test --release --test acceptance
//! ```

mod common;

use std::fs::File;
use std::io::BufReader;
use std::path::Path;
use std::time::Instant;

use biclique_lab::biclique::{biclique_graph, enumerate_bicliques};
use biclique_lab::conjecture::{check_all, find_generalized_twins, ConjectureId, TwinReading};
use biclique_lab::distance::{find_bridging_bicliques, find_witnesses, verify_distance_formula};
use biclique_lab::graph::{
    canonical_form, connected_graphs_brute_force, enumerate_connected_graphs, isomorphic, named, read_graph6_lines,
    write_graph6,
};
use biclique_lab::hamilton::{hamiltonian_cycle, is_hamiltonian_cycle};
use biclique_lab::obstruction::{classify, CheckKind};
use biclique_lab::recognition::{build_catalogue, compare_with_reference, verify_entry, Catalogue, Classification};
use biclique_lab::{Graph, VertexSet};
use common::*;
use rayon::prelude::*;

const CORPUS_ORDERS: std::ops::RangeInclusive<usize> = 2..=7;
const CORPUS_COUNTS: [usize; 6] = [1, 2, 6, 21, 112, 853];

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Outcome {
            pass,
            summary: summary.into(),
            details: Vec::new(),
        }
    }

    fn detail(mut self, line: impl Into<String>) -> Self {
        self.details.push(line.into());
        self
    }
}

fn corpus() -> Vec<&'static Graph> {
    CORPUS_ORDERS
        .flat_map(|n| enumerate_connected_graphs(n).expect("corpus order"))
        .collect()
}

fn fixture(name: &str) -> Vec<Graph> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    let file = File::open(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    read_graph6_lines(BufReader::new(file))
        .map(|l| l.expect("readable").graph.expect("valid graph6"))
        .collect()
}

fn g6_list(graphs: &[Graph]) -> String {
    if graphs.is_empty() {
        return "none".into();
    }
    graphs.iter().map(write_graph6).collect::<Vec<_>>().join(" ")
}

/// Counts per order against the expected class counts, cross-checked by the
/// brute-force generator up to 6 vertices and by orbit counting at 7.
fn corpus_counts_agree() -> Result<(), String> {
    for (n, &expected) in CORPUS_ORDERS.zip(CORPUS_COUNTS.iter()) {
        let graphs = enumerate_connected_graphs(n).map_err(|e| e.to_string())?;
        if graphs.len() != expected {
            return Err(format!("order {n}: {} classes, expected {expected}", graphs.len()));
        }
        if n <= 6 {
            let brute = connected_graphs_brute_force(n).map_err(|e| e.to_string())?;
            if brute.as_slice() != graphs {
                return Err(format!("order {n}: brute-force generator disagrees"));
            }
        } else {
            let factorial: u128 = (1..=n as u128).product();
            let labelled: u128 = graphs
                .par_iter()
                .map(|g| factorial / u128::from(automorphism_count(g)))
                .sum();
            if labelled != labelled_connected_count(n) {
                return Err(format!("order {n}: orbits cover {labelled} labelled graphs"));
            }
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    if let Err(e) = corpus_counts_agree() {
        return Outcome::new(false, "corpus generation").detail(e);
    }
    let graphs = corpus();
    let results: Vec<(usize, Vec<String>)> = graphs
        .par_iter()
        .map(|g| {
            let reports = verify_distance_formula(g).expect("corpus graph");
            let bad = reports
                .iter()
                .filter(|r| !r.holds())
                .map(|r| {
                    format!(
                        "{} pair ({}, {}): d_G={} d_KB={}",
                        write_graph6(g),
                        r.b_index,
                        r.b_prime_index,
                        r.d_g,
                        r.d_kb
                    )
                })
                .collect();
            (reports.len(), bad)
        })
        .collect();
    let pairs: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    let mut o = Outcome::new(
        bad.is_empty(),
        format!(
            "distance formula: {} graphs, {pairs} biclique pairs, {} exceptions",
            graphs.len(),
            bad.len()
        ),
    );
    for b in bad.into_iter().take(10) {
        o = o.detail(b);
    }
    o
}

fn criterion_2() -> Outcome {
    let graphs = corpus();
    let per_graph: Vec<(usize, usize, Vec<String>)> = graphs
        .par_iter()
        .map(|g| {
            let fam = enumerate_bicliques(g).expect("corpus graph");
            let (mut far, mut adjacent, mut bad) = (0, 0, Vec::new());
            for i in 0..fam.len() {
                for j in i + 1..fam.len() {
                    if fam.bicliques()[i].intersects(&fam.bicliques()[j]) {
                        continue;
                    }
                    far += 1;
                    let ws = find_witnesses(&fam, i, j).expect("disjoint pair");
                    if !ws.meets_lower_bound() {
                        bad.push(format!(
                            "{} ({i}, {j}): k={} but {} witnesses",
                            write_graph6(g),
                            ws.k,
                            ws.witnesses.len()
                        ));
                    }
                    if ws.k == 1 {
                        adjacent += 1;
                        let checks = find_bridging_bicliques(&fam, i, j).expect("pair in range");
                        if checks.is_empty() || checks.iter().any(|c| c.bridge.is_none()) {
                            bad.push(format!("{} ({i}, {j}): no bridging biclique", write_graph6(g)));
                        }
                    }
                }
            }
            (far, adjacent, bad)
        })
        .collect();
    let far: usize = per_graph.iter().map(|r| r.0).sum();
    let adjacent: usize = per_graph.iter().map(|r| r.1).sum();
    let bad: Vec<String> = per_graph.into_iter().flat_map(|r| r.2).collect();
    let mut o = Outcome::new(
        bad.is_empty(),
        format!(
            "witness bicliques: {far} disjoint pairs, {adjacent} at distance 1, {} failures",
            bad.len()
        ),
    );
    for b in bad.into_iter().take(10) {
        o = o.detail(b);
    }
    o
}

fn criterion_3() -> Outcome {
    let mut scanned = 0;
    let mut failures = Vec::new();
    let mut largest_kb = 0;
    for n in 2..=8 {
        let graphs = enumerate_connected_graphs(n).expect("order 8 is generated");
        scanned += graphs.len();
        let found: Vec<(usize, Option<String>)> = graphs
            .par_iter()
            .map(|h| {
                let (kb, _) = biclique_graph(h).expect("connected H");
                let report = classify(&kb).expect("KB(H) is connected");
                let failed = report.failed_checks();
                let msg = (!failed.is_empty()).then(|| {
                    let names: Vec<&str> = failed.into_iter().map(CheckKind::as_str).collect();
                    format!(
                        "KB({}) = {} fails {}",
                        write_graph6(h),
                        write_graph6(&kb),
                        names.join(", ")
                    )
                });
                (kb.order(), msg)
            })
            .collect();
        largest_kb = largest_kb.max(found.iter().map(|f| f.0).max().unwrap_or(0));
        failures.extend(found.into_iter().filter_map(|f| f.1));
    }
    let mut o = Outcome::new(
        failures.is_empty(),
        format!("battery soundness: KB(H) for {scanned} graphs H on 2-8 vertices (KB up to {largest_kb} vertices), {} failures", failures.len()),
    );
    for f in failures.into_iter().take(10) {
        o = o.detail(f);
    }
    o
}

fn criterion_4() -> Outcome {
    let mut problems = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            problems.push(what);
        }
    };

    let named_fixtures = [
        ("crown.g6", named::crown()),
        ("hajos.g6", named::hajos()),
        ("rising_sun.g6", named::rising_sun()),
        ("x1.g6", named::x1()),
    ];
    for (file, g) in &named_fixtures {
        let fx = fixture(file);
        check(
            fx.len() == 1 && isomorphic(&fx[0], g).unwrap_or(false),
            format!("{file} does not hold the named graph"),
        );
    }

    let crown = classify(&fixture("crown.g6")[0]).expect("fixture");
    check(crown.p3_diamond_gem.is_pass(), "crown fails the P3 condition".into());
    check(crown.twin_k2.is_fail(), "crown passes the twin check".into());

    for file in ["hajos.g6", "rising_sun.g6", "x1.g6"] {
        let r = classify(&fixture(file)[0]).expect("fixture");
        check(
            r.forbidden_subgraph.is_fail() || r.degree2_bound.is_fail() || r.gem_attachment.is_fail(),
            format!("{file}: no structural check fires"),
        );
    }
    let hajos = classify(&named::hajos()).expect("named");
    check(
        hajos.forbidden_subgraph.is_fail() && hajos.degree2_bound.is_fail() && hajos.helly_degree2.is_fail(),
        "Hajos: forbidden pattern, degree-two bound and Helly checks do not all fire".into(),
    );

    let twins = fixture("twin_pair_examples.g6");
    check(twins.len() == 3, format!("twin pair examples: {} graphs", twins.len()));
    for (i, g) in twins.iter().enumerate() {
        let r = classify(g).expect("fixture");
        check(
            r.p3_diamond_gem.is_pass() && r.twin_k2.is_fail(),
            format!("twin pair example {}: P3 pass and twin fail expected", i + 1),
        );
        if i != 1 {
            check(
                r.degree2_bound.is_fail(),
                format!("twin pair example {} passes the degree-two bound", i + 1),
            );
        }
    }

    let deg2 = fixture("degree_two_examples.g6");
    check(deg2.len() == 2, format!("degree-two examples: {} graphs", deg2.len()));
    for (i, g) in deg2.iter().enumerate() {
        let r = classify(g).expect("fixture");
        check(
            r.degree2_bound.is_fail(),
            format!("degree-two example {} passes the degree-two bound", i + 1),
        );
    }

    let mut o = Outcome::new(
        problems.is_empty(),
        format!("named and reconstructed graphs: {} problems", problems.len()),
    );
    for p in problems {
        o = o.detail(p);
    }
    o
}

fn criterion_5(cat: &Catalogue) -> Outcome {
    let mut o = Outcome::new(true, "");
    let unverified: Vec<Graph> = cat
        .entries
        .iter()
        .filter(|e| !verify_entry(e))
        .map(|e| e.graph.clone())
        .collect();
    if !unverified.is_empty() {
        o.pass = false;
        o = o.detail(format!("entries failing re-verification: {}", g6_list(&unverified)));
    }
    let untagged = cat
        .entries
        .iter()
        .filter(|e| {
            matches!(&e.classification, Classification::NotBicliqueGraph { obstruction } if !obstruction.validate(&e.graph))
        })
        .count();
    if untagged > 0 {
        o.pass = false;
        o = o.detail(format!("{untagged} negatives without a valid obstruction"));
    }

    let reference = fixture("small_biclique_graphs.g6");
    let cmp = compare_with_reference(cat, &reference).expect("reference in range");
    if !cmp.matches() {
        o.pass = false;
        o = o
            .detail(format!(
                "reference graphs without a preimage on <= {} vertices: {}",
                cat.max_h_order,
                g6_list(&cmp.lacking_preimage)
            ))
            .detail(format!(
                "reference graphs classified negative: {}",
                g6_list(&cmp.classified_negative)
            ))
            .detail(format!(
                "positives missing from the reference: {}",
                g6_list(&cmp.unexpected)
            ));
    }

    let p3_negatives: Vec<Graph> = cat
        .entries
        .iter()
        .filter(|e| e.classification.is_negative() && e.passes_p3_diamond_gem())
        .map(|e| e.graph.clone())
        .collect();
    let crown_only = p3_negatives.len() == 1 && isomorphic(&p3_negatives[0], &named::crown()).unwrap_or(false);
    if !crown_only {
        o.pass = false;
        o = o.detail(format!(
            "negatives passing the P3 condition: {}",
            g6_list(&p3_negatives)
        ));
    }
    let smallest_is_crown = p3_negatives
        .iter()
        .min_by_key(|g| (g.order(), g.size()))
        .is_some_and(|g| isomorphic(g, &named::crown()).unwrap_or(false))
        && p3_negatives.iter().filter(|g| g.order() <= 5).count() == 1;
    o = o.detail(format!(
        "crown is the smallest negative passing the P3 condition: {smallest_is_crown}"
    ));

    let unknown: Vec<Graph> = cat.unknowns().map(|e| e.graph.clone()).collect();
    o = o.detail(format!("unknown within bound: {}", g6_list(&unknown)));
    let positives = cat.positives().count();
    o.summary = format!(
        "catalogue (6, {}): {} graphs, {positives} positive, {} unknown, reference has {}",
        cat.max_h_order,
        cat.entries.len(),
        unknown.len(),
        reference.len()
    );
    o
}

/// An injective edge-preserving map from `small` into `big`, if any.
fn subgraph_embedding(small: &Graph, big: &Graph) -> bool {
    fn extend(small: &Graph, big: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
        let v = map.len();
        if v == small.order() {
            return true;
        }
        for w in big.vertices() - used {
            if (0..v).all(|u| !small.has_edge(u, v) || big.has_edge(map[u], w)) {
                map.push(w);
                if extend(small, big, map, used.with(w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    small.order() <= big.order() && extend(small, big, &mut Vec::new(), VertexSet::EMPTY)
}

fn criterion_6() -> Outcome {
    let graphs = corpus();
    let disconnected: Vec<Graph> = graphs
        .par_iter()
        .filter(|g| !biclique_graph(g).expect("corpus graph").0.is_connected())
        .map(|g| (*g).clone())
        .collect();
    let mut pairs = 0;
    let mut missing = Vec::new();
    for n in 2..=5 {
        for g in enumerate_connected_graphs(n).expect("small order") {
            let (kb, _) = biclique_graph(g).expect("connected");
            for bits in 1u128..1 << n {
                let s = VertexSet::from_bits(bits);
                if s.len() < 2 || !g.is_connected_within(s) {
                    continue;
                }
                let (sub, _) = g.induced_subgraph(s).expect("subset of vertices");
                let (kb_sub, _) = biclique_graph(&sub).expect("connected");
                pairs += 1;
                if !subgraph_embedding(&kb_sub, &kb) {
                    missing.push(format!("{} on {:?}", write_graph6(g), s.to_vec()));
                }
            }
        }
    }
    let mut o = Outcome::new(
        disconnected.is_empty() && missing.is_empty(),
        format!(
            "connectivity: {} corpus graphs, {} with disconnected KB; containment: {pairs} induced subgraphs, {} without embedding",
            graphs.len(),
            disconnected.len(),
            missing.len()
        ),
    );
    if !disconnected.is_empty() {
        o = o.detail(format!("disconnected KB: {}", g6_list(&disconnected)));
    }
    for m in missing.into_iter().take(10) {
        o = o.detail(m);
    }
    o
}

fn criterion_7(cat: &Catalogue) -> Outcome {
    let mut counterexamples = Vec::new();
    let mut scanned = 0;
    for e in cat.positives() {
        let Classification::BicliqueGraph { preimage } = &e.classification else {
            continue;
        };
        scanned += 1;
        for reading in [
            TwinReading::CompleteSubgraph,
            TwinReading::MaximalClique,
            TwinReading::Equal,
        ] {
            let findings = check_all(&e.graph, 4, reading, Some(preimage)).expect("certified entry");
            for f in findings.into_iter().filter(|f| f.is_counterexample()) {
                if f.conjecture == ConjectureId::GeneralizedTwins || reading == TwinReading::CompleteSubgraph {
                    counterexamples.push(serde_json::to_string(&f).expect("serialisable"));
                }
            }
        }
    }

    let mut graphs: Vec<Graph> = corpus().into_iter().cloned().collect();
    graphs.extend(cat.entries.iter().map(|e| e.graph.clone()));
    let disagreements: Vec<Graph> = graphs
        .par_iter()
        .filter(|g| {
            let twins = find_generalized_twins(g, 2, TwinReading::Equal).is_some()
                && !isomorphic(g, &named::diamond()).unwrap_or(false);
            let twin_k2 = classify(g).expect("connected").twin_k2.is_fail();
            twins != twin_k2
        })
        .cloned()
        .collect();

    let mut o = Outcome::new(
        counterexamples.is_empty() && disagreements.is_empty(),
        format!(
            "conjectures: {scanned} certified graphs, {} counterexamples; twin scan at i=2 vs twin check over {} graphs, {} disagreements",
            counterexamples.len(),
            graphs.len(),
            disagreements.len()
        ),
    );
    for c in counterexamples.into_iter().take(10) {
        o = o.detail(c);
    }
    if !disagreements.is_empty() {
        o = o.detail(format!("disagreements: {}", g6_list(&disagreements)));
    }
    o
}

fn criterion_8() -> Outcome {
    let mut problems = Vec::new();

    let biclique_bad: Vec<String> = corpus()
        .par_iter()
        .filter(|g| {
            let fam = enumerate_bicliques(g).expect("corpus graph");
            let mut got: Vec<VertexSet> = fam.bicliques().iter().map(|b| b.vertices()).collect();
            got.sort_by_key(|s| s.bits());
            got != subset_bicliques(g)
        })
        .map(|g| write_graph6(g))
        .collect();
    if !biclique_bad.is_empty() {
        problems.push(format!("biclique enumeration differs on {}", biclique_bad.join(" ")));
    }

    for n in 1..=6 {
        let graphs = enumerate_connected_graphs(n).expect("small order");
        let mut codes: Vec<u128> = graphs.par_iter().map(brute_canonical_code).collect();
        codes.sort_unstable();
        codes.dedup();
        if codes.len() != graphs.len() {
            problems.push(format!("order {n}: canonical forms merge distinct classes"));
        }
        let unstable = graphs
            .par_iter()
            .filter(|g| {
                let form = canonical_form(g).expect("small order");
                let mut same = true;
                for_each_permutation(n, |p| {
                    same &= canonical_form(&g.relabel(p).expect("permutation")).expect("small order") == form
                });
                !same
            })
            .count();
        if unstable > 0 {
            problems.push(format!(
                "order {n}: {unstable} graphs change canonical form under relabelling"
            ));
        }
    }

    let mut ham_checked = 0;
    for n in 1..=8 {
        let graphs = enumerate_connected_graphs(n).expect("order 8 is generated");
        ham_checked += graphs.len();
        let bad: Vec<String> = graphs
            .par_iter()
            .filter(|g| {
                let cycle = hamiltonian_cycle(g).expect("small order");
                let valid = cycle.as_ref().is_none_or(|c| is_hamiltonian_cycle(g, c));
                !valid || cycle.is_some() != brute_hamiltonian(g)
            })
            .map(write_graph6)
            .collect();
        if !bad.is_empty() {
            problems.push(format!("Hamiltonian decision differs on {}", bad.join(" ")));
        }
    }

    let mut o = Outcome::new(
        problems.is_empty(),
        format!(
            "oracles: bicliques on {} graphs, canonical forms up to 6 vertices, Hamiltonicity on {ham_checked} graphs",
            corpus().len()
        ),
    );
    for p in problems {
        o = o.detail(p);
    }
    o
}

fn main() {
    let mut all_pass = true;
    let mut report = |n: usize, f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let o = f();
        all_pass &= o.pass;
        println!(
            "criterion {n}: {} {} ({:.1?})",
            if o.pass { "PASS" } else { "FAIL" },
            o.summary,
            start.elapsed()
        );
        for d in &o.details {
            println!("    {d}");
        }
    };
    report(1, &criterion_1);
    report(2, &criterion_2);
    report(3, &criterion_3);
    report(4, &criterion_4);
    let cat = build_catalogue(6, 8).expect("catalogue bounds are supported");
    report(5, &|| criterion_5(&cat));
    report(6, &criterion_6);
    report(7, &|| criterion_7(&cat));
    report(8, &criterion_8);
    if !all_pass {
        std::process::exit(1);
    }
}
