//! Connected graphs up to isomorphism.
//!
//! Orders up to 6 come from all labelled graphs deduplicated by canonical
//! form. Larger orders extend every connected graph on `n - 1` vertices by a
//! new vertex with each nonempty neighbourhood; every connected graph has a
//! vertex whose removal keeps it connected, so nothing is missed. Output is
//! sorted by canonical form and each graph is its own canonical
//! representative, which makes the order reproducible.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::{canonical_form, CanonicalForm, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order [`enumerate_connected_graphs`] will generate.
pub const MAX_GENERATION_ORDER: usize = 9;

const BRUTE_FORCE_LIMIT: usize = 6;

static CACHE: [OnceLock<Vec<Graph>>; MAX_GENERATION_ORDER + 1] = [const { OnceLock::new() }; MAX_GENERATION_ORDER + 1];

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical-form order. Results are cached per order.
pub fn enumerate_connected_graphs(n: usize) -> Result<&'static [Graph]> {
    if n == 0 {
        return Err(Error::TooSmall { order: 0, min: 1 });
    }
    if n > MAX_GENERATION_ORDER {
        return Err(Error::Capability {
            what: "generation order",
            requested: n,
            limit: MAX_GENERATION_ORDER,
        });
    }
    if let Some(v) = CACHE[n].get() {
        return Ok(v);
    }
    let graphs = if n <= BRUTE_FORCE_LIMIT {
        connected_graphs_brute_force(n)?
    } else {
        one_vertex_extensions(enumerate_connected_graphs(n - 1)?)
    };
    Ok(CACHE[n].get_or_init(|| graphs))
}

fn sorted_representatives(forms: HashSet<CanonicalForm>) -> Vec<Graph> {
    let mut forms: Vec<_> = forms.into_iter().collect();
    forms.sort_unstable();
    forms.iter().map(CanonicalForm::to_graph).collect()
}

/// Every labelled graph on `n <= 6` vertices, filtered to connected ones and
/// deduplicated by canonical form.
pub fn connected_graphs_brute_force(n: usize) -> Result<Vec<Graph>> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::Capability {
            what: "brute-force generation order",
            requested: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let forms: HashSet<CanonicalForm> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let mut g = Graph::empty(n).expect("order checked");
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(i, j).expect("in range");
                }
            }
            g.is_connected().then(|| canonical_form(&g).expect("order checked"))
        })
        .collect();
    Ok(sorted_representatives(forms))
}

/// Every graph obtained by adding one vertex with a nonempty neighbourhood
/// to a connected graph of `smaller`, one canonical representative per
/// class, sorted by canonical form. All of `smaller` must have the same order.
pub fn one_vertex_extensions(smaller: &[Graph]) -> Vec<Graph> {
    let forms: HashSet<CanonicalForm> = smaller
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.order();
            (1u128..1 << n).map(move |mask| {
                let mut rows = g.adjacency_rows().to_vec();
                let nbrs = VertexSet::from_bits(mask);
                for u in nbrs {
                    rows[u].insert(n);
                }
                rows.push(nbrs);
                let h = Graph::from_adjacency(rows).expect("extension is a simple graph");
                canonical_form(&h).expect("order checked")
            })
        })
        .collect();
    sorted_representatives(forms)
}
