//! Distances between bicliques and their relation to distances in `KB(G)`.
//!
//! The distance between two bicliques is the minimum host distance over
//! vertex pairs taken one from each. For distinct bicliques at distance `d`
//! the corresponding vertices of `KB(G)` are exactly `⌊(d+1)/2⌋ + 1` apart;
//! [`verify_distance_formula`] checks that identity pair by pair.

use std::collections::VecDeque;

use serde::Serialize;

use crate::biclique::{biclique_graph, BicliqueFamily};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// `⌊(d+1)/2⌋ + 1`.
pub fn distance_formula(d_g: usize) -> usize {
    d_g.div_ceil(2) + 1
}

/// Multi-source BFS from `from`; returns the distance to the nearest vertex
/// of `to` together with a pair `(b, b')` realising it.
fn nearest(fam: &BicliqueFamily, from: VertexSet, to: VertexSet) -> (usize, (usize, usize)) {
    let g = fam.host();
    let mut origin = vec![usize::MAX; g.order()];
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::new();
    for s in from {
        origin[s] = s;
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        if to.contains(u) {
            return (dist[u], (origin[u], u));
        }
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                origin[w] = origin[u];
                queue.push_back(w);
            }
        }
    }
    unreachable!("biclique families only exist on connected hosts")
}

/// `d(B_i, B_j)`: zero iff the bicliques share a vertex.
pub fn biclique_distance(fam: &BicliqueFamily, i: usize, j: usize) -> Result<usize> {
    let b = fam.get(i)?.vertices();
    let b2 = fam.get(j)?.vertices();
    Ok(nearest(fam, b, b2).0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicliqueDistanceReport {
    pub b_index: usize,
    pub b_prime_index: usize,
    /// Minimum host distance between the two bicliques.
    pub d_g: usize,
    /// Distance between the two bicliques as vertices of `KB(G)`; 0 when the
    /// indices coincide.
    pub d_kb: usize,
    pub formula_value: usize,
    /// `(b, b')` with `b` in the first biclique realising `d_g`.
    pub closest_pair: (usize, usize),
}

impl BicliqueDistanceReport {
    pub fn holds(&self) -> bool {
        if self.b_index == self.b_prime_index {
            self.d_kb == 0
        } else {
            self.d_kb == self.formula_value
        }
    }
}

/// One report per unordered pair of distinct bicliques of `g`, in index
/// order. Reports whose [`holds`](BicliqueDistanceReport::holds) is false are
/// counterexamples to the formula.
pub fn verify_distance_formula(g: &crate::Graph) -> Result<Vec<BicliqueDistanceReport>> {
    let (kb, fam) = biclique_graph(g)?;
    let kb_dist = kb.distance_matrix();
    let k = fam.len();
    let mut reports = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for (i, row) in kb_dist.iter().enumerate() {
        for (j, d) in row.iter().enumerate().skip(i + 1) {
            let (d_g, closest_pair) = nearest(&fam, fam.bicliques()[i].vertices(), fam.bicliques()[j].vertices());
            let d_kb = d.ok_or_else(|| Error::Inconsistent(format!("KB(G) disconnected between {i} and {j}")))?;
            reports.push(BicliqueDistanceReport {
                b_index: i,
                b_prime_index: j,
                d_g,
                d_kb,
                formula_value: distance_formula(d_g),
                closest_pair,
            });
        }
    }
    Ok(reports)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: usize,
    pub to_b: usize,
    pub to_b_prime: usize,
}

/// Every biclique other than `B`, `B'` lying within `k - 1` of both, where
/// `k = d(B, B') > 0`. There are always at least `k + 1` of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSet {
    pub k: usize,
    pub witnesses: Vec<Witness>,
}

impl WitnessSet {
    pub fn meets_lower_bound(&self) -> bool {
        self.witnesses.len() > self.k
    }
}

pub fn find_witnesses(fam: &BicliqueFamily, i: usize, j: usize) -> Result<WitnessSet> {
    let k = biclique_distance(fam, i, j)?;
    if k == 0 {
        return Err(Error::IntersectingBicliques { i, j });
    }
    let g = fam.host();
    let from_b = g.distances_from_set(fam.bicliques()[i].vertices());
    let from_b2 = g.distances_from_set(fam.bicliques()[j].vertices());
    let reach = |dist: &[Option<usize>], w: VertexSet| w.iter().filter_map(|v| dist[v]).min().expect("connected host");
    let witnesses = fam
        .bicliques()
        .iter()
        .enumerate()
        .filter(|&(w, _)| w != i && w != j)
        .map(|(w, b)| Witness {
            index: w,
            to_b: reach(&from_b, b.vertices()),
            to_b_prime: reach(&from_b2, b.vertices()),
        })
        .filter(|w| w.to_b < k && w.to_b_prime < k)
        .collect();
    Ok(WitnessSet { k, witnesses })
}

/// For disjoint `B`, `B'` joined by the edge `edge`, and `B1` a biclique
/// containing that edge: a biclique `B2` other than all three meeting each
/// of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeCheck {
    pub edge: (usize, usize),
    pub edge_biclique: usize,
    pub bridge: Option<usize>,
}

/// Examines every edge between two disjoint bicliques and every biclique
/// containing such an edge. Empty when the bicliques intersect or are not
/// joined by an edge.
pub fn find_bridging_bicliques(fam: &BicliqueFamily, i: usize, j: usize) -> Result<Vec<BridgeCheck>> {
    let b = *fam.get(i)?;
    let b2 = *fam.get(j)?;
    if b.intersects(&b2) {
        return Ok(Vec::new());
    }
    let g = fam.host();
    let mut out = Vec::new();
    for u in b.vertices() {
        for v in g.neighbors(u) & b2.vertices() {
            let edge_set = VertexSet::singleton(u).with(v);
            for (e, be) in fam.bicliques().iter().enumerate() {
                if !edge_set.is_subset(be.vertices()) {
                    continue;
                }
                let bridge = fam.bicliques().iter().enumerate().position(|(x, bx)| {
                    x != i && x != j && x != e && bx.intersects(&b) && bx.intersects(&b2) && bx.intersects(be)
                });
                out.push(BridgeCheck {
                    edge: (u, v),
                    edge_biclique: e,
                    bridge,
                });
            }
        }
    }
    Ok(out)
}
