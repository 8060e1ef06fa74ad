//! Bicliques (maximal induced complete bipartite subgraphs) and the biclique
//! graph `KB(G)`.
//!
//! Enumeration walks every vertex subset of the host. A set `S` with lowest
//! vertex `a` can only be complete bipartite with sides `S \ N(a)` and
//! `S ∩ N(a)`, so each subset costs one pass over its members. Since adding
//! one vertex to a complete bipartite set with both sides nonempty keeps it
//! complete bipartite whenever any superset does, maximality is a
//! single-vertex extension test.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest host order accepted by [`enumerate_bicliques`].
pub const MAX_HOST_ORDER: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Biclique {
    vertices: VertexSet,
    side_a: VertexSet,
    side_b: VertexSet,
}

impl Biclique {
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    /// The side holding the smallest vertex id.
    pub fn side_a(&self) -> VertexSet {
        self.side_a
    }

    pub fn side_b(&self) -> VertexSet {
        self.side_b
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn intersects(&self, other: &Biclique) -> bool {
        self.vertices.intersects(other.vertices)
    }

    /// `"0 2 | 1 3"`: side A, then side B, each sorted.
    pub fn display(&self) -> String {
        let side = |s: VertexSet| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        format!("{} | {}", side(self.side_a), side(self.side_b))
    }
}

#[derive(Serialize)]
struct BicliqueJson {
    vertices: Vec<usize>,
    side_a: Vec<usize>,
    side_b: Vec<usize>,
}

impl Serialize for Biclique {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BicliqueJson {
            vertices: self.vertices.to_vec(),
            side_a: self.side_a.to_vec(),
            side_b: self.side_b.to_vec(),
        }
        .serialize(s)
    }
}

/// Sides of `s` if it induces a connected complete bipartite graph, with
/// `side_a` holding the smallest vertex of `s`.
pub fn is_induced_complete_bipartite(g: &Graph, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let a = s.first()?;
    if s.iter().any(|v| v >= g.order()) {
        return None;
    }
    let side_b = g.neighbors(a) & s;
    if side_b.is_empty() {
        return None;
    }
    let side_a = s - side_b;
    for x in side_a {
        if g.neighbors(x) & s != side_b {
            return None;
        }
    }
    for y in side_b {
        if g.neighbors(y) & s != side_a {
            return None;
        }
    }
    Some((side_a, side_b))
}

fn is_maximal(g: &Graph, s: VertexSet, side_a: VertexSet, side_b: VertexSet) -> bool {
    (g.vertices() - s).iter().all(|v| {
        let seen = g.neighbors(v) & s;
        seen != side_a && seen != side_b
    })
}

/// All bicliques of `g` with their bipartitions, plus vertex incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicliqueFamily {
    host: Graph,
    bicliques: Vec<Biclique>,
    incidence: Vec<Vec<usize>>,
}

impl BicliqueFamily {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn bicliques(&self) -> &[Biclique] {
        &self.bicliques
    }

    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    pub fn get(&self, index: usize) -> Result<&Biclique> {
        self.bicliques.get(index).ok_or(Error::BicliqueOutOfRange {
            index,
            count: self.bicliques.len(),
        })
    }

    /// Indices of the bicliques containing `v`.
    pub fn containing(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Intersection graph of the family, one vertex per biclique index.
    pub fn intersection_graph(&self) -> Result<Graph> {
        let k = self.bicliques.len();
        let mut g = Graph::empty(k)?;
        for i in 0..k {
            for j in i + 1..k {
                if self.bicliques[i].intersects(&self.bicliques[j]) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }
}

fn check_host(g: &Graph) -> Result<()> {
    g.require_connected(2)?;
    if g.order() > MAX_HOST_ORDER {
        return Err(Error::Capability {
            what: "biclique host order",
            requested: g.order(),
            limit: MAX_HOST_ORDER,
        });
    }
    Ok(())
}

fn collect(g: &Graph, limit: Option<usize>) -> Option<Vec<Biclique>> {
    let n = g.order();
    let mut found = Vec::new();
    for bits in 3u128..1 << n {
        let s = VertexSet::from_bits(bits);
        if s.len() < 2 {
            continue;
        }
        if let Some((side_a, side_b)) = is_induced_complete_bipartite(g, s) {
            if is_maximal(g, s, side_a, side_b) {
                found.push(Biclique {
                    vertices: s,
                    side_a,
                    side_b,
                });
                if limit.is_some_and(|l| found.len() > l) {
                    return None;
                }
            }
        }
    }
    found.sort_by_cached_key(|b| b.vertices.to_vec());
    Some(found)
}

fn family(g: &Graph, bicliques: Vec<Biclique>) -> BicliqueFamily {
    let mut incidence = vec![Vec::new(); g.order()];
    for (i, b) in bicliques.iter().enumerate() {
        for v in b.vertices {
            incidence[v].push(i);
        }
    }
    BicliqueFamily {
        host: g.clone(),
        bicliques,
        incidence,
    }
}

/// Every biclique of a connected graph on at least two vertices, ordered
/// lexicographically by sorted vertex list.
pub fn enumerate_bicliques(g: &Graph) -> Result<BicliqueFamily> {
    check_host(g)?;
    let found = collect(g, None).expect("no limit");
    Ok(family(g, found))
}

/// Like [`enumerate_bicliques`] but gives up (returning `None`) as soon as
/// more than `limit` bicliques are found.
pub fn enumerate_bicliques_bounded(g: &Graph, limit: usize) -> Result<Option<BicliqueFamily>> {
    check_host(g)?;
    Ok(collect(g, Some(limit)).map(|found| family(g, found)))
}

/// `KB(g)` together with the family its vertices are indexed by.
pub fn biclique_graph(g: &Graph) -> Result<(Graph, BicliqueFamily)> {
    let fam = enumerate_bicliques(g)?;
    let kb = fam.intersection_graph()?;
    Ok((kb, fam))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn sets(fam: &BicliqueFamily) -> Vec<Vec<usize>> {
        fam.bicliques().iter().map(|b| b.vertices().to_vec()).collect()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn complete_bipartite_recognition() {
        let (a, b) = is_induced_complete_bipartite(&path(3), set(&[0, 1, 2])).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1]));
        assert!(is_induced_complete_bipartite(&complete(3), set(&[0, 1, 2])).is_none());
        let (a, b) = is_induced_complete_bipartite(&cycle(4), set(&[0, 1, 2, 3])).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1, 3]));
        // disconnected or single vertices are not complete bipartite
        assert!(is_induced_complete_bipartite(&path(4), set(&[0, 3])).is_none());
        assert!(is_induced_complete_bipartite(&path(4), set(&[2])).is_none());
    }

    #[test]
    fn enumerates_small_examples() {
        assert_eq!(
            sets(&enumerate_bicliques(&complete(3)).unwrap()),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(
            sets(&enumerate_bicliques(&diamond()).unwrap()),
            vec![vec![0, 1], vec![0, 2, 3], vec![1, 2, 3]]
        );
        assert_eq!(sets(&enumerate_bicliques(&cycle(4)).unwrap()), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            sets(&enumerate_bicliques(&path(6)).unwrap()),
            vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]]
        );
    }

    #[test]
    fn biclique_graph_examples() {
        assert_eq!(biclique_graph(&complete(3)).unwrap().0, complete(3));
        assert_eq!(biclique_graph(&diamond()).unwrap().0, complete(3));
        assert_eq!(biclique_graph(&cycle(4)).unwrap().0, complete(1));
        // {012},{123},{234},{345}: consecutive ones share two vertices,
        // those two apart share one, the ends share none
        let kb = biclique_graph(&path(6)).unwrap().0;
        let expected = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(kb, expected);
    }

    #[test]
    fn incidence_and_display() {
        let fam = enumerate_bicliques(&diamond()).unwrap();
        assert_eq!(fam.containing(0), &[0, 1]);
        assert_eq!(fam.containing(3), &[1, 2]);
        assert_eq!(fam.get(1).unwrap().display(), "0 | 2 3");
        assert!(matches!(
            fam.get(3),
            Err(Error::BicliqueOutOfRange { index: 3, count: 3 })
        ));
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            enumerate_bicliques(&complete(1)),
            Err(Error::TooSmall { order: 1, min: 2 })
        );
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(enumerate_bicliques(&two_k2), Err(Error::Disconnected));
        assert!(matches!(enumerate_bicliques(&path(21)), Err(Error::Capability { .. })));
    }

    #[test]
    fn bounded_enumeration_stops_early() {
        assert!(enumerate_bicliques_bounded(&path(6), 3).unwrap().is_none());
        assert_eq!(enumerate_bicliques_bounded(&path(6), 4).unwrap().unwrap().len(), 4);
    }
}
