//! Exact Hamiltonian cycle search for small graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`hamiltonian_cycle`].
pub const MAX_HAMILTON_ORDER: usize = 24;

/// A Hamiltonian cycle as a vertex sequence starting at 0 (the closing edge
/// back to 0 is implicit), or `None` if there is none. Graphs on fewer than
/// three vertices have no cycles at all and yield `None`.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n > MAX_HAMILTON_ORDER {
        return Err(Error::Capability {
            what: "Hamiltonian search order",
            requested: n,
            limit: MAX_HAMILTON_ORDER,
        });
    }
    if n < 3 || g.min_degree() < 2 || !g.is_connected() || g.cut_vertex().is_some() {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    path.push(0);
    Ok(extend(g, &mut path, VertexSet::singleton(0)).then_some(path))
}

fn extend(g: &Graph, path: &mut Vec<usize>, used: VertexSet) -> bool {
    let n = g.order();
    let last = *path.last().expect("path starts at 0");
    if path.len() == n {
        return g.has_edge(last, 0);
    }
    let free = g.vertices() - used;
    // every unvisited vertex still needs two usable neighbours: free ones,
    // or the path ends (the current tip and vertex 0)
    let ends = VertexSet::singleton(last).with(0);
    for v in free {
        if (g.neighbors(v) & (free | ends)).len() < 2 {
            return false;
        }
    }
    // vertex 0 must stay reachable from the unvisited part
    if !g.neighbors(0).intersects(free) {
        return false;
    }
    // try the most constrained neighbours first
    let mut next: Vec<usize> = (g.neighbors(last) & free).to_vec();
    next.sort_by_key(|&v| (g.neighbors(v) & free).len());
    for v in next {
        path.push(v);
        if extend(g, path, used.with(v)) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    Ok(hamiltonian_cycle(g)?.is_some())
}

/// True iff `cycle` visits every vertex once and consecutive vertices
/// (cyclically) are adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.order();
    if n < 3 || cycle.len() != n || cycle.iter().any(|&v| v >= n) {
        return false;
    }
    let seen: VertexSet = cycle.iter().copied().collect();
    seen.len() == n && (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_examples() {
        assert!(is_hamiltonian(&complete(3)).unwrap());
        assert!(is_hamiltonian(&cycle(7)).unwrap());
        assert!(is_hamiltonian(&gem()).unwrap());
        assert!(!is_hamiltonian(&path(4)).unwrap());
        assert!(!is_hamiltonian(&complete(2)).unwrap());
        assert!(!is_hamiltonian(&complete_bipartite(2, 3)).unwrap());
        let c = hamiltonian_cycle(&complete(5)).unwrap().unwrap();
        assert!(is_hamiltonian_cycle(&complete(5), &c));
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let petersen = Graph::from_edges(10, &edges).unwrap();
        assert!(!is_hamiltonian(&petersen).unwrap());
        // removing any vertex leaves a Hamiltonian graph (hypohamiltonian)
        let (sub, _) = petersen.induced_subgraph(petersen.vertices().without(0)).unwrap();
        assert!(is_hamiltonian(&sub).unwrap());
    }

    #[test]
    fn capability_bound() {
        assert!(matches!(hamiltonian_cycle(&cycle(25)), Err(Error::Capability { .. })));
    }
}
