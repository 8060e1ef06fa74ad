//! Brute-force oracles shared by the integration and acceptance tests. None
//! of them call into the library beyond `Graph` accessors.

#![allow(dead_code)]

use biclique_lab::{Graph, VertexSet};

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Upper-triangle adjacency bits of `g` relabelled by `perm` (vertex `v`
/// becomes `perm[v]`).
pub fn code_under(g: &Graph, perm: &[usize]) -> u128 {
    let n = g.order();
    let mut code = 0u128;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        code |= 1 << (b * (b - 1) / 2 + a);
    }
    debug_assert!(n <= 16);
    code
}

/// Largest relabelled code over all `n!` permutations.
pub fn brute_canonical_code(g: &Graph) -> u128 {
    let mut best = 0;
    for_each_permutation(g.order(), |p| best = best.max(code_under(g, p)));
    best
}

pub fn automorphism_count(g: &Graph) -> u64 {
    let own = code_under(g, &(0..g.order()).collect::<Vec<_>>());
    let mut count = 0;
    for_each_permutation(g.order(), |p| count += u64::from(code_under(g, p) == own));
    count
}

/// Labelled connected graphs on `n` vertices, from the standard recurrence
/// over the component containing vertex 0.
pub fn labelled_connected_count(n: usize) -> u128 {
    let binom = |n: usize, k: usize| -> u128 { (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1)) };
    let all = |m: usize| -> u128 { 1u128 << (m * m.saturating_sub(1) / 2) };
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let disconnected: u128 = (1..m).map(|k| binom(m - 1, k - 1) * c[k] * all(m - k)).sum();
        c[m] = all(m) - disconnected;
    }
    c[n]
}

fn is_bipartite_connected(g: &Graph, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let start = s.first()?;
    let mut side = vec![None; g.order()];
    side[start] = Some(false);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for w in s.iter().filter(|&w| g.has_edge(u, w)) {
            match side[w] {
                None => {
                    side[w] = Some(!side[u].unwrap());
                    stack.push(w);
                }
                Some(sw) if sw == side[u].unwrap() => return None,
                _ => {}
            }
        }
    }
    if s.iter().any(|v| side[v].is_none()) {
        return None;
    }
    let a: VertexSet = s.iter().filter(|&v| side[v] == Some(false)).collect();
    Some((a, s - a))
}

/// Vertex sets inducing a complete bipartite graph with both sides
/// nonempty, with all cross pairs adjacent and no edge inside a side.
pub fn induces_complete_bipartite(g: &Graph, s: VertexSet) -> bool {
    if s.len() < 2 {
        return false;
    }
    let Some((a, b)) = is_bipartite_connected(g, s) else {
        return false;
    };
    a.iter().all(|x| b.iter().all(|y| g.has_edge(x, y)))
}

/// All maximal vertex sets inducing a complete bipartite graph, found by
/// scanning every subset, sorted by bit pattern.
pub fn subset_bicliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let candidates: Vec<VertexSet> = (1u128..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&s| induces_complete_bipartite(g, s))
        .collect();
    let mut out: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&s| !candidates.iter().any(|&t| t != s && s.is_subset(t)))
        .collect();
    out.sort_by_key(|s| s.bits());
    out
}

/// Hamiltonicity by trying every cyclic order starting at vertex 0.
pub fn brute_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let mut found = false;
    for_each_permutation(n - 1, |p| {
        if found {
            return;
        }
        let order: Vec<usize> = std::iter::once(0).chain(p.iter().map(|&x| x + 1)).collect();
        found = (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]));
    });
    found
}
