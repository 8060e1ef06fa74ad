//! Small named graphs used throughout the crate, its tests and examples.

use super::Graph;

fn build(order: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(order, edges).expect("named graph literals are valid")
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    build(n, &edges)
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

/// `K_{1,n}` with center 0.
pub fn star(n: usize) -> Graph {
    complete_bipartite(1, n)
}

/// `K_4` minus the edge `2-3`.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Induced path `0-1-2-3` plus the universal vertex 4.
pub fn gem() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
}

/// The crown: an edge `0-1` with three further vertices `2, 3, 4`, each
/// adjacent to both ends of the edge (`K_{1,1,3}`). Every induced `P_3`
/// lies in a diamond, yet `2, 3, 4` are pairwise twins over a `K_2`.
pub fn crown() -> Graph {
    build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)])
}

/// Hajós graph (3-sun): triangle `0,1,2` with ears `3` on `0-1`, `4` on `1-2`
/// and `5` on `0-2`.
pub fn hajos() -> Graph {
    build(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
    )
}

/// Rising sun: a `K_4` on `0,1,2,3` whose horizon path `0-1-2-3` carries the
/// ears `4` on `0-1`, `5` on `1-2` and `6` on `2-3`.
pub fn rising_sun() -> Graph {
    build(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 2),
            (1, 3),
            (0, 3),
            (4, 0),
            (4, 1),
            (5, 1),
            (5, 2),
            (6, 2),
            (6, 3),
        ],
    )
}

/// `X_1`: the horizon path `0-1-2-3` with chords `0-2` and `1-3` (a diamond
/// missing `0-3`) and the ears `4` on `0-1`, `5` on `1-2` and `6` on `2-3`.
pub fn x1() -> Graph {
    build(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 2),
            (1, 3),
            (4, 0),
            (4, 1),
            (5, 1),
            (5, 2),
            (6, 2),
            (6, 3),
        ],
    )
}
