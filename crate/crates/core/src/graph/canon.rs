//! Exact canonical labelling by individualisation and refinement.
//!
//! The ordered partition is refined by neighbour counts until equitable; the
//! search then individualises each vertex of the first non-singleton cell in
//! turn. The canonical code is the largest upper-triangle bit string (graph6
//! order) over all discrete leaves. Interchangeable twins inside a cell are
//! explored once since swapping them is an automorphism that fixes the
//! current partition.

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`]; the code is a single `u128`.
pub const MAX_CANON_ORDER: usize = 16;

/// Relabelling-invariant encoding; equal iff the graphs are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    order: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n).expect("canonical order is in range");
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    g.add_edge(i, j).expect("in range");
                }
                k += 1;
            }
        }
        g
    }
}

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbors(v);
                    let sig = masks.iter().map(|&m| (row & m).len() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort_by(|a, b| b.0.cmp(&a.0));
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|x| x.1).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

fn encode(g: &Graph, by_label: &[usize]) -> u128 {
    let n = by_label.len();
    let mut code = 0u128;
    for j in 1..n {
        let row = g.neighbors(by_label[j]);
        for &vi in &by_label[..j] {
            code = code << 1 | row.contains(vi) as u128;
        }
    }
    code
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Cells) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let by_label: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = encode(self.g, &by_label);
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, by_label));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.descend(child);
        }
    }
}

/// Returns the canonical form together with a labelling `perm` such that
/// `g.relabel(&perm)` is the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::Capability {
            what: "canonical form order",
            requested: n,
            limit: MAX_CANON_ORDER,
        });
    }
    let mut search = Search { g, best: None };
    search.descend(vec![(0..n).collect()]);
    let (code, by_label) = search.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (label, &v) in by_label.iter().enumerate() {
        perm[v] = label;
    }
    Ok((CanonicalForm { order: n as u8, code }, perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(c, _)| c)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
