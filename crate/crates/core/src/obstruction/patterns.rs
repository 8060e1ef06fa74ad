//! Forbidden induced patterns whose degree-two vertices must keep degree two
//! in the host.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::graph::{named, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternName {
    Hajos,
    RisingSun,
    X1,
}

impl PatternName {
    pub fn as_str(self) -> &'static str {
        match self {
            PatternName::Hajos => "hajos",
            PatternName::RisingSun => "rising-sun",
            PatternName::X1 => "x1",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ForbiddenPattern {
    pub name: PatternName,
    pub graph: Graph,
    /// Pattern vertices that must have degree exactly two in the host.
    pub constrained: VertexSet,
}

impl ForbiddenPattern {
    fn new(name: PatternName, graph: Graph) -> Self {
        let constrained = (0..graph.order()).filter(|&v| graph.degree(v) == 2).collect();
        ForbiddenPattern {
            name,
            graph,
            constrained,
        }
    }

    /// An induced embedding (`mapping[p]` is the host vertex for pattern
    /// vertex `p`) in which constrained vertices have degree two in `host`.
    pub fn find_embedding(&self, host: &Graph) -> Option<Vec<usize>> {
        let order = self.search_order();
        let deg2: VertexSet = (0..host.order()).filter(|&v| host.degree(v) == 2).collect();
        let mut mapping = vec![usize::MAX; self.graph.order()];
        self.extend(host, deg2, &order, 0, &mut mapping, VertexSet::EMPTY)
            .then_some(mapping)
    }

    /// Pattern vertices in BFS order from a constrained vertex, each paired
    /// with an earlier neighbour (its anchor) when it has one.
    fn search_order(&self) -> Vec<(usize, Option<usize>)> {
        let g = &self.graph;
        let start = self.constrained.first().unwrap_or(0);
        let mut order = vec![(start, None)];
        let mut seen = VertexSet::singleton(start);
        let mut i = 0;
        while i < order.len() {
            let (p, _) = order[i];
            for q in g.neighbors(p) - seen {
                seen.insert(q);
                order.push((q, Some(p)));
            }
            i += 1;
        }
        order
    }

    fn extend(
        &self,
        host: &Graph,
        deg2: VertexSet,
        order: &[(usize, Option<usize>)],
        depth: usize,
        mapping: &mut [usize],
        used: VertexSet,
    ) -> bool {
        let Some(&(p, anchor)) = order.get(depth) else {
            return true;
        };
        let mut candidates = match anchor {
            Some(a) => host.neighbors(mapping[a]),
            None => host.vertices(),
        } - used;
        if self.constrained.contains(p) {
            candidates &= deg2;
        }
        let need = self.graph.degree(p);
        for c in candidates {
            if host.degree(c) < need {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&(q, _)| self.graph.has_edge(p, q) == host.has_edge(c, mapping[q]));
            if !consistent {
                continue;
            }
            mapping[p] = c;
            if self.extend(host, deg2, order, depth + 1, mapping, used.with(c)) {
                return true;
            }
        }
        mapping[p] = usize::MAX;
        false
    }

    /// Independent re-check of an embedding.
    pub fn validate_embedding(&self, host: &Graph, mapping: &[usize]) -> bool {
        let k = self.graph.order();
        if mapping.len() != k || mapping.iter().any(|&v| v >= host.order()) {
            return false;
        }
        let image: VertexSet = mapping.iter().copied().collect();
        if image.len() != k {
            return false;
        }
        for p in 0..k {
            for q in p + 1..k {
                if self.graph.has_edge(p, q) != host.has_edge(mapping[p], mapping[q]) {
                    return false;
                }
            }
            if self.constrained.contains(p) && host.degree(mapping[p]) != 2 {
                return false;
            }
        }
        true
    }
}

/// Hajós graph, rising sun and `X_1`, in that order.
pub fn forbidden_patterns() -> &'static [ForbiddenPattern] {
    static PATTERNS: OnceLock<Vec<ForbiddenPattern>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        vec![
            ForbiddenPattern::new(PatternName::Hajos, named::hajos()),
            ForbiddenPattern::new(PatternName::RisingSun, named::rising_sun()),
            ForbiddenPattern::new(PatternName::X1, named::x1()),
        ]
    })
}

pub fn pattern(name: PatternName) -> &'static ForbiddenPattern {
    forbidden_patterns()
        .iter()
        .find(|p| p.name == name)
        .expect("all names have a pattern")
}
