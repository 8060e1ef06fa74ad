//! Counterexample search for three open statements about biclique graphs.
//!
//! A graph can only be a counterexample if it is certified as a biclique
//! graph by a preimage, which is re-checked here. For uncertified graphs the
//! structure is still reported, with a note, but never as a counterexample.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::biclique::enumerate_bicliques;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, isomorphic, named, write_graph6, Graph, VertexSet};
use crate::hamilton::is_hamiltonian;
use crate::helly::{common_intersection, helly_violation, pairwise_intersecting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureId {
    /// Closed neighbourhoods of simplicial vertices form a Helly family.
    SimplicialHelly,
    /// No `i >= 2` vertices share an open neighbourhood contained in a `K_i`.
    GeneralizedTwins,
    /// Every biclique graph is Hamiltonian.
    Hamiltonian,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 3] = [
        ConjectureId::SimplicialHelly,
        ConjectureId::GeneralizedTwins,
        ConjectureId::Hamiltonian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConjectureId::SimplicialHelly => "simplicial-helly",
            ConjectureId::GeneralizedTwins => "generalized-twins",
            ConjectureId::Hamiltonian => "hamiltonian",
        }
    }
}

/// How "the common neighbourhood is contained in a `K_i`" is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinReading {
    /// Contained in the vertex set of some complete subgraph on `i` vertices.
    #[default]
    CompleteSubgraph,
    /// Contained in a maximal clique with exactly `i` vertices.
    MaximalClique,
    /// Equal to the vertex set of a complete subgraph on `i` vertices. At
    /// `i = 2` this is the twin condition of the obstruction battery.
    Equal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingVerdict {
    Consistent,
    Counterexample,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConjectureWitness {
    /// Simplicial vertices whose closed neighbourhoods pairwise meet but have
    /// no common element.
    HellySubfamily {
        vertices: Vec<usize>,
    },
    /// `twins` share one open neighbourhood, contained in the complete set
    /// `complete` with `|complete| = |twins|`.
    Twins {
        reading: TwinReading,
        twins: Vec<usize>,
        complete: Vec<usize>,
    },
    NoHamiltonianCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureFinding {
    pub conjecture: ConjectureId,
    pub graph6: String,
    pub verdict: FindingVerdict,
    /// Whether a preimage was supplied and verified.
    pub certified: bool,
    /// Structure violating the statement, present whether or not the graph
    /// is certified.
    pub witness: Option<ConjectureWitness>,
    pub note: Option<String>,
}

impl ConjectureFinding {
    fn new(conjecture: ConjectureId, g: &Graph, certified: bool, witness: Option<ConjectureWitness>) -> Self {
        let (verdict, note) = match (&witness, certified) {
            (Some(_), true) => (FindingVerdict::Counterexample, None),
            (Some(_), false) => (
                FindingVerdict::Consistent,
                Some("structure present but the graph is not certified as a biclique graph".to_string()),
            ),
            (None, _) => (FindingVerdict::Consistent, None),
        };
        ConjectureFinding {
            conjecture,
            graph6: write_graph6(g),
            verdict,
            certified,
            witness,
            note,
        }
    }

    fn not_applicable(conjecture: ConjectureId, g: &Graph, certified: bool, note: &str) -> Self {
        ConjectureFinding {
            conjecture,
            graph6: write_graph6(g),
            verdict: FindingVerdict::NotApplicable,
            certified,
            witness: None,
            note: Some(note.to_string()),
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.verdict == FindingVerdict::Counterexample
    }
}

/// Checks that `preimage`, if given, satisfies `KB(preimage) ≅ g`.
pub fn certify(g: &Graph, preimage: Option<&Graph>) -> Result<bool> {
    let Some(h) = preimage else {
        return Ok(false);
    };
    let kb = enumerate_bicliques(h)?.intersection_graph()?;
    if kb.order() == g.order() && canonical_form(&kb)? == canonical_form(g)? {
        Ok(true)
    } else {
        Err(Error::Certificate(format!("KB({h}) is {kb}, not isomorphic to {g}")))
    }
}

pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.is_clique(g.neighbors(v))).collect()
}

/// Subfamilies are tried exhaustively, smallest first, up to this many
/// members; larger families fall back to the triple criterion.
const EXHAUSTIVE_HELLY_LIMIT: usize = 20;

/// A smallest pairwise intersecting subfamily with empty intersection.
fn smallest_helly_violation(family: &[VertexSet]) -> Option<Vec<usize>> {
    let k = family.len();
    if k > EXHAUSTIVE_HELLY_LIMIT {
        return helly_violation(family);
    }
    let mut best: Option<u32> = None;
    for mask in 1u32..1 << k {
        if best.is_some_and(|b| mask.count_ones() >= b.count_ones()) {
            continue;
        }
        let sub: Vec<VertexSet> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| family[i]).collect();
        if pairwise_intersecting(&sub) && common_intersection(&sub).is_empty() {
            best = Some(mask);
        }
    }
    best.map(|m| (0..k).filter(|i| m >> i & 1 == 1).collect())
}

pub fn check_simplicial_helly(g: &Graph, preimage: Option<&Graph>) -> Result<ConjectureFinding> {
    g.require_connected(1)?;
    let certified = certify(g, preimage)?;
    let simplicial = simplicial_vertices(g);
    let family: Vec<VertexSet> = simplicial.iter().map(|&v| g.closed_neighbors(v)).collect();
    let witness = smallest_helly_violation(&family).map(|idx| ConjectureWitness::HellySubfamily {
        vertices: idx.iter().map(|&i| simplicial[i]).collect(),
    });
    Ok(ConjectureFinding::new(
        ConjectureId::SimplicialHelly,
        g,
        certified,
        witness,
    ))
}

/// Maximal cliques by Bron–Kerbosch with pivoting.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn expand(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = (p | x)
            .iter()
            .max_by_key(|&u| (g.neighbors(u) & p).len())
            .expect("p or x is nonempty");
        let (mut p, mut x) = (p, x);
        for v in p - g.neighbors(pivot) {
            expand(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_by_key(|c| c.to_vec());
    out
}

/// A complete set with exactly `i` vertices containing `nb`, under `reading`.
fn containing_complete(
    g: &Graph,
    nb: VertexSet,
    i: usize,
    reading: TwinReading,
    cliques: &[VertexSet],
) -> Option<VertexSet> {
    if !g.is_clique(nb) || nb.len() > i {
        return None;
    }
    match reading {
        TwinReading::Equal => (nb.len() == i).then_some(nb),
        TwinReading::MaximalClique => cliques.iter().copied().find(|c| c.len() == i && nb.is_subset(*c)),
        TwinReading::CompleteSubgraph => {
            // grow nb inside a maximal clique containing it
            let c = cliques.iter().copied().find(|c| nb.is_subset(*c) && c.len() >= i)?;
            let extra: Vec<usize> = (c - nb).iter().take(i - nb.len()).collect();
            Some(extra.into_iter().fold(nb, VertexSet::with))
        }
    }
}

/// First structure for `i = 2..=i_max`, scanning twin classes in order of
/// their smallest vertex.
pub fn find_generalized_twins(g: &Graph, i_max: usize, reading: TwinReading) -> Option<ConjectureWitness> {
    let mut classes: BTreeMap<u128, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        classes.entry(g.neighbors(v).bits()).or_default().push(v);
    }
    let mut classes: Vec<(VertexSet, Vec<usize>)> = classes
        .into_iter()
        .filter(|(_, c)| c.len() >= 2)
        .map(|(bits, c)| (VertexSet::from_bits(bits), c))
        .collect();
    classes.sort_by_key(|(_, c)| c[0]);
    let cliques = maximal_cliques(g);
    for i in 2..=i_max {
        for (nb, class) in &classes {
            if class.len() < i || nb.is_empty() {
                continue;
            }
            if let Some(k) = containing_complete(g, *nb, i, reading, &cliques) {
                return Some(ConjectureWitness::Twins {
                    reading,
                    twins: class[..i].to_vec(),
                    complete: k.to_vec(),
                });
            }
        }
    }
    None
}

pub fn check_generalized_twins(
    g: &Graph,
    i_max: usize,
    reading: TwinReading,
    preimage: Option<&Graph>,
) -> Result<ConjectureFinding> {
    g.require_connected(1)?;
    let certified = certify(g, preimage)?;
    if isomorphic(g, &named::diamond())? {
        return Ok(ConjectureFinding::not_applicable(
            ConjectureId::GeneralizedTwins,
            g,
            certified,
            "the diamond is excluded",
        ));
    }
    let witness = find_generalized_twins(g, i_max, reading);
    Ok(ConjectureFinding::new(
        ConjectureId::GeneralizedTwins,
        g,
        certified,
        witness,
    ))
}

pub fn check_hamiltonian(g: &Graph, preimage: Option<&Graph>) -> Result<ConjectureFinding> {
    g.require_connected(1)?;
    let certified = certify(g, preimage)?;
    if g.order() < 3 {
        return Ok(ConjectureFinding::not_applicable(
            ConjectureId::Hamiltonian,
            g,
            certified,
            "fewer than three vertices",
        ));
    }
    let witness = (!is_hamiltonian(g)?).then_some(ConjectureWitness::NoHamiltonianCycle);
    Ok(ConjectureFinding::new(ConjectureId::Hamiltonian, g, certified, witness))
}

/// Re-checks a witness against `g` from its definition.
pub fn validate_witness(g: &Graph, w: &ConjectureWitness) -> bool {
    let n = g.order();
    match w {
        ConjectureWitness::HellySubfamily { vertices } => {
            let sets: Vec<VertexSet> = vertices
                .iter()
                .filter(|&&v| v < n && g.is_clique(g.neighbors(v)))
                .map(|&v| g.closed_neighbors(v))
                .collect();
            sets.len() == vertices.len() && pairwise_intersecting(&sets) && common_intersection(&sets).is_empty()
        }
        ConjectureWitness::Twins {
            reading,
            twins,
            complete,
        } => {
            let t: VertexSet = twins.iter().copied().collect();
            let k: VertexSet = complete.iter().copied().collect();
            if twins.len() < 2 || t.len() != twins.len() || k.len() != twins.len() {
                return false;
            }
            if twins.iter().chain(complete).any(|&v| v >= n) || !g.is_clique(k) {
                return false;
            }
            let nb = g.neighbors(twins[0]);
            let shared = twins.iter().all(|&v| g.neighbors(v) == nb);
            let fits = match reading {
                TwinReading::Equal => nb == k,
                TwinReading::CompleteSubgraph => nb.is_subset(k),
                TwinReading::MaximalClique => {
                    nb.is_subset(k) && (g.vertices() - k).iter().all(|v| !k.is_subset(g.neighbors(v)))
                }
            };
            shared && fits && !isomorphic(g, &named::diamond()).unwrap_or(true)
        }
        ConjectureWitness::NoHamiltonianCycle => n >= 3 && is_hamiltonian(g).is_ok_and(|h| !h),
    }
}

/// All three checks, with the generalised-twin check under `reading`.
pub fn check_all(
    g: &Graph,
    i_max: usize,
    reading: TwinReading,
    preimage: Option<&Graph>,
) -> Result<Vec<ConjectureFinding>> {
    Ok(vec![
        check_simplicial_helly(g, preimage)?,
        check_generalized_twins(g, i_max, reading, preimage)?,
        check_hamiltonian(g, preimage)?,
    ])
}
