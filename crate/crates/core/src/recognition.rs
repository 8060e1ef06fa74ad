//! Deciding `G ≅ KB(H)` by exhaustive search over small `H`, and the
//! catalogue of small biclique graphs built from it.
//!
//! A graph is certified a biclique graph only by a preimage whose biclique
//! graph is re-checked by canonical form. It is certified not to be one only
//! by a failing necessary condition. Anything else is unknown within the
//! searched bound.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::biclique::{enumerate_bicliques, enumerate_bicliques_bounded};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, enumerate_connected_graphs, one_vertex_extensions, parse_graph6, write_graph6, CanonicalForm,
    Graph, MAX_GENERATION_ORDER,
};
use crate::obstruction::{classify, CheckKind, Obstruction};

/// Largest preimage order searched. Reaching it with a catalogue of
/// 6-vertex graphs takes tens of minutes.
pub const MAX_PREIMAGE_ORDER: usize = 12;

/// Default preimage bound for catalogue runs.
pub const DEFAULT_MAX_H_ORDER: usize = 8;

/// Version tag written into every persisted catalogue line.
pub const CATALOGUE_SCHEMA: &str = "biclique-lab/catalogue-entry/v1";

fn check_h_bound(max_h_order: usize) -> Result<()> {
    if max_h_order < 2 {
        return Err(Error::TooSmall {
            order: max_h_order,
            min: 2,
        });
    }
    if max_h_order > MAX_PREIMAGE_ORDER {
        return Err(Error::Capability {
            what: "preimage order",
            requested: max_h_order,
            limit: MAX_PREIMAGE_ORDER,
        });
    }
    Ok(())
}

/// Canonical form of `KB(h)` when it has at most `max_kb_order` vertices.
fn bounded_kb_form(h: &Graph, max_kb_order: usize) -> Result<Option<CanonicalForm>> {
    match enumerate_bicliques_bounded(h, max_kb_order)? {
        Some(fam) => Ok(Some(canonical_form(&fam.intersection_graph()?)?)),
        None => Ok(None),
    }
}

/// The first connected `H` with `|V(H)| <= max_h_order` and `KB(H) ≅ g`, in
/// generation order (by order, then canonical form).
pub fn search_preimage(g: &Graph, max_h_order: usize) -> Result<Option<Graph>> {
    g.require_connected(1)?;
    let index = PreimageIndex::build(g.order(), max_h_order)?;
    Ok(index.preimage(g)?.cloned())
}

/// Every biclique graph on at most `max_g_order` vertices reachable from a
/// connected `H` on at most `max_h_order` vertices, keyed by canonical form,
/// with the first such `H` in generation order.
///
/// Graphs with at most `k` bicliques are closed under taking connected
/// induced subgraphs, and every connected graph on `n + 1` vertices is a
/// one-vertex extension of a connected graph on `n`. So the candidates of
/// each order are generated from the survivors of the previous one only.
#[derive(Clone, Debug)]
pub struct PreimageIndex {
    max_g_order: usize,
    max_h_order: usize,
    preimages: HashMap<CanonicalForm, Graph>,
    scanned: usize,
}

impl PreimageIndex {
    pub fn build(max_g_order: usize, max_h_order: usize) -> Result<Self> {
        check_h_bound(max_h_order)?;
        let mut preimages = HashMap::new();
        let mut scanned = 0;
        let mut survivors: Vec<Graph> = Vec::new();
        for n in 2..=max_h_order {
            let candidates = if n == 2 {
                enumerate_connected_graphs(2)?.to_vec()
            } else {
                one_vertex_extensions(&survivors)
            };
            scanned += candidates.len();
            let kept: Vec<(Graph, CanonicalForm)> = candidates
                .into_par_iter()
                .filter_map(|h| match bounded_kb_form(&h, max_g_order) {
                    Ok(Some(cf)) => Some(Ok((h, cf))),
                    Ok(None) => None,
                    Err(e) => Some(Err(e)),
                })
                .collect::<Result<_>>()?;
            for (h, cf) in &kept {
                preimages.entry(*cf).or_insert_with(|| h.clone());
            }
            survivors = kept.into_iter().map(|(h, _)| h).collect();
            if survivors.is_empty() {
                break;
            }
        }
        Ok(PreimageIndex {
            max_g_order,
            max_h_order,
            preimages,
            scanned,
        })
    }

    pub fn max_g_order(&self) -> usize {
        self.max_g_order
    }

    pub fn max_h_order(&self) -> usize {
        self.max_h_order
    }

    /// Number of candidate graphs `H` examined.
    pub fn scanned(&self) -> usize {
        self.scanned
    }

    pub fn len(&self) -> usize {
        self.preimages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preimages.is_empty()
    }

    pub fn preimage(&self, g: &Graph) -> Result<Option<&Graph>> {
        Ok(self.preimages.get(&canonical_form(g)?))
    }

    /// Canonical forms of all biclique graphs found, sorted.
    pub fn images(&self) -> Vec<CanonicalForm> {
        let mut v: Vec<_> = self.preimages.keys().copied().collect();
        v.sort_unstable();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    BicliqueGraph { preimage: Graph },
    NotBicliqueGraph { obstruction: Obstruction },
    UnknownWithinBound,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::BicliqueGraph { .. } => "biclique-graph",
            Classification::NotBicliqueGraph { .. } => "not-biclique-graph",
            Classification::UnknownWithinBound => "unknown-within-bound",
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, Classification::BicliqueGraph { .. })
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Classification::NotBicliqueGraph { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    /// Canonical representative.
    pub graph: Graph,
    pub classification: Classification,
    /// Preimage orders searched: `2..=max_h_order`.
    pub max_h_order: usize,
    /// Every check of the battery that fails on `graph`, in battery order.
    pub failed_checks: Vec<CheckKind>,
}

impl CatalogueEntry {
    pub fn passes_p3_diamond_gem(&self) -> bool {
        !self.failed_checks.contains(&CheckKind::P3DiamondGem)
    }
}

/// Classifies one graph from a prebuilt index.
pub fn classify_graph(g: &Graph, index: &PreimageIndex) -> Result<CatalogueEntry> {
    let report = classify(g)?;
    let failures = report.failures();
    let preimage = if g.order() <= index.max_g_order() {
        index.preimage(g)?.cloned()
    } else {
        search_preimage(g, index.max_h_order())?
    };
    let classification = match (preimage, failures.first()) {
        (Some(h), None) => Classification::BicliqueGraph { preimage: h },
        (Some(h), Some(f)) => {
            return Err(Error::Inconsistent(format!(
                "{g} has preimage {h} but fails {}",
                f.kind().as_str()
            )))
        }
        (None, Some(f)) => Classification::NotBicliqueGraph { obstruction: f.clone() },
        (None, None) => Classification::UnknownWithinBound,
    };
    Ok(CatalogueEntry {
        graph: g.clone(),
        classification,
        max_h_order: index.max_h_order(),
        failed_checks: failures.iter().map(Obstruction::kind).collect(),
    })
}

/// Re-derives an entry's evidence independently of how it was found.
pub fn verify_entry(entry: &CatalogueEntry) -> bool {
    let g = &entry.graph;
    match &entry.classification {
        Classification::BicliqueGraph { preimage } => {
            preimage.order() <= entry.max_h_order
                && enumerate_bicliques(preimage)
                    .and_then(|fam| fam.intersection_graph())
                    .and_then(|kb| Ok(canonical_form(&kb)? == canonical_form(g)?))
                    .unwrap_or(false)
        }
        Classification::NotBicliqueGraph { obstruction } => obstruction.validate(g),
        Classification::UnknownWithinBound => classify(g).map(|r| !r.excluded).unwrap_or(false),
    }
}

#[derive(Clone, Debug)]
pub struct Catalogue {
    pub max_g_order: usize,
    pub max_h_order: usize,
    /// By order, then canonical form.
    pub entries: Vec<CatalogueEntry>,
}

/// Per-order tallies of a catalogue.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub order: usize,
    pub graphs: usize,
    pub positive: usize,
    pub negative: usize,
    pub unknown: usize,
}

impl Catalogue {
    pub fn positives(&self) -> impl Iterator<Item = &CatalogueEntry> {
        self.entries.iter().filter(|e| e.classification.is_positive())
    }

    pub fn unknowns(&self) -> impl Iterator<Item = &CatalogueEntry> {
        self.entries
            .iter()
            .filter(|e| e.classification == Classification::UnknownWithinBound)
    }

    pub fn summary(&self) -> Vec<OrderSummary> {
        let mut by_order: BTreeMap<usize, OrderSummary> = BTreeMap::new();
        for e in &self.entries {
            let s = by_order.entry(e.graph.order()).or_insert(OrderSummary {
                order: e.graph.order(),
                ..Default::default()
            });
            s.graphs += 1;
            match e.classification {
                Classification::BicliqueGraph { .. } => s.positive += 1,
                Classification::NotBicliqueGraph { .. } => s.negative += 1,
                Classification::UnknownWithinBound => s.unknown += 1,
            }
        }
        by_order.into_values().collect()
    }

    pub fn entry(&self, g: &Graph) -> Result<Option<&CatalogueEntry>> {
        let cf = canonical_form(g)?;
        for e in &self.entries {
            if e.graph.order() == g.order() && canonical_form(&e.graph)? == cf {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

/// One entry per connected graph on `2..=max_g_order` vertices.
///
/// Fails with [`Error::Inconsistent`] if a graph both has a preimage and
/// fails a necessary condition, or if some `KB(H)` in range is missing from
/// the positives.
pub fn build_catalogue(max_g_order: usize, max_h_order: usize) -> Result<Catalogue> {
    if max_g_order < 2 {
        return Err(Error::TooSmall {
            order: max_g_order,
            min: 2,
        });
    }
    if max_g_order > MAX_GENERATION_ORDER {
        return Err(Error::Capability {
            what: "catalogue order",
            requested: max_g_order,
            limit: MAX_GENERATION_ORDER,
        });
    }
    if max_h_order < max_g_order {
        return Err(Error::InvalidBounds(format!(
            "max_h_order {max_h_order} is below max_g_order {max_g_order}"
        )));
    }
    let index = PreimageIndex::build(max_g_order, max_h_order)?;
    let mut entries = Vec::new();
    for n in 2..=max_g_order {
        let part: Vec<CatalogueEntry> = enumerate_connected_graphs(n)?
            .par_iter()
            .map(|g| classify_graph(g, &index))
            .collect::<Result<_>>()?;
        entries.extend(part);
    }
    let catalogue = Catalogue {
        max_g_order,
        max_h_order,
        entries,
    };
    check_closure(&catalogue, &index)?;
    Ok(catalogue)
}

fn check_closure(catalogue: &Catalogue, index: &PreimageIndex) -> Result<()> {
    let positive: std::collections::HashSet<CanonicalForm> = catalogue
        .positives()
        .map(|e| canonical_form(&e.graph))
        .collect::<Result<_>>()?;
    for cf in index.images() {
        if cf.order() >= 2 && !positive.contains(&cf) {
            return Err(Error::Inconsistent(format!(
                "KB image {} is not a positive catalogue entry",
                cf.to_graph()
            )));
        }
    }
    Ok(())
}

/// Set comparison of the catalogue's positives against a reference list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixtureComparison {
    /// Reference graphs the catalogue classifies as not biclique graphs.
    pub classified_negative: Vec<Graph>,
    /// Reference graphs with no preimage within the bound and no obstruction.
    pub lacking_preimage: Vec<Graph>,
    /// Reference graphs outside the catalogue's order range.
    pub out_of_range: Vec<Graph>,
    /// Positives absent from the reference.
    pub unexpected: Vec<Graph>,
    /// Reference lines naming the same class twice.
    pub duplicates: Vec<Graph>,
}

impl FixtureComparison {
    pub fn matches(&self) -> bool {
        *self == FixtureComparison::default()
    }
}

pub fn compare_with_reference(catalogue: &Catalogue, reference: &[Graph]) -> Result<FixtureComparison> {
    let mut out = FixtureComparison::default();
    let mut by_form: HashMap<CanonicalForm, &CatalogueEntry> = HashMap::new();
    for e in &catalogue.entries {
        by_form.insert(canonical_form(&e.graph)?, e);
    }
    let mut seen = std::collections::HashSet::new();
    for g in reference {
        let cf = canonical_form(g)?;
        if !seen.insert(cf) {
            out.duplicates.push(g.clone());
            continue;
        }
        match by_form.get(&cf).map(|e| &e.classification) {
            None => out.out_of_range.push(g.clone()),
            Some(Classification::BicliqueGraph { .. }) => {}
            Some(Classification::NotBicliqueGraph { .. }) => out.classified_negative.push(g.clone()),
            Some(Classification::UnknownWithinBound) => out.lacking_preimage.push(g.clone()),
        }
    }
    for e in catalogue.positives() {
        if !seen.contains(&canonical_form(&e.graph)?) {
            out.unexpected.push(e.graph.clone());
        }
    }
    Ok(out)
}

/// One persisted catalogue line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueRecord {
    pub schema: String,
    pub graph6: String,
    pub order: usize,
    pub classification: String,
    pub preimage: Option<String>,
    pub obstruction: Option<Obstruction>,
    pub max_h_order: usize,
    pub failed_checks: Vec<CheckKind>,
    pub passes_p3_diamond_gem: bool,
}

impl From<&CatalogueEntry> for CatalogueRecord {
    fn from(e: &CatalogueEntry) -> Self {
        let (preimage, obstruction) = match &e.classification {
            Classification::BicliqueGraph { preimage } => (Some(write_graph6(preimage)), None),
            Classification::NotBicliqueGraph { obstruction } => (None, Some(obstruction.clone())),
            Classification::UnknownWithinBound => (None, None),
        };
        CatalogueRecord {
            schema: CATALOGUE_SCHEMA.to_string(),
            graph6: write_graph6(&e.graph),
            order: e.graph.order(),
            classification: e.classification.label().to_string(),
            preimage,
            obstruction,
            max_h_order: e.max_h_order,
            failed_checks: e.failed_checks.clone(),
            passes_p3_diamond_gem: e.passes_p3_diamond_gem(),
        }
    }
}

impl TryFrom<CatalogueRecord> for CatalogueEntry {
    type Error = Error;

    fn try_from(r: CatalogueRecord) -> Result<Self> {
        if r.schema != CATALOGUE_SCHEMA {
            return Err(Error::Certificate(format!("unknown schema {:?}", r.schema)));
        }
        let graph = parse_graph6(&r.graph6)?;
        let classification = match (r.classification.as_str(), r.preimage, r.obstruction) {
            ("biclique-graph", Some(h), None) => Classification::BicliqueGraph {
                preimage: parse_graph6(&h)?,
            },
            ("not-biclique-graph", None, Some(obstruction)) => Classification::NotBicliqueGraph { obstruction },
            ("unknown-within-bound", None, None) => Classification::UnknownWithinBound,
            (c, ..) => {
                return Err(Error::Certificate(format!(
                    "classification {c:?} does not match its evidence"
                )))
            }
        };
        Ok(CatalogueEntry {
            graph,
            classification,
            max_h_order: r.max_h_order,
            failed_checks: r.failed_checks,
        })
    }
}

pub fn entry_to_json(e: &CatalogueEntry) -> String {
    serde_json::to_string(&CatalogueRecord::from(e)).expect("records serialise")
}

/// Writes `order-<n>.jsonl` per order into `dir`, creating it if needed.
pub fn write_catalogue(dir: &Path, catalogue: &Catalogue) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut paths = Vec::new();
    for n in 2..=catalogue.max_g_order {
        let path = dir.join(format!("order-{n}.jsonl"));
        let mut f = std::io::BufWriter::new(fs::File::create(&path)?);
        for e in catalogue.entries.iter().filter(|e| e.graph.order() == n) {
            writeln!(f, "{}", entry_to_json(e))?;
        }
        f.flush()?;
        paths.push(path);
    }
    Ok(paths)
}

/// Reads catalogue lines from a JSON-lines file.
pub fn read_catalogue_file(path: &Path) -> Result<Vec<CatalogueEntry>> {
    let f = BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for (i, line) in f.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CatalogueRecord = serde_json::from_str(&line)
            .map_err(|e| Error::Certificate(format!("{}:{}: {e}", path.display(), i + 1)))?;
        out.push(record.try_into()?);
    }
    Ok(out)
}

/// Reads a catalogue directory written by [`write_catalogue`], or a single file.
pub fn read_catalogue(path: &Path) -> Result<Vec<CatalogueEntry>> {
    if path.is_file() {
        return read_catalogue_file(path);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "jsonl"))
        .collect();
    files.sort_by_key(|p| {
        let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("");
        (
            stem.trim_start_matches("order-").parse::<usize>().unwrap_or(usize::MAX),
            p.clone(),
        )
    });
    let mut out = Vec::new();
    for f in files {
        out.extend(read_catalogue_file(&f)?);
    }
    Ok(out)
}
