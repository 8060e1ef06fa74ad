//! Bicliques of small graphs, the biclique graph `KB(G)`, distances between
//! bicliques, necessary conditions for biclique graphs and a bounded search
//! for preimages.
//!
//! ```
//! use biclique_lab::biclique::biclique_graph;
//! use biclique_lab::graph::{named, write_graph6};
//!
//! let (kb, fam) = biclique_graph(&named::path(6)).unwrap();
//! assert_eq!(fam.len(), 4);
//! assert_eq!(write_graph6(&kb), "Cz");
//! ```

pub mod biclique;
pub mod cli;
pub mod conjecture;
pub mod distance;
pub mod error;
pub mod graph;
pub mod hamilton;
pub mod helly;
pub mod obstruction;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
