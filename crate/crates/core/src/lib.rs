//! Structural toolkit for triangle-free graphs that exclude long suns and
//! the 4-sunspot: exact colouring, induced-structure detectors, levelings,
//! flares, and the witness-extraction pipeline built on them.

pub mod coloring;
pub mod flare;
pub mod format;
pub mod graph;
pub mod paths;
pub mod structures;

pub use graph::{Distance, Graph, GraphError, InducedSubgraph, VertexSet, MAX_VERTICES};
pub use paths::{Hole, InducedPath, PathError};
pub mod leveling;
pub mod verdict;
pub mod witness;

pub use verdict::Verdict;
