//! Named-graph generators, the theorem constants, and end-to-end witness extraction.

pub mod constants;
pub mod extract;
pub mod generators;

pub use constants::{theorem_constant, ConstantError, TheoremConstants};
pub use extract::{
    extract_from_subgraph, extract_witness, ExtractError, ExtractedWitness, ExtractionResult,
    ExtractionTrace,
};
