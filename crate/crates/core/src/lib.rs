//! Total colourings of the 4-regular circulant graphs `C_n(1,3)`.
//!
//! The crate builds the graphs, validates total colourings, produces the
//! explicit total 5-colourings for every Type I order, and decides the five
//! Type II orders (7, 8, 12, 13, 17) with an exhaustive search that emits
//! re-checkable certificates.
//!
//! ```
//! use circulant_total::{construct, CirculantGraph};
//!
//! let g = CirculantGraph::c13(14).unwrap();
//! let c = construct(14).unwrap().into_colouring().unwrap();
//! assert!(c.verify(&g).unwrap().is_proper());
//! ```

pub mod certify;
pub mod cli;
pub mod colouring;
pub mod construct;
pub mod error;
pub mod graph;
pub mod solver;

pub use certify::{chi_total, chi_total_with_evidence, prove_type2, Certificate, Evidence, SolveOptions, TypeTwoProof};
pub use colouring::{Colour, ColouringRecord, ConflictReport, TotalColouring};
pub use construct::{
    colour_5p9q, colour_sporadic, construct, decompose_5p9q, BlockPattern, Construction, TYPE_II_ORDERS,
};
pub use error::{Error, Result};
pub use graph::{CirculantGraph, Element, ElementKind};
pub use solver::{search_total_colouring, SearchConfig, SearchOutcome, SearchStatus, SymmetryLevel};
