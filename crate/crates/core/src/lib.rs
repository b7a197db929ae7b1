//! Exact clique counting, complete-graph minor testing and extremal bounds for
//! graphs with no `K_t` minor.
//!
//! The crate is `no_std` (it needs `alloc`). Graph IO beyond graph6, the
//! command line front end and the parallel drivers live in the `ktminor`
//! crate.
//!
//! Layout:
//!
//! - [`graph`] / [`bitset`]: bit-matrix graphs, pasting, degeneracy.
//! - [`graph6`]: the graph6 text encoding.
//! - [`constructions`]: ℓ-trees, complete multipartite and Turán graphs,
//!   cockades.
//! - [`cliques`]: exact per-size clique counts with arbitrary precision.
//! - [`minors`]: `K_t` minor search, Hadwiger numbers, minor certificates.
//! - [`bounds`]: closed-form extremal values and counting identities.
//! - [`search`]: exhaustive verification and the multipartite / λ scans.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod bounds;
pub mod cliques;
pub mod constructions;
mod error;
pub mod graph;
pub mod graph6;
pub mod math;
pub mod minors;
pub mod search;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use cliques::{clique_vector, count_cliques_k, max_clique, CliqueVector};
pub use constructions::{CockadeSpec, MultipartiteSpec, PasteChoice};
pub use error::{Error, Result};
pub use graph::Graph;
pub use minors::{has_kt_minor, hadwiger_number, MinorModel, MinorSearch};
pub use search::{Family, SearchReport};
