//! Local rainbow colorings of uniform hypergraphs.
//!
//! A family of `n` edge-colorings `f_v` of the complete r-graph `K_n^(r)`,
//! one per vertex, is *local* for a pattern `H` when every copy of `H` is
//! rainbow under the coloring of at least one of its own vertices. This
//! crate classifies patterns by the 2-locally-large property, builds
//! families by several constructions, verifies them exhaustively, searches
//! for violation witnesses and solves tiny instances exactly.

pub mod analysis;
pub mod claims;
pub mod colorings;
mod error;
pub mod hypergraph;
pub mod locality;
pub mod solver;

pub use error::{Error, Result};
pub use hypergraph::{UniformHypergraph, VertexOrder};
