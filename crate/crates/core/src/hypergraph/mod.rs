//! Uniform hypergraphs: representation, canonical forms, enumeration,
//! embeddings, named families, sunflowers and the cube-vector bridge.

mod canon;
mod cube;
mod embed;
mod enumerate;
mod families;
mod graph;
mod order;
mod sunflower;

pub use canon::{canonical_form, is_isomorphic};
pub use cube::{cube_bridge, edge_to_vector};
pub use embed::{copy_key, count_copies, enumerate_embeddings, Embedding, Embeddings, Labelings};
pub use enumerate::enumerate_hypergraphs;
pub use families::{make_family, Family};
pub(crate) use families::parse_call;
pub use graph::{
    binomial, colex_rank, colex_unrank, mask_vertices, vertex_mask, Edge, RankTable,
    UniformHypergraph, Vertex, MAX_VERTICES,
};
pub use order::VertexOrder;
pub use sunflower::{erdos_rado_bound, find_sunflower, greedy as greedy_sunflower, SunflowerWitness};
