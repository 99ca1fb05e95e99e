//! Constructions of coloring families.

mod deterministic;
mod family;
mod lift;
mod lll;
mod pq;
mod ramsey;
mod tce;

pub use deterministic::deterministic_family;
pub use family::{ColoringFamily, Provenance, FORMAT_VERSION, MAGIC};
pub use lift::{mixed_radix, product_lift};
pub use lll::{lll_k, lll_sample, lll_sample_with_k, LllReport};
pub use pq::{min_pq_colors, pq_coloring_search, PQColoring, PqMinimum, PqSearchResult};
pub use ramsey::{ramsey_product_coloring, ramsey_tuple, RamseyColoring};
pub use tce::tce_family;
