//! The coloring `g` of `K_n^(r+1)` built from a family on `K_n^(r)`.
//!
//! For an (r+1)-edge `u_1 < ... < u_{r+1}` (by the base order) the color is
//! the `(r+1) × (r+1)` matrix whose row `i` is
//! `f_{u_i}(e ∖ u_{r+1}), f_{u_i}(e ∖ u_r), ..., f_{u_i}(e ∖ u_1)`,
//! read row by row and mixed-radix encoded with the first entry most
//! significant.

use super::family::ColoringFamily;
use super::lift::mixed_radix;
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank, RankTable, VertexOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyColoring {
    pub n: usize,
    /// Uniformity of the colored edges, `r + 1`.
    pub uniformity: usize,
    /// Base of the encoding; colors lie in `1..=k^((r+1)^2)`.
    pub k: u32,
    /// Indexed by colex rank of the (r+1)-edge.
    pub colors: Vec<u64>,
}

impl RamseyColoring {
    pub fn color_of(&self, edge: &[usize]) -> u64 {
        self.colors[colex_rank(edge)]
    }

    /// All (r+1)-subsets of `s` share one color.
    pub fn is_monochromatic(&self, s: &[usize]) -> bool {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        let mut first = None;
        itertools::Itertools::combinations(sorted.into_iter(), self.uniformity).all(|e| {
            let c = self.color_of(&e);
            *first.get_or_insert(c) == c
        })
    }
}

/// The row-major tuple for one (r+1)-edge, `(r+1)^2` entries.
pub fn ramsey_tuple(family: &ColoringFamily, base_order: &VertexOrder, edge: &[usize]) -> Vec<u32> {
    let mut u = edge.to_vec();
    u.sort_by_key(|&v| base_order.rank(v));
    let len = u.len();
    let mut tuple = Vec::with_capacity(len * len);
    let mut sub = Vec::with_capacity(len - 1);
    for &ui in &u {
        for j in (0..len).rev() {
            sub.clear();
            sub.extend(u.iter().enumerate().filter(|&(l, _)| l != j).map(|(_, &v)| v));
            sub.sort_unstable();
            tuple.push(family.color_of(ui, &sub));
        }
    }
    tuple
}

pub fn ramsey_product_coloring(family: &ColoringFamily, base_order: &VertexOrder) -> Result<RamseyColoring> {
    let n = family.n();
    let r = family.r();
    if base_order.len() != n {
        return Err(Error::InvalidOrder(format!(
            "order has {} vertices, family has {n}",
            base_order.len()
        )));
    }
    if n < r + 1 {
        return Err(Error::InvalidParams(format!(
            "need at least {} vertices, got {n}",
            r + 1
        )));
    }
    let k = family.k();
    let width = ((r + 1) * (r + 1)) as u32;
    if (k as u64).checked_pow(width).is_none() {
        return Err(Error::ColorOverflow(format!("{k}^{width} exceeds 64 bits")));
    }
    let table = RankTable::new(n, r + 1);
    debug_assert_eq!(table.len() as u64, binomial(n, r + 1));
    let colors = table
        .edges()
        .iter()
        .map(|e| mixed_radix(&ramsey_tuple(family, base_order, e), k).expect("fits by the check above"))
        .collect();
    Ok(RamseyColoring {
        n,
        uniformity: r + 1,
        k,
        colors,
    })
}
