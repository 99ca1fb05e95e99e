//! The position buckets `T_x^i` and the 2-locally-large property.
//!
//! For a vertex `x` under an order `σ`, an edge `e ∋ x` lands in bucket
//! `i ∈ 1..=r` when `σ(x)` is the `i`-th smallest rank in `e`; an edge
//! `e ∌ x` lands in bucket `r + i` when `σ(x)` would be the `i`-th smallest
//! after inserting `x` into `e`. A hypergraph is 2-locally large (2LL) when
//! some order gives every vertex a bucket holding at least two edges.
//!
//! Reading "i-th" as "i-th largest" instead is the same as reversing `σ`,
//! which only permutes bucket indices, so the 2LL status does not depend
//! on the convention.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::hypergraph::{enumerate_hypergraphs, Edge, UniformHypergraph, MAX_VERTICES};
pub use crate::hypergraph::VertexOrder;

/// The `2r + 1` buckets of one vertex under one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TxiPartition {
    pub x: usize,
    pub order: VertexOrder,
    /// `buckets[i - 1]` holds `T_x^i`.
    pub buckets: Vec<Vec<Edge>>,
}

impl TxiPartition {
    /// Bucket `T_x^i` for `i` in `1..=2r+1`.
    pub fn bucket(&self, i: usize) -> &[Edge] {
        &self.buckets[i - 1]
    }

    /// First bucket (by index, 1-based) holding at least two edges.
    pub fn large_bucket(&self) -> Option<usize> {
        self.buckets.iter().position(|b| b.len() >= 2).map(|i| i + 1)
    }
}

/// Bucket index (1-based) of `edge` for vertex `x`.
pub fn bucket_index(edge: &[usize], order: &VertexOrder, x: usize) -> usize {
    let rx = order.rank(x);
    let below = edge.iter().filter(|&&v| order.rank(v) < rx).count();
    if edge.contains(&x) {
        below + 1
    } else {
        edge.len() + 1 + below
    }
}

pub fn txi_partition(h: &UniformHypergraph, order: &VertexOrder, x: usize) -> TxiPartition {
    let mut buckets = vec![Vec::new(); 2 * h.r() + 1];
    for e in h.edges() {
        buckets[bucket_index(e, order, x) - 1].push(e.clone());
    }
    TxiPartition {
        x,
        order: order.clone(),
        buckets,
    }
}

/// True iff every vertex has a bucket with at least two edges.
pub fn is_2ll_under(h: &UniformHypergraph, order: &VertexOrder) -> bool {
    let r = h.r();
    let mut counts = vec![0u32; 2 * r + 1];
    (0..h.n()).all(|x| {
        counts.iter_mut().for_each(|c| *c = 0);
        for e in h.edges() {
            let i = bucket_index(e, order, x) - 1;
            counts[i] += 1;
            if counts[i] >= 2 {
                return true;
            }
        }
        false
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "2LL")]
    TwoLocallyLarge,
    #[serde(rename = "NOT2LL")]
    NotTwoLocallyLarge,
}

/// Outcome of [`decide_2ll`].
///
/// `orders_examined` counts complete orders of the non-isolated vertices
/// that were decided, including those ruled out wholesale by pruning. For a
/// NOT-2LL answer it equals `n'!` where `n'` is the number of non-isolated
/// vertices: isolated vertices are always given the top ranks, where every
/// edge lands in their last bucket, and they never influence the buckets of
/// the other vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub status: Status,
    pub witness: Option<VertexOrder>,
    pub orders_examined: u64,
}

/// One row of a classification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub canonical: UniformHypergraph,
    #[serde(flatten)]
    pub decision: Decision,
}

/// Saturates beyond 20!.
fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, i| acc.saturating_mul(i))
}

struct OrderSearch {
    r: usize,
    masks: Vec<u64>,
    n: usize,
    seq: Vec<usize>,
    examined: u64,
}

impl OrderSearch {
    /// Places vertices one rank at a time. Once `x` is placed, every vertex
    /// still unplaced will rank above it, so all of `x`'s buckets are
    /// already determined and a vertex without a large bucket kills the
    /// whole subtree.
    fn run(&mut self, placed: u64) -> bool {
        let depth = self.seq.len();
        if depth == self.n {
            self.examined += 1;
            return true;
        }
        for x in 0..self.n {
            if placed & (1 << x) != 0 {
                continue;
            }
            if !self.satisfied(x, placed) {
                self.examined = self.examined.saturating_add(factorial(self.n - depth - 1));
                continue;
            }
            self.seq.push(x);
            if self.run(placed | (1 << x)) {
                return true;
            }
            self.seq.pop();
        }
        false
    }

    fn satisfied(&self, x: usize, before: u64) -> bool {
        let mut counts = [0u8; 2 * MAX_VERTICES + 1];
        let bit = 1u64 << x;
        for &e in &self.masks {
            let below = (e & before).count_ones() as usize;
            let i = if e & bit != 0 { below } else { self.r + below };
            counts[i] += 1;
            if counts[i] >= 2 {
                return true;
            }
        }
        false
    }
}

/// Decides the 2LL property by a complete search over orders.
pub fn decide_2ll(h: &UniformHypergraph) -> Decision {
    let (core, kept) = h.spanning_part();
    let mut search = OrderSearch {
        r: h.r(),
        masks: core.edge_masks(),
        n: core.n(),
        seq: Vec::with_capacity(core.n()),
        examined: 0,
    };
    if !search.run(0) {
        return Decision {
            status: Status::NotTwoLocallyLarge,
            witness: None,
            orders_examined: search.examined,
        };
    }
    let mut sequence: Vec<usize> = search.seq.iter().map(|&i| kept[i]).collect();
    sequence.extend(h.isolated_vertices());
    let witness = VertexOrder::from_sequence(&sequence).expect("search yields a permutation");
    debug_assert!(is_2ll_under(h, &witness));
    Decision {
        status: Status::TwoLocallyLarge,
        witness: Some(witness),
        orders_examined: search.examined,
    }
}

pub fn classify_hypergraph(h: &UniformHypergraph) -> ClassificationRecord {
    let canonical = crate::hypergraph::canonical_form(h).0;
    let decision = decide_2ll(&canonical);
    ClassificationRecord {
        canonical,
        decision,
    }
}

/// Classifies every isomorphism class of spanning r-graphs with `m` edges.
/// Records follow the enumeration order.
pub fn classify_all(r: usize, m: usize) -> Vec<ClassificationRecord> {
    let classes = enumerate_hypergraphs(r, m, r * m);
    classes
        .into_par_iter()
        .map(|canonical| {
            let decision = decide_2ll(&canonical);
            ClassificationRecord {
                canonical,
                decision,
            }
        })
        .collect()
}
