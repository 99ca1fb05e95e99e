use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
/// An edge is a sorted, duplicate-free list of vertices.
pub type Edge = Vec<Vertex>;

/// Vertex sets are handled as `u64` masks in the hot loops, which caps the
/// vertex count.
pub const MAX_VERTICES: usize = 64;

/// An r-uniform hypergraph on the vertices `0..n`.
///
/// Edges are kept sorted ascending internally and the edge list itself is
/// sorted lexicographically, so two hypergraphs compare equal exactly when
/// they have the same labeled edge set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct UniformHypergraph {
    r: usize,
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for UniformHypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        UniformHypergraph::new(raw.r, raw.n, raw.edges)
    }
}

impl From<UniformHypergraph> for RawHypergraph {
    fn from(h: UniformHypergraph) -> Self {
        RawHypergraph {
            r: h.r,
            n: h.n,
            edges: h.edges,
        }
    }
}

impl UniformHypergraph {
    /// Builds a hypergraph, sorting every edge. Rejects edges of the wrong
    /// size, repeated or out-of-range vertices, and duplicate edges.
    pub fn new(r: usize, n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::Uniformity(r));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut seen = BTreeSet::new();
        for mut edge in edges {
            edge.sort_unstable();
            if edge.len() != r {
                return Err(Error::InvalidEdge {
                    reason: format!("expected {r} vertices"),
                    edge,
                });
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge {
                    edge,
                    reason: "repeated vertex".into(),
                });
            }
            if edge[r - 1] >= n {
                return Err(Error::InvalidEdge {
                    edge,
                    reason: format!("vertex out of range 0..{n}"),
                });
            }
            if !seen.insert(edge.clone()) {
                return Err(Error::DuplicateEdge(edge));
            }
        }
        Ok(UniformHypergraph {
            r,
            n,
            edges: seen.into_iter().collect(),
        })
    }

    /// The complete r-graph on `n` vertices, edges in lexicographic order.
    pub fn complete(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidParams(format!(
                "complete {r}-graph needs at least {r} vertices, got {n}"
            )));
        }
        use itertools::Itertools;
        Self::new(r, n, (0..n).combinations(r))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of vertices, including isolated ones.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// True when every vertex lies in at least one edge.
    pub fn is_spanning(&self) -> bool {
        self.degrees().iter().all(|&d| d > 0)
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Edge `i` as a vertex bitmask.
    pub fn edge_masks(&self) -> Vec<u64> {
        self.edges.iter().map(|e| vertex_mask(e)).collect()
    }

    /// Applies `map` (old vertex -> new vertex) to every edge. `map` must be
    /// injective into `0..new_n`.
    pub fn relabel(&self, map: &[usize], new_n: usize) -> Result<Self> {
        Self::new(
            self.r,
            new_n,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| map[v]).collect::<Vec<_>>()),
        )
    }

    /// Adds `count` isolated vertices at the top of the label range.
    pub fn with_isolated(&self, count: usize) -> Result<Self> {
        Self::new(self.r, self.n + count, self.edges.clone())
    }

    /// Adds one edge, returning the enlarged hypergraph.
    pub fn with_edge(&self, edge: Vec<usize>) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(edge);
        Self::new(self.r, self.n, edges)
    }

    /// Drops isolated vertices, relabeling the remaining vertices in
    /// increasing order.
    pub fn spanning_part(&self) -> (Self, Vec<Vertex>) {
        let deg = self.degrees();
        let kept: Vec<Vertex> = (0..self.n).filter(|&v| deg[v] > 0).collect();
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            map[v] = i;
        }
        let h = self
            .relabel(&map, kept.len())
            .expect("relabeling onto the spanning vertices is injective");
        (h, kept)
    }
}

impl fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(r={}, n={}, {:?})", self.r, self.n, self.edges)
    }
}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        write!(f, "[n={}] {}", self.n, edges.join(" "))
    }
}

pub fn vertex_mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

pub fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v);
        mask &= mask - 1;
    }
    out
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Colexicographic rank of a sorted r-set: `sum_i C(e_i, i + 1)`.
pub fn colex_rank(edge: &[usize]) -> usize {
    edge.iter()
        .enumerate()
        .map(|(i, &v)| binomial(v, i + 1) as usize)
        .sum()
}

/// Inverse of [`colex_rank`] for r-sets.
pub fn colex_unrank(mut rank: usize, r: usize) -> Edge {
    let mut edge = vec![0; r];
    for i in (0..r).rev() {
        // largest v with C(v, i+1) <= rank
        let mut v = i;
        while binomial(v + 1, i + 1) as usize <= rank {
            v += 1;
        }
        edge[i] = v;
        rank -= binomial(v, i + 1) as usize;
    }
    edge
}

/// Precomputed colex ranks for every r-subset (as a bitmask) of a small
/// vertex range. Used where ranking sits in an inner loop.
#[derive(Clone, Debug)]
pub struct RankTable {
    pub n: usize,
    pub r: usize,
    edges: Vec<Edge>,
}

impl RankTable {
    pub fn new(n: usize, r: usize) -> Self {
        let count = binomial(n, r) as usize;
        let edges = (0..count).map(|rank| colex_unrank(rank, r)).collect();
        RankTable { n, r, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, rank: usize) -> &[usize] {
        &self.edges[rank]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(
            UniformHypergraph::new(3, 4, vec![vec![0, 1]]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            UniformHypergraph::new(3, 4, vec![vec![0, 1, 1]]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            UniformHypergraph::new(3, 4, vec![vec![0, 1, 4]]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            UniformHypergraph::new(3, 4, vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            UniformHypergraph::new(1, 4, vec![]),
            Err(Error::Uniformity(1))
        ));
    }

    #[test]
    fn edges_are_sorted() {
        let h = UniformHypergraph::new(3, 6, vec![vec![5, 4, 3], vec![2, 0, 1]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn json_shape() {
        let h = UniformHypergraph::new(3, 6, vec![vec![0, 1, 2], vec![1, 2, 3], vec![3, 4, 5]])
            .unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"r":3,"n":6,"edges":[[0,1,2],[1,2,3],[3,4,5]]}"#);
        let back: UniformHypergraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<UniformHypergraph>(r#"{"r":3,"n":2,"edges":[[0,1,2]]}"#)
            .is_err());
    }

    #[test]
    fn colex_roundtrip() {
        for r in 1..=4 {
            let count = binomial(9, r) as usize;
            for rank in 0..count {
                let e = colex_unrank(rank, r);
                assert_eq!(colex_rank(&e), rank);
                assert!(e.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert_eq!(colex_rank(&[0, 1, 2]), 0);
        assert_eq!(colex_rank(&[0, 1, 3]), 1);
        assert_eq!(colex_rank(&[1, 2, 3]), 3);
    }

    #[test]
    fn spanning_part_drops_isolated() {
        let h = UniformHypergraph::new(3, 6, vec![vec![1, 3, 5]]).unwrap();
        assert!(!h.is_spanning());
        assert_eq!(h.isolated_vertices(), vec![0, 2, 4]);
        let (s, kept) = h.spanning_part();
        assert_eq!(kept, vec![1, 3, 5]);
        assert_eq!(s.edges(), &[vec![0, 1, 2]]);
        assert!(s.is_spanning());
    }
}
