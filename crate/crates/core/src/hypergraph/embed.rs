//! Copies of a pattern inside the complete host hypergraph.
//!
//! A copy is a vertex set of the host together with an edge set; two
//! injections that differ by an automorphism of the pattern give the same
//! copy. The distinct edge-set images of the pattern on its own label set
//! `0..h` are computed once as the orbit of its edge set under the adjacent
//! transpositions, which generate the symmetric group. Each host vertex
//! subset of size `h` then carries exactly that many copies.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::graph::{vertex_mask, Edge, UniformHypergraph};
use crate::error::{Error, Result};

/// An injection of the pattern's vertices into the host `0..host_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub host_n: usize,
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn new(host_n: usize, map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; host_n];
        for &v in &map {
            if v >= host_n {
                return Err(Error::InvalidParams(format!(
                    "embedding target {v} outside host 0..{host_n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParams(format!(
                    "embedding is not injective at {v}"
                )));
            }
        }
        Ok(Embedding { host_n, map })
    }

    /// The images of the pattern's edges, each sorted, in pattern edge order.
    pub fn image_edges(&self, pattern: &UniformHypergraph) -> Vec<Edge> {
        pattern
            .edges()
            .iter()
            .map(|e| {
                let mut img: Edge = e.iter().map(|&v| self.map[v]).collect();
                img.sort_unstable();
                img
            })
            .collect()
    }

    /// Host vertices of the copy, in pattern vertex order.
    pub fn vertices(&self) -> &[usize] {
        &self.map
    }
}

/// Distinct labelings of a pattern onto its own vertex range.
#[derive(Clone, Debug)]
pub struct Labelings {
    /// `maps[i][v]` is the local label of pattern vertex `v`.
    pub maps: Vec<Vec<usize>>,
    /// For each labeling, the local edges it produces (pattern edge order).
    pub local_edges: Vec<Vec<Edge>>,
}

impl Labelings {
    pub fn of(pattern: &UniformHypergraph) -> Self {
        let h = pattern.n();
        let image = |map: &[usize]| -> Vec<u64> {
            let mut masks: Vec<u64> = pattern
                .edges()
                .iter()
                .map(|e| e.iter().fold(0u64, |m, &v| m | (1u64 << map[v])))
                .collect();
            masks.sort_unstable();
            masks
        };
        let start: Vec<usize> = (0..h).collect();
        let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut maps = vec![start.clone()];
        seen.insert(image(&start), 0);
        let mut head = 0;
        while head < maps.len() {
            let current = maps[head].clone();
            head += 1;
            for i in 0..h.saturating_sub(1) {
                let next: Vec<usize> = current
                    .iter()
                    .map(|&l| match l {
                        l if l == i => i + 1,
                        l if l == i + 1 => i,
                        l => l,
                    })
                    .collect();
                let key = image(&next);
                if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(key) {
                    slot.insert(maps.len());
                    maps.push(next);
                }
            }
        }
        // canonical order: by sorted image masks
        let mut keyed: Vec<(Vec<u64>, Vec<usize>)> =
            maps.into_iter().map(|m| (image(&m), m)).collect();
        keyed.sort();
        let maps: Vec<Vec<usize>> = keyed.into_iter().map(|(_, m)| m).collect();
        let local_edges = maps
            .iter()
            .map(|m| {
                pattern
                    .edges()
                    .iter()
                    .map(|e| {
                        let mut img: Edge = e.iter().map(|&v| m[v]).collect();
                        img.sort_unstable();
                        img
                    })
                    .collect()
            })
            .collect();
        Labelings { maps, local_edges }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Iterator over every copy of a pattern in the complete host, subsets in
/// lexicographic order and labelings in their canonical order.
pub struct Embeddings {
    host_n: usize,
    labelings: Labelings,
    subsets: Box<dyn Iterator<Item = Vec<usize>>>,
    current: Option<Vec<usize>>,
    next_labeling: usize,
}

impl Iterator for Embeddings {
    type Item = Embedding;

    fn next(&mut self) -> Option<Embedding> {
        loop {
            if let Some(subset) = &self.current {
                if self.next_labeling < self.labelings.len() {
                    let local = &self.labelings.maps[self.next_labeling];
                    self.next_labeling += 1;
                    return Some(Embedding {
                        host_n: self.host_n,
                        map: local.iter().map(|&l| subset[l]).collect(),
                    });
                }
            }
            self.current = Some(self.subsets.next()?);
            self.next_labeling = 0;
        }
    }
}

/// Every copy of `pattern` in the complete r-graph on `host_n` vertices,
/// each exactly once.
pub fn enumerate_embeddings(pattern: &UniformHypergraph, host_n: usize) -> Result<Embeddings> {
    if pattern.n() > host_n {
        return Err(Error::PatternTooLarge {
            pattern: pattern.n(),
            host: host_n,
        });
    }
    Ok(Embeddings {
        host_n,
        labelings: Labelings::of(pattern),
        subsets: Box::new((0..host_n).combinations(pattern.n())),
        current: None,
        next_labeling: 0,
    })
}

/// Number of copies without materializing them.
pub fn count_copies(pattern: &UniformHypergraph, host_n: usize) -> u64 {
    if pattern.n() > host_n {
        return 0;
    }
    super::graph::binomial(host_n, pattern.n()) * Labelings::of(pattern).len() as u64
}

/// Distinct-image key of a copy: its vertex set and edge set.
pub fn copy_key(pattern: &UniformHypergraph, e: &Embedding) -> (u64, Vec<u64>) {
    let mut edges: Vec<u64> = e
        .image_edges(pattern)
        .iter()
        .map(|edge| vertex_mask(edge))
        .collect();
    edges.sort_unstable();
    (vertex_mask(&e.map), edges)
}
