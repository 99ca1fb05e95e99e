//! Canonical labeling by color refinement and individualization.
//!
//! Vertex colors start from degrees and are refined until stable: a
//! vertex's new color is its old color together with the multiset, over
//! its edges, of the color multisets of its edge-mates. When the refined
//! partition is not discrete, every vertex of the first non-singleton cell
//! is individualized in turn and the search recurses. Each discrete leaf
//! induces a labeling; the canonical form is the labeling whose sorted
//! edge list is lexicographically least. Two vertices with identical
//! incidence ("twins") are swapped by an automorphism that fixes every
//! previously individualized vertex, so only one twin per cell is branched
//! on.

use std::cmp::Ordering;

use super::graph::{Edge, UniformHypergraph};
use super::order::VertexOrder;

type Colors = Vec<u32>;

struct Search<'a> {
    h: &'a UniformHypergraph,
    incidence: Vec<Vec<usize>>,
    best: Option<(Vec<Edge>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn new(h: &'a UniformHypergraph) -> Self {
        let mut incidence = vec![Vec::new(); h.n()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Search {
            h,
            incidence,
            best: None,
        }
    }

    fn refine(&self, mut colors: Colors) -> Colors {
        let mut cells = count_distinct(&colors);
        loop {
            let sigs: Vec<(u32, Vec<Vec<u32>>)> = (0..self.h.n())
                .map(|v| {
                    let mut around: Vec<Vec<u32>> = self.incidence[v]
                        .iter()
                        .map(|&i| {
                            let mut mates: Vec<u32> = self.h.edges()[i]
                                .iter()
                                .filter(|&&u| u != v)
                                .map(|&u| colors[u])
                                .collect();
                            mates.sort_unstable();
                            mates
                        })
                        .collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            colors = dense_ranks(&sigs);
            let next = count_distinct(&colors);
            if next == cells {
                return colors;
            }
            cells = next;
        }
    }

    fn run(&mut self, colors: Colors) {
        let colors = self.refine(colors);
        let n = self.h.n();
        let mut counts = vec![0usize; n.max(1)];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = counts.iter().position(|&c| c > 1) else {
            self.leaf(&colors);
            return;
        };
        let target = target as u32;
        let mut tried: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| colors[v] == target) {
            if tried
                .iter()
                .any(|&w| self.incidence[w] == self.incidence[v])
            {
                continue;
            }
            tried.push(v);
            let split: Colors = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| match c.cmp(&target) {
                    Ordering::Less => 2 * c,
                    Ordering::Equal if u == v => 2 * c,
                    _ => 2 * c + 1,
                })
                .collect();
            self.run(split);
        }
    }

    fn leaf(&mut self, colors: &Colors) {
        let labels: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut edges: Vec<Edge> = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut img: Edge = e.iter().map(|&v| labels[v]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        edges.sort_unstable();
        let better = match &self.best {
            None => true,
            Some((best, _)) => edges < *best,
        };
        if better {
            self.best = Some((edges, labels));
        }
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn dense_ranks<T: Ord>(keys: &[T]) -> Colors {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut rank = 0u32;
    for w in 0..idx.len() {
        if w > 0 && keys[idx[w]] != keys[idx[w - 1]] {
            rank += 1;
        }
        out[idx[w]] = rank;
    }
    out
}

/// Returns the canonical representative of the isomorphism class of `h`
/// and the relabeling taking `h` onto it (`relabeling.rank(v) - 1` is the
/// canonical label of `v`).
pub fn canonical_form(h: &UniformHypergraph) -> (UniformHypergraph, VertexOrder) {
    let mut search = Search::new(h);
    let degrees: Vec<u32> = h.degrees().iter().map(|&d| d as u32).collect();
    search.run(dense_ranks(&degrees));
    let (edges, labels) = search
        .best
        .unwrap_or_else(|| (Vec::new(), Vec::new()));
    let canon = UniformHypergraph::new(h.r(), h.n(), edges)
        .expect("relabeled hypergraph stays well formed");
    let relabeling = VertexOrder::from_ranks(labels.iter().map(|&l| l + 1).collect())
        .expect("discrete partition gives a bijection");
    (canon, relabeling)
}

/// True iff an edge-preserving vertex bijection between the two exists.
pub fn is_isomorphic(a: &UniformHypergraph, b: &UniformHypergraph) -> bool {
    if a.r() != b.r() || a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a).0 == canonical_form(b).0
}
