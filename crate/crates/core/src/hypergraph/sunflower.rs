use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::graph::{Edge, UniformHypergraph};

/// `m` edges pairwise meeting in exactly `core`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunflowerWitness {
    pub core: Vec<usize>,
    pub petals: Vec<Edge>,
}

impl SunflowerWitness {
    /// Checks the witness against `h`: `m` distinct edges of `h`, all
    /// containing the core, pairwise intersecting in exactly the core.
    pub fn validate(&self, h: &UniformHypergraph, m: usize) -> bool {
        if self.petals.len() != m {
            return false;
        }
        let core: BTreeSet<usize> = self.core.iter().copied().collect();
        let sets: Vec<BTreeSet<usize>> = self
            .petals
            .iter()
            .map(|p| p.iter().copied().collect())
            .collect();
        self.petals.iter().all(|p| h.contains_edge(p))
            && sets.iter().all(|s| s.is_superset(&core))
            && sets
                .iter()
                .tuple_combinations()
                .all(|(a, b)| a.intersection(b).copied().collect::<BTreeSet<_>>() == core)
    }
}

/// Edge count above which every r-graph contains a sunflower with `m`
/// petals: `(m-1)^r r! + 1`, saturating.
pub fn erdos_rado_bound(r: usize, m: usize) -> u64 {
    let mut acc: u64 = 1;
    for i in 1..=r as u64 {
        acc = acc
            .saturating_mul((m as u64).saturating_sub(1))
            .saturating_mul(i);
    }
    acc.saturating_add(1)
}

/// Finds a sunflower with `m` petals among the edges of `h`.
///
/// At or above the Erdős–Rado bound the greedy recursion (maximal matching,
/// then recurse into the link of the busiest matched vertex) always closes.
/// Otherwise, and as a fallback, every candidate core is tried with an
/// exact search for `m` edges whose residues are pairwise disjoint; `None`
/// then means no sunflower exists.
pub fn find_sunflower(h: &UniformHypergraph, m: usize) -> Option<SunflowerWitness> {
    if m == 0 {
        return Some(SunflowerWitness {
            core: Vec::new(),
            petals: Vec::new(),
        });
    }
    if h.edge_count() as u64 >= erdos_rado_bound(h.r(), m) {
        if let Some(w) = greedy(h.edges(), m) {
            return Some(w);
        }
        debug_assert!(false, "greedy procedure failed above its bound");
    }
    exhaustive(h, m)
}

/// The Erdős–Rado recursion on a family of equal-size distinct sets. Also
/// usable below the bound, where it may fail.
pub fn greedy(sets: &[Edge], m: usize) -> Option<SunflowerWitness> {
    let mut taken: Vec<usize> = Vec::new();
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    for (i, s) in sets.iter().enumerate() {
        if s.iter().all(|v| !covered.contains(v)) {
            covered.extend(s.iter().copied());
            taken.push(i);
            if taken.len() == m {
                return Some(SunflowerWitness {
                    core: Vec::new(),
                    petals: taken.iter().map(|&i| sets[i].clone()).collect(),
                });
            }
        }
    }
    // every set meets `covered`; pick its busiest vertex
    let x = covered
        .iter()
        .copied()
        .max_by_key(|&x| (sets.iter().filter(|s| s.contains(&x)).count(), std::cmp::Reverse(x)))?;
    let link: Vec<Edge> = sets
        .iter()
        .filter(|s| s.contains(&x))
        .map(|s| s.iter().copied().filter(|&v| v != x).collect())
        .collect();
    if link.first().is_none_or(|s| s.is_empty()) {
        return None;
    }
    let inner = greedy(&link, m)?;
    let mut core = inner.core;
    core.push(x);
    core.sort_unstable();
    let petals = inner
        .petals
        .into_iter()
        .map(|mut p| {
            p.push(x);
            p.sort_unstable();
            p
        })
        .collect();
    Some(SunflowerWitness { core, petals })
}

fn exhaustive(h: &UniformHypergraph, m: usize) -> Option<SunflowerWitness> {
    let mut cores: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for e in h.edges() {
        for d in 0..h.r() {
            for c in e.iter().copied().combinations(d) {
                cores.insert((d, c));
            }
        }
    }
    for (_, core) in cores {
        let members: Vec<&Edge> = h
            .edges()
            .iter()
            .filter(|e| core.iter().all(|v| e.contains(v)))
            .collect();
        if members.len() < m {
            continue;
        }
        let residues: Vec<u64> = members
            .iter()
            .map(|e| {
                e.iter()
                    .filter(|v| !core.contains(v))
                    .fold(0u64, |acc, &v| acc | (1u64 << v))
            })
            .collect();
        let mut chosen = Vec::with_capacity(m);
        if disjoint_pick(&residues, 0, 0, m, &mut chosen) {
            return Some(SunflowerWitness {
                core,
                petals: chosen.iter().map(|&i| members[i].clone()).collect(),
            });
        }
    }
    None
}

fn disjoint_pick(sets: &[u64], from: usize, used: u64, m: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == m {
        return true;
    }
    let missing = m - chosen.len();
    for i in from..sets.len() {
        if sets.len() - i < missing {
            return false;
        }
        if sets[i] & used == 0 {
            chosen.push(i);
            if disjoint_pick(sets, i + 1, used | sets[i], m, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[[usize; 3]]) -> UniformHypergraph {
        UniformHypergraph::new(3, n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn disjoint_edges_empty_core() {
        let g = h(9, &[[0, 1, 2], [3, 4, 5], [6, 7, 8]]);
        let w = find_sunflower(&g, 3).unwrap();
        assert!(w.core.is_empty());
        assert_eq!(w.petals.len(), 3);
        assert!(w.validate(&g, 3));
    }

    #[test]
    fn common_vertex_core() {
        let g = h(9, &[[0, 1, 2], [0, 3, 4], [0, 5, 6], [0, 7, 8]]);
        let w = find_sunflower(&g, 4).unwrap();
        assert_eq!(w.core, vec![0]);
        assert!(w.validate(&g, 4));
    }

    #[test]
    fn absence_is_proved() {
        // tight path: any 3 edges of TP4 fail to form a sunflower
        let g = h(6, &[[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5]]);
        assert!(find_sunflower(&g, 3).is_none());
        assert!(find_sunflower(&g, 2).unwrap().validate(&g, 2));
    }

    #[test]
    fn bound_values() {
        assert_eq!(erdos_rado_bound(3, 4), 163);
        assert_eq!(erdos_rado_bound(2, 3), 9);
    }

    #[test]
    fn validate_rejects_bad_witness() {
        let g = h(6, &[[0, 1, 2], [1, 2, 3], [2, 3, 4]]);
        let bad = SunflowerWitness {
            core: vec![2],
            petals: vec![vec![0, 1, 2], vec![1, 2, 3]],
        };
        assert!(!bad.validate(&g, 2));
    }
}
