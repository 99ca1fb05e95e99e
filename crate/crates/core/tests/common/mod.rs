//! Slow, direct reimplementations used as test oracles.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use rainbow_core::colorings::ColoringFamily;
use rainbow_core::hypergraph::UniformHypergraph;

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Colex rank of a sorted set: the sum of `C(e_i, i + 1)`.
pub fn rank(edge: &[usize]) -> usize {
    edge.iter().enumerate().map(|(i, &v)| binom(v, i + 1)).sum()
}

/// `pos[v]` is the position of `v` in the order.
pub fn bucket(edge: &[usize], pos: &[usize], x: usize) -> usize {
    let mut ranks: Vec<usize> = edge.iter().map(|&v| pos[v]).collect();
    if !edge.contains(&x) {
        ranks.push(pos[x]);
    }
    ranks.sort_unstable();
    let i = ranks.iter().position(|&p| p == pos[x]).unwrap() + 1;
    if edge.contains(&x) {
        i
    } else {
        edge.len() + i
    }
}

pub fn good_under(h: &UniformHypergraph, pos: &[usize]) -> bool {
    (0..h.n()).all(|x| {
        let mut seen = vec![0; 2 * h.r() + 2];
        h.edges().iter().any(|e| {
            let b = bucket(e, pos, x);
            seen[b] += 1;
            seen[b] == 2
        })
    })
}

/// Order given as the vertex sequence from lowest rank up.
pub fn positions(seq: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; seq.len()];
    for (i, &v) in seq.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Tries every order.
pub fn brute_2ll(h: &UniformHypergraph) -> bool {
    (0..h.n()).permutations(h.n()).any(|p| good_under(h, &positions(&p)))
}

/// Distinct images of `pattern` in `K_n`, as sorted vertex lists and sorted
/// edge lists. Built by trying every injection.
pub fn copies(pattern: &UniformHypergraph, n: usize) -> Vec<(Vec<usize>, Vec<Vec<usize>>)> {
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
    for image in (0..n).permutations(pattern.n()) {
        let edges: Vec<Vec<usize>> = pattern
            .edges()
            .iter()
            .map(|e| e.iter().map(|&v| image[v]).sorted().collect())
            .sorted()
            .collect();
        let verts: Vec<usize> = image.iter().copied().sorted().collect();
        let mut key = edges.clone();
        key.push(verts.clone());
        if seen.insert(key) {
            out.push((verts, edges));
        }
    }
    out
}

pub fn naive_local(family: &ColoringFamily, pattern: &UniformHypergraph) -> bool {
    let m = binom(family.n(), family.r());
    let c = family.colors();
    copies(pattern, family.n()).iter().all(|(verts, edges)| {
        verts.iter().any(|&u| {
            let cols: Vec<u32> = edges.iter().map(|e| c[u * m + rank(e)]).collect();
            cols.iter().all_unique()
        })
    })
}

/// Backtracking over every `(v, e)` pair of `K_n^(r)`, checking each copy
/// once all of its pairs are set.
pub fn brute_solve(n: usize, r: usize, pattern: &UniformHypergraph, k: u32) -> bool {
    let m = binom(n, r);
    let cps = copies(pattern, n);
    let cp_ranks: Vec<(Vec<usize>, Vec<usize>)> = cps
        .iter()
        .map(|(v, es)| (v.clone(), es.iter().map(|e| rank(e)).collect()))
        .collect();
    // variable index = v * m + rank; a copy closes at its largest index
    let total = n * m;
    let mut closing = vec![Vec::new(); total];
    for (i, (vs, rs)) in cp_ranks.iter().enumerate() {
        let last = vs.iter().flat_map(|&u| rs.iter().map(move |&e| u * m + e)).max();
        if let Some(last) = last {
            closing[last].push(i);
        }
    }
    let mut col = vec![0u32; total];
    fn go(x: usize, k: u32, col: &mut [u32], closing: &[Vec<usize>], cps: &[(Vec<usize>, Vec<usize>)], m: usize) -> bool {
        if x == col.len() {
            return true;
        }
        let tries = if closing[x].is_empty() && (x..col.len()).all(|y| closing[y].is_empty()) { 1 } else { k };
        for c in 1..=tries {
            col[x] = c;
            let ok = closing[x].iter().all(|&i| {
                let (vs, rs) = &cps[i];
                vs.iter().any(|&u| rs.iter().map(|&e| col[u * m + e]).all_unique())
            });
            if ok && go(x + 1, k, col, closing, cps, m) {
                return true;
            }
        }
        false
    }
    go(0, k, &mut col, &closing, &cp_ranks, m)
}

/// Every vertex of a hypergraph without isolated vertices is described by
/// the set of edges containing it; the class is the multiset of these
/// sets up to relabeling the edges.
pub fn signature_key(h: &UniformHypergraph) -> Vec<u32> {
    let m = h.edge_count();
    (0..m)
        .permutations(m)
        .map(|p| {
            (0..h.n())
                .map(|v| {
                    h.edges()
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| e.contains(&v))
                        .fold(0u32, |acc, (i, _)| acc | (1 << p[i]))
                })
                .sorted()
                .collect::<Vec<u32>>()
        })
        .min()
        .unwrap()
}

/// Classes of spanning r-graphs with `m` distinct edges, found by choosing
/// a multiset of nonempty edge-membership masks with every edge of size r.
pub fn signature_classes(r: usize, m: usize) -> BTreeSet<Vec<u32>> {
    let masks: Vec<u32> = (1..(1u32 << m)).collect();
    let mut out = BTreeSet::new();
    fn rec(masks: &[u32], from: usize, r: usize, m: usize, deg: &mut Vec<usize>, chosen: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if deg.iter().all(|&d| d == r) {
            let edges: Vec<u32> = (0..m)
                .map(|i| chosen.iter().enumerate().filter(|(_, &s)| s >> i & 1 == 1).fold(0u32, |a, (v, _)| a | (1 << v)))
                .collect();
            if edges.iter().all_unique() {
                let key = (0..m)
                    .permutations(m)
                    .map(|p| {
                        chosen
                            .iter()
                            .map(|&s| (0..m).filter(|&i| s >> i & 1 == 1).fold(0u32, |a, i| a | (1 << p[i])))
                            .sorted()
                            .collect::<Vec<u32>>()
                    })
                    .min()
                    .unwrap();
                out.insert(key);
            }
            return;
        }
        for j in from..masks.len() {
            let s = masks[j];
            if (0..m).any(|i| s >> i & 1 == 1 && deg[i] == r) {
                continue;
            }
            (0..m).filter(|&i| s >> i & 1 == 1).for_each(|i| deg[i] += 1);
            chosen.push(s);
            rec(masks, j, r, m, deg, chosen, out);
            chosen.pop();
            (0..m).filter(|&i| s >> i & 1 == 1).for_each(|i| deg[i] -= 1);
        }
    }
    rec(&masks, 0, r, m, &mut vec![0; m], &mut Vec::new(), &mut out);
    out
}

/// Every `p`-set spans at least `q` colors of the `t`-sets inside it.
pub fn pq_ok(n: usize, t: usize, p: usize, q: usize, color: impl Fn(&[usize]) -> u32) -> bool {
    (0..n).combinations(p).all(|s| {
        s.iter().copied().combinations(t).map(|e| color(&e)).collect::<HashSet<_>>().len() >= q
    })
}

/// Pattern automorphisms, by trying every permutation.
pub fn automorphisms(h: &UniformHypergraph) -> usize {
    let edges: BTreeSet<Vec<usize>> = h.edges().iter().cloned().collect();
    (0..h.n())
        .permutations(h.n())
        .filter(|p| {
            h.edges()
                .iter()
                .all(|e| edges.contains(&e.iter().map(|&v| p[v]).sorted().collect::<Vec<_>>()))
        })
        .count()
}
