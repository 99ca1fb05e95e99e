use std::collections::BTreeSet;

use itertools::Itertools;

use super::canon::canonical_form;
use super::graph::{Edge, UniformHypergraph};

/// One representative per isomorphism class of spanning r-graphs with
/// exactly `m` edges on at most `max_n` vertices, in increasing
/// `(n, edges)` order.
///
/// The first edge is `{0, .., r-1}` and every later edge may only introduce
/// the next unused labels, which covers each class (relabel vertices by
/// first appearance) while skipping most label symmetry. The surviving
/// sequences are then deduplicated by canonical form.
pub fn enumerate_hypergraphs(r: usize, m: usize, max_n: usize) -> Vec<UniformHypergraph> {
    let mut classes = BTreeSet::new();
    if r < 2 || m == 0 || max_n < r {
        return Vec::new();
    }
    let mut edges: Vec<Edge> = vec![(0..r).collect()];
    extend(r, m, max_n, r, &mut edges, &mut classes);
    classes.into_iter().collect()
}

fn extend(
    r: usize,
    m: usize,
    max_n: usize,
    used: usize,
    edges: &mut Vec<Edge>,
    classes: &mut BTreeSet<UniformHypergraph>,
) {
    if edges.len() == m {
        let h = UniformHypergraph::new(r, used, edges.iter().cloned())
            .expect("generated edges are distinct r-sets");
        classes.insert(canonical_form(&h).0);
        return;
    }
    for old in 0..=r.min(used) {
        let fresh = r - old;
        if used + fresh > max_n {
            continue;
        }
        for kept in (0..used).combinations(old) {
            let mut e = kept;
            e.extend(used..used + fresh);
            if edges.contains(&e) {
                continue;
            }
            edges.push(e);
            extend(r, m, max_n, used + fresh, edges, classes);
            edges.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_class() {
        let classes = enumerate_hypergraphs(3, 1, 9);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].n(), 3);
        assert_eq!(classes[0].edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn two_edge_classes_by_overlap() {
        // Two 3-sets overlap in 0, 1 or 2 vertices.
        let classes = enumerate_hypergraphs(3, 2, 9);
        let ns: Vec<usize> = classes.iter().map(|h| h.n()).collect();
        assert_eq!(ns, vec![4, 5, 6]);
    }

    #[test]
    fn respects_vertex_bound() {
        let classes = enumerate_hypergraphs(3, 2, 5);
        assert_eq!(classes.len(), 2);
        assert!(enumerate_hypergraphs(3, 2, 2).is_empty());
    }

    #[test]
    fn graphs_two_edges() {
        // 2-graphs with two edges: path P_2 and matching M_2.
        assert_eq!(enumerate_hypergraphs(2, 2, 4).len(), 2);
        // three edges: triangle, path, star, path+edge, matching
        assert_eq!(enumerate_hypergraphs(2, 3, 6).len(), 5);
    }
}
