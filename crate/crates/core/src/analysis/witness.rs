use serde::{Deserialize, Serialize};

use crate::colorings::ColoringFamily;
use crate::hypergraph::{Edge, Embedding, UniformHypergraph};

/// Two distinct edges of the copy that `vertex` colors alike.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clash {
    pub vertex: usize,
    pub edge_a: Edge,
    pub edge_b: Edge,
    pub color: u32,
}

/// A copy of the pattern that no vertex of the copy colors rainbow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationWitness {
    pub pattern: UniformHypergraph,
    /// `embedding[v]` is the host image of pattern vertex `v`.
    pub embedding: Vec<usize>,
    /// One clash per image vertex, in pattern vertex order.
    pub clashes: Vec<Clash>,
}

impl ViolationWitness {
    /// Recomputes every clash color from the family.
    pub fn check(&self, family: &ColoringFamily) -> bool {
        if self.pattern.r() != family.r() || self.embedding.len() != self.pattern.n() {
            return false;
        }
        let Ok(emb) = Embedding::new(family.n(), self.embedding.clone()) else {
            return false;
        };
        let image = emb.image_edges(&self.pattern);
        self.clashes.len() == self.embedding.len()
            && self.clashes.iter().zip(&self.embedding).all(|(c, &u)| {
                c.vertex == u
                    && c.edge_a != c.edge_b
                    && image.contains(&c.edge_a)
                    && image.contains(&c.edge_b)
                    && family.color_of(u, &c.edge_a) == c.color
                    && family.color_of(u, &c.edge_b) == c.color
            })
    }
}

/// The clash certificate for an embedding, or `None` if some image vertex
/// colors the copy rainbow.
pub fn clashes_for(
    family: &ColoringFamily,
    pattern: &UniformHypergraph,
    map: &[usize],
) -> Option<ViolationWitness> {
    let emb = Embedding::new(family.n(), map.to_vec()).ok()?;
    let image = emb.image_edges(pattern);
    let ranks: Vec<usize> = image.iter().map(|e| crate::hypergraph::colex_rank(e)).collect();
    let mut clashes = Vec::with_capacity(map.len());
    for &u in map {
        let row = family.row(u);
        let pair = (0..ranks.len()).find_map(|a| {
            (a + 1..ranks.len())
                .find(|&b| row[ranks[a]] == row[ranks[b]])
                .map(|b| (a, b))
        })?;
        clashes.push(Clash {
            vertex: u,
            edge_a: image[pair.0].clone(),
            edge_b: image[pair.1].clone(),
            color: row[ranks[pair.0]],
        });
    }
    Some(ViolationWitness {
        pattern: pattern.clone(),
        embedding: map.to_vec(),
        clashes,
    })
}
