use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection from the vertices `0..n` onto the ranks `1..=n`.
///
/// Serialized as the rank array `[rank(0), rank(1), ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexOrder {
    ranks: Vec<usize>,
}

impl TryFrom<Vec<usize>> for VertexOrder {
    type Error = Error;

    fn try_from(ranks: Vec<usize>) -> Result<Self> {
        VertexOrder::from_ranks(ranks)
    }
}

impl From<VertexOrder> for Vec<usize> {
    fn from(order: VertexOrder) -> Self {
        order.ranks
    }
}

impl VertexOrder {
    /// `ranks[v]` is the 1-based rank of vertex `v`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut seen = vec![false; n];
        for &r in &ranks {
            if r == 0 || r > n {
                return Err(Error::InvalidOrder(format!("rank {r} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[r - 1], true) {
                return Err(Error::InvalidOrder(format!("rank {r} used twice")));
            }
        }
        Ok(VertexOrder { ranks })
    }

    /// Builds the order that lists `sequence[0]` first (rank 1), then
    /// `sequence[1]`, and so on.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        let n = sequence.len();
        let mut ranks = vec![0; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrder(format!("vertex {v} outside 0..{n}")));
            }
            if ranks[v] != 0 {
                return Err(Error::InvalidOrder(format!("vertex {v} listed twice")));
            }
            ranks[v] = i + 1;
        }
        Ok(VertexOrder { ranks })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder {
            ranks: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.ranks[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Vertices listed by increasing rank.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.ranks.len()];
        for (v, &r) in self.ranks.iter().enumerate() {
            seq[r - 1] = v;
        }
        seq
    }

    /// Maps rank `t` to `n + 1 - t`.
    pub fn reversed(&self) -> Self {
        let n = self.ranks.len();
        VertexOrder {
            ranks: self.ranks.iter().map(|&r| n + 1 - r).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_and_ranks_agree() {
        let o = VertexOrder::from_sequence(&[2, 3, 0, 1, 4]).unwrap();
        assert_eq!(o.ranks(), &[3, 4, 1, 2, 5]);
        assert_eq!(o.sequence(), vec![2, 3, 0, 1, 4]);
        assert_eq!(o.reversed().ranks(), &[3, 2, 5, 4, 1]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(VertexOrder::from_ranks(vec![1, 1]).is_err());
        assert!(VertexOrder::from_ranks(vec![0, 1]).is_err());
        assert!(VertexOrder::from_sequence(&[0, 0]).is_err());
        assert!(serde_json::from_str::<VertexOrder>("[2,3]").is_err());
    }
}
