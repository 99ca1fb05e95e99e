//! Weight-r vectors of the n-cube as edges of an r-graph on the n
//! coordinates: a vector becomes the set of coordinates where it is 1.

use super::graph::UniformHypergraph;
use crate::error::{Error, Result};

pub fn cube_bridge<S: AsRef<str>>(vectors: &[S]) -> Result<UniformHypergraph> {
    let first = vectors
        .first()
        .ok_or_else(|| Error::InvalidParams("no vectors given".into()))?
        .as_ref();
    let n = first.len();
    let r = first.bytes().filter(|&b| b == b'1').count();
    let mut edges = Vec::with_capacity(vectors.len());
    for v in vectors {
        let v = v.as_ref();
        if v.len() != n {
            return Err(Error::CubeVector {
                vector: v.into(),
                reason: format!("length {} differs from {n}", v.len()),
            });
        }
        let mut edge = Vec::with_capacity(r);
        for (i, b) in v.bytes().enumerate() {
            match b {
                b'1' => edge.push(i),
                b'0' => {}
                _ => {
                    return Err(Error::CubeVector {
                        vector: v.into(),
                        reason: "only 0 and 1 are allowed".into(),
                    })
                }
            }
        }
        if edge.len() != r {
            return Err(Error::CubeVector {
                vector: v.into(),
                reason: format!("weight {} differs from {r}", edge.len()),
            });
        }
        edges.push(edge);
    }
    UniformHypergraph::new(r, n, edges)
}

/// The 0/1 string of length `n` with ones exactly at `edge`.
pub fn edge_to_vector(edge: &[usize], n: usize) -> String {
    let mut s = vec![b'0'; n];
    for &i in edge {
        s[i] = b'1';
    }
    String::from_utf8(s).expect("ascii")
}
