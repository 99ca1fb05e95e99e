use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::witness::{clashes_for, ViolationWitness};
use crate::colorings::ColoringFamily;
use crate::error::{Error, Result};
use crate::hypergraph::{colex_rank, Labelings, UniformHypergraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum LocalResult {
    /// Every copy is rainbow for one of its vertices.
    Ok { copies: u64 },
    /// The first copy, in canonical order, that is rainbow for none.
    Violated { witness: Box<ViolationWitness> },
}

impl LocalResult {
    pub fn is_ok(&self) -> bool {
        matches!(self, LocalResult::Ok { .. })
    }

    pub fn witness(&self) -> Option<&ViolationWitness> {
        match self {
            LocalResult::Ok { .. } => None,
            LocalResult::Violated { witness } => Some(witness),
        }
    }
}

const CHUNK: usize = 2048;

/// Checks every copy of `pattern` in the host. Copies are visited by vertex
/// subset in lexicographic order, then by labeling; the reported witness is
/// the first violation in that order.
pub fn verify_local(family: &ColoringFamily, pattern: &UniformHypergraph) -> Result<LocalResult> {
    if pattern.r() != family.r() {
        return Err(Error::UniformityMismatch {
            pattern: pattern.r(),
            family: family.r(),
        });
    }
    let h = pattern.n();
    if h > family.n() {
        return Err(Error::PatternTooLarge {
            pattern: h,
            host: family.n(),
        });
    }
    let labelings = Labelings::of(pattern);
    let mut copies = 0u64;
    let mut subsets = (0..family.n()).combinations(h);
    loop {
        let chunk: Vec<Vec<usize>> = subsets.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(LocalResult::Ok { copies });
        }
        let found = chunk
            .par_iter()
            .find_map_first(|s| first_violation(family, pattern, &labelings, s));
        if let Some(map) = found {
            let witness = clashes_for(family, pattern, &map).expect("violation re-derives");
            return Ok(LocalResult::Violated {
                witness: Box::new(witness),
            });
        }
        copies += (chunk.len() * labelings.len()) as u64;
    }
}

fn first_violation(
    family: &ColoringFamily,
    pattern: &UniformHypergraph,
    labelings: &Labelings,
    subset: &[usize],
) -> Option<Vec<usize>> {
    let mut ranks = Vec::with_capacity(pattern.edge_count());
    let mut host = Vec::with_capacity(pattern.r());
    for (map, local) in labelings.maps.iter().zip(&labelings.local_edges) {
        ranks.clear();
        for e in local {
            host.clear();
            host.extend(e.iter().map(|&l| subset[l]));
            ranks.push(colex_rank(&host));
        }
        let rainbow_somewhere = subset.iter().any(|&u| {
            let row = family.row(u);
            (0..ranks.len()).all(|a| (a + 1..ranks.len()).all(|b| row[ranks[a]] != row[ranks[b]]))
        });
        if !rainbow_somewhere {
            return Some(map.iter().map(|&l| subset[l]).collect());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{deterministic_family, Provenance};
    use crate::hypergraph::{Family, VertexOrder};

    #[test]
    fn injective_family_is_local() {
        let f = ColoringFamily::from_fn(6, 3, 20, Provenance::new("injective", 0), |_, e| {
            colex_rank(e) as u32 + 1
        })
        .unwrap();
        let res = verify_local(&f, &Family::Sp3.build(3).unwrap()).unwrap();
        assert!(res.is_ok());
    }

    #[test]
    fn constant_family_fails_on_first_copy() {
        let f = ColoringFamily::constant(6, 3).unwrap();
        let sp3 = Family::Sp3.build(3).unwrap();
        let res = verify_local(&f, &sp3).unwrap();
        let w = res.witness().unwrap();
        assert!(w.check(&f));
        assert_eq!(w.embedding.iter().copied().sorted().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn deterministic_family_handles_matching() {
        let f = deterministic_family(9, 3, &VertexOrder::identity(9)).unwrap();
        let res = verify_local(&f, &Family::Matching(3).build(3).unwrap()).unwrap();
        assert_eq!(res, LocalResult::Ok { copies: 280 });
    }

    #[test]
    fn errors() {
        let f = ColoringFamily::constant(5, 3).unwrap();
        assert!(matches!(
            verify_local(&f, &Family::Sp3.build(3).unwrap()),
            Err(Error::PatternTooLarge { .. })
        ));
        assert!(matches!(
            verify_local(&f, &Family::Clique(3).build(2).unwrap()),
            Err(Error::UniformityMismatch { .. })
        ));
    }
}
