//! Exact decision of "is there a local coloring with k colors" by
//! backtracking, and the least such k.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::analysis::verify_local;
use crate::colorings::{deterministic_family, ColoringFamily, Provenance};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank, Labelings, UniformHypergraph, VertexOrder};
use crate::locality::{decide_2ll, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "SAT")]
    Sat,
    #[serde(rename = "UNSAT")]
    Unsat,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl Verdict {
    /// 0, 1 and 2 respectively.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Sat => 0,
            Verdict::Unsat => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub variables: usize,
    pub copies: usize,
    pub budget: u64,
    pub symmetry: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveCertificate {
    pub verdict: Verdict,
    pub n: usize,
    pub r: usize,
    pub k: u32,
    pub pattern: UniformHypergraph,
    pub stats: SolveStats,
    /// Present exactly for SAT.
    #[serde(skip)]
    pub family: Option<ColoringFamily>,
}

/// One copy: for each of its vertices, the variable ids of that vertex's
/// colors on the copy's edges.
struct CopyVars {
    per_vertex: Vec<Vec<usize>>,
}

pub(crate) struct Instance {
    /// `(vertex, edge rank)` of each variable.
    vars: Vec<(usize, usize)>,
    copies: Vec<CopyVars>,
    var_copies: Vec<Vec<usize>>,
}

impl Instance {
    pub(crate) fn build(n: usize, pattern: &UniformHypergraph) -> Self {
        let labelings = Labelings::of(pattern);
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut vars = Vec::new();
        let mut copies = Vec::new();
        for subset in (0..n).combinations(pattern.n()) {
            for local in &labelings.local_edges {
                let ranks: Vec<usize> = local
                    .iter()
                    .map(|e| colex_rank(&e.iter().map(|&l| subset[l]).collect::<Vec<_>>()))
                    .collect();
                let per_vertex = subset
                    .iter()
                    .map(|&u| {
                        ranks
                            .iter()
                            .map(|&e| {
                                *index.entry((u, e)).or_insert_with(|| {
                                    vars.push((u, e));
                                    vars.len() - 1
                                })
                            })
                            .collect()
                    })
                    .collect();
                copies.push(CopyVars { per_vertex });
            }
        }
        let mut var_copies = vec![Vec::new(); vars.len()];
        for (c, copy) in copies.iter().enumerate() {
            for &x in copy.per_vertex.iter().flatten() {
                var_copies[x].push(c);
            }
        }
        Instance {
            vars,
            copies,
            var_copies,
        }
    }

    /// Every vertex of the copy already has two equal assigned colors.
    fn dead(&self, c: usize, colors: &[u32]) -> bool {
        self.copies[c].per_vertex.iter().all(|vs| {
            vs.iter().enumerate().any(|(i, &a)| {
                colors[a] != 0 && vs[i + 1..].iter().any(|&b| colors[b] == colors[a])
            })
        })
    }

    pub(crate) fn var_count(&self) -> usize {
        self.vars.len()
    }

    pub(crate) fn copy_count(&self) -> usize {
        self.copies.len()
    }
}

struct Dfs<'a> {
    inst: &'a Instance,
    k: u32,
    colors: Vec<u32>,
    /// Highest color used so far at each host vertex.
    used: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn run(&mut self, x: usize) -> Option<bool> {
        if x == self.inst.vars.len() {
            return Some(true);
        }
        let v = self.inst.vars[x].0;
        let before = self.used[v];
        for c in 1..=(before + 1).min(self.k) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.colors[x] = c;
            self.used[v] = before.max(c);
            let alive = self.inst.var_copies[x].iter().all(|&cp| !self.inst.dead(cp, &self.colors));
            if alive && self.run(x + 1)? {
                return Some(true);
            }
        }
        self.colors[x] = 0;
        self.used[v] = before;
        Some(false)
    }
}

fn check(n: usize, r: usize, pattern: &UniformHypergraph, k: u32) -> Result<()> {
    if pattern.r() != r {
        return Err(Error::UniformityMismatch {
            pattern: pattern.r(),
            family: r,
        });
    }
    if pattern.n() > n {
        return Err(Error::PatternTooLarge {
            pattern: pattern.n(),
            host: n,
        });
    }
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    Ok(())
}

/// Decides whether an `(n, r, pattern)`-local coloring with `k` colors
/// exists. `budget` caps search nodes; running out gives INCONCLUSIVE.
///
/// Only pairs `(v, e)` with `v` and `e` in a common copy are searched; the
/// rest are colored 1. Colors at each host vertex are introduced in
/// first-use order.
pub fn exists_local_coloring(
    n: usize,
    r: usize,
    pattern: &UniformHypergraph,
    k: u32,
    budget: u64,
) -> Result<SolveCertificate> {
    check(n, r, pattern, k)?;
    let m = pattern.edge_count();
    let mut cert = SolveCertificate {
        verdict: Verdict::Inconclusive,
        n,
        r,
        k,
        pattern: pattern.clone(),
        stats: SolveStats {
            nodes: 0,
            variables: 0,
            copies: 0,
            budget,
            symmetry: Vec::new(),
        },
        family: None,
    };
    if m <= 1 {
        cert.verdict = Verdict::Sat;
        cert.family = Some(ColoringFamily::from_fn(n, r, k, Provenance::new("solver", 0), |_, _| 1)?);
        return Ok(cert);
    }
    if m as u64 > k as u64 {
        cert.verdict = Verdict::Unsat;
        cert.stats.symmetry.push("fewer colors than edges".into());
        return Ok(cert);
    }
    let inst = Instance::build(n, pattern);
    cert.stats.variables = inst.var_count();
    cert.stats.copies = inst.copy_count();
    cert.stats.symmetry.push("per-vertex color first-use order".into());
    let mut dfs = Dfs {
        inst: &inst,
        k,
        colors: vec![0; inst.var_count()],
        used: vec![0; n],
        nodes: 0,
        budget,
    };
    let outcome = dfs.run(0);
    cert.stats.nodes = dfs.nodes;
    match outcome {
        Some(true) => {
            let mut family = ColoringFamily::from_fn(n, r, k, Provenance::new("solver", 0), |_, _| 1)?;
            for (&(v, e), &c) in inst.vars.iter().zip(&dfs.colors) {
                family.set_color(v, e, c);
            }
            debug_assert!(verify_local(&family, pattern).map(|res| res.is_ok()).unwrap_or(false));
            cert.verdict = Verdict::Sat;
            cert.family = Some(family);
        }
        Some(false) => cert.verdict = Verdict::Unsat,
        None => cert.verdict = Verdict::Inconclusive,
    }
    Ok(cert)
}

/// `C_r(n, H)` or the tightest bracket found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinColors {
    pub lower: u32,
    pub upper: Option<u32>,
    /// Where the upper bound came from: `solver`, `deterministic` or
    /// `injective`.
    pub upper_source: Option<String>,
    pub nodes: u64,
}

impl MinColors {
    pub fn exact(&self) -> Option<u32> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }
}

pub fn min_colors(
    n: usize,
    r: usize,
    pattern: &UniformHypergraph,
    k_max: u32,
    budget: u64,
) -> Result<MinColors> {
    check(n, r, pattern, 1)?;
    let m = pattern.edge_count() as u32;
    let mut res = MinColors {
        lower: m.max(1),
        upper: None,
        upper_source: None,
        nodes: 0,
    };
    if m <= 1 {
        res.upper = Some(1);
        res.upper_source = Some("solver".into());
        return Ok(res);
    }
    let mut certified = true;
    for k in m..=k_max {
        let cert = exists_local_coloring(n, r, pattern, k, budget)?;
        res.nodes += cert.stats.nodes;
        match cert.verdict {
            Verdict::Sat => {
                res.upper = Some(k);
                res.upper_source = Some("solver".into());
                return Ok(res);
            }
            Verdict::Unsat if certified => res.lower = k + 1,
            Verdict::Unsat => {}
            Verdict::Inconclusive => certified = false,
        }
    }
    let mut offer = |k: u32, source: &str| {
        if res.upper.is_none_or(|u| k < u) {
            res.upper = Some(k.max(res.lower));
            res.upper_source = Some(source.into());
        }
    };
    if decide_2ll(pattern).status == Status::NotTwoLocallyLarge {
        let f = deterministic_family(n, r, &VertexOrder::identity(n))?;
        if verify_local(&f, pattern)?.is_ok() {
            offer(f.k(), "deterministic");
        }
    }
    offer(binomial(n, r).min(u32::MAX as u64) as u32, "injective");
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Family;

    #[test]
    fn single_edge_sat_with_one_color() {
        let e = Family::Matching(1).build(3).unwrap();
        let c = exists_local_coloring(5, 3, &e, 1, 1000).unwrap();
        assert_eq!(c.verdict, Verdict::Sat);
        assert_eq!(min_colors(5, 3, &e, 3, 1000).unwrap().exact(), Some(1));
    }

    #[test]
    fn two_edges_unsat_with_one_color() {
        let h = UniformHypergraph::new(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(exists_local_coloring(5, 3, &h, 1, 1000).unwrap().verdict, Verdict::Unsat);
    }

    #[test]
    fn sat_certificate_verifies() {
        let h = UniformHypergraph::new(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let c = exists_local_coloring(5, 3, &h, 2, 1_000_000).unwrap();
        assert_eq!(c.verdict, Verdict::Sat);
        assert!(verify_local(c.family.as_ref().unwrap(), &h).unwrap().is_ok());
    }

    #[test]
    fn budget_gives_inconclusive() {
        let h = UniformHypergraph::new(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let c = exists_local_coloring(5, 3, &h, 2, 3).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(c.verdict.exit_code(), 2);
    }

    #[test]
    fn not_2ll_bracket_at_most_seven() {
        let m3 = Family::Matching(3).build(3).unwrap();
        let res = min_colors(9, 3, &m3, 3, 10).unwrap();
        assert!(res.upper.unwrap() <= 7);
    }
}
