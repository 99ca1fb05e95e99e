//! Edge colorings of `K_n^(t)` in which every `p` vertices span at least `q`
//! colors, found by backtracking.

use std::io::{Read, Write};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::family::{ensure_eof, read_colors, read_header, write_colors, write_header};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQColoring {
    n: usize,
    t: usize,
    p: usize,
    q: usize,
    k: u32,
    colors: Vec<u32>,
    pub seed: u64,
}

impl PQColoring {
    pub fn new(n: usize, t: usize, p: usize, q: usize, k: u32, colors: Vec<u32>) -> Result<Self> {
        check_params(n, t, p, q)?;
        if colors.len() != binomial(n, t) as usize {
            return Err(Error::InvalidParams(format!(
                "expected {} colors, got {}",
                binomial(n, t),
                colors.len()
            )));
        }
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { color: bad, k });
        }
        Ok(PQColoring {
            n,
            t,
            p,
            q,
            k,
            colors,
            seed: 0,
        })
    }

    /// Every edge gets its own color.
    pub fn all_distinct(n: usize, t: usize, p: usize, q: usize) -> Result<Self> {
        let m = binomial(n, t) as u32;
        Self::new(n, t, p, q, m, (1..=m).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of a sorted t-set.
    pub fn color_of(&self, edge: &[usize]) -> u32 {
        self.colors[colex_rank(edge)]
    }

    /// Fewest distinct colors spanned by any `p` vertices.
    pub fn min_distinct(&self) -> usize {
        let mut buf = Vec::new();
        (0..self.n)
            .combinations(self.p)
            .map(|s| {
                buf.clear();
                buf.extend(
                    s.iter()
                        .copied()
                        .combinations(self.t)
                        .map(|e| self.colors[colex_rank(&e)]),
                );
                buf.sort_unstable();
                buf.dedup();
                buf.len()
            })
            .min()
            .unwrap_or(usize::MAX)
    }

    /// Checks every p-subset.
    pub fn is_valid(&self) -> bool {
        self.min_distinct() >= self.q
    }

    /// Same header as a family file, followed by a single row of `C(n, t)`
    /// colors.
    pub fn write_to(&self, w: &mut impl Write) -> Result<()> {
        write_header(w, self.n, self.t, self.k, self.seed)?;
        write_colors(w, &self.colors)
    }

    pub fn read_from(r: &mut impl Read, p: usize, q: usize) -> Result<Self> {
        let header = read_header(r)?;
        let colors = read_colors(r, binomial(header.n, header.r) as usize)?;
        ensure_eof(r)?;
        let mut c = Self::new(header.n, header.r, p, q, header.k, colors)?;
        c.seed = header.seed;
        Ok(c)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.write_to(&mut out).expect("writing to a Vec cannot fail");
        out
    }

    pub fn from_bytes(mut bytes: &[u8], p: usize, q: usize) -> Result<Self> {
        Self::read_from(&mut bytes, p, q)
    }
}

fn check_params(n: usize, t: usize, p: usize, q: usize) -> Result<()> {
    if t < 2 {
        return Err(Error::Uniformity(t));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    if !(t <= p && p <= n) {
        return Err(Error::InvalidParams(format!(
            "need t <= p <= n, got t={t}, p={p}, n={n}"
        )));
    }
    if q as u64 > binomial(p, t) {
        return Err(Error::InvalidParams(format!(
            "q = {q} exceeds C({p},{t})"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct PqSearchResult {
    pub coloring: Option<PQColoring>,
    /// The deterministic search ran to the end, so `None` proves that no
    /// coloring with `k_max` colors exists.
    pub complete: bool,
    pub nodes: u64,
}

/// Least `k` found by [`min_pq_colors`]. Exact when `upper == Some(lower)`.
#[derive(Clone, Debug)]
pub struct PqMinimum {
    pub lower: u32,
    pub upper: Option<u32>,
    pub coloring: Option<PQColoring>,
}

struct Search {
    k_max: u32,
    q: usize,
    /// Edge ranks of each p-subset.
    blocks: Vec<Vec<usize>>,
    /// Blocks containing each edge.
    member: Vec<Vec<usize>>,
    colors: Vec<u32>,
    nodes: u64,
    budget: u64,
    rng: Option<ChaCha8Rng>,
}

impl Search {
    fn new(n: usize, t: usize, p: usize, q: usize, k_max: u32) -> Self {
        let m = binomial(n, t) as usize;
        let blocks: Vec<Vec<usize>> = (0..n)
            .combinations(p)
            .map(|s| {
                let mut ranks: Vec<usize> =
                    s.into_iter().combinations(t).map(|e| colex_rank(&e)).collect();
                ranks.sort_unstable();
                ranks
            })
            .collect();
        let mut member = vec![Vec::new(); m];
        for (b, ranks) in blocks.iter().enumerate() {
            for &e in ranks {
                member[e].push(b);
            }
        }
        Search {
            k_max,
            q,
            blocks,
            member,
            colors: vec![0; m],
            nodes: 0,
            budget: 0,
            rng: None,
        }
    }

    /// Every block through `e` can still reach `q` colors.
    fn feasible(&self, e: usize, buf: &mut Vec<u32>) -> bool {
        self.member[e].iter().all(|&b| {
            buf.clear();
            let mut open = 0;
            for &f in &self.blocks[b] {
                match self.colors[f] {
                    0 => open += 1,
                    c => buf.push(c),
                }
            }
            buf.sort_unstable();
            buf.dedup();
            buf.len() + open >= self.q
        })
    }

    /// `Some(true)` found, `Some(false)` subtree exhausted, `None` budget hit.
    fn run(&mut self, e: usize, used: u32, buf: &mut Vec<u32>) -> Option<bool> {
        if e == self.colors.len() {
            return Some(true);
        }
        let top = (used + 1).min(self.k_max);
        let mut values: Vec<u32> = (1..=top).collect();
        if let Some(rng) = self.rng.as_mut() {
            values.shuffle(rng);
        }
        for c in values {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.colors[e] = c;
            if self.feasible(e, buf) && self.run(e + 1, used.max(c), buf)? {
                return Some(true);
            }
        }
        self.colors[e] = 0;
        Some(false)
    }
}

/// Looks for a (p, q)-coloring of `K_n^(t)` with at most `k_max` colors.
///
/// A complete backtracking search with first-use color ordering runs first
/// with the full node budget. If it runs out, randomized restarts with an
/// eighth of the budget each take over, up to the same total again.
pub fn pq_coloring_search(
    n: usize,
    t: usize,
    p: usize,
    q: usize,
    k_max: u32,
    seed: u64,
    budget: u64,
) -> Result<PqSearchResult> {
    check_params(n, t, p, q)?;
    if k_max == 0 {
        return Err(Error::InvalidParams("k_max must be positive".into()));
    }
    let mut search = Search::new(n, t, p, q, k_max);
    let mut buf = Vec::new();
    search.budget = budget;
    let finish = |search: &Search, nodes: u64| -> Result<PqSearchResult> {
        let k = *search.colors.iter().max().unwrap_or(&1);
        let mut c = PQColoring::new(n, t, p, q, k, search.colors.clone())?;
        c.seed = seed;
        debug_assert!(c.is_valid());
        Ok(PqSearchResult {
            coloring: Some(c),
            complete: false,
            nodes,
        })
    };
    match search.run(0, 0, &mut buf) {
        Some(true) => return finish(&search, search.nodes),
        Some(false) => {
            return Ok(PqSearchResult {
                coloring: None,
                complete: true,
                nodes: search.nodes,
            })
        }
        None => {}
    }
    let mut total = search.nodes;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let slice = (budget / 8).max(1);
    while total < budget.saturating_mul(2) {
        search.colors.iter_mut().for_each(|c| *c = 0);
        search.nodes = 0;
        search.budget = slice;
        search.rng = Some(ChaCha8Rng::seed_from_u64(rand::Rng::gen(&mut rng)));
        let outcome = search.run(0, 0, &mut buf);
        total += search.nodes;
        match outcome {
            Some(true) => return finish(&search, total),
            Some(false) => {
                return Ok(PqSearchResult {
                    coloring: None,
                    complete: true,
                    nodes: total,
                })
            }
            None => {}
        }
    }
    Ok(PqSearchResult {
        coloring: None,
        complete: false,
        nodes: total,
    })
}

/// Smallest number of colors for which the search succeeds, with a lower
/// bound certified by complete searches below it.
pub fn min_pq_colors(n: usize, t: usize, p: usize, q: usize, seed: u64, budget: u64) -> Result<PqMinimum> {
    check_params(n, t, p, q)?;
    let mut lower = 1u32;
    let mut certified = true;
    for k in 1..=binomial(n, t) as u32 {
        let res = pq_coloring_search(n, t, p, q, k, seed, budget)?;
        if let Some(c) = res.coloring {
            return Ok(PqMinimum {
                lower,
                upper: Some(c.k()),
                coloring: Some(c),
            });
        }
        if res.complete && certified {
            lower = k + 1;
        } else {
            certified = false;
        }
    }
    let c = PQColoring::all_distinct(n, t, p, q)?;
    Ok(PqMinimum {
        lower,
        upper: Some(c.k()),
        coloring: Some(c),
    })
}

impl PqMinimum {
    pub fn exact(&self) -> Option<u32> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }
}
