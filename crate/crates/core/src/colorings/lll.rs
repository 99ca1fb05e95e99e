//! Moser–Tardos resampling for the bad events "every vertex of an h-subset
//! sees a repeated color on the edges inside it".

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::family::{ColoringFamily, Provenance};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LllReport {
    pub k: u32,
    pub resamples: u64,
    pub passes: u64,
    pub budget: u64,
}

/// `⌈h^(2r + r/h) · n^((h - r)/h)⌉`.
pub fn lll_k(n: usize, r: usize, h: usize) -> Result<u32> {
    check(n, r, h)?;
    let (nf, rf, hf) = (n as f64, r as f64, h as f64);
    let x = hf.powf(2.0 * rf + rf / hf) * nf.powf((hf - rf) / hf);
    let near = x.round();
    let k = if (x - near).abs() <= 1e-9 * x.max(1.0) {
        near
    } else {
        x.ceil()
    };
    if !(1.0..=u32::MAX as f64).contains(&k) {
        return Err(Error::ColorOverflow(format!(
            "k = {x:e} does not fit in 32 bits"
        )));
    }
    Ok(k as u32)
}

fn check(n: usize, r: usize, h: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Uniformity(r));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    if !(r <= h && h <= n) {
        return Err(Error::InvalidParams(format!(
            "need r <= h <= n, got r={r}, h={h}, n={n}"
        )));
    }
    Ok(())
}

/// Samples a family that is local for `K_h^(r)` with the formula's `k`.
/// `budget` caps the number of resamplings and defaults to `1000 · C(n, h)`.
pub fn lll_sample(
    n: usize,
    r: usize,
    h: usize,
    seed: u64,
    budget: Option<u64>,
) -> Result<(ColoringFamily, LllReport)> {
    let k = lll_k(n, r, h)?;
    lll_sample_with_k(n, r, h, k, seed, budget)
}

/// [`lll_sample`] with an explicit number of colors.
pub fn lll_sample_with_k(
    n: usize,
    r: usize,
    h: usize,
    k: u32,
    seed: u64,
    budget: Option<u64>,
) -> Result<(ColoringFamily, LllReport)> {
    check(n, r, h)?;
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    let budget = budget.unwrap_or_else(|| binomial(n, h).saturating_mul(1000));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = binomial(n, r) as usize;
    let colors: Vec<u32> = (0..n * edges).map(|_| rng.gen_range(1..=k)).collect();
    let mut family = ColoringFamily::new(n, r, k, colors, Provenance::new("lll", seed))?;

    let mut report = LllReport {
        k,
        resamples: 0,
        passes: 0,
        budget,
    };
    if h == r {
        return Ok((family, report));
    }
    let events: Vec<(Vec<usize>, Vec<usize>)> = (0..n)
        .combinations(h)
        .map(|s| {
            let ranks = s.iter().copied().combinations(r).map(|e| colex_rank(&e)).collect();
            (s, ranks)
        })
        .collect();
    let mut seen = Vec::with_capacity(binomial(h, r) as usize);
    loop {
        report.passes += 1;
        let mut clean = true;
        for (vertices, ranks) in &events {
            if !occurs(&family, vertices, ranks, &mut seen) {
                continue;
            }
            clean = false;
            if report.resamples >= budget {
                return Err(Error::ResampleBudget {
                    budget,
                    resamples: report.resamples,
                });
            }
            report.resamples += 1;
            for &v in vertices {
                for &e in ranks {
                    family.set_color(v, e, rng.gen_range(1..=k));
                }
            }
        }
        if clean {
            return Ok((family, report));
        }
    }
}

/// Every vertex of the subset sees two equal colors on its edges.
fn occurs(family: &ColoringFamily, vertices: &[usize], ranks: &[usize], seen: &mut Vec<u32>) -> bool {
    vertices.iter().all(|&v| {
        seen.clear();
        seen.extend(ranks.iter().map(|&e| family.color(v, e)));
        seen.sort_unstable();
        seen.windows(2).any(|w| w[0] == w[1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_k() {
        assert_eq!(lll_k(8, 3, 4).unwrap(), 19484);
        assert_eq!(lll_k(5, 3, 3).unwrap(), 2187);
    }

    #[test]
    fn single_edge_pattern_keeps_sample() {
        let (f, rep) = lll_sample(6, 3, 3, 7, None).unwrap();
        assert_eq!(rep.resamples, 0);
        let (g, _) = lll_sample(6, 3, 3, 7, None).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn resampling_clears_events() {
        let (f, rep) = lll_sample_with_k(7, 3, 4, 6, 1, None).unwrap();
        assert!(rep.resamples > 0);
        let mut seen = Vec::new();
        for s in (0..7).combinations(4) {
            let ranks: Vec<usize> = s.iter().copied().combinations(3).map(|e| colex_rank(&e)).collect();
            assert!(!occurs(&f, &s, &ranks, &mut seen));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = lll_sample_with_k(7, 3, 4, 1, 1, Some(5)).unwrap_err();
        assert!(matches!(err, Error::ResampleBudget { budget: 5, .. }));
    }
}
