//! Scripted checks of the finite statements this library reproduces.
//! Each check recomputes its claim from scratch and reports pass or fail.

use std::collections::HashMap;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{attack, verify_local, AttackPattern, LocalResult};
use crate::colorings::{
    deterministic_family, lll_k, lll_sample, pq_coloring_search, product_lift, tce_family, ColoringFamily,
    PQColoring, Provenance,
};
use crate::error::{Error, Result};
use crate::hypergraph::{
    colex_rank, enumerate_hypergraphs, erdos_rado_bound, find_sunflower, is_isomorphic, Family,
    UniformHypergraph, VertexOrder,
};
use crate::locality::{classify_all, decide_2ll, is_2ll_under, Status};
use crate::solver::{exists_local_coloring, Verdict};

pub const CLAIM_IDS: &[&str] = &[
    "thm1-3edge-exceptions",
    "thm1-4edge-all-2ll",
    "thm1-witness-orders",
    "m3-exhaustion",
    "prop3-two-edges",
    "thm9-deterministic",
    "thm7-lll",
    "thm10-lift",
    "tce-composite",
    "erdos-rado-163",
    "attack-soundness",
    "solver-crosscheck",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl ClaimReport {
    fn new(id: &str, passed: bool, detail: impl Into<String>) -> Self {
        ClaimReport {
            id: id.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub fn run_claim(id: &str, seed: u64) -> Result<ClaimReport> {
    let report = match id {
        "thm1-3edge-exceptions" => three_edge_exceptions(),
        "thm1-4edge-all-2ll" => four_edges_all_2ll(),
        "thm1-witness-orders" => witness_orders(),
        "m3-exhaustion" => m3_exhaustion(),
        "prop3-two-edges" => two_edges(seed),
        "thm9-deterministic" => deterministic_upper(10)?,
        "thm7-lll" => lll_runs(seed, 100)?,
        "thm10-lift" => lift_transfer(seed, 20)?,
        "tce-composite" => tce_composite(seed)?,
        "erdos-rado-163" => erdos_rado(seed, 500)?,
        "attack-soundness" => attack_soundness(seed, 1000)?,
        "solver-crosscheck" => solver_crosscheck()?,
        _ => return Err(Error::InvalidParams(format!("unknown claim id `{id}`"))),
    };
    Ok(report)
}

fn expected_exceptions() -> Vec<UniformHypergraph> {
    [Family::Tp3, Family::Sp3, Family::Lc3]
        .iter()
        .map(|f| f.build(3).expect("fixed family"))
        .collect()
}

fn three_edge_exceptions() -> ClaimReport {
    let id = "thm1-3edge-exceptions";
    let records = classify_all(3, 3);
    let large: Vec<&UniformHypergraph> = records
        .iter()
        .filter(|r| r.decision.status == Status::TwoLocallyLarge)
        .map(|r| &r.canonical)
        .collect();
    let expected = expected_exceptions();
    let matched = large.len() == expected.len()
        && expected.iter().all(|e| large.iter().any(|l| is_isomorphic(l, e)));
    ClaimReport::new(
        id,
        matched,
        format!("{} classes, {} are 2LL", records.len(), large.len()),
    )
}

fn four_edges_all_2ll() -> ClaimReport {
    let records = classify_all(3, 4);
    let ok = records.iter().all(|r| {
        r.decision.status == Status::TwoLocallyLarge
            && r.decision.witness.as_ref().is_some_and(|w| is_2ll_under(&r.canonical, w))
    });
    let (lo, hi) = records
        .iter()
        .map(|r| r.canonical.n())
        .fold((usize::MAX, 0), |(a, b), n| (a.min(n), b.max(n)));
    ClaimReport::new(
        "thm1-4edge-all-2ll",
        ok && lo == 4 && hi == 12,
        format!("{} classes on {lo}..={hi} vertices", records.len()),
    )
}

/// The three orders, listed from the lowest rank up, letters `a = 0`.
pub const WITNESS_ORDERS: [(&str, &str); 3] = [("tp3", "cdabe"), ("sp3", "fecbda"), ("lc3", "aedcbf")];

pub fn letters_to_order(letters: &str) -> VertexOrder {
    let seq: Vec<usize> = letters.bytes().map(|b| (b - b'a') as usize).collect();
    VertexOrder::from_sequence(&seq).expect("letters form a permutation")
}

fn witness_orders() -> ClaimReport {
    let ok = WITNESS_ORDERS.iter().all(|(fam, letters)| {
        let h = crate::hypergraph::make_family(fam, 3).expect("fixed family");
        is_2ll_under(&h, &letters_to_order(letters))
    });
    ClaimReport::new("thm1-witness-orders", ok, "tp3, sp3, lc3")
}

fn m3_exhaustion() -> ClaimReport {
    let m3 = Family::Matching(3).build(3).expect("fixed family");
    let decision = decide_2ll(&m3);
    let mut failing = 0u64;
    for perm in (0..9).permutations(9) {
        let order = VertexOrder::from_sequence(&perm).expect("permutation");
        if !is_2ll_under(&m3, &order) {
            failing += 1;
        }
    }
    ClaimReport::new(
        "m3-exhaustion",
        decision.status == Status::NotTwoLocallyLarge && decision.orders_examined == 362_880 && failing == 362_880,
        format!("{failing} of 362880 orders fail"),
    )
}

fn random_order(n: usize, rng: &mut impl Rng) -> VertexOrder {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(rng);
    VertexOrder::from_sequence(&seq).expect("permutation")
}

fn two_edges(seed: u64) -> ClaimReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes = 0;
    let mut ok = true;
    for r in 2..=4 {
        for m in 1..=2 {
            for h in enumerate_hypergraphs(r, m, r * m) {
                classes += 1;
                ok &= decide_2ll(&h).status == Status::NotTwoLocallyLarge;
                ok &= (0..200).all(|_| !is_2ll_under(&h, &random_order(h.n(), &mut rng)));
            }
        }
    }
    ClaimReport::new("prop3-two-edges", ok, format!("{classes} classes, r = 2..=4"))
}

fn deterministic_upper(n: usize) -> Result<ClaimReport> {
    let family = deterministic_family(n, 3, &VertexOrder::identity(n))?;
    let mut checked = 0;
    let mut ok = family.k() == 7;
    for rec in classify_all(3, 3) {
        if rec.decision.status == Status::NotTwoLocallyLarge {
            checked += 1;
            ok &= verify_local(&family, &rec.canonical)?.is_ok();
        }
    }
    Ok(ClaimReport::new(
        "thm9-deterministic",
        ok && checked == 9,
        format!("k = {}, {checked} classes verified at n = {n}", family.k()),
    ))
}

fn lll_runs(seed: u64, runs: u64) -> Result<ClaimReport> {
    let (n, r, h) = (8, 3, 4);
    let k4 = UniformHypergraph::complete(r, h)?;
    let expect_k = lll_k(n, r, h)?;
    let mut ok = expect_k == 19484;
    let mut resamples = 0;
    for s in 0..runs {
        let (family, report) = lll_sample(n, r, h, seed.wrapping_add(s), None)?;
        resamples += report.resamples;
        ok &= family.k() == expect_k && verify_local(&family, &k4)?.is_ok();
    }
    Ok(ClaimReport::new(
        "thm7-lll",
        ok,
        format!("{runs} runs, k = {expect_k}, {resamples} resamples in total"),
    ))
}

fn lift_transfer(seed: u64, wanted: usize) -> Result<ClaimReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small: Vec<UniformHypergraph> = (1..=3)
        .flat_map(|m| enumerate_hypergraphs(3, m, 7))
        .filter(|h| decide_2ll(h).status == Status::NotTwoLocallyLarge && h.edge_count() >= 2)
        .collect();
    let mut pairs = 0;
    let mut attempts = 0;
    let mut ok = true;
    while pairs < wanted && attempts < 50 * wanted {
        attempts += 1;
        let t = small.choose(&mut rng).expect("nonempty");
        if t.n() >= 8 {
            continue;
        }
        let c = rng.gen_range(1..=8 - t.n());
        let t_prime = t.with_isolated(c)?;
        let h = t_prime.n();
        let n = rng.gen_range(h..=8);
        let base = if rng.gen_bool(0.7) {
            deterministic_family(n, 3, &random_order(n, &mut rng))?
        } else {
            let k = rng.gen_range(2..=4);
            ColoringFamily::from_fn(n, 3, k, Provenance::new("random", seed), |_, _| rng.gen_range(1..=k))?
        };
        if !verify_local(&base, &t_prime)?.is_ok() {
            continue;
        }
        let mut anchors: Vec<usize> = (0..n).collect();
        anchors.shuffle(&mut rng);
        anchors.truncate(h);
        let lifted = product_lift(&base, &anchors)?;
        pairs += 1;
        ok &= (lifted.k() as u64) <= (base.k() as u64).pow(h as u32 + 1);
        ok &= verify_local(&lifted, t)?.is_ok();
    }
    Ok(ClaimReport::new(
        "thm10-lift",
        ok && pairs == wanted,
        format!("{pairs} verified pairs out of {attempts} attempts"),
    ))
}

/// Fewest colors found for a (p,q)-coloring, trying `k = 1, 2, ...` up to 12.
pub fn find_pq_coloring(n: usize, t: usize, p: usize, q: usize, seed: u64, budget: u64) -> Result<Option<PQColoring>> {
    for k in 1..=12 {
        if let Some(c) = pq_coloring_search(n, t, p, q, k, seed, budget)?.coloring {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Largest `n ≤ 9` where both colorings are found.
pub fn tce_instance(seed: u64) -> Result<Option<(usize, PQColoring, PQColoring)>> {
    for n in (5..=9).rev() {
        let gamma = find_pq_coloring(n, 3, 4, 3, seed, 2_000_000)?;
        let rho = find_pq_coloring(n, 4, 5, 4, seed, 2_000_000)?;
        if let (Some(g), Some(r)) = (gamma, rho) {
            return Ok(Some((n, g, r)));
        }
    }
    Ok(None)
}

fn tce_composite(seed: u64) -> Result<ClaimReport> {
    let Some((n, gamma, rho)) = tce_instance(seed)? else {
        return Ok(ClaimReport::new("tce-composite", false, "no (p,q)-colorings found"));
    };
    let family = tce_family(n, &gamma, &rho)?;
    let tce = Family::Tce.build(3)?;
    let res = verify_local(&family, &tce)?;
    Ok(ClaimReport::new(
        "tce-composite",
        gamma.is_valid() && rho.is_valid() && res.is_ok(),
        format!("n = {n}, k = {} + {} = {}", gamma.k(), rho.k(), family.k()),
    ))
}

/// [`random_hypergraph`] driven by a fresh generator seeded with `seed`.
pub fn seeded_random_hypergraph(r: usize, n: usize, m: usize, seed: u64) -> Result<UniformHypergraph> {
    random_hypergraph(r, n, m, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A uniformly random r-graph with exactly `m` edges on `n` vertices.
pub fn random_hypergraph(r: usize, n: usize, m: usize, rng: &mut impl Rng) -> Result<UniformHypergraph> {
    let all: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    if m > all.len() {
        return Err(Error::InvalidParams(format!("only {} edges fit on {n} vertices", all.len())));
    }
    let edges: Vec<Vec<usize>> = all.choose_multiple(rng, m).cloned().collect();
    UniformHypergraph::new(r, n, edges)
}

fn erdos_rado(seed: u64, count: usize) -> Result<ClaimReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = erdos_rado_bound(3, 4) as usize;
    let mut found = 0;
    for _ in 0..count {
        let n = rng.gen_range(11..=40);
        let h = random_hypergraph(3, n, bound, &mut rng)?;
        if find_sunflower(&h, 4).is_some_and(|w| w.validate(&h, 4)) {
            found += 1;
        }
    }
    Ok(ClaimReport::new(
        "erdos-rado-163",
        bound == 163 && found == count,
        format!("{found}/{count} graphs with {bound} edges"),
    ))
}

fn attack_soundness(seed: u64, count: usize) -> Result<ClaimReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let patterns: Vec<AttackPattern> = ["sp3", "sunflower(1,4)", "sunflower(0,3)", "sunflower(2,4)", "clique(7)", "sp4_1", "sp4_2"]
        .iter()
        .map(|s| s.parse().expect("fixed pattern"))
        .collect();
    let mut contradictions = 0;
    let mut found = 0;
    for i in 0..count {
        let pattern = patterns[i % patterns.len()];
        let h = pattern.pattern(3)?;
        let n = rng.gen_range(h.n().max(6)..=12);
        let family = match i % 5 {
            0 => deterministic_family(n, 3, &random_order(n, &mut rng))?,
            _ => {
                let k = rng.gen_range(1..=4);
                ColoringFamily::from_fn(n, 3, k, Provenance::new("random", seed), |_, _| rng.gen_range(1..=k))?
            }
        };
        let verdict = verify_local(&family, &h)?;
        if let LocalResult::Violated { witness } = &verdict {
            contradictions += independent_recheck(&family, witness) as usize ^ 1;
        }
        if let Some(w) = attack(&family, pattern)? {
            found += 1;
            contradictions += independent_recheck(&family, &w) as usize ^ 1;
            contradictions += verdict.is_ok() as usize;
        }
    }
    Ok(ClaimReport::new(
        "attack-soundness",
        contradictions == 0,
        format!("{count} families, {found} attack witnesses, {contradictions} contradictions"),
    ))
}

/// Re-derives each clash color straight from the stored color array.
fn independent_recheck(family: &ColoringFamily, w: &crate::analysis::ViolationWitness) -> bool {
    let m = family.edge_count();
    let image: Vec<Vec<usize>> = w
        .pattern
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| w.embedding[v]).sorted().collect())
        .collect();
    w.embedding.iter().all_unique()
        && w.clashes.len() == w.embedding.len()
        && w.clashes.iter().zip(&w.embedding).all(|(c, &u)| {
            let at = |e: &[usize]| family.colors()[u * m + colex_rank(e)];
            c.vertex == u
                && c.edge_a != c.edge_b
                && image.contains(&c.edge_a)
                && image.contains(&c.edge_b)
                && at(&c.edge_a) == at(&c.edge_b)
        })
}

/// Plain backtracking over every relevant `(vertex, edge)` pair with no
/// symmetry breaking, rejecting only completed copies.
pub fn brute_force_local(n: usize, pattern: &UniformHypergraph, k: u32) -> bool {
    let h = pattern.n();
    let mut copies: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for s in (0..n).combinations(h) {
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for image in s.iter().copied().permutations(h) {
            let ranks: Vec<usize> = pattern
                .edges()
                .iter()
                .map(|e| colex_rank(&e.iter().map(|&v| image[v]).sorted().collect::<Vec<_>>()))
                .sorted()
                .collect();
            if !seen.contains(&ranks) {
                seen.push(ranks.clone());
                copies.push((s.clone(), ranks));
            }
        }
    }
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for (s, ranks) in &copies {
        for &u in s {
            for &e in ranks {
                let next = index.len();
                index.entry((u, e)).or_insert(next);
            }
        }
    }
    // copies become checkable once their last variable is set
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); index.len()];
    for (c, (s, ranks)) in copies.iter().enumerate() {
        let idx = &index;
        let last = s
            .iter()
            .flat_map(|&u| ranks.iter().map(move |&e| idx[&(u, e)]))
            .max();
        if let Some(last) = last {
            closing[last].push(c);
        }
    }
    let mut colors = vec![0u32; index.len()];
    fn go(
        x: usize,
        k: u32,
        colors: &mut Vec<u32>,
        closing: &[Vec<usize>],
        copies: &[(Vec<usize>, Vec<usize>)],
        index: &HashMap<(usize, usize), usize>,
    ) -> bool {
        if x == colors.len() {
            return true;
        }
        for c in 1..=k {
            colors[x] = c;
            let fine = closing[x].iter().all(|&cp| {
                let (s, ranks) = &copies[cp];
                s.iter().any(|&u| {
                    ranks
                        .iter()
                        .map(|&e| colors[index[&(u, e)]])
                        .all_unique()
                })
            });
            if fine && go(x + 1, k, colors, closing, copies, index) {
                return true;
            }
        }
        false
    }
    go(0, k, &mut colors, &closing, &copies, &index)
}

/// Patterns with at most two edges that fit in `max_n` vertices, isolated
/// vertices included.
pub fn small_patterns(r: usize, max_n: usize) -> Vec<UniformHypergraph> {
    let mut out = Vec::new();
    for m in 1..=2 {
        for h in enumerate_hypergraphs(r, m, max_n) {
            for iso in 0..=max_n - h.n() {
                out.push(h.with_isolated(iso).expect("fits"));
            }
        }
    }
    out
}

fn solver_crosscheck() -> Result<ClaimReport> {
    let mut cases = 0;
    let mut mismatches = 0;
    for r in 2..=3 {
        for h in small_patterns(r, 5) {
            for n in h.n()..=5 {
                for k in 1..=2 {
                    cases += 1;
                    let cert = exists_local_coloring(n, r, &h, k, 50_000_000)?;
                    let expected = brute_force_local(n, &h, k);
                    let agree = match cert.verdict {
                        Verdict::Sat => expected,
                        Verdict::Unsat => !expected,
                        Verdict::Inconclusive => false,
                    };
                    mismatches += (!agree) as usize;
                }
            }
        }
    }
    Ok(ClaimReport::new(
        "solver-crosscheck",
        mismatches == 0,
        format!("{cases} instances, {mismatches} disagreements"),
    ))
}
