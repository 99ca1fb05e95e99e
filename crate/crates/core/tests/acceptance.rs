//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use itertools::Itertools;
use rainbow_core::analysis::{attack, verify_local, AttackPattern, LocalResult, ViolationWitness};
use rainbow_core::claims::{letters_to_order, small_patterns, tce_instance, WITNESS_ORDERS};
use rainbow_core::colorings::{deterministic_family, lll_k, lll_sample, product_lift, tce_family, ColoringFamily, Provenance};
use rainbow_core::hypergraph::{enumerate_hypergraphs, erdos_rado_bound, find_sunflower, make_family, UniformHypergraph, VertexOrder};
use rainbow_core::locality::{classify_all, is_2ll_under, Status};
use rainbow_core::solver::{exists_local_coloring, Verdict};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn shuffled_order(n: usize, rng: &mut impl Rng) -> VertexOrder {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(rng);
    VertexOrder::from_sequence(&seq).unwrap()
}

fn random_family(n: usize, k: u32, rng: &mut impl Rng) -> ColoringFamily {
    ColoringFamily::from_fn(n, 3, k, Provenance::new("random", 0), |_, _| rng.gen_range(1..=k)).unwrap()
}

fn three_edges() -> Outcome {
    let records = classify_all(3, 3);
    let expected: BTreeSet<Vec<u32>> = ["tp3", "sp3", "lc3"]
        .iter()
        .map(|f| signature_key(&make_family(f, 3).unwrap()))
        .collect();
    let oracle_classes = signature_classes(3, 3);
    let found: BTreeSet<Vec<u32>> = records.iter().map(|r| signature_key(&r.canonical)).collect();
    let mut large = BTreeSet::new();
    let mut agree = true;
    for rec in &records {
        let is_large = rec.decision.status == Status::TwoLocallyLarge;
        agree &= is_large == brute_2ll(&rec.canonical);
        if is_large {
            large.insert(signature_key(&rec.canonical));
        }
    }
    (
        agree && found == oracle_classes && records.len() == found.len() && large == expected,
        format!("{} classes, 2LL exactly {{TP3, SP3, LC3}}: {}", records.len(), large == expected),
    )
}

fn four_edges() -> Outcome {
    let records = classify_all(3, 4);
    let oracle_classes = signature_classes(3, 4);
    let found: BTreeSet<Vec<u32>> = records.iter().map(|r| signature_key(&r.canonical)).collect();
    let verified = records.iter().all(|r| {
        r.decision.status == Status::TwoLocallyLarge
            && r.decision
                .witness
                .as_ref()
                .is_some_and(|w| good_under(&r.canonical, w.ranks()))
    });
    let sizes: BTreeSet<usize> = records.iter().map(|r| r.canonical.n()).collect();
    let range_ok = sizes.first() == Some(&4) && sizes.last() == Some(&12);
    (
        verified && found == oracle_classes && records.len() == found.len() && range_ok,
        format!("{} classes, all 2LL with checked witnesses, {:?} vertices", records.len(), sizes),
    )
}

fn witness_orders() -> Outcome {
    let ok = WITNESS_ORDERS.iter().all(|(fam, letters)| {
        let h = make_family(fam, 3).unwrap();
        let seq: Vec<usize> = letters.bytes().map(|b| (b - b'a') as usize).collect();
        is_2ll_under(&h, &letters_to_order(letters)) && good_under(&h, &positions(&seq))
    });
    (ok, WITNESS_ORDERS.iter().map(|(f, o)| format!("{f}:{o}")).join(" "))
}

fn m3() -> Outcome {
    let h = make_family("matching(3)", 3).unwrap();
    let mut fails = 0;
    let mut oracle_fails = 0;
    for p in (0..9).permutations(9) {
        fails += !is_2ll_under(&h, &VertexOrder::from_sequence(&p).unwrap()) as usize;
        oracle_fails += !good_under(&h, &positions(&p)) as usize;
    }
    (fails == 362_880 && oracle_fails == 362_880, format!("{fails}/362880 orders fail"))
}

fn deterministic() -> Outcome {
    let family = deterministic_family(10, 3, &VertexOrder::identity(10)).unwrap();
    let mut count = 0;
    let mut ok = family.k() == 7;
    for rec in classify_all(3, 3) {
        if rec.decision.status == Status::NotTwoLocallyLarge {
            count += 1;
            ok &= verify_local(&family, &rec.canonical).unwrap().is_ok();
            ok &= naive_local(&family, &rec.canonical);
        }
    }
    (ok && count == 9, format!("k = {}, {count} NOT-2LL classes at n = 10", family.k()))
}

fn lll() -> Outcome {
    let direct = (4f64.powf(6.0 + 3.0 / 4.0) * 8f64.powf(1.0 / 4.0)).ceil() as u32;
    let k = lll_k(8, 3, 4).unwrap();
    let k4 = UniformHypergraph::complete(3, 4).unwrap();
    let mut ok = k == 19484 && k == direct;
    for seed in 0..100 {
        match lll_sample(8, 3, 4, seed, None) {
            Ok((family, _)) => {
                ok &= family.k() == k && verify_local(&family, &k4).unwrap().is_ok() && naive_local(&family, &k4);
            }
            Err(_) => ok = false,
        }
    }
    (ok, format!("k = {k}, formula {direct}, 100 seeds"))
}

fn lift() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let bases: Vec<UniformHypergraph> = (2..=3)
        .flat_map(|m| enumerate_hypergraphs(3, m, 6))
        .filter(|t| !brute_2ll(t))
        .collect();
    let mut pairs = 0;
    let mut ok = true;
    while pairs < 20 {
        let t = bases.choose(&mut rng).unwrap();
        let t_prime = t.with_isolated(rng.gen_range(1..=8 - t.n())).unwrap();
        let h = t_prime.n();
        let n = rng.gen_range(h..=8);
        let base = if rng.gen_bool(0.5) {
            deterministic_family(n, 3, &shuffled_order(n, &mut rng)).unwrap()
        } else {
            random_family(n, rng.gen_range(2..=3), &mut rng)
        };
        if !naive_local(&base, &t_prime) {
            continue;
        }
        let mut anchors: Vec<usize> = (0..n).collect();
        anchors.shuffle(&mut rng);
        anchors.truncate(h);
        let lifted = product_lift(&base, &anchors).unwrap();
        ok &= (lifted.k() as u64) <= (base.k() as u64).pow(h as u32 + 1);
        ok &= naive_local(&lifted, t) && verify_local(&lifted, t).unwrap().is_ok();
        pairs += 1;
    }
    (ok, format!("{pairs} pairs"))
}

fn tce() -> Outcome {
    let Some((n, gamma, rho)) = tce_instance(0).unwrap() else {
        return (false, "no (4,3) and (5,4) colorings found for n <= 9".into());
    };
    let pq_valid = pq_ok(n, 3, 4, 3, |e| gamma.color_of(e)) && pq_ok(n, 4, 5, 4, |e| rho.color_of(e));
    let family = tce_family(n, &gamma, &rho).unwrap();
    let pattern = make_family("tce", 3).unwrap();
    let ok = pq_valid && verify_local(&family, &pattern).unwrap().is_ok() && naive_local(&family, &pattern);
    (ok, format!("n = {n}, k = {} + {}", gamma.k(), rho.k()))
}

fn sunflower_witness_holds(h: &UniformHypergraph, core: &[usize], petals: &[Vec<usize>]) -> bool {
    let core: BTreeSet<usize> = core.iter().copied().collect();
    petals.len() == 4
        && petals.iter().all_unique()
        && petals.iter().all(|p| h.edges().contains(p))
        && petals.iter().tuple_combinations().all(|(a, b)| {
            let a: BTreeSet<usize> = a.iter().copied().collect();
            let b: BTreeSet<usize> = b.iter().copied().collect();
            a.intersection(&b).copied().collect::<BTreeSet<_>>() == core
        })
}

fn erdos_rado() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(163);
    let mut good = 0;
    for _ in 0..500 {
        let n = rng.gen_range(11..=30);
        let all: Vec<Vec<usize>> = (0..n).combinations(3).collect();
        let edges: Vec<Vec<usize>> = all.choose_multiple(&mut rng, 163).cloned().collect();
        let h = UniformHypergraph::new(3, n, edges).unwrap();
        if let Some(w) = find_sunflower(&h, 4) {
            good += (w.validate(&h, 4) && sunflower_witness_holds(&h, &w.core, &w.petals)) as usize;
        }
    }
    (good == 500 && erdos_rado_bound(3, 4) == 163, format!("{good}/500"))
}

fn witness_holds(family: &ColoringFamily, w: &ViolationWitness) -> bool {
    let m = binom(family.n(), 3);
    let c = family.colors();
    let image: BTreeSet<Vec<usize>> = w
        .pattern
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| w.embedding[v]).sorted().collect())
        .collect();
    w.embedding.iter().all_unique()
        && image.len() == w.pattern.edge_count()
        && w.embedding.iter().all(|&u| {
            !image.iter().map(|e| c[u * m + rank(e)]).all_unique()
        })
}

fn attack_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let patterns: Vec<AttackPattern> = ["sp3", "sunflower(1,4)", "sunflower(0,3)", "clique(7)", "sp4_1", "sp4_2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let (mut bad, mut witnesses) = (0, 0);
    for i in 0..1000 {
        let pattern = patterns[i % patterns.len()];
        let h = pattern.pattern(3).unwrap();
        let n = rng.gen_range(h.n().max(7)..=12);
        let family = if i % 4 == 0 {
            deterministic_family(n, 3, &shuffled_order(n, &mut rng)).unwrap()
        } else {
            random_family(n, rng.gen_range(1..=4), &mut rng)
        };
        let result = verify_local(&family, &h).unwrap();
        if let LocalResult::Violated { witness } = &result {
            witnesses += 1;
            bad += !witness_holds(&family, witness) as usize;
        }
        if let Some(w) = attack(&family, pattern).unwrap() {
            witnesses += 1;
            bad += !witness_holds(&family, &w) as usize;
            bad += result.is_ok() as usize;
        }
    }
    (bad == 0, format!("1000 families, {witnesses} witnesses, {bad} contradictions"))
}

fn solver() -> Outcome {
    let (mut cases, mut bad) = (0, 0);
    for r in 2..=3 {
        for h in small_patterns(r, 5) {
            for n in h.n().max(r)..=5 {
                for k in 1..=2 {
                    cases += 1;
                    let verdict = exists_local_coloring(n, r, &h, k, 100_000_000).unwrap().verdict;
                    let truth = brute_solve(n, r, &h, k);
                    bad += (verdict != if truth { Verdict::Sat } else { Verdict::Unsat }) as usize;
                }
            }
        }
    }
    (bad == 0, format!("{cases} instances, {bad} disagreements"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("3-edge classification", three_edges),
        ("4-edge classification", four_edges),
        ("explicit witness orders", witness_orders),
        ("M_3 exhaustion", m3),
        ("deterministic upper construction", deterministic),
        ("Moser-Tardos sampler", lll),
        ("product lift", lift),
        ("TC_e composite", tce),
        ("Erdos-Rado sunflowers", erdos_rado),
        ("attack soundness", attack_soundness),
        ("solver cross-check", solver),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = run();
        failed += !pass as usize;
        println!(
            "criterion {:>2} {}: {} ({detail}; {:.2?})",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            name,
            start.elapsed()
        );
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
