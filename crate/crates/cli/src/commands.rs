use std::path::PathBuf;

use rainbow_core::analysis::{attack_with_budget, verify_local, AttackPattern, LocalResult};
use rainbow_core::claims::{find_pq_coloring, run_claim, seeded_random_hypergraph, CLAIM_IDS};
use rainbow_core::colorings::{
    deterministic_family, lll_sample, lll_sample_with_k, min_pq_colors, pq_coloring_search, product_lift,
    tce_family, ColoringFamily,
};
use rainbow_core::hypergraph::{cube_bridge, erdos_rado_bound, find_sunflower, VertexOrder};
use rainbow_core::locality::{classify_all, decide_2ll, Status};
use rainbow_core::solver::{exists_local_coloring, min_colors};
use serde_json::{json, Value};

use crate::io::*;
use crate::{Cli, Command, ConstructArgs, Method};

/// Runs one subcommand and returns its exit code.
pub fn run(cli: &Cli, workers: usize) -> AnyResult<u8> {
    let mut config = serde_json::to_value(cli)?;
    config["threads"] = json!(workers);
    let out = cli.output.as_deref();
    match &cli.command {
        Command::Classify(a) => {
            let records = classify_all(a.r, a.edges);
            let large: Vec<String> = records
                .iter()
                .filter(|r| r.decision.status == Status::TwoLocallyLarge)
                .map(|r| format!("{:?}", r.canonical.edges()))
                .collect();
            eprintln!(
                "2-locally-large classification of {}-graphs with {} edges: {} classes, {} 2LL, {} NOT2LL",
                a.r,
                a.edges,
                records.len(),
                large.len(),
                records.len() - large.len()
            );
            for l in &large {
                eprintln!("  2LL: {l}");
            }
            emit(out, &envelope("classify", &config, &records)?)?;
            Ok(0)
        }
        Command::Decide2ll(a) => {
            let h = load_pattern(&a.pattern, a.r)?;
            let d = decide_2ll(&h);
            eprintln!(
                "2-locally-large decision for {}: {:?} after {} orders",
                a.pattern, d.status, d.orders_examined
            );
            let result = json!({
                "hypergraph": h,
                "status": d.status,
                "witness": d.witness,
                "orders_examined": d.orders_examined,
            });
            emit(out, &envelope("decide2ll", &config, result)?)?;
            Ok(0)
        }
        Command::Construct(a) => {
            let path = out.ok_or("construct needs --output for the family file")?;
            let (family, details) = construct(a, cli.seed)?;
            eprintln!(
                "{:?} construction: n = {}, r = {}, k = {}",
                a.method,
                family.n(),
                family.r(),
                family.k()
            );
            let meta = family_meta("construct", &config, &family, details)?;
            write_binary(path, &family.to_bytes(), &meta)?;
            emit(None, &meta)?;
            Ok(0)
        }
        Command::Lift(a) => {
            let path = out.ok_or("lift needs --output for the lifted family")?;
            let base = load_family(&a.family)?;
            let lifted = product_lift(&base, &a.anchors)?;
            eprintln!(
                "product lift through {} anchors: k = {} -> {}",
                a.anchors.len(),
                base.k(),
                lifted.k()
            );
            let meta = family_meta(
                "lift",
                &config,
                &lifted,
                json!({ "base_k": base.k(), "anchors": a.anchors }),
            )?;
            write_binary(path, &lifted.to_bytes(), &meta)?;
            emit(None, &meta)?;
            Ok(0)
        }
        Command::Pqsearch(a) => {
            let (coloring, result, code) = match a.k_max {
                Some(k) => {
                    let res = pq_coloring_search(a.n, a.t, a.p, a.q, k, cli.seed, a.budget)?;
                    let code = match (&res.coloring, res.complete) {
                        (Some(_), _) => 0,
                        (None, true) => 1,
                        (None, false) => 2,
                    };
                    let result = json!({
                        "k_max": k,
                        "found": res.coloring.is_some(),
                        "k": res.coloring.as_ref().map(|c| c.k()),
                        "complete": res.complete,
                        "nodes": res.nodes,
                    });
                    (res.coloring, result, code)
                }
                None => {
                    let res = min_pq_colors(a.n, a.t, a.p, a.q, cli.seed, a.budget)?;
                    let result = json!({
                        "lower": res.lower,
                        "upper": res.upper,
                        "exact": res.exact(),
                    });
                    let code = if res.exact().is_some() { 0 } else { 2 };
                    (res.coloring, result, code)
                }
            };
            eprintln!("({},{})-coloring search on {}-sets of {} vertices: {result}", a.p, a.q, a.t, a.n);
            let value = envelope("pqsearch", &config, &result)?;
            match (out, coloring) {
                (Some(path), Some(c)) => {
                    write_binary(path, &c.to_bytes(), &value)?;
                    emit(None, &value)?;
                }
                (Some(path), None) => write_json(&sidecar(path), &value)?,
                (None, _) => emit(None, &value)?,
            }
            Ok(code)
        }
        Command::Verify(a) => {
            let family = load_family(&a.family)?;
            let pattern = load_pattern(&a.pattern, family.r())?;
            let res = verify_local(&family, &pattern)?;
            match &res {
                LocalResult::Ok { copies } => eprintln!("local coloring check: ok on {copies} copies of {}", a.pattern),
                LocalResult::Violated { witness } => eprintln!(
                    "local coloring check: violated by the copy on {:?}",
                    witness.embedding
                ),
            }
            let result = json!({
                "family": a.family,
                "ok": res.is_ok(),
                "outcome": res,
            });
            emit(out, &envelope("verify", &config, result)?)?;
            Ok(if res.is_ok() { 0 } else { 1 })
        }
        Command::Attack(a) => {
            let family = load_family(&a.family)?;
            let pattern: AttackPattern = a.pattern.parse()?;
            let budget = a.budget.unwrap_or(200_000);
            let found = attack_with_budget(&family, pattern, budget)?;
            eprintln!(
                "structured witness search for {pattern}: {}",
                if found.is_some() { "witness found" } else { "no witness within budget" }
            );
            let result = json!({
                "family": a.family,
                "pattern": pattern,
                "budget": budget,
                "found": found.is_some(),
                "witness": found,
            });
            emit(out, &envelope("attack", &config, result)?)?;
            Ok(if found.is_some() { 1 } else { 2 })
        }
        Command::Solve(a) => {
            let pattern = load_pattern(&a.pattern, a.r)?;
            match a.k {
                Some(k) => {
                    let cert = exists_local_coloring(a.n, a.r, &pattern, k, a.budget)?;
                    let family_path: Option<PathBuf> = match &cert.family {
                        Some(f) => {
                            let p = a
                                .family_out
                                .clone()
                                .or_else(|| out.map(|o| o.with_extension("rlcf")));
                            if let Some(p) = &p {
                                let meta = family_meta("solve", &config, f, json!({ "verdict": cert.verdict }))?;
                                write_binary(p, &f.to_bytes(), &meta)?;
                            }
                            p
                        }
                        None => None,
                    };
                    eprintln!(
                        "local coloring with {k} colors, n = {}, r = {}: {:?} after {} nodes",
                        a.n, a.r, cert.verdict, cert.stats.nodes
                    );
                    let mut result = serde_json::to_value(&cert)?;
                    result["family_file"] = json!(family_path);
                    emit(out, &envelope("solve", &config, result)?)?;
                    Ok(cert.verdict.exit_code() as u8)
                }
                None => {
                    let res = min_colors(a.n, a.r, &pattern, a.k_max, a.budget)?;
                    eprintln!(
                        "minimum local colors for n = {}, r = {}: lower {}, upper {:?}",
                        a.n, a.r, res.lower, res.upper
                    );
                    let code = if res.exact().is_some() { 0 } else { 2 };
                    emit(out, &envelope("solve", &config, res)?)?;
                    Ok(code)
                }
            }
        }
        Command::Sunflower(a) => {
            let h = match (&a.graph, a.random_n) {
                (Some(g), None) => load_pattern(g, a.r)?,
                (None, Some(n)) => {
                    let m = a
                        .random_edges
                        .unwrap_or(erdos_rado_bound(a.r, a.petals) as usize);
                    seeded_random_hypergraph(a.r, n, m, cli.seed)?
                }
                _ => return Err("give exactly one of --graph and --random-n".into()),
            };
            let w = find_sunflower(&h, a.petals);
            let valid = w.as_ref().is_some_and(|w| w.validate(&h, a.petals));
            eprintln!(
                "sunflower search with {} petals among {} edges: {}",
                a.petals,
                h.edge_count(),
                if w.is_some() { "found" } else { "none exists" }
            );
            let result = json!({
                "hypergraph": h,
                "petals": a.petals,
                "bound": erdos_rado_bound(h.r(), a.petals),
                "found": w.is_some(),
                "valid": valid,
                "witness": w,
            });
            emit(out, &envelope("sunflower", &config, result)?)?;
            Ok(if w.is_some() { 0 } else { 1 })
        }
        Command::Bridge(a) => {
            let vectors: Vec<String> = match (&a.vectors, &a.file) {
                (Some(v), None) => v.clone(),
                (None, Some(f)) => std::fs::read_to_string(f)?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(String::from)
                    .collect(),
                _ => return Err("give exactly one of --vectors and --file".into()),
            };
            let h = cube_bridge(&vectors)?;
            eprintln!("cube bridge: {} vectors -> {}-graph on {} vertices", vectors.len(), h.r(), h.n());
            emit(out, &envelope("bridge", &config, h)?)?;
            Ok(0)
        }
        Command::Reproduce(a) => {
            let ids: Vec<&str> = if a.claim == "all" {
                CLAIM_IDS.to_vec()
            } else {
                vec![a.claim.as_str()]
            };
            let mut reports = Vec::new();
            for id in ids {
                let report = run_claim(id, cli.seed)?;
                eprintln!(
                    "{} {}: {}",
                    if report.passed { "PASS" } else { "FAIL" },
                    report.id,
                    report.detail
                );
                reports.push(report);
            }
            let all_pass = reports.iter().all(|r| r.passed);
            emit(out, &envelope("reproduce", &config, &reports)?)?;
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn family_meta(command: &str, config: &Value, family: &ColoringFamily, details: Value) -> AnyResult<Value> {
    envelope(
        command,
        config,
        json!({
            "n": family.n(),
            "r": family.r(),
            "k": family.k(),
            "provenance": family.provenance,
            "details": details,
        }),
    )
}

fn construct(a: &ConstructArgs, seed: u64) -> AnyResult<(ColoringFamily, Value)> {
    Ok(match a.method {
        Method::Deterministic => {
            let order = match &a.order {
                Some(seq) => VertexOrder::from_sequence(seq)?,
                None => VertexOrder::identity(a.n),
            };
            let f = deterministic_family(a.n, a.r, &order)?;
            (f, json!({ "order": order.sequence() }))
        }
        Method::Lll => {
            let h = a.h.ok_or("lll needs --h")?;
            let (f, report) = match a.k {
                Some(k) => lll_sample_with_k(a.n, a.r, h, k, seed, a.budget)?,
                None => lll_sample(a.n, a.r, h, seed, a.budget)?,
            };
            (f, serde_json::to_value(report)?)
        }
        Method::Tce => {
            if a.r != 3 {
                return Err("tce is defined for r = 3 only".into());
            }
            let budget = a.budget.unwrap_or(2_000_000);
            let gamma = match &a.gamma {
                Some(p) => load_pq(p, 4, 3)?,
                None => find_pq_coloring(a.n, 3, 4, 3, seed, budget)?.ok_or("no (4,3)-coloring found")?,
            };
            let rho = match &a.rho {
                Some(p) => load_pq(p, 5, 4)?,
                None => find_pq_coloring(a.n, 4, 5, 4, seed, budget)?.ok_or("no (5,4)-coloring found")?,
            };
            let f = tce_family(a.n, &gamma, &rho)?;
            (f, json!({ "gamma_k": gamma.k(), "rho_k": rho.k() }))
        }
        Method::Constant => (ColoringFamily::constant(a.n, a.r)?, json!({})),
    })
}

