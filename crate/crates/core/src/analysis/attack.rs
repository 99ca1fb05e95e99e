//! Witness finders following the pigeonhole arguments of the lower bounds.
//!
//! Each procedure builds candidate copies in the order its counting
//! argument suggests (faithful phase), then widens the same construction
//! with the pigeonhole conditions dropped (relaxed phase). Every candidate
//! is checked against the family, so a returned witness is always genuine.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::witness::{clashes_for, ViolationWitness};
use crate::colorings::ColoringFamily;
use crate::error::{Error, Result};
use crate::hypergraph::{parse_call, Family, UniformHypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum AttackPattern {
    Sp3,
    Sunflower { d: usize, t: usize },
    Clique(usize),
    Sp4One,
    Sp4Two,
}

impl AttackPattern {
    /// The hypergraph the witness embeds, with the labels the procedures use.
    pub fn pattern(&self, r: usize) -> Result<UniformHypergraph> {
        match *self {
            AttackPattern::Sp3 => Family::Sp3.build(r),
            AttackPattern::Sunflower { d, t } => Family::Sunflower { d, m: t }.build(r),
            AttackPattern::Clique(p) => Family::Clique(p).build(r),
            AttackPattern::Sp4One => Family::Sp1(4).build(r),
            AttackPattern::Sp4Two => Family::Sp2(4).build(r),
        }
    }
}

impl fmt::Display for AttackPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttackPattern::Sp3 => write!(f, "sp3"),
            AttackPattern::Sunflower { d, t } => write!(f, "sunflower({d},{t})"),
            AttackPattern::Clique(p) => write!(f, "clique({p})"),
            AttackPattern::Sp4One => write!(f, "sp4_1"),
            AttackPattern::Sp4Two => write!(f, "sp4_2"),
        }
    }
}

impl FromStr for AttackPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = parse_call(s)?;
        match (name.as_str(), args.as_slice()) {
            ("sp3", []) => Ok(AttackPattern::Sp3),
            ("sp4_1", []) => Ok(AttackPattern::Sp4One),
            ("sp4_2", []) => Ok(AttackPattern::Sp4Two),
            ("sunflower", &[d, t]) => Ok(AttackPattern::Sunflower { d, t }),
            ("clique", &[p]) => Ok(AttackPattern::Clique(p)),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

impl TryFrom<String> for AttackPattern {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<AttackPattern> for String {
    fn from(p: AttackPattern) -> Self {
        p.to_string()
    }
}

enum Halt {
    Found(Box<ViolationWitness>),
    Budget,
}

type Flow = std::result::Result<(), Halt>;

struct Probe<'a> {
    family: &'a ColoringFamily,
    pattern: UniformHypergraph,
    budget: u64,
    tried: u64,
}

impl Probe<'_> {
    fn try_map(&mut self, map: &[usize]) -> Flow {
        if self.tried >= self.budget {
            return Err(Halt::Budget);
        }
        self.tried += 1;
        match clashes_for(self.family, &self.pattern, map) {
            Some(w) => Err(Halt::Found(Box::new(w))),
            None => Ok(()),
        }
    }

    fn f(&self, v: usize, edge: &[usize]) -> u32 {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.family.color_of(v, &e)
    }
}

fn with(base: &[usize], extra: &[usize]) -> Vec<usize> {
    let mut e: Vec<usize> = base.iter().chain(extra).copied().collect();
    e.sort_unstable();
    e
}

/// Default number of candidate copies an attack may test.
pub const DEFAULT_BUDGET: u64 = 200_000;

/// Runs the procedure for `pattern` against `family`.
pub fn attack(family: &ColoringFamily, pattern: AttackPattern) -> Result<Option<ViolationWitness>> {
    attack_with_budget(family, pattern, DEFAULT_BUDGET)
}

pub fn attack_with_budget(
    family: &ColoringFamily,
    pattern: AttackPattern,
    budget: u64,
) -> Result<Option<ViolationWitness>> {
    let h = pattern.pattern(family.r())?;
    if h.n() > family.n() {
        return Ok(None);
    }
    let mut probe = Probe {
        family,
        pattern: h,
        budget,
        tried: 0,
    };
    let flow = match pattern {
        AttackPattern::Sp3 => sp3(&mut probe),
        AttackPattern::Sunflower { d, t } => sunflower(&mut probe, d, t),
        AttackPattern::Clique(p) => clique(&mut probe, p),
        AttackPattern::Sp4One => sp4_one(&mut probe),
        AttackPattern::Sp4Two => sp4_two(&mut probe),
    };
    Ok(match flow {
        Err(Halt::Found(w)) => {
            debug_assert!(w.check(family));
            Some(*w)
        }
        _ => None,
    })
}

/// Groups indices by key, classes in order of first appearance, largest
/// first.
fn classes<K: Ord>(keys: impl IntoIterator<Item = K>) -> Vec<Vec<usize>> {
    let mut map: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        map.entry(k).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = map.into_values().collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    out
}

/// `Y` a block of hub vertices, `𝒵` disjoint pairs of the rest. Two pairs
/// with equal vectors `(f_y(y'z))_{y,y'}`, then two hubs that every pair
/// vertex colors alike, give `{x1x2y1, x1x2y2, x3x4y2}`.
fn sp3(probe: &mut Probe) -> Flow {
    let n = probe.family.n();
    let k = probe.family.k() as usize;
    let y_size = k.saturating_pow(4).saturating_add(1).min(n.saturating_sub(4)).max(2);
    let ys: Vec<usize> = (0..y_size).collect();
    let zs: Vec<[usize; 2]> = (y_size..n).tuples().map(|(a, b)| [a, b]).collect();
    if zs.len() < 2 {
        return Ok(());
    }
    let vectors: Vec<Vec<u32>> = zs
        .iter()
        .map(|z| {
            ys.iter()
                .flat_map(|&y| ys.iter().map(move |&y2| (y, y2)))
                .map(|(y, y2)| probe.f(y, &with(z, &[y2])))
                .collect()
        })
        .collect();
    let candidate = |probe: &mut Probe, z1: [usize; 2], z2: [usize; 2], faithful: bool| -> Flow {
        let hub_classes = classes(ys.iter().map(|&y| {
            z1.iter()
                .chain(&z2)
                .map(|&x| probe.f(x, &with(&z1, &[y])))
                .collect::<Vec<_>>()
        }));
        for class in &hub_classes {
            if faithful && class.len() < 2 {
                continue;
            }
            let pool: Vec<usize> = if faithful {
                class.iter().map(|&i| ys[i]).collect()
            } else {
                ys.clone()
            };
            for (&y1, &y2) in pool.iter().tuple_combinations() {
                probe.try_map(&[y1, z1[0], z1[1], y2, z2[0], z2[1]])?;
                probe.try_map(&[y2, z1[0], z1[1], y1, z2[0], z2[1]])?;
            }
            if !faithful {
                break;
            }
        }
        Ok(())
    };
    for class in classes(vectors.iter().cloned()) {
        for (&i, &j) in class.iter().tuple_combinations() {
            candidate(probe, zs[i], zs[j], true)?;
            candidate(probe, zs[j], zs[i], true)?;
        }
    }
    for (i, j) in (0..zs.len()).tuple_combinations() {
        candidate(probe, zs[i], zs[j], false)?;
        candidate(probe, zs[j], zs[i], false)?;
    }
    Ok(())
}

/// Core `D` on the first `d` vertices, petals from a partition of the rest
/// bucketed by their colors under `D`. A pair of petals `e, e'` with many
/// vertices `p` satisfying `f_p(e) = f_p(e')` supplies the remaining petals
/// from those `p`, bucketed by their colors under `(e ∪ e') ∖ D`.
fn sunflower(probe: &mut Probe, d: usize, t: usize) -> Flow {
    let n = probe.family.n();
    let r = probe.family.r();
    let w = r - d;
    let core: Vec<usize> = (0..d).collect();
    let blocks: Vec<Vec<usize>> = (d..n).chunks(w).into_iter().map(|c| c.collect::<Vec<_>>()).filter(|c| c.len() == w).collect();
    let petal_edges: Vec<Vec<usize>> = blocks.iter().map(|q| with(&core, q)).collect();
    let petal_classes = classes(
        petal_edges
            .iter()
            .map(|e| core.iter().map(|&x| probe.f(x, e)).collect::<Vec<_>>()),
    );
    for faithful in [true, false] {
        for class in &petal_classes {
            if class.len() < 2.min(t) {
                continue;
            }
            let pool: Vec<usize> = if faithful { class.clone() } else { (0..blocks.len()).collect() };
            let mut pairs: Vec<(usize, usize, Vec<usize>)> = pool
                .iter()
                .tuple_combinations()
                .map(|(&i, &j)| {
                    let (e, e2) = (&petal_edges[i], &petal_edges[j]);
                    let xs: Vec<usize> = (d..n)
                        .filter(|v| !e.contains(v) && !e2.contains(v))
                        .filter(|&p| probe.f(p, e) == probe.f(p, e2))
                        .collect();
                    (i, j, xs)
                })
                .collect();
            pairs.sort_by_key(|p| std::cmp::Reverse(p.2.len()));
            for (i, j, xs) in pairs {
                let outside: Vec<usize> = if faithful {
                    xs
                } else {
                    (d..n)
                        .filter(|v| !blocks[i].contains(v) && !blocks[j].contains(v))
                        .collect()
                };
                petals_from(probe, &core, &blocks[i], &blocks[j], &outside, t, faithful)?;
            }
            if !faithful {
                break;
            }
        }
    }
    Ok(())
}

fn petals_from(
    probe: &mut Probe,
    core: &[usize],
    first: &[usize],
    second: &[usize],
    pool: &[usize],
    t: usize,
    faithful: bool,
) -> Flow {
    let w = first.len();
    let extra = t.saturating_sub(2);
    let mut map: Vec<usize> = core.iter().chain(first).chain(second).copied().collect();
    map.truncate(core.len() + w * t.min(2));
    if extra == 0 {
        return probe.try_map(&map);
    }
    let qs: Vec<Vec<usize>> = pool.chunks(w).filter(|c| c.len() == w).map(|c| c.to_vec()).collect();
    if qs.len() < extra {
        return Ok(());
    }
    let judges: Vec<usize> = first.iter().chain(second).copied().collect();
    let groups = classes(qs.iter().map(|q| {
        let e = with(core, q);
        judges.iter().map(|&z| probe.f(z, &e)).collect::<Vec<_>>()
    }));
    let base = map.len();
    if faithful {
        for g in groups.iter().filter(|g| g.len() >= extra) {
            map.truncate(base);
            for &qi in g.iter().take(extra) {
                map.extend(&qs[qi]);
            }
            probe.try_map(&map)?;
        }
    } else {
        for combo in (0..qs.len()).combinations(extra) {
            map.truncate(base);
            for qi in combo {
                map.extend(&qs[qi]);
            }
            probe.try_map(&map)?;
        }
    }
    Ok(())
}

/// Balanced split `A ∪ B`. Two (r-1)-sets `b̂1, b̂2 ⊆ B` with many `a ∈ A`
/// such that `f_a(ab̂1) = f_a(ab̂2)` give `A'`; the edges inside `A'` are
/// peeled into same-colored triples for each `b ∈ b̂1 ∪ b̂2`, and an edge
/// `e0` lying in a triple for every `b` closes the clique.
fn clique(probe: &mut Probe, p: usize) -> Flow {
    let n = probe.family.n();
    let r = probe.family.r();
    let k = probe.family.k() as usize;
    let half = n / 2;
    let side_a: Vec<usize> = (0..half).collect();
    let hats: Vec<Vec<usize>> = (half..n).combinations(r - 1).collect();
    let mut pairs: Vec<(usize, usize, Vec<usize>)> = (0..hats.len())
        .tuple_combinations()
        .map(|(i, j)| {
            let a_prime = side_a
                .iter()
                .copied()
                .filter(|&a| probe.f(a, &with(&hats[i], &[a])) == probe.f(a, &with(&hats[j], &[a])))
                .collect();
            (i, j, a_prime)
        })
        .collect();
    pairs.sort_by_key(|p| std::cmp::Reverse(p.2.len()));
    for exhaustive_peel in [false, true] {
        for (i, j, a_prime) in &pairs {
            let mut bs: Vec<usize> = hats[*i].iter().chain(&hats[*j]).copied().collect();
            bs.sort_unstable();
            bs.dedup();
            if bs.len() + r > p || a_prime.len() < r {
                continue;
            }
            let edges: Vec<Vec<usize>> = a_prime.iter().copied().combinations(r).collect();
            let threshold = if exhaustive_peel { 3 } else { 2 * k + 1 };
            // triple_of[b][edge] = Some(index of the peeled triple)
            let peeled: Vec<Peeled> =
                bs.iter().map(|&b| peel(probe, b, &edges, threshold, exhaustive_peel)).collect();
            for e0 in 0..edges.len() {
                if peeled.iter().any(|(_, of)| of[e0].is_none()) {
                    continue;
                }
                let mut x: Vec<usize> = bs.iter().chain(&edges[e0]).copied().collect();
                for (triples, of) in &peeled {
                    let triple = triples[of[e0].unwrap()];
                    let partner = triple
                        .iter()
                        .copied()
                        .filter(|&f| f != e0)
                        .min_by_key(|&f| edges[f].iter().filter(|v| !x.contains(v)).count())
                        .unwrap();
                    x.extend(&edges[partner]);
                    x.sort_unstable();
                    x.dedup();
                }
                if x.len() > p {
                    continue;
                }
                for &a in a_prime {
                    if x.len() == p {
                        break;
                    }
                    if !x.contains(&a) {
                        x.push(a);
                    }
                }
                if x.len() < p {
                    continue;
                }
                x.sort_unstable();
                probe.try_map(&x)?;
            }
        }
    }
    Ok(())
}

/// Repeatedly removes three edges sharing an `f_b` color while at least
/// `threshold` edges remain (or, when `exhaust` is set, while any color
/// class still has three edges).
/// Peeled triples and, per edge, the index of the triple covering it.
type Peeled = (Vec<[usize; 3]>, Vec<Option<usize>>);

fn peel(
    probe: &Probe,
    b: usize,
    edges: &[Vec<usize>],
    threshold: usize,
    exhaust: bool,
) -> (Vec<[usize; 3]>, Vec<Option<usize>>) {
    let colors: Vec<u32> = edges.iter().map(|e| probe.f(b, e)).collect();
    let mut remaining: Vec<usize> = (0..edges.len()).collect();
    let mut triples = Vec::new();
    let mut of = vec![None; edges.len()];
    while remaining.len() >= threshold {
        let groups = classes(remaining.iter().map(|&e| colors[e]));
        let Some(g) = groups.first().filter(|g| g.len() >= 3) else {
            break;
        };
        let picked = [remaining[g[0]], remaining[g[1]], remaining[g[2]]];
        for &e in &picked {
            of[e] = Some(triples.len());
        }
        triples.push(picked);
        remaining.retain(|e| !picked.contains(e));
        if !exhaust && remaining.len() < threshold {
            break;
        }
    }
    (triples, of)
}

fn hubs_and_pairs(n: usize, min_hubs: usize, min_pairs: usize) -> Option<(Vec<usize>, Vec<[usize; 2]>)> {
    let hubs = (n / 3).max(min_hubs);
    let pairs: Vec<[usize; 2]> = (hubs..n).tuples().map(|(a, b)| [a, b]).collect();
    (pairs.len() >= min_pairs).then(|| ((0..hubs).collect(), pairs))
}

/// Hubs `A` against disjoint pairs `ℬ`: three pairs that many hubs color
/// alike give `A'`, and two hubs of `A'` that all six pair vertices color
/// alike on the middle edge give `{a1e1, a1e2, a2e2, a2e3}`.
fn sp4_one(probe: &mut Probe) -> Flow {
    let Some((hubs, pairs)) = hubs_and_pairs(probe.family.n(), 2, 3) else {
        return Ok(());
    };
    let same = |probe: &Probe, a: usize, e: [usize; 2], e2: [usize; 2]| {
        probe.f(a, &with(&e, &[a])) == probe.f(a, &with(&e2, &[a]))
    };
    let mut triples: Vec<([usize; 3], Vec<usize>)> = (0..pairs.len())
        .tuple_combinations()
        .map(|(i, j, l)| {
            let a_prime = hubs
                .iter()
                .copied()
                .filter(|&a| same(probe, a, pairs[i], pairs[j]) && same(probe, a, pairs[j], pairs[l]))
                .collect();
            ([i, j, l], a_prime)
        })
        .collect();
    triples.sort_by_key(|t| std::cmp::Reverse(t.1.len()));
    for faithful in [true, false] {
        for (t, a_prime) in &triples {
            if faithful && a_prime.len() < 2 {
                continue;
            }
            for (e1, e2, e3) in t.iter().map(|&i| pairs[i]).permutations(3).map(|v| (v[0], v[1], v[2])) {
                let mids: Vec<usize> = e1.iter().chain(&e2).chain(&e3).copied().collect();
                let pool: &[usize] = if faithful { a_prime } else { &hubs };
                let groups = classes(pool.iter().map(|&a| {
                    mids.iter().map(|&v| probe.f(v, &with(&e2, &[a]))).collect::<Vec<_>>()
                }));
                for g in &groups {
                    if faithful && g.len() < 2 {
                        continue;
                    }
                    let members: Vec<usize> = if faithful { g.iter().map(|&i| pool[i]).collect() } else { pool.to_vec() };
                    for (&a1, &a2) in members.iter().tuple_combinations() {
                        for (a1, a2) in [(a1, a2), (a2, a1)] {
                            probe.try_map(&[e1[0], e1[1], a1, e2[0], e2[1], a2, e3[0], e3[1]])?;
                        }
                    }
                    if !faithful {
                        break;
                    }
                }
            }
        }
    }
    Ok(())
}

/// The same count with the roles swapped: pairs `u, v` and a hub `a2`
/// with many hubs `x` coloring `a2u, a2v` alike; `a1` and `a3` are chosen
/// so the pair vertices color `a1u = a2u` and `a2v = a3v`.
fn sp4_two(probe: &mut Probe) -> Flow {
    let Some((hubs, pairs)) = hubs_and_pairs(probe.family.n(), 3, 2) else {
        return Ok(());
    };
    for faithful in [true, false] {
        for &a2 in &hubs {
            for (u, v) in pairs.iter().copied().tuple_combinations().flat_map(|(u, v)| [(u, v), (v, u)]) {
                let (eu, ev) = (with(&u, &[a2]), with(&v, &[a2]));
                let a_prime: Vec<usize> = hubs
                    .iter()
                    .copied()
                    .filter(|&x| !faithful || probe.f(x, &eu) == probe.f(x, &ev))
                    .collect();
                if !a_prime.contains(&a2) {
                    continue;
                }
                let key = |probe: &Probe, a: usize, pair: [usize; 2]| -> Vec<u32> {
                    let e = with(&pair, &[a]);
                    pair.iter().map(|&z| probe.f(z, &e)).collect()
                };
                let (ku, kv) = (key(probe, a2, u), key(probe, a2, v));
                let firsts: Vec<usize> = a_prime
                    .iter()
                    .copied()
                    .filter(|&a| a != a2 && (!faithful || key(probe, a, u) == ku))
                    .collect();
                let thirds: Vec<usize> = a_prime
                    .iter()
                    .copied()
                    .filter(|&a| a != a2 && (!faithful || key(probe, a, v) == kv))
                    .collect();
                for &a1 in &firsts {
                    for &a3 in thirds.iter().filter(|&&a3| a3 != a1) {
                        probe.try_map(&[a1, u[0], u[1], a2, v[0], v[1], a3])?;
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_patterns() {
        for s in ["sp3", "sunflower(1,4)", "clique(7)", "sp4_1", "sp4_2"] {
            assert_eq!(s.parse::<AttackPattern>().unwrap().to_string(), s);
        }
        assert!("sp5".parse::<AttackPattern>().is_err());
    }

    #[test]
    fn constant_family_always_attacked() {
        for (s, n) in [("sp3", 8), ("sunflower(1,4)", 12), ("sunflower(0,3)", 10), ("clique(7)", 12), ("sp4_1", 9), ("sp4_2", 9)] {
            let f = ColoringFamily::constant(n, 3).unwrap();
            let p: AttackPattern = s.parse().unwrap();
            let w = attack(&f, p).unwrap().unwrap_or_else(|| panic!("{s}"));
            assert!(w.check(&f), "{s}");
            assert_eq!(w.pattern, p.pattern(3).unwrap());
        }
    }

    #[test]
    fn too_small_host_gives_none() {
        let f = ColoringFamily::constant(5, 3).unwrap();
        assert!(attack(&f, AttackPattern::Sp3).unwrap().is_none());
    }
}
