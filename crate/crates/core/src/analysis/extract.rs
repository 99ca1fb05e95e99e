use super::witness::{Clash, ViolationWitness};
use crate::colorings::{ColoringFamily, RamseyColoring};
use crate::error::{Error, Result};
use crate::hypergraph::{colex_rank, UniformHypergraph, VertexOrder};
use crate::locality::{decide_2ll, txi_partition, Status};

/// Given an (r+1)-set `s` on which `g` is constant, places a 2LL pattern
/// inside `s` minus its top vertex `y` (by `base_order`) following the
/// pattern's witness order, and reads one clash per vertex off its large
/// bucket.
///
/// `None` when `|s| < |V(H)| + 1` or `H` is not 2LL.
pub fn extract_from_monochromatic(
    g: &RamseyColoring,
    s: &[usize],
    pattern: &UniformHypergraph,
    family: &ColoringFamily,
    base_order: &VertexOrder,
) -> Result<Option<ViolationWitness>> {
    if g.n != family.n() || g.uniformity != family.r() + 1 || pattern.r() != family.r() {
        return Err(Error::InvalidParams(
            "g, family and pattern must share n and r".into(),
        ));
    }
    if base_order.len() != family.n() {
        return Err(Error::InvalidOrder(format!(
            "order has {} vertices, family has {}",
            base_order.len(),
            family.n()
        )));
    }
    let mut s: Vec<usize> = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.iter().any(|&v| v >= family.n()) {
        return Err(Error::InvalidParams("vertex set leaves the host".into()));
    }
    if s.len() >= g.uniformity && !g.is_monochromatic(&s) {
        return Err(Error::NotMonochromatic(format!("{s:?}")));
    }
    if s.len() < pattern.n() + 1 {
        return Ok(None);
    }
    let decision = decide_2ll(pattern);
    if decision.status != Status::TwoLocallyLarge {
        return Ok(None);
    }
    let witness_order = decision.witness.expect("2LL carries a witness");
    s.sort_by_key(|&v| base_order.rank(v));
    s.pop();
    let map: Vec<usize> = (0..pattern.n())
        .map(|v| s[witness_order.rank(v) - 1])
        .collect();
    let mut clashes = Vec::with_capacity(map.len());
    for x in 0..pattern.n() {
        let part = txi_partition(pattern, &witness_order, x);
        let i = part.large_bucket().expect("witness order gives a large bucket");
        let image = |e: &Vec<usize>| -> Vec<usize> {
            let mut img: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            img.sort_unstable();
            img
        };
        let (a, b) = (image(&part.bucket(i)[0]), image(&part.bucket(i)[1]));
        let u = map[x];
        let (ca, cb) = (family.color(u, colex_rank(&a)), family.color(u, colex_rank(&b)));
        if ca != cb {
            return Err(Error::Inconsistent(format!(
                "g is constant on the set but f_{u} separates {a:?} and {b:?}"
            )));
        }
        clashes.push(Clash {
            vertex: u,
            edge_a: a,
            edge_b: b,
            color: ca,
        });
    }
    Ok(Some(ViolationWitness {
        pattern: pattern.clone(),
        embedding: map,
        clashes,
    }))
}

/// Overwrites `f_v(e)` for `v ∈ s`, `e ⊆ s` with the bucket coloring of
/// `base_order`, which makes `g` constant on `s`.
pub fn plant_monochromatic(
    base: &ColoringFamily,
    s: &[usize],
    base_order: &VertexOrder,
) -> Result<ColoringFamily> {
    let r = base.r();
    let k = base.k().max((2 * r + 1) as u32);
    let inside = |e: &[usize]| e.iter().all(|v| s.contains(v));
    ColoringFamily::from_fn(
        base.n(),
        r,
        k,
        crate::colorings::Provenance::new("planted", base.provenance.seed),
        |v, e| {
            if s.contains(&v) && inside(e) {
                crate::locality::bucket_index(e, base_order, v) as u32
            } else {
                base.color_of(v, e)
            }
        },
    )
}
