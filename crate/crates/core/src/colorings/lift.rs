use super::family::{ColoringFamily, Provenance};
use crate::error::{Error, Result};

/// Encodes digits `d_i ∈ 1..=k` as `1 + Σ (d_i - 1) k^(len-1-i)`, the first
/// digit most significant. `None` on overflow.
pub fn mixed_radix(digits: &[u32], k: u32) -> Option<u64> {
    let mut acc: u64 = 0;
    for &d in digits {
        acc = acc.checked_mul(k as u64)?.checked_add((d - 1) as u64)?;
    }
    acc.checked_add(1)
}

/// `f'_v(e) = (f_v(e), f_{u_1}(e), ..., f_{u_h}(e))`, mixed-radix encoded
/// with `k' = k^(h+1)`.
pub fn product_lift(base: &ColoringFamily, anchors: &[usize]) -> Result<ColoringFamily> {
    let n = base.n();
    let mut seen = vec![false; n];
    for &u in anchors {
        if u >= n || std::mem::replace(&mut seen[u], true) {
            return Err(Error::InvalidParams(format!(
                "anchors must be distinct vertices below {n}"
            )));
        }
    }
    let k = base.k();
    let k_lift = (k as u64)
        .checked_pow(anchors.len() as u32 + 1)
        .filter(|&x| x <= u32::MAX as u64)
        .ok_or_else(|| {
            Error::ColorOverflow(format!("{k}^{} exceeds 32 bits", anchors.len() + 1))
        })? as u32;
    let m = base.edge_count();
    let mut colors = Vec::with_capacity(n * m);
    let mut digits = Vec::with_capacity(anchors.len() + 1);
    for v in 0..n {
        for e in 0..m {
            digits.clear();
            digits.push(base.color(v, e));
            digits.extend(anchors.iter().map(|&u| base.color(u, e)));
            colors.push(mixed_radix(&digits, k).expect("bounded by k_lift") as u32);
        }
    }
    ColoringFamily::new(
        n,
        base.r(),
        k_lift,
        colors,
        Provenance::new("lift", base.provenance.seed),
    )
}
