use super::family::{ColoringFamily, Provenance};
use crate::error::{Error, Result};
use crate::locality::bucket_index;
use crate::hypergraph::VertexOrder;

/// `f_v(e)` is the bucket index of `e` for `v` under `base_order`, so
/// `k = 2r + 1`.
pub fn deterministic_family(n: usize, r: usize, base_order: &VertexOrder) -> Result<ColoringFamily> {
    if base_order.len() != n {
        return Err(Error::InvalidOrder(format!(
            "order has {} vertices, host has {n}",
            base_order.len()
        )));
    }
    ColoringFamily::from_fn(
        n,
        r,
        (2 * r + 1) as u32,
        Provenance::new("deterministic", 0),
        |v, e| bucket_index(e, base_order, v) as u32,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_colors_for_triples() {
        let f = deterministic_family(6, 3, &VertexOrder::identity(6)).unwrap();
        assert_eq!(f.k(), 7);
        assert_eq!(f.color_of(1, &[1, 3, 5]), 1);
        assert_eq!(f.color_of(3, &[1, 3, 5]), 2);
        assert_eq!(f.color_of(0, &[1, 3, 5]), 4);
        assert_eq!(f.color_of(5, &[0, 1, 2]), 7);
        assert_eq!(f.used_colors(), 7);
    }

    #[test]
    fn order_length_checked() {
        assert!(deterministic_family(6, 3, &VertexOrder::identity(5)).is_err());
    }
}
