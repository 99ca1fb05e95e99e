use super::family::{ColoringFamily, Provenance};
use super::pq::PQColoring;
use crate::error::{Error, Result};

/// `f_v(e) = γ(e)` when `v ∈ e`, otherwise `k_γ + ρ(e ∪ {v})`. The offset
/// keeps the two color ranges disjoint.
pub fn tce_family(n: usize, gamma: &PQColoring, rho: &PQColoring) -> Result<ColoringFamily> {
    let shape = |c: &PQColoring, t, p, q, name: &str| -> Result<()> {
        if (c.n(), c.t(), c.p(), c.q()) != (n, t, p, q) {
            return Err(Error::PqMismatch(format!(
                "{name} must be a ({p},{q})-coloring of K_{n}^({t}), got ({},{}) on K_{}^({})",
                c.p(),
                c.q(),
                c.n(),
                c.t()
            )));
        }
        Ok(())
    };
    shape(gamma, 3, 4, 3, "gamma")?;
    shape(rho, 4, 5, 4, "rho")?;
    let offset = gamma.k();
    let k = offset
        .checked_add(rho.k())
        .ok_or_else(|| Error::ColorOverflow("k_gamma + k_rho exceeds 32 bits".into()))?;
    ColoringFamily::from_fn(n, 3, k, Provenance::new("tce", gamma.seed ^ rho.seed), |v, e| {
        if e.contains(&v) {
            gamma.color_of(e)
        } else {
            let mut quad = [e[0], e[1], e[2], v];
            quad.sort_unstable();
            offset + rho.color_of(&quad)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_and_offset() {
        let gamma = PQColoring::all_distinct(6, 3, 4, 3).unwrap();
        let rho = PQColoring::all_distinct(6, 4, 5, 4).unwrap();
        let f = tce_family(6, &gamma, &rho).unwrap();
        assert_eq!(f.k(), 20 + 15);
        assert_eq!(f.color_of(1, &[0, 1, 2]), gamma.color_of(&[0, 1, 2]));
        assert_eq!(f.color_of(5, &[0, 1, 2]), 20 + rho.color_of(&[0, 1, 2, 5]));
    }

    #[test]
    fn shapes_checked() {
        let gamma = PQColoring::all_distinct(6, 3, 4, 3).unwrap();
        assert!(matches!(tce_family(6, &gamma, &gamma), Err(Error::PqMismatch(_))));
        let rho = PQColoring::all_distinct(7, 4, 5, 4).unwrap();
        assert!(tce_family(6, &gamma, &rho).is_err());
    }
}
