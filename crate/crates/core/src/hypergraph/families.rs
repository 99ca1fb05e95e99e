//! Named hypergraph families. Vertices `a, b, c, ...` are labeled `0, 1, 2, ...`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::UniformHypergraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Family {
    /// Tight path with three edges: abc, bcd, cde.
    Tp3,
    /// abc, bcd, def.
    Sp3,
    /// Loose triangle: abd, bce, acf.
    Lc3,
    /// Tight triangle with a pendant edge: abd, bcd, cde, acd.
    Tce,
    /// Loose triangle plus adf.
    Lce,
    /// Special path alternating overlaps 1, 2, 1, ...
    Sp1(usize),
    /// Special path alternating overlaps 2, 1, 2, ...
    Sp2(usize),
    /// Loose path: consecutive edges share one vertex.
    Lp(usize),
    /// Tight path: consecutive edges share two vertices.
    Tp(usize),
    Sunflower { d: usize, m: usize },
    Matching(usize),
    Clique(usize),
}

impl Family {
    pub fn is_three_uniform_only(&self) -> bool {
        !matches!(
            self,
            Family::Sunflower { .. } | Family::Matching(_) | Family::Clique(_)
        )
    }

    /// Builds the labeled hypergraph. Families tied to 3-graphs reject any
    /// other `r`.
    pub fn build(&self, r: usize) -> Result<UniformHypergraph> {
        if self.is_three_uniform_only() && r != 3 {
            return Err(Error::InvalidParams(format!(
                "family `{self}` is only defined for r = 3"
            )));
        }
        let path = |starts: Vec<usize>| -> Result<UniformHypergraph> {
            let n = starts.last().map_or(0, |s| s + 3);
            UniformHypergraph::new(3, n, starts.into_iter().map(|s| vec![s, s + 1, s + 2]))
        };
        let positive = |t: usize, what: &str| -> Result<()> {
            if t == 0 {
                Err(Error::InvalidParams(format!("{what} needs at least one edge")))
            } else {
                Ok(())
            }
        };
        match *self {
            Family::Tp3 => path(vec![0, 1, 2]),
            Family::Sp3 => UniformHypergraph::new(3, 6, vec![vec![0, 1, 2], vec![1, 2, 3], vec![3, 4, 5]]),
            Family::Lc3 => UniformHypergraph::new(3, 6, vec![vec![0, 1, 3], vec![1, 2, 4], vec![0, 2, 5]]),
            Family::Tce => UniformHypergraph::new(
                3,
                5,
                vec![vec![0, 1, 3], vec![1, 2, 3], vec![2, 3, 4], vec![0, 2, 3]],
            ),
            Family::Lce => UniformHypergraph::new(
                3,
                6,
                vec![vec![0, 1, 3], vec![1, 2, 4], vec![0, 2, 5], vec![0, 3, 5]],
            ),
            Family::Sp1(t) => {
                positive(t, "sp1")?;
                path(alternating_starts(t, 2, 1))
            }
            Family::Sp2(t) => {
                positive(t, "sp2")?;
                path(alternating_starts(t, 1, 2))
            }
            Family::Lp(t) => {
                positive(t, "lp")?;
                path((0..t).map(|i| 2 * i).collect())
            }
            Family::Tp(t) => {
                positive(t, "tp")?;
                path((0..t).collect())
            }
            Family::Sunflower { d, m } => sunflower(r, d, m),
            Family::Matching(t) => sunflower(r, 0, t),
            Family::Clique(p) => UniformHypergraph::complete(r, p),
        }
    }
}

/// Start offsets `0, a, a+b, 2a+b, ...` of `t` consecutive 3-sets.
fn alternating_starts(t: usize, first: usize, second: usize) -> Vec<usize> {
    let mut starts = Vec::with_capacity(t);
    let mut s = 0;
    for i in 0..t {
        starts.push(s);
        s += if i % 2 == 0 { first } else { second };
    }
    starts
}

/// `S_r(d, m)`: core `{0..d}`, petal `i` adds the next `r - d` labels.
fn sunflower(r: usize, d: usize, m: usize) -> Result<UniformHypergraph> {
    if d >= r {
        return Err(Error::InvalidParams(format!(
            "sunflower core size {d} must be below r = {r}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidParams("sunflower needs at least one petal".into()));
    }
    let w = r - d;
    let n = d + m * w;
    UniformHypergraph::new(
        r,
        n,
        (0..m).map(|i| {
            let mut e: Vec<usize> = (0..d).collect();
            e.extend(d + i * w..d + (i + 1) * w);
            e
        }),
    )
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Tp3 => write!(f, "tp3"),
            Family::Sp3 => write!(f, "sp3"),
            Family::Lc3 => write!(f, "lc3"),
            Family::Tce => write!(f, "tce"),
            Family::Lce => write!(f, "lce"),
            Family::Sp1(t) => write!(f, "sp1({t})"),
            Family::Sp2(t) => write!(f, "sp2({t})"),
            Family::Lp(t) => write!(f, "lp({t})"),
            Family::Tp(t) => write!(f, "tp({t})"),
            Family::Sunflower { d, m } => write!(f, "sunflower({d},{m})"),
            Family::Matching(t) => write!(f, "matching({t})"),
            Family::Clique(p) => write!(f, "clique({p})"),
        }
    }
}

/// Splits `name(a,b)` into the name and its integer arguments.
pub(crate) fn parse_call(s: &str) -> Result<(String, Vec<usize>)> {
    let s = s.trim();
    let Some(open) = s.find('(') else {
        return Ok((s.to_ascii_lowercase(), Vec::new()));
    };
    let Some(inner) = s[open + 1..].strip_suffix(')') else {
        return Err(Error::UnknownFamily(s.to_string()));
    };
    let args = inner
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParams(format!("bad argument `{a}` in `{s}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((s[..open].trim().to_ascii_lowercase(), args))
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = parse_call(s)?;
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!(
                    "`{name}` takes {k} argument(s), got {}",
                    args.len()
                )))
            }
        };
        Ok(match name.as_str() {
            "tp3" => {
                arity(0)?;
                Family::Tp3
            }
            "sp3" => {
                arity(0)?;
                Family::Sp3
            }
            "lc3" => {
                arity(0)?;
                Family::Lc3
            }
            "tce" => {
                arity(0)?;
                Family::Tce
            }
            "lce" => {
                arity(0)?;
                Family::Lce
            }
            "sp1" => {
                arity(1)?;
                Family::Sp1(args[0])
            }
            "sp2" => {
                arity(1)?;
                Family::Sp2(args[0])
            }
            "lp" => {
                arity(1)?;
                Family::Lp(args[0])
            }
            "tp" => {
                arity(1)?;
                Family::Tp(args[0])
            }
            "sunflower" => {
                arity(2)?;
                Family::Sunflower {
                    d: args[0],
                    m: args[1],
                }
            }
            "matching" => {
                arity(1)?;
                Family::Matching(args[0])
            }
            "clique" => {
                arity(1)?;
                Family::Clique(args[0])
            }
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

impl TryFrom<String> for Family {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Family> for String {
    fn from(f: Family) -> Self {
        f.to_string()
    }
}

/// Parses a family id such as `sp1(4)` or `sunflower(1,4)` and builds it as
/// an r-graph.
pub fn make_family(id: &str, r: usize) -> Result<UniformHypergraph> {
    id.parse::<Family>()?.build(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp3_edges() {
        let h = Family::Sp3.build(3).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![1, 2, 3], vec![3, 4, 5]]);
    }

    #[test]
    fn special_path_vertex_counts() {
        for t in 1..=12 {
            let sp1 = Family::Sp1(t).build(3).unwrap();
            let sp2 = Family::Sp2(t).build(3).unwrap();
            assert_eq!(sp1.n(), (3 * t + 3).div_ceil(2), "sp1({t})");
            assert_eq!(sp2.n(), (3 * t + 2).div_ceil(2), "sp2({t})");
            assert_eq!(sp1.edge_count(), t);
            assert!(sp1.is_spanning() && sp2.is_spanning());
        }
        assert_eq!(Family::Sp1(4).build(3).unwrap().n(), 8);
    }

    #[test]
    fn sp3_is_second_special_path() {
        assert_eq!(Family::Sp2(3).build(3).unwrap(), Family::Sp3.build(3).unwrap());
    }

    #[test]
    fn sunflower_with_empty_core_is_matching() {
        for r in 2..=4 {
            for t in 1..=5 {
                assert_eq!(
                    Family::Sunflower { d: 0, m: t }.build(r).unwrap(),
                    Family::Matching(t).build(r).unwrap()
                );
            }
        }
        let m3 = Family::Matching(3).build(3).unwrap();
        assert_eq!(m3.n(), 9);
        assert_eq!(m3.degrees(), vec![1; 9]);
    }

    #[test]
    fn tce_and_lce() {
        let tce = make_family("tce", 3).unwrap();
        assert_eq!(tce.n(), 5);
        assert!(tce.contains_edge(&[0, 2, 3]));
        let lce = make_family("lce", 3).unwrap();
        assert_eq!(lce.edge_count(), 4);
        assert!(lce.contains_edge(&[0, 3, 5]));
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        for id in ["tp3", "sp1(4)", "sunflower(1,4)", "clique(5)", "matching(3)", "lp(5)"] {
            let f: Family = id.parse().unwrap();
            assert_eq!(f.to_string(), id);
        }
        assert!(matches!("foo".parse::<Family>(), Err(Error::UnknownFamily(_))));
        assert!(matches!("sp1".parse::<Family>(), Err(Error::InvalidParams(_))));
        assert!(matches!("sp1(x)".parse::<Family>(), Err(Error::InvalidParams(_))));
        assert!(make_family("sunflower(3,2)", 3).is_err());
        assert!(make_family("sp3", 4).is_err());
        assert!(make_family("clique(2)", 3).is_err());
        assert_eq!(make_family("clique(5)", 4).unwrap().edge_count(), 5);
    }
}
