use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank, RankTable, MAX_VERTICES};

pub const MAGIC: &[u8; 4] = b"RLCF";
pub const FORMAT_VERSION: u8 = 1;

/// Which construction produced a family, and with which seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub method: String,
    pub seed: u64,
}

impl Provenance {
    pub fn new(method: impl Into<String>, seed: u64) -> Self {
        Provenance {
            method: method.into(),
            seed,
        }
    }
}

/// `n` edge-colorings `f_v` of the complete r-graph on `n` vertices with
/// colors in `1..=k`.
///
/// Colors are stored densely as `colors[v * C(n, r) + rank(e)]` where
/// `rank` is the colexicographic rank of the sorted edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFamily {
    n: usize,
    r: usize,
    k: u32,
    colors: Vec<u32>,
    pub provenance: Provenance,
}

impl ColoringFamily {
    pub fn new(n: usize, r: usize, k: u32, colors: Vec<u32>, provenance: Provenance) -> Result<Self> {
        check_shape(n, r)?;
        if k == 0 {
            return Err(Error::InvalidParams("a family needs k >= 1".into()));
        }
        let edges = binomial(n, r) as usize;
        if colors.len() != n * edges {
            return Err(Error::InvalidParams(format!(
                "expected {} colors, got {}",
                n * edges,
                colors.len()
            )));
        }
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { color: bad, k });
        }
        Ok(ColoringFamily {
            n,
            r,
            k,
            colors,
            provenance,
        })
    }

    /// Builds a family from `color(v, edge)`.
    pub fn from_fn(
        n: usize,
        r: usize,
        k: u32,
        provenance: Provenance,
        mut color: impl FnMut(usize, &[usize]) -> u32,
    ) -> Result<Self> {
        check_shape(n, r)?;
        let table = RankTable::new(n, r);
        let mut colors = Vec::with_capacity(n * table.len());
        for v in 0..n {
            for e in table.edges() {
                colors.push(color(v, e));
            }
        }
        Self::new(n, r, k, colors, provenance)
    }

    /// Every vertex colors every edge with color 1.
    pub fn constant(n: usize, r: usize) -> Result<Self> {
        check_shape(n, r)?;
        Self::new(
            n,
            r,
            1,
            vec![1; n * binomial(n, r) as usize],
            Provenance::new("constant", 0),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len().checked_div(self.n).unwrap_or(0)
    }

    /// `f_v` on the edge with colex rank `rank`.
    #[inline]
    pub fn color(&self, v: usize, rank: usize) -> u32 {
        self.colors[v * self.edge_count() + rank]
    }

    /// `f_v(edge)` for a sorted edge.
    pub fn color_of(&self, v: usize, edge: &[usize]) -> u32 {
        self.color(v, colex_rank(edge))
    }

    /// The whole coloring `f_v`, indexed by edge rank.
    pub fn row(&self, v: usize) -> &[u32] {
        let m = self.edge_count();
        &self.colors[v * m..(v + 1) * m]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub(crate) fn set_color(&mut self, v: usize, rank: usize, color: u32) {
        let m = self.edge_count();
        self.colors[v * m + rank] = color;
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Writes the binary format: `"RLCF"`, version `u8`, `n u32`, `r u8`,
    /// `k u32`, `seed u64`, then every color as a little-endian `u32`, row
    /// by row.
    pub fn write_to(&self, w: &mut impl Write) -> Result<()> {
        write_header(w, self.n, self.r, self.k, self.provenance.seed)?;
        write_colors(w, &self.colors)
    }

    pub fn read_from(r: &mut impl Read) -> Result<Self> {
        let header = read_header(r)?;
        let rows = header.n;
        let colors = read_colors(r, rows * binomial(header.n, header.r) as usize)?;
        ensure_eof(r)?;
        Self::new(
            header.n,
            header.r,
            header.k,
            colors,
            Provenance::new("file", header.seed),
        )
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(22 + 4 * self.colors.len());
        self.write_to(&mut out).expect("writing to a Vec cannot fail");
        out
    }

    pub fn from_bytes(mut bytes: &[u8]) -> Result<Self> {
        Self::read_from(&mut bytes)
    }
}

fn check_shape(n: usize, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Uniformity(r));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    if n < r {
        return Err(Error::InvalidParams(format!(
            "host needs at least r = {r} vertices, got {n}"
        )));
    }
    Ok(())
}

pub(crate) struct Header {
    pub n: usize,
    pub r: usize,
    pub k: u32,
    pub seed: u64,
}

pub(crate) fn write_header(w: &mut impl Write, n: usize, r: usize, k: u32, seed: u64) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&[FORMAT_VERSION])?;
    w.write_all(&(n as u32).to_le_bytes())?;
    w.write_all(&[r as u8])?;
    w.write_all(&k.to_le_bytes())?;
    w.write_all(&seed.to_le_bytes())?;
    Ok(())
}

pub(crate) fn write_colors(w: &mut impl Write, colors: &[u32]) -> Result<()> {
    let mut buf = Vec::with_capacity(4 * colors.len());
    for c in colors {
        buf.extend_from_slice(&c.to_le_bytes());
    }
    w.write_all(&buf)?;
    Ok(())
}

pub(crate) fn read_header(r: &mut impl Read) -> Result<Header> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)
        .map_err(|_| Error::Format("truncated header".into()))?;
    if &magic != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let mut buf = [0u8; 18];
    r.read_exact(&mut buf)
        .map_err(|_| Error::Format("truncated header".into()))?;
    if buf[0] != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported version {}", buf[0])));
    }
    let n = u32::from_le_bytes(buf[1..5].try_into().unwrap()) as usize;
    let rr = buf[5] as usize;
    let k = u32::from_le_bytes(buf[6..10].try_into().unwrap());
    let seed = u64::from_le_bytes(buf[10..18].try_into().unwrap());
    if n > MAX_VERTICES || rr < 2 || rr > n {
        return Err(Error::Format(format!("implausible shape n={n}, r={rr}")));
    }
    Ok(Header { n, r: rr, k, seed })
}

pub(crate) fn read_colors(r: &mut impl Read, count: usize) -> Result<Vec<u32>> {
    let mut bytes = vec![0u8; 4 * count];
    r.read_exact(&mut bytes)
        .map_err(|_| Error::Format(format!("expected {count} colors")))?;
    Ok(bytes
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
        .collect())
}

pub(crate) fn ensure_eof(r: &mut impl Read) -> Result<()> {
    let mut extra = [0u8; 1];
    match r.read(&mut extra)? {
        0 => Ok(()),
        _ => Err(Error::Format("trailing bytes after color array".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_layout() {
        let f = ColoringFamily::constant(4, 3).unwrap();
        let bytes = f.to_bytes();
        assert_eq!(&bytes[..4], b"RLCF");
        assert_eq!(bytes[4], 1);
        assert_eq!(u32::from_le_bytes(bytes[5..9].try_into().unwrap()), 4);
        assert_eq!(bytes[9], 3);
        assert_eq!(u32::from_le_bytes(bytes[10..14].try_into().unwrap()), 1);
        assert_eq!(bytes.len(), 22 + 4 * 4 * 4);
    }

    #[test]
    fn rejects_corrupt_files() {
        let f = ColoringFamily::constant(4, 3).unwrap();
        let mut bytes = f.to_bytes();
        assert!(ColoringFamily::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        bytes.push(0);
        assert!(ColoringFamily::from_bytes(&bytes).is_err());
        let mut bad = f.to_bytes();
        bad[0] = b'X';
        assert!(matches!(ColoringFamily::from_bytes(&bad), Err(Error::Format(_))));
        let mut zero = f.to_bytes();
        zero[22] = 0;
        assert!(matches!(
            ColoringFamily::from_bytes(&zero),
            Err(Error::ColorOutOfRange { .. })
        ));
    }

    #[test]
    fn from_fn_uses_colex_order() {
        let f = ColoringFamily::from_fn(5, 3, 100, Provenance::new("test", 0), |v, e| {
            (v * 10 + e[2]) as u32
        })
        .unwrap();
        assert_eq!(f.color_of(2, &[0, 1, 4]), 24);
        assert_eq!(f.color(2, colex_rank(&[1, 2, 3])), 23);
    }
}
