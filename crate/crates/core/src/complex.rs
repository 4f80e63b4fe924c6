//! Two-dimensional complexes with a complete 1-skeleton, and the seeded
//! `Y(n,p)` sampler.
//!
//! A [`Complex2`] is the vertex count `n` together with the set of triangles;
//! every pair of vertices is implicitly an edge, matching the model where the
//! sampled complex always contains the full 1-skeleton. Vertices are `1..=n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::seeding;

/// Number of unordered pairs of `1..=n`.
pub fn pair_count(n: u32) -> usize {
    let n = n as usize;
    n * (n - 1) / 2
}

/// Number of unordered triples of `1..=n`.
pub fn triple_count(n: u32) -> usize {
    let n = n as usize;
    n * (n - 1) * (n - 2) / 6
}

/// Rank of the pair `{u, v}` (with `u < v`) in lexicographic order.
#[inline]
pub fn pair_rank(n: u32, u: u32, v: u32) -> usize {
    debug_assert!(1 <= u && u < v && v <= n);
    let (n, u, v) = (n as usize, u as usize, v as usize);
    (u - 1) * (2 * n - u) / 2 + (v - u - 1)
}

/// Iterate all increasing triples of `1..=n` in lexicographic order.
pub fn triples(n: u32) -> impl Iterator<Item = [u32; 3]> {
    (1..=n).flat_map(move |i| {
        (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| [i, j, k]))
    })
}

/// A complex `X` with the full 1-skeleton on `n` vertices plus a set of
/// triangles, stored both as a sorted list (iteration) and as a pair-indexed
/// adjacency (edge-centric lookups).
#[derive(Clone, Debug, PartialEq)]
pub struct Complex2 {
    n: u32,
    triangles: Vec<[u32; 3]>,
    edge_link: Vec<Vec<u32>>,
}

impl Complex2 {
    /// Build a complex from its triangle list. Triples must be strictly
    /// increasing, within range, and free of duplicates.
    pub fn new(n: u32, mut triangles: Vec<[u32; 3]>) -> Result<Complex2> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for &[i, j, k] in &triangles {
            if !(1 <= i && i < j && j < k && k <= n) {
                return Err(Error::ComplexFormat(format!(
                    "triple ({i},{j},{k}) is not strictly increasing within 1..={n}"
                )));
            }
        }
        triangles.sort_unstable();
        if triangles.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ComplexFormat("duplicate triangle".into()));
        }
        let mut edge_link = vec![Vec::new(); pair_count(n)];
        for &[i, j, k] in &triangles {
            edge_link[pair_rank(n, i, j)].push(k);
            edge_link[pair_rank(n, i, k)].push(j);
            edge_link[pair_rank(n, j, k)].push(i);
        }
        Ok(Complex2 { n, triangles, edge_link })
    }

    /// The full 2-skeleton on `n` vertices.
    pub fn full(n: u32) -> Result<Complex2> {
        Complex2::new(n, triples(n).collect())
    }

    /// The 1-skeleton alone (no triangles).
    pub fn skeleton(n: u32) -> Result<Complex2> {
        Complex2::new(n, Vec::new())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    /// Face counts `(f0, f1, f2)`: vertex, edge and triangle counts. The edge
    /// count is always `C(n,2)` because the 1-skeleton is complete.
    pub fn face_counts(&self) -> (usize, usize, usize) {
        (self.n as usize, pair_count(self.n), self.triangles.len())
    }

    /// All `w` such that `{u, v, w}` is a triangle; `u != v`, both in range.
    pub fn triangles_of_edge(&self, u: u32, v: u32) -> &[u32] {
        assert!(u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v));
        &self.edge_link[pair_rank(self.n, u.min(v), u.max(v))]
    }

    pub fn contains_triangle(&self, t: [u32; 3]) -> bool {
        self.triangles.binary_search(&t).is_ok()
    }

    /// Serialize in the text format: a header line `n <n>`, then one line
    /// `i j k` per triangle.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for &[i, j, k] in &self.triangles {
            let _ = writeln!(out, "{i} {j} {k}");
        }
        out
    }

    /// Parse the text format; blank lines and `#` comments are ignored.
    pub fn from_text(text: &str) -> Result<Complex2> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::ComplexFormat("empty input".into()))?;
        let n = header
            .strip_prefix("n ")
            .and_then(|s| s.trim().parse::<u32>().ok())
            .ok_or_else(|| Error::ComplexFormat(format!("bad header line `{header}`")))?;
        let mut triangles = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace().map(|t| t.parse::<u32>());
            let mut next = || -> Result<u32> {
                parts
                    .next()
                    .and_then(|r| r.ok())
                    .ok_or_else(|| Error::ComplexFormat(format!("bad triangle line `{line}`")))
            };
            let t = [next()?, next()?, next()?];
            if parts.next().is_some() {
                return Err(Error::ComplexFormat(format!("trailing tokens in `{line}`")));
            }
            triangles.push(t);
        }
        Complex2::new(n, triangles)
    }
}

/// Sample `Y(n, p)` with a deterministic per-triple draw.
///
/// Triple `t` (in lexicographic rank order) is present iff
/// `hash(seed, rank(t)) < p` as a uniform draw in `[0,1)`. Consequently the
/// same `(n, p, seed)` always reproduces the same complex, and for a fixed
/// seed the triangle set is monotone in `p`, which couples sweep cells.
pub fn sample_complex(n: u32, p: f64, seed: u64) -> Result<Complex2> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    assert!((0.0..=1.0).contains(&p), "p must lie in [0,1], got {p}");
    let mut triangles = Vec::new();
    for (rank, t) in triples(n).enumerate() {
        if seeding::unit_f64(seed, rank as u64) < p {
            triangles.push(t);
        }
    }
    Complex2::new(n, triangles)
}
