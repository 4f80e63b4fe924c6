//! Non-abelian cochain algebra on the complete simplex: `C^0` and `C^1`, the
//! coboundaries `d0` and `d1`, the gauge action of `C^0` on `C^1`, support
//! sizes, and the orbit weight `‖[φ]‖` computed by branch and bound.
//!
//! A 1-cochain stores one group element per unordered pair `{u,v}`, oriented
//! from the smaller to the larger vertex; reading the opposite orientation
//! applies the group inverse on the fly, so the antisymmetry convention
//! `φ(u,v) = φ(v,u)^{-1}` cannot be violated by construction.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::complex::{pair_count, pair_rank, triples, Complex2};
use crate::error::{Error, Result};
use crate::group::{resolve_group, FiniteGroup, GroupElement};
use crate::seeding::Stream;

/// A `G`-valued function on the vertices `1..=n`.
#[derive(Clone, Debug)]
pub struct Cochain0 {
    group: Arc<FiniteGroup>,
    values: Vec<GroupElement>,
}

impl PartialEq for Cochain0 {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_group(&other.group) && self.values == other.values
    }
}

impl Cochain0 {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<GroupElement>) -> Cochain0 {
        assert!(!values.is_empty());
        assert!(values.iter().all(|e| e.index() < group.order() as usize));
        Cochain0 { group, values }
    }

    pub fn constant(group: Arc<FiniteGroup>, n: u32, value: GroupElement) -> Cochain0 {
        Cochain0::new(group, vec![value; n as usize])
    }

    pub fn random(group: Arc<FiniteGroup>, n: u32, seed: u64) -> Cochain0 {
        let mut stream = Stream::new(seed);
        let order = group.order() as u64;
        let values = (0..n)
            .map(|_| GroupElement(stream.next_index(order) as u16))
            .collect();
        Cochain0::new(group, values)
    }

    pub fn n(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Value at vertex `v` (1-based).
    #[inline]
    pub fn get(&self, v: u32) -> GroupElement {
        self.values[(v - 1) as usize]
    }

    pub fn set(&mut self, v: u32, value: GroupElement) {
        self.values[(v - 1) as usize] = value;
    }

    /// Pointwise product `(self * other)(v) = self(v) * other(v)`.
    pub fn pointwise_mul(&self, other: &Cochain0) -> Cochain0 {
        assert!(self.group.same_group(&other.group) && self.n() == other.n());
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| self.group.mul(a, b))
            .collect();
        Cochain0::new(self.group.clone(), values)
    }

    /// The coboundary `d0 ψ (u,v) = ψ(u) ψ(v)^{-1}`.
    pub fn d0(&self) -> Cochain1 {
        let g = &self.group;
        let n = self.n();
        let mut out = Cochain1::identity(self.group.clone(), n);
        for u in 1..=n {
            for v in u + 1..=n {
                out.set(u, v, g.mul(self.get(u), g.inv(self.get(v))));
            }
        }
        out
    }

    /// The gauge action `ψ.φ (u,v) = ψ(u) φ(u,v) ψ(v)^{-1}`. Note that
    /// `ψ.1 = d0 ψ`.
    pub fn act(&self, phi: &Cochain1) -> Cochain1 {
        assert!(
            self.group.same_group(&phi.group),
            "gauge action requires matching coefficient groups"
        );
        assert_eq!(self.n(), phi.n(), "gauge action requires matching vertex counts");
        let g = &self.group;
        let n = self.n();
        let mut out = phi.clone();
        for u in 1..=n {
            for v in u + 1..=n {
                let acted = g.mul(g.mul(self.get(u), phi.get(u, v)), g.inv(self.get(v)));
                out.set(u, v, acted);
            }
        }
        out
    }
}

/// An antisymmetric `G`-valued function on ordered pairs from `1..=n`, stored
/// on the increasing orientation only.
#[derive(Clone, Debug)]
pub struct Cochain1 {
    group: Arc<FiniteGroup>,
    n: u32,
    values: Vec<GroupElement>,
}

impl PartialEq for Cochain1 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.group.same_group(&other.group) && self.values == other.values
    }
}

/// Result of the orbit-weight minimization: the smallest support size found
/// over the gauge orbit, and whether the search provably explored enough of
/// the gauge space for it to be the exact minimum.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct OrbitWeight {
    pub weight: usize,
    pub exact: bool,
}

impl Cochain1 {
    /// Default node budget for [`Cochain1::orbit_weight`].
    pub const DEFAULT_WEIGHT_BUDGET: u64 = 10_000_000;

    /// The all-identity cochain.
    pub fn identity(group: Arc<FiniteGroup>, n: u32) -> Cochain1 {
        assert!(n >= 2);
        Cochain1 { group, n, values: vec![GroupElement::IDENTITY; pair_count(n)] }
    }

    /// Uniform random values on every pair.
    pub fn random(group: Arc<FiniteGroup>, n: u32, seed: u64) -> Cochain1 {
        let mut out = Cochain1::identity(group, n);
        let order = out.group.order() as u64;
        let mut stream = Stream::new(seed);
        for slot in out.values.iter_mut() {
            *slot = GroupElement(stream.next_index(order) as u16);
        }
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Value on the ordered pair `(u, v)`; the reversed orientation reads the
    /// inverse of the stored value.
    #[inline]
    pub fn get(&self, u: u32, v: u32) -> GroupElement {
        debug_assert!(u != v);
        if u < v {
            self.values[pair_rank(self.n, u, v)]
        } else {
            self.group.inv(self.values[pair_rank(self.n, v, u)])
        }
    }

    /// Assign the value on the ordered pair `(u, v)`; assigning the reversed
    /// orientation stores the inverse.
    pub fn set(&mut self, u: u32, v: u32, value: GroupElement) {
        assert!(u != v);
        if u < v {
            self.values[pair_rank(self.n, u, v)] = value;
        } else {
            self.values[pair_rank(self.n, v, u)] = self.group.inv(value);
        }
    }

    /// Raw storage in pair-rank order (increasing orientation).
    pub(crate) fn raw_values(&self) -> &[GroupElement] {
        &self.values
    }

    #[cfg(test)]
    pub(crate) fn from_raw(group: Arc<FiniteGroup>, n: u32, values: Vec<GroupElement>) -> Cochain1 {
        assert_eq!(values.len(), pair_count(n));
        Cochain1 { group, n, values }
    }

    /// `d1 φ (u,v,w) = φ(u,v) φ(v,w) φ(w,u)` for distinct vertices. The value
    /// is conjugated under cyclic rotation and inverted under transposition,
    /// so whether it is the identity does not depend on the orientation.
    pub fn d1(&self, u: u32, v: u32, w: u32) -> GroupElement {
        assert!(u != v && v != w && u != w, "d1 requires distinct vertices");
        let g = &self.group;
        g.mul(g.mul(self.get(u, v), self.get(v, w)), self.get(w, u))
    }

    /// `B(φ)`: the increasing triples of the full simplex where `d1 φ` is not
    /// the identity. The coboundary norm `‖d1 φ‖` is the length of this set.
    pub fn coboundary_support(&self) -> Vec<[u32; 3]> {
        triples(self.n)
            .filter(|&[i, j, k]| !self.d1(i, j, k).is_identity())
            .collect()
    }

    /// `‖d1 φ‖` without materializing the support set.
    pub fn d1_norm(&self) -> usize {
        triples(self.n)
            .filter(|&[i, j, k]| !self.d1(i, j, k).is_identity())
            .count()
    }

    /// `‖φ‖`: the number of unordered pairs with a non-identity value.
    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|e| !e.is_identity()).count()
    }

    /// Whether `d1 φ` is the identity on every stored triangle of `X`; by the
    /// orientation symmetry of `d1`, checking the increasing orientation of
    /// each triangle suffices.
    pub fn is_cocycle(&self, x: &Complex2) -> bool {
        assert_eq!(self.n, x.n(), "cochain and complex vertex counts differ");
        x.triangles()
            .iter()
            .all(|&[i, j, k]| self.d1(i, j, k).is_identity())
    }

    /// The gauge `φ_u` with `φ_u(u) = 1` and `φ_u(v) = φ(u,v)` otherwise.
    pub fn vertex_gauge(&self, u: u32) -> Cochain0 {
        assert!((1..=self.n).contains(&u));
        let values = (1..=self.n)
            .map(|v| if v == u { GroupElement::IDENTITY } else { self.get(u, v) })
            .collect();
        Cochain0::new(self.group.clone(), values)
    }

    /// `‖[φ]‖`: the minimum support size over the gauge orbit of `φ`.
    ///
    /// Left-translating a gauge by a constant conjugates every value of `ψ.φ`
    /// and so preserves its support; the minimization therefore fixes
    /// `ψ(1) = 1` and searches assignments of `ψ(2),…,ψ(n)` by depth-first
    /// branch and bound. The bound at a node is the number of non-identity
    /// gauged values among pairs with both endpoints assigned, plus, for each
    /// unassigned vertex, the number of assigned neighbours that no single
    /// choice of its gauge value could still cancel.
    ///
    /// The incumbent is seeded with the identity gauge and every vertex gauge
    /// `φ_u`, so the reported weight never exceeds `min_u ‖φ_u.φ‖`. When
    /// `|G|^(n-1)` does not exceed `budget` the search always completes and
    /// the result is exact; otherwise `exact` reports whether the tree was
    /// exhausted before the budget ran out.
    pub fn orbit_weight(&self, budget: u64) -> OrbitWeight {
        let mut best = self.support_size();
        for u in 1..=self.n {
            best = best.min(self.vertex_gauge(u).act(self).support_size());
        }
        if best == 0 {
            return OrbitWeight { weight: 0, exact: true };
        }
        let full_space_fits = {
            let mut size = 1u64;
            let order = self.group.order() as u64;
            let mut fits = true;
            for _ in 0..self.n - 1 {
                size = size.saturating_mul(order);
                if size > budget {
                    fits = false;
                    break;
                }
            }
            fits
        };
        let effective_budget = if full_space_fits { u64::MAX } else { budget };
        let mut search = WeightSearch::new(self, best, effective_budget);
        search.run();
        OrbitWeight { weight: search.best, exact: !search.truncated }
    }

    /// Serialize in the text format: a header `n <n> group <name>` followed
    /// by one `u v <element-index>` line per non-identity pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {} group {}", self.n, self.group.name());
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                let e = self.get(u, v);
                if !e.is_identity() {
                    let _ = writeln!(out, "{u} {v} {}", e.0);
                }
            }
        }
        out
    }

    /// Parse the text format; pairs not listed are the identity. The group is
    /// resolved by build spec or catalog name.
    pub fn from_text(text: &str) -> Result<Cochain1> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::CochainFormat("empty input".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let (n, group_name) = match tokens.as_slice() {
            ["n", n, "group", name] => (
                n.parse::<u32>()
                    .map_err(|_| Error::CochainFormat(format!("bad vertex count `{n}`")))?,
                *name,
            ),
            _ => return Err(Error::CochainFormat(format!("bad header line `{header}`"))),
        };
        if n < 2 {
            return Err(Error::CochainFormat(format!("vertex count {n} too small")));
        }
        let group = Arc::new(resolve_group(group_name)?);
        let mut out = Cochain1::identity(group, n);
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [u, v, e] = fields.as_slice() else {
                return Err(Error::CochainFormat(format!("bad value line `{line}`")));
            };
            let parse = |s: &str| {
                s.parse::<u32>()
                    .map_err(|_| Error::CochainFormat(format!("bad number `{s}`")))
            };
            let (u, v, e) = (parse(u)?, parse(v)?, parse(e)?);
            if !(1 <= u && u < v && v <= n) {
                return Err(Error::CochainFormat(format!(
                    "pair ({u},{v}) is not increasing within 1..={n}"
                )));
            }
            if e >= out.group.order() {
                return Err(Error::CochainFormat(format!(
                    "element index {e} out of range for {}",
                    out.group.name()
                )));
            }
            out.set(u, v, GroupElement(e as u16));
        }
        Ok(out)
    }
}

/// Branch-and-bound minimization of the gauge-orbit support size.
struct WeightSearch<'a> {
    group: &'a FiniteGroup,
    n: usize,
    /// phi(u,v) for all ordered pairs, flattened as (u-1)*n + (v-1).
    phi: Vec<GroupElement>,
    order: usize,
    best: usize,
    budget: u64,
    nodes: u64,
    truncated: bool,
    /// votes[v * order + h]: among assigned `u`, how many have
    /// `psi(u) * phi(u, v) = h`; maintained for unassigned `v` only.
    votes: Vec<u32>,
    max_votes: Vec<u32>,
    assigned_count: Vec<u32>,
    /// Sum over unassigned `v` of `assigned_count[v] - max_votes[v]`.
    future: usize,
}

impl<'a> WeightSearch<'a> {
    fn new(phi: &'a Cochain1, incumbent: usize, budget: u64) -> WeightSearch<'a> {
        let n = phi.n() as usize;
        let order = phi.group.order() as usize;
        let mut flat = vec![GroupElement::IDENTITY; n * n];
        for u in 1..=phi.n() {
            for v in 1..=phi.n() {
                if u != v {
                    flat[(u as usize - 1) * n + (v as usize - 1)] = phi.get(u, v);
                }
            }
        }
        let mut search = WeightSearch {
            group: phi.group.as_ref(),
            n,
            phi: flat,
            order,
            best: incumbent,
            budget,
            nodes: 0,
            truncated: false,
            votes: vec![0; n * order],
            max_votes: vec![0; n],
            assigned_count: vec![0; n],
            future: 0,
        };
        // Vertex 0 starts assigned with the identity: cast its votes.
        for v in 1..n {
            let vote = search.phi[v];
            search.cast_vote(v, vote);
        }
        search
    }

    #[inline]
    fn cast_vote(&mut self, v: usize, h: GroupElement) -> u32 {
        let slot = v * self.order + h.index();
        self.votes[slot] += 1;
        self.assigned_count[v] += 1;
        let old_max = self.max_votes[v];
        if self.votes[slot] > old_max {
            self.max_votes[v] = self.votes[slot];
        } else {
            self.future += 1;
        }
        old_max
    }

    #[inline]
    fn retract_vote(&mut self, v: usize, h: GroupElement, old_max: u32) {
        let slot = v * self.order + h.index();
        self.votes[slot] -= 1;
        self.assigned_count[v] -= 1;
        if self.max_votes[v] == old_max {
            self.future -= 1;
        } else {
            self.max_votes[v] = old_max;
        }
    }

    fn run(&mut self) {
        self.descend(1, 0);
    }

    /// Assign vertex `depth` (0-based) onward; `cost` counts non-identity
    /// gauged pairs among `0..depth`.
    fn descend(&mut self, depth: usize, cost: usize) {
        if depth == self.n {
            self.best = self.best.min(cost);
            return;
        }
        // Candidate values sorted by immediate cost: the most-voted value
        // cancels the most already-assigned pairs.
        let count = self.assigned_count[depth];
        let mut candidates: Vec<(u32, u16)> = (0..self.order as u16)
            .map(|h| (count - self.votes[depth * self.order + h as usize], h))
            .collect();
        candidates.sort_unstable();
        for (immediate, h) in candidates {
            if self.truncated || self.best == 0 {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.truncated = true;
                return;
            }
            let value = GroupElement(h);
            let new_cost = cost + immediate as usize;
            if new_cost >= self.best {
                // Candidates are sorted, so every later value is at least as
                // expensive before even counting the future bound.
                break;
            }
            // Vertex `depth` leaves the future sum while it is assigned.
            self.future -= (count - self.max_votes[depth]) as usize;
            let mut undo: Vec<(usize, GroupElement, u32)> = Vec::with_capacity(self.n - depth);
            for v in depth + 1..self.n {
                let vote = self.group.mul(value, self.phi[depth * self.n + v]);
                let old_max = self.cast_vote(v, vote);
                undo.push((v, vote, old_max));
            }
            if new_cost + self.future < self.best {
                self.descend(depth + 1, new_cost);
            }
            for (v, vote, old_max) in undo.into_iter().rev() {
                self.retract_vote(v, vote, old_max);
            }
            self.future += (count - self.max_votes[depth]) as usize;
        }
    }
}

#[cfg(test)]
#[path = "cochain_tests.rs"]
mod tests;
