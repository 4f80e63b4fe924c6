//! Star-gauge-fixed cocycle search: the finite presentation of `pi_1` read
//! off a complex, enumeration of star-fixed cocycles (equivalently group
//! homomorphisms from `pi_1`), nontriviality detection for `H^1(X;G)`, and
//! quotient detection over the simple-group catalog.
//!
//! `pi_1(X)` is generated by symbols `e_ij` for `2 <= i != j <= n` subject to
//! `e_ij e_ji = 1`, to `e_ij = 1` whenever `(1,i,j)` is a triangle, and to
//! `e_ij e_jk e_ki = 1` whenever `(i,j,k)` is a triangle. Assignments of group
//! values to the pairs `{i,j}` satisfying these relations are exactly the
//! 1-cocycles that vanish on the star of vertex 1, and every cohomology class
//! has such a representative (apply the gauge `ψ(j) = φ(1,j)`).

use std::collections::HashSet;
use std::sync::Arc;

use crate::cochain::Cochain1;
use crate::complex::{pair_rank, Complex2};
use crate::error::{Error, Result};
use crate::group::{catalog_entries, FiniteGroup, GroupElement};

/// The triangle presentation of `pi_1(X)` relative to the basepoint star.
///
/// Generators are the pairs `{i,j}` with `2 <= i < j <= n` (the reversed
/// orientation is the inverse); only the relation data is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n: u32,
    forced_trivial: Vec<(u32, u32)>,
    triangle_relations: Vec<[u32; 3]>,
}

impl Presentation {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of generators, `C(n-1, 2)`.
    pub fn generator_count(&self) -> usize {
        let m = (self.n - 1) as usize;
        m * (m - 1) / 2
    }

    /// Pairs `{i,j}` pinned to the identity because `(1,i,j)` is a triangle.
    pub fn forced_trivial(&self) -> &[(u32, u32)] {
        &self.forced_trivial
    }

    /// Triangles `(i,j,k)` with `2 <= i < j < k` contributing the relation
    /// `e_ij e_jk e_ki = 1`.
    pub fn triangle_relations(&self) -> &[[u32; 3]] {
        &self.triangle_relations
    }
}

/// Read the presentation off the triangle set of `X`.
pub fn presentation(x: &Complex2) -> Presentation {
    let mut forced_trivial = Vec::new();
    let mut triangle_relations = Vec::new();
    for &[i, j, k] in x.triangles() {
        if i == 1 {
            forced_trivial.push((j, k));
        } else {
            triangle_relations.push([i, j, k]);
        }
    }
    Presentation { n: x.n(), forced_trivial, triangle_relations }
}

/// Move `φ` to the star-fixed representative of its orbit: act by the gauge
/// `ψ(1) = 1`, `ψ(j) = φ(1,j)`, after which every pair containing vertex 1
/// carries the identity.
pub fn star_gauge_fix(phi: &Cochain1) -> Cochain1 {
    let fixed = phi.vertex_gauge(1).act(phi);
    debug_assert!((2..=phi.n()).all(|j| fixed.get(1, j).is_identity()));
    fixed
}

/// Search counters.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Branch decisions tried.
    pub nodes: u64,
    /// Values forced by unit propagation.
    pub propagations: u64,
}

/// Outcome of a nontriviality check.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    /// Name of the coefficient group.
    pub group: String,
    /// True iff the only star-fixed cocycle is the all-identity one, i.e.
    /// `H^1(X;G) = {[1]}`.
    pub trivial: bool,
    /// A star-fixed non-identity cocycle when `trivial` is false.
    pub witness: Option<Cochain1>,
    pub stats: SearchStats,
}

/// Result of enumerating star-fixed cocycles.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub cocycles: Vec<Cochain1>,
    /// True iff the output was capped by the requested limit.
    pub truncated: bool,
    pub stats: SearchStats,
}

/// Enumerate star-fixed cocycles of `X` with values in `G`, up to `limit`
/// results. Pairs in the star of vertex 1 are identity by construction; the
/// remaining pairs are assigned by backtracking with full unit propagation
/// over the triangle relations.
pub fn enumerate_cocycles(x: &Complex2, group: &Arc<FiniteGroup>, limit: usize) -> Enumeration {
    assert!(limit > 0, "limit must be positive");
    let mut engine = Engine::new(x, group.clone(), u64::MAX);
    let mut cocycles = Vec::new();
    let truncated = engine
        .search(ValueOrder::IdentityFirst, &mut |solution| {
            cocycles.push(solution);
            cocycles.len() < limit
        })
        .expect("unbounded budget cannot exhaust");
    Enumeration { cocycles, truncated, stats: engine.stats }
}

/// Decide whether `H^1(X;G)` contains a class other than `[1]`.
///
/// A star-fixed cocycle represents `[1]` iff it is identically 1: a star-fixed
/// coboundary `d0 ψ` has `ψ(1)ψ(j)^{-1} = 1` for every `j`, so `ψ` is constant
/// and `d0 ψ = 1`. The search therefore propagates the forced star relations
/// first, reports trivial without branching if everything is pinned to the
/// identity, and otherwise branches with non-identity values first so that the
/// first solution it finds is non-identity whenever one exists (the
/// all-identity solution is the final leaf of that value order).
pub fn has_nontrivial_class(x: &Complex2, group: &Arc<FiniteGroup>) -> CohomologyReport {
    has_nontrivial_class_budgeted(x, group, u64::MAX).expect("unbounded budget cannot exhaust")
}

/// [`has_nontrivial_class`] with a node budget; exceeding it returns
/// [`Error::BudgetExhausted`].
pub fn has_nontrivial_class_budgeted(
    x: &Complex2,
    group: &Arc<FiniteGroup>,
    node_budget: u64,
) -> Result<CohomologyReport> {
    let mut engine = Engine::new(x, group.clone(), node_budget);
    let mut first: Option<Cochain1> = None;
    engine.search(ValueOrder::NonIdentityFirst, &mut |solution| {
        first = Some(solution);
        false
    })?;
    let witness = first.filter(|c| c.support_size() > 0);
    Ok(CohomologyReport {
        group: group.name().to_string(),
        trivial: witness.is_none(),
        witness,
        stats: engine.stats,
    })
}

/// Count `|H^1(X;G)| = |Hom(pi_1(X),G)/G|`: enumerate star-fixed cocycles and
/// count their orbits under simultaneous conjugation of all values by a single
/// group element. Refuses to report if the enumeration hits `limit`.
pub fn count_hom_orbits(x: &Complex2, group: &Arc<FiniteGroup>, limit: usize) -> Result<usize> {
    let enumeration = enumerate_cocycles(x, group, limit);
    if enumeration.truncated {
        return Err(Error::EnumerationTruncated(limit));
    }
    Ok(conjugation_orbit_count(group, &enumeration.cocycles))
}

/// Number of orbits of the given cochains under `φ(u,v) -> c φ(u,v) c^{-1}`.
pub(crate) fn conjugation_orbit_count(group: &FiniteGroup, cochains: &[Cochain1]) -> usize {
    let mut canonical: HashSet<Vec<GroupElement>> = HashSet::new();
    for phi in cochains {
        let raw = phi.raw_values();
        let representative = group
            .elements()
            .map(|c| raw.iter().map(|&v| group.conjugate(c, v)).collect::<Vec<_>>())
            .min()
            .expect("nonempty group");
        canonical.insert(representative);
    }
    canonical.len()
}

/// Find the smallest simple group `G` of order at most `max_index` with
/// `H^1(X;G)` nontrivial; equivalently, decide whether `pi_1(X)` has a
/// nontrivial normal subgroup of index at most `max_index`. Returns the group
/// name and a star-fixed witness cocycle, or `None` when every catalog group
/// yields a trivial `H^1`.
pub fn has_small_quotient(x: &Complex2, max_index: u32) -> Result<Option<(String, Cochain1)>> {
    has_small_quotient_budgeted(x, max_index, u64::MAX)
}

/// [`has_small_quotient`] with a per-group search budget.
pub fn has_small_quotient_budgeted(
    x: &Complex2,
    max_index: u32,
    node_budget: u64,
) -> Result<Option<(String, Cochain1)>> {
    for entry in catalog_entries(max_index)? {
        let group = Arc::new(entry.build());
        let report = has_nontrivial_class_budgeted(x, &group, node_budget)?;
        if !report.trivial {
            let witness = report.witness.expect("nontrivial report carries a witness");
            return Ok(Some((entry.name, witness)));
        }
    }
    Ok(None)
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum ValueOrder {
    /// `0, 1, …, |G|-1`: natural order for enumeration.
    IdentityFirst,
    /// `1, …, |G|-1, 0`: detection order; the all-identity assignment is the
    /// last leaf, so the first solution found is non-identity iff any is.
    NonIdentityFirst,
}

const UNASSIGNED: u16 = u16::MAX;

/// Backtracking engine over the pair variables `{i,j}`, `2 <= i < j <= n`,
/// with full unit propagation of the triangle relations after every decision.
struct Engine {
    group: Arc<FiniteGroup>,
    n: u32,
    /// Current value per variable, `UNASSIGNED` when free.
    assignment: Vec<u16>,
    /// Relations as variable triples `[v_ij, v_ik, v_jk]` constrained by
    /// `x[v_ij] * x[v_jk] = x[v_ik]`.
    relations: Vec<[u32; 3]>,
    /// Relations incident to each variable.
    watch: Vec<Vec<u32>>,
    /// Assigned variables in order, for backtracking.
    trail: Vec<u32>,
    /// Static branch order: descending incidence count, then pair order.
    branch_order: Vec<u32>,
    node_budget: u64,
    stats: SearchStats,
}

impl Engine {
    fn new(x: &Complex2, group: Arc<FiniteGroup>, node_budget: u64) -> Engine {
        let n = x.n();
        let pres = presentation(x);
        let vars = pres.generator_count();
        let var_of = |i: u32, j: u32| pair_rank(n - 1, i - 1, j - 1) as u32;
        let relations: Vec<[u32; 3]> = pres
            .triangle_relations()
            .iter()
            .map(|&[i, j, k]| [var_of(i, j), var_of(i, k), var_of(j, k)])
            .collect();
        let mut watch = vec![Vec::new(); vars];
        for (rid, rel) in relations.iter().enumerate() {
            for &v in rel {
                watch[v as usize].push(rid as u32);
            }
        }
        let mut branch_order: Vec<u32> = (0..vars as u32).collect();
        branch_order.sort_by_key(|&v| (usize::MAX - watch[v as usize].len(), v));
        let mut engine = Engine {
            group,
            n,
            assignment: vec![UNASSIGNED; vars],
            relations,
            watch,
            trail: Vec::with_capacity(vars),
            branch_order,
            node_budget,
            stats: SearchStats::default(),
        };
        // Root level: pin the star-forced pairs and run propagation to its
        // fixpoint. Every value forced from identities is the identity, so
        // this can never conflict.
        for &(i, j) in pres.forced_trivial() {
            let v = var_of(i, j);
            if engine.assignment[v as usize] == UNASSIGNED {
                let ok = engine.assign_and_propagate(v, GroupElement::IDENTITY);
                debug_assert!(ok, "root propagation cannot conflict");
            }
        }
        engine
    }

    /// Assign `var := value` and propagate to fixpoint. Returns false on
    /// conflict, leaving the trail for the caller to unwind.
    fn assign_and_propagate(&mut self, var: u32, value: GroupElement) -> bool {
        let g = self.group.clone();
        debug_assert_eq!(self.assignment[var as usize], UNASSIGNED);
        self.assignment[var as usize] = value.0;
        self.trail.push(var);
        let mut queue_head = self.trail.len() - 1;
        while queue_head < self.trail.len() {
            let v = self.trail[queue_head];
            queue_head += 1;
            for wi in 0..self.watch[v as usize].len() {
                let rid = self.watch[v as usize][wi] as usize;
                let [a, b, c] = self.relations[rid];
                // Constraint: x[a] * x[c] = x[b] where a = {i,j}, b = {i,k},
                // c = {j,k} come from the triangle (i,j,k).
                let va = self.assignment[a as usize];
                let vb = self.assignment[b as usize];
                let vc = self.assignment[c as usize];
                let forced: Option<(u32, GroupElement)> = match (va, vb, vc) {
                    (UNASSIGNED, UNASSIGNED, _)
                    | (UNASSIGNED, _, UNASSIGNED)
                    | (_, UNASSIGNED, UNASSIGNED) => None,
                    (UNASSIGNED, vb, vc) => {
                        Some((a, g.mul(GroupElement(vb), g.inv(GroupElement(vc)))))
                    }
                    (va, UNASSIGNED, vc) => Some((b, g.mul(GroupElement(va), GroupElement(vc)))),
                    (va, vb, UNASSIGNED) => {
                        Some((c, g.mul(g.inv(GroupElement(va)), GroupElement(vb))))
                    }
                    (va, vb, vc) => {
                        if g.mul(GroupElement(va), GroupElement(vc)) != GroupElement(vb) {
                            return false;
                        }
                        None
                    }
                };
                if let Some((fv, fval)) = forced {
                    self.stats.propagations += 1;
                    self.assignment[fv as usize] = fval.0;
                    self.trail.push(fv);
                }
            }
        }
        true
    }

    fn unwind_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.assignment[v as usize] = UNASSIGNED;
        }
    }

    /// Depth-first search over the remaining free variables. `emit` receives
    /// each solution and returns whether to continue. `Ok(true)` means the
    /// search stopped early because `emit` returned false.
    fn search(
        &mut self,
        order: ValueOrder,
        emit: &mut dyn FnMut(Cochain1) -> bool,
    ) -> Result<bool> {
        self.dfs(0, order, emit)
    }

    fn dfs(
        &mut self,
        order_pos: usize,
        order: ValueOrder,
        emit: &mut dyn FnMut(Cochain1) -> bool,
    ) -> Result<bool> {
        let mut pos = order_pos;
        while pos < self.branch_order.len()
            && self.assignment[self.branch_order[pos] as usize] != UNASSIGNED
        {
            pos += 1;
        }
        if pos == self.branch_order.len() {
            return Ok(!emit(self.solution()));
        }
        let var = self.branch_order[pos];
        let order_count = self.group.order() as u16;
        for idx in 0..order_count {
            let value = match order {
                ValueOrder::IdentityFirst => idx,
                ValueOrder::NonIdentityFirst => {
                    if idx + 1 == order_count {
                        0
                    } else {
                        idx + 1
                    }
                }
            };
            self.stats.nodes += 1;
            if self.stats.nodes > self.node_budget {
                return Err(Error::BudgetExhausted(self.node_budget));
            }
            let mark = self.trail.len();
            if self.assign_and_propagate(var, GroupElement(value)) {
                match self.dfs(pos + 1, order, emit) {
                    Ok(false) => {}
                    stop_or_err => {
                        self.unwind_to(mark);
                        return stop_or_err;
                    }
                }
            }
            self.unwind_to(mark);
        }
        Ok(false)
    }

    /// Materialize the current full assignment as a star-fixed cochain on the
    /// complete simplex.
    fn solution(&self) -> Cochain1 {
        let mut out = Cochain1::identity(self.group.clone(), self.n);
        for i in 2..=self.n {
            for j in i + 1..=self.n {
                let v = pair_rank(self.n - 1, i - 1, j - 1);
                out.set(i, j, GroupElement(self.assignment[v]));
            }
        }
        out
    }
}

#[cfg(test)]
#[path = "search_tests.rs"]
mod tests;
