//! Finite group arithmetic over dense multiplication tables, plus the catalog
//! of nontrivial simple groups up to a fixed order cap.
//!
//! Groups are flattened to full `order x order` index tables so that the inner
//! loops of cocycle search and gauge minimization are single lookups. Element
//! index 0 is always the identity, which makes "is this value trivial" a
//! zero-compare.

mod catalog;
mod field;
mod perm;

use crate::error::{Error, Result};

pub use catalog::{catalog_entries, simple_group_catalog, CatalogEntry};

/// Largest admissible group order; bounds one table at roughly 200 MB.
pub const ORDER_CAP: u32 = 10080;

/// An element of a [`FiniteGroup`], identified by its index in `0..order`.
/// The index is only meaningful relative to the group it came from; index 0
/// is the identity of every group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub u16);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite group given by complete multiplication and inversion tables.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: u32,
    abelian: bool,
    mul_table: Vec<u16>,
    inv_table: Vec<u16>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.order == other.order
    }
}

impl FiniteGroup {
    /// Build a group from a raw multiplication table, checking the identity
    /// and inverse laws and that each row and column is a permutation.
    /// Associativity is not re-verified here; constructors either produce it
    /// structurally (modular addition, permutation composition) or are
    /// covered by the exhaustive table tests.
    pub(crate) fn from_table(name: impl Into<String>, order: u32, mul_table: Vec<u16>) -> FiniteGroup {
        let name = name.into();
        let m = order as usize;
        assert_eq!(mul_table.len(), m * m, "{name}: table size mismatch");
        let mut inv_table = vec![u16::MAX; m];
        for a in 0..m {
            assert_eq!(mul_table[a] as usize, a, "{name}: identity row broken at {a}");
            assert_eq!(mul_table[a * m] as usize, a, "{name}: identity column broken at {a}");
            for b in 0..m {
                let ab = mul_table[a * m + b] as usize;
                assert!(ab < m, "{name}: entry out of range");
                if ab == 0 {
                    inv_table[a] = b as u16;
                }
            }
            assert_ne!(inv_table[a], u16::MAX, "{name}: element {a} has no inverse");
        }
        let abelian = (0..m).all(|a| (0..a).all(|b| mul_table[a * m + b] == mul_table[b * m + a]));
        FiniteGroup { name, order, abelian, mul_table, inv_table }
    }

    /// The cyclic group of order `q` under addition mod `q`.
    pub(crate) fn cyclic(q: u32) -> FiniteGroup {
        let m = q as usize;
        let mut table = vec![0u16; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = ((a + b) % m) as u16;
            }
        }
        FiniteGroup::from_table(format!("C{q}"), q, table)
    }

    /// Flatten the closure of a permutation generating set into a table.
    /// Panics if the closure exceeds `expected_order`, and asserts that it
    /// reaches exactly `expected_order` elements.
    pub(crate) fn from_permutations(
        name: impl Into<String>,
        generators: &[perm::Perm],
        expected_order: u32,
    ) -> FiniteGroup {
        let closure = perm::close(generators, expected_order as usize);
        assert_eq!(
            closure.perms.len(),
            expected_order as usize,
            "closure order mismatch"
        );
        let table = perm::multiplication_table(&closure);
        FiniteGroup::from_table(name, expected_order, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    #[inline]
    pub fn identity(&self) -> GroupElement {
        GroupElement(0)
    }

    /// Table-lookup product `a * b`.
    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.mul_table[a.0 as usize * self.order as usize + b.0 as usize])
    }

    /// Table-lookup inverse.
    #[inline]
    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inv_table[a.0 as usize])
    }

    /// `g * a * g^-1`.
    #[inline]
    pub fn conjugate(&self, g: GroupElement, a: GroupElement) -> GroupElement {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order as u16).map(GroupElement)
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: GroupElement) -> u32 {
        let mut x = a;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Whether `self` and `other` are the same coefficient group for cochain
    /// purposes (same construction, not just isomorphic).
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other) || (self.order == other.order && self.name == other.name)
    }

    /// Computational simplicity test: the group is nontrivial and the normal
    /// closure of every non-identity element is the whole group.
    ///
    /// Conjugate elements have equal normal closures, so one representative
    /// per conjugacy class is checked. The closure BFS stops as soon as more
    /// than half the group is generated, since a subgroup of order above
    /// `order/2` must be everything by Lagrange.
    pub fn is_simple(&self) -> bool {
        let m = self.order as usize;
        if m == 1 {
            return false;
        }
        let mut classified = vec![false; m];
        classified[0] = true;
        let mut class = Vec::new();
        for a in 1..m {
            if classified[a] {
                continue;
            }
            class.clear();
            for g in 0..m {
                let c = self.conjugate(GroupElement(g as u16), GroupElement(a as u16));
                if !classified[c.index()] {
                    classified[c.index()] = true;
                    class.push(c);
                }
            }
            if !self.generates_whole_group(&class) {
                return false;
            }
        }
        true
    }

    fn generates_whole_group(&self, generators: &[GroupElement]) -> bool {
        let m = self.order as usize;
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut frontier = vec![GroupElement(0)];
        let mut count = 1usize;
        while let Some(x) = frontier.pop() {
            for &s in generators {
                let y = self.mul(x, s);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    count += 1;
                    if 2 * count > m {
                        return true;
                    }
                    frontier.push(y);
                }
            }
        }
        count == m
    }
}

/// Build a group from its textual spec.
///
/// The grammar accepts `C<q>` (cyclic of order `q >= 2`), `A<m>` (alternating,
/// `3 <= m <= 7`), and `PSL27` (the simple group of order 168 acting on the
/// projective line over GF(7)).
pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    let malformed = || Error::InvalidGroupSpec(spec.to_string());
    if spec == "PSL27" {
        return Ok(catalog::build_psl2(7, 1));
    }
    let (kind, rest) = spec.split_at(spec.len().min(1));
    match kind {
        "C" => {
            let q: u32 = rest.parse().map_err(|_| malformed())?;
            if q < 2 {
                return Err(malformed());
            }
            if q > ORDER_CAP {
                return Err(Error::OrderCapExceeded { order: q as u64, cap: ORDER_CAP as u64 });
            }
            Ok(FiniteGroup::cyclic(q))
        }
        "A" => {
            let m: u32 = rest.parse().map_err(|_| malformed())?;
            if !(3..=7).contains(&m) {
                return Err(malformed());
            }
            Ok(catalog::build_alternating(m))
        }
        _ => Err(malformed()),
    }
}

/// Resolve a group by build spec or by catalog display name (for reading
/// files whose coefficient group is a catalog member outside the build
/// grammar, e.g. `PSL(2,11)`).
pub fn resolve_group(name: &str) -> Result<FiniteGroup> {
    match build_group(name) {
        Ok(g) => Ok(g),
        Err(Error::OrderCapExceeded { order, cap }) => {
            Err(Error::OrderCapExceeded { order, cap })
        }
        Err(_) => catalog::build_by_name(name).ok_or_else(|| Error::UnknownGroup(name.to_string())),
    }
}

#[cfg(test)]
mod tests;
