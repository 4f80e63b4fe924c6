//! The catalog of nontrivial simple groups of order at most [`ORDER_CAP`]:
//! cyclic groups of prime order plus the sixteen nonabelian entries, taken
//! from the classification. Completeness of the hardcoded list is trusted
//! input; simplicity of every member is verifiable computationally via
//! [`FiniteGroup::is_simple`].

use serde::Serialize;

use super::field::SmallField;
use super::perm::{self, Perm};
use super::{FiniteGroup, ORDER_CAP};
use crate::error::{Error, Result};

/// Construction recipe for one catalog member.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Kind {
    Cyclic(u32),
    Alternating(u32),
    /// PSL(2, p^d) acting on the projective line.
    Psl2 { p: u16, d: u32 },
    /// PSL(3,3) acting on the 13 points of PG(2,3).
    Psl3_3,
    /// PSU(3,3) acting on the 28 isotropic points of the Hermitian form.
    Psu3_3,
    /// Mathieu group on 11 points.
    M11,
}

/// A catalog row; building the full table is deferred to [`CatalogEntry::build`]
/// so that walks over the catalog only pay for the groups they actually use.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub order: u32,
    pub abelian: bool,
    #[serde(skip)]
    kind: Kind,
}

impl CatalogEntry {
    /// Materialize the multiplication tables for this entry.
    pub fn build(&self) -> FiniteGroup {
        let g = match self.kind {
            Kind::Cyclic(q) => FiniteGroup::cyclic(q),
            Kind::Alternating(m) => build_alternating(m),
            Kind::Psl2 { p, d } => build_psl2(p, d),
            Kind::Psl3_3 => build_psl3_3(),
            Kind::Psu3_3 => build_psu3_3(),
            Kind::M11 => build_m11(),
        };
        debug_assert_eq!(g.order(), self.order);
        g
    }
}

fn nonabelian_entries() -> Vec<CatalogEntry> {
    let rows: [(u32, &str, Kind); 16] = [
        (60, "A5", Kind::Alternating(5)),
        (168, "PSL(2,7)", Kind::Psl2 { p: 7, d: 1 }),
        (360, "A6", Kind::Alternating(6)),
        (504, "PSL(2,8)", Kind::Psl2 { p: 2, d: 3 }),
        (660, "PSL(2,11)", Kind::Psl2 { p: 11, d: 1 }),
        (1092, "PSL(2,13)", Kind::Psl2 { p: 13, d: 1 }),
        (2448, "PSL(2,17)", Kind::Psl2 { p: 17, d: 1 }),
        (2520, "A7", Kind::Alternating(7)),
        (3420, "PSL(2,19)", Kind::Psl2 { p: 19, d: 1 }),
        (4080, "PSL(2,16)", Kind::Psl2 { p: 2, d: 4 }),
        (5616, "PSL(3,3)", Kind::Psl3_3),
        (6048, "PSU(3,3)", Kind::Psu3_3),
        (6072, "PSL(2,23)", Kind::Psl2 { p: 23, d: 1 }),
        (7800, "PSL(2,25)", Kind::Psl2 { p: 5, d: 2 }),
        (7920, "M11", Kind::M11),
        (9828, "PSL(2,27)", Kind::Psl2 { p: 3, d: 3 }),
    ];
    rows.iter()
        .map(|&(order, name, kind)| CatalogEntry { name: name.to_string(), order, abelian: false, kind })
        .collect()
}

fn primes_up_to(n: u32) -> Vec<u32> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if sieve[p] {
            out.push(p as u32);
            for q in (p * p..=n).step_by(p) {
                sieve[q] = false;
            }
        }
    }
    out
}

/// Every nontrivial simple group of order at most `max_order`, as lazily
/// buildable entries sorted by order. `max_order` must lie in `2..=10080`.
pub fn catalog_entries(max_order: u32) -> Result<Vec<CatalogEntry>> {
    if !(2..=ORDER_CAP).contains(&max_order) {
        return Err(Error::CatalogBound(max_order as u64));
    }
    let mut out: Vec<CatalogEntry> = primes_up_to(max_order)
        .into_iter()
        .map(|p| CatalogEntry { name: format!("C{p}"), order: p, abelian: true, kind: Kind::Cyclic(p) })
        .collect();
    out.extend(nonabelian_entries().into_iter().filter(|e| e.order <= max_order));
    out.sort_by_key(|e| (e.order, e.abelian));
    Ok(out)
}

/// Every nontrivial simple group of order at most `max_order`, with tables
/// fully built, sorted by order. For walks that can stop early (such as
/// quotient detection) prefer [`catalog_entries`] and build one at a time.
pub fn simple_group_catalog(max_order: u32) -> Result<Vec<FiniteGroup>> {
    Ok(catalog_entries(max_order)?.iter().map(CatalogEntry::build).collect())
}

/// Look a group up by catalog display name.
pub(super) fn build_by_name(name: &str) -> Option<FiniteGroup> {
    nonabelian_entries()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.build())
}

/// Alternating group on `m >= 3` points, generated by a 3-cycle and an
/// `m`- or `(m-1)`-cycle depending on parity.
pub(super) fn build_alternating(m: u32) -> FiniteGroup {
    assert!((3..=7).contains(&m), "A{m} table would exceed the order cap");
    let degree = m as usize;
    let three: Vec<u16> = vec![0, 1, 2];
    let long: Vec<u16> = if m % 2 == 1 {
        (0..m as u16).collect()
    } else {
        (1..m as u16).collect()
    };
    let gens = vec![
        perm::from_cycles(degree, &[&three]),
        perm::from_cycles(degree, &[&long]),
    ];
    let order = (2..=m).product::<u32>() / 2;
    FiniteGroup::from_permutations(format!("A{m}"), &gens, order)
}

/// PSL(2, q) for `q = p^d`, acting on the projective line: the points are the
/// field elements `0..q` plus `q` standing for infinity. Generated by the
/// translations `x -> x + b` over a field basis together with `x -> -1/x`;
/// the two root subgroups these produce generate the whole group.
pub(super) fn build_psl2(p: u16, d: u32) -> FiniteGroup {
    let f = SmallField::new(p, d);
    let q = f.q as usize;
    let infinity = q as u16;
    let mut gens: Vec<Perm> = f
        .basis(d)
        .into_iter()
        .map(|b| {
            let mut perm: Perm = (0..f.q).map(|x| f.add(x, b)).collect();
            perm.push(infinity);
            perm
        })
        .collect();
    let mut s: Perm = (0..f.q)
        .map(|x| if x == 0 { infinity } else { f.neg(f.inv(x)) })
        .collect();
    s.push(0);
    gens.push(s);
    let q32 = f.q as u32;
    let order = q32 * (q32 * q32 - 1) / if p == 2 { 1 } else { 2 };
    FiniteGroup::from_permutations(format!("PSL(2,{q32})"), &gens, order)
}

type Mat3 = [[u16; 3]; 3];

fn mat_apply(f: &SmallField, m: &Mat3, v: [u16; 3]) -> [u16; 3] {
    let mut out = [0u16; 3];
    for i in 0..3 {
        for (j, &vj) in v.iter().enumerate() {
            out[i] = f.add(out[i], f.mul(m[i][j], vj));
        }
    }
    out
}

fn normalize(f: &SmallField, v: [u16; 3]) -> [u16; 3] {
    let lead = v.iter().copied().find(|&c| c != 0).expect("zero vector");
    let scale = f.inv(lead);
    [f.mul(scale, v[0]), f.mul(scale, v[1]), f.mul(scale, v[2])]
}

/// Permutations induced by a set of 3x3 matrices on a chosen set of
/// projective points.
fn projective_permutations(f: &SmallField, points: &[[u16; 3]], mats: &[Mat3]) -> Vec<Perm> {
    let index: std::collections::HashMap<[u16; 3], u16> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u16))
        .collect();
    mats.iter()
        .map(|m| {
            points
                .iter()
                .map(|&v| {
                    let image = normalize(f, mat_apply(f, m, v));
                    *index
                        .get(&image)
                        .expect("matrix does not preserve the point set")
                })
                .collect()
        })
        .collect()
}

fn projective_points(f: &SmallField) -> Vec<[u16; 3]> {
    let q = f.q;
    let mut out = Vec::new();
    for x0 in 0..q {
        for x1 in 0..q {
            for x2 in 0..q {
                let v = [x0, x1, x2];
                if v != [0, 0, 0] && normalize(f, v) == v {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// PSL(3,3) on the 13 points of the projective plane over GF(3), generated by
/// the six elementary transvections.
fn build_psl3_3() -> FiniteGroup {
    let f = SmallField::new(3, 1);
    let points = projective_points(&f);
    assert_eq!(points.len(), 13);
    let mut mats = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m: Mat3 = [[0; 3]; 3];
                for (k, row) in m.iter_mut().enumerate() {
                    row[k] = 1;
                }
                m[i][j] = 1;
                mats.push(m);
            }
        }
    }
    let gens = projective_permutations(&f, &points, &mats);
    FiniteGroup::from_permutations("PSL(3,3)", &gens, 5616)
}

/// PSU(3,3) on the 28 isotropic points of the Hermitian form
/// `x0*c(x2) + x1*c(x1) + x2*c(x0)` over GF(9), where `c` is the Frobenius
/// conjugation. Generated by the unipotent root subgroup together with the
/// antidiagonal Weyl element of determinant one.
fn build_psu3_3() -> FiniteGroup {
    let f = SmallField::new(3, 2);
    let conj = |x: u16| f.frobenius(x, 1);
    let herm = |v: [u16; 3]| {
        let mut h = f.mul(v[0], conj(v[2]));
        h = f.add(h, f.mul(v[1], conj(v[1])));
        f.add(h, f.mul(v[2], conj(v[0])))
    };
    let points: Vec<[u16; 3]> = projective_points(&f)
        .into_iter()
        .filter(|&v| herm(v) == 0)
        .collect();
    assert_eq!(points.len(), 28);

    let mut mats = Vec::new();
    // u(a,b) = [[1,a,b],[0,1,-c(a)],[0,0,1]] is unitary iff b + c(b) = -a*c(a).
    for a in 0..f.q {
        for b in 0..f.q {
            if f.add(b, conj(b)) == f.neg(f.mul(a, conj(a))) {
                mats.push([[1, a, b], [0, 1, f.neg(conj(a))], [0, 0, 1]]);
            }
        }
    }
    assert_eq!(mats.len(), 27);
    let neg1 = f.neg(1);
    mats.push([[0, 0, neg1], [0, neg1, 0], [neg1, 0, 0]]);
    let gens = projective_permutations(&f, &points, &mats);
    FiniteGroup::from_permutations("PSU(3,3)", &gens, 6048)
}

/// Mathieu group M11 from its classical generating pair on 11 points.
fn build_m11() -> FiniteGroup {
    let a = perm::from_cycles(11, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]);
    let b = perm::from_cycles(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]]);
    FiniteGroup::from_permutations("M11", &[a, b], 7920)
}
