//! Closure of permutation generators and flattening into dense multiplication
//! tables. Permutations act on `0..degree` and compose left-to-right as
//! functions: `(a * b)(x) = a(b(x))`.

use std::collections::HashMap;

pub(crate) type Perm = Vec<u16>;

pub(crate) fn identity(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

pub(crate) fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub(crate) fn from_cycles(degree: usize, cycles: &[&[u16]]) -> Perm {
    let mut p = identity(degree);
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            p[x as usize] = cycle[(i + 1) % cycle.len()];
        }
    }
    p
}

/// Result of a BFS closure: every element of the generated group, identity
/// first in discovery order, plus for each non-identity element the index of
/// its BFS parent and the generator that produced it (`elem = parent * gen`).
pub(crate) struct Closure {
    pub perms: Vec<Perm>,
    pub parent: Vec<u32>,
    pub via_gen: Vec<u32>,
}

/// Breadth-first closure of a generator set, capped at `cap` elements.
pub(crate) fn close(generators: &[Perm], cap: usize) -> Closure {
    let degree = generators
        .first()
        .map(|g| g.len())
        .expect("at least one generator");
    let id = identity(degree);
    let mut index: HashMap<Perm, u32> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut perms = vec![id];
    let mut parent = vec![0u32];
    let mut via_gen = vec![0u32];
    let mut head = 0;
    while head < perms.len() {
        let current = perms[head].clone();
        for (gi, g) in generators.iter().enumerate() {
            let next = compose(&current, g);
            if !index.contains_key(&next) {
                assert!(perms.len() < cap, "closure exceeded cap {cap}");
                index.insert(next.clone(), perms.len() as u32);
                perms.push(next);
                parent.push(head as u32);
                via_gen.push(gi as u32);
            }
        }
        head += 1;
    }
    Closure { perms, parent, via_gen }
}

/// Flatten a closed permutation group into a dense multiplication table over
/// element indices (identity is index 0).
///
/// Only the generator columns are computed by explicit composition; every
/// other column `b = parent(b) * gen(b)` follows by one table chase, so the
/// whole table costs `O(order^2)` lookups rather than `O(order^2 * degree)`
/// compositions.
pub(crate) fn multiplication_table(closure: &Closure) -> Vec<u16> {
    let order = closure.perms.len();
    let index: HashMap<&Perm, u32> = closure
        .perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i as u32))
        .collect();

    // Element index of each generator; these are exactly the BFS children of
    // the identity, so their columns precede every parent != 0 column.
    let mut gen_elem: HashMap<u32, usize> = HashMap::new();
    for b in 1..order {
        if closure.parent[b] == 0 {
            gen_elem.insert(closure.via_gen[b], b);
        }
    }

    let mut table = vec![u16::MAX; order * order];
    for b in 0..order {
        table[b] = b as u16; // identity row
        table[b * order] = b as u16; // identity column
    }
    for b in 1..order {
        let parent = closure.parent[b] as usize;
        if parent == 0 {
            // b is itself a generator image: compute its column directly.
            for a in 1..order {
                let prod = compose(&closure.perms[a], &closure.perms[b]);
                table[a * order + b] = index[&prod] as u16;
            }
        } else {
            // a * b = (a * parent) * gen, and gen's column is already filled.
            let g = gen_elem[&closure.via_gen[b]];
            for a in 1..order {
                let ap = table[a * order + parent] as usize;
                table[a * order + b] = table[ap * order + g];
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_three_cycle() {
        let g = from_cycles(3, &[&[0, 1, 2]]);
        let c = close(&[g], 100);
        assert_eq!(c.perms.len(), 3);
    }

    #[test]
    fn s3_table_matches_direct_composition() {
        let a = from_cycles(3, &[&[0, 1]]);
        let b = from_cycles(3, &[&[0, 1, 2]]);
        let c = close(&[a, b], 100);
        assert_eq!(c.perms.len(), 6);
        let table = multiplication_table(&c);
        for i in 0..6 {
            for j in 0..6 {
                let direct = compose(&c.perms[i], &c.perms[j]);
                let via = table[i * 6 + j] as usize;
                assert_eq!(c.perms[via], direct);
            }
        }
    }
}
