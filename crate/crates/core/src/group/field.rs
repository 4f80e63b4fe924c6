//! Arithmetic tables for the small finite fields needed to realize the
//! projective and unitary groups in the catalog. Elements of `GF(p^d)` are
//! indexed by the base-`p` digits of their polynomial coordinates, so index 0
//! is zero and index 1 is one.

#[derive(Clone, Debug)]
pub(crate) struct SmallField {
    pub p: u16,
    pub q: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Monic irreducible polynomials used for each extension, low degree first
/// (the leading coefficient 1 is included).
fn modulus(p: u16, d: u32) -> Vec<u16> {
    match (p, d) {
        (2, 3) => vec![1, 1, 0, 1],    // x^3 + x + 1
        (2, 4) => vec![1, 1, 0, 0, 1], // x^4 + x + 1
        (3, 2) => vec![1, 0, 1],       // x^2 + 1
        (3, 3) => vec![1, 2, 0, 1],    // x^3 + 2x + 1
        (5, 2) => vec![1, 1, 1],       // x^2 + x + 1
        _ => panic!("no modulus recorded for GF({p}^{d})"),
    }
}

fn digits(mut x: u16, p: u16, d: u32) -> Vec<u16> {
    let mut out = vec![0u16; d as usize];
    for slot in out.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    out
}

fn undigits(coeffs: &[u16], p: u16) -> u16 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mul_mod(a: &[u16], b: &[u16], m: &[u16], p: u16) -> Vec<u16> {
    let d = m.len() - 1;
    let mut prod = vec![0u16; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // Reduce modulo the monic m by eliminating leading coefficients.
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c != 0 {
            prod[k] = 0;
            for (t, &mt) in m.iter().enumerate().take(d) {
                let idx = k - d + t;
                prod[idx] = (prod[idx] + c * (p - mt % p) % p) % p;
            }
        }
    }
    prod.truncate(d);
    prod
}

impl SmallField {
    /// Build `GF(p^d)` with full lookup tables; intended for `q <= 32`.
    pub fn new(p: u16, d: u32) -> SmallField {
        let q = p.pow(d);
        assert!(q <= 64, "field too large for table construction");
        let m = if d == 1 { vec![0, 1] } else { modulus(p, d) };
        let mut add = vec![0u16; (q as usize) * (q as usize)];
        let mut mul = vec![0u16; (q as usize) * (q as usize)];
        let mut neg = vec![0u16; q as usize];
        for a in 0..q {
            let da = digits(a, p, d);
            let negd: Vec<u16> = da.iter().map(|&c| (p - c) % p).collect();
            neg[a as usize] = undigits(&negd, p);
            for b in 0..q {
                let db = digits(b, p, d);
                let sum: Vec<u16> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[(a as usize) * (q as usize) + b as usize] = undigits(&sum, p);
                let prod = poly_mul_mod(&da, &db, &m, p);
                mul[(a as usize) * (q as usize) + b as usize] = undigits(&prod, p);
            }
        }
        let mut inv = vec![0u16; q as usize];
        for a in 1..q {
            for b in 1..q {
                if mul[(a as usize) * (q as usize) + b as usize] == 1 {
                    inv[a as usize] = b;
                    break;
                }
            }
            assert_ne!(inv[a as usize], 0, "GF({p}^{d}) modulus is not irreducible");
        }
        SmallField { p, q, add, mul, neg, inv }
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[(a as usize) * (self.q as usize) + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[(a as usize) * (self.q as usize) + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        debug_assert_ne!(a, 0);
        self.inv[a as usize]
    }

    /// Frobenius power `a^(p^k)`.
    pub fn frobenius(&self, a: u16, k: u32) -> u16 {
        let mut out = a;
        for _ in 0..k {
            let mut pw = 1u16;
            for _ in 0..self.p {
                pw = self.mul(pw, out);
            }
            out = pw;
        }
        out
    }

    /// A generator of the multiplicative group.
    #[cfg(test)]
    pub fn primitive_element(&self) -> u16 {
        'cand: for g in 2..self.q {
            let mut x = g;
            for _ in 1..self.q - 2 {
                x = self.mul(x, g);
                if x == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        // q = 2 or 3: 1 resp. 2 generates.
        self.q - 1
    }

    /// Successive powers `g^0 .. g^(d-1)` of `x`, i.e. a spanning set of the
    /// field over its prime subfield when `x` is the canonical generator `p`.
    pub fn basis(&self, d: u32) -> Vec<u16> {
        // The residue class of x itself has index p (digits 0,1,0,..).
        let x = if d == 1 { 1 } else { self.p };
        let mut out = vec![1u16];
        for _ in 1..d {
            out.push(self.mul(*out.last().unwrap(), x));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(f: &SmallField) {
        let q = f.q;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn fields_satisfy_axioms() {
        for (p, d) in [(7u16, 1u32), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3)] {
            check_field_axioms(&SmallField::new(p, d));
        }
    }

    #[test]
    fn frobenius_is_cube_on_gf9() {
        let f = SmallField::new(3, 2);
        for a in 0..9 {
            let cube = f.mul(a, f.mul(a, a));
            assert_eq!(f.frobenius(a, 1), cube);
        }
    }

    #[test]
    fn primitive_element_has_full_order() {
        for (p, d) in [(13u16, 1u32), (2, 4), (5, 2)] {
            let f = SmallField::new(p, d);
            let g = f.primitive_element();
            let mut x = g;
            let mut order = 1;
            while x != 1 {
                x = f.mul(x, g);
                order += 1;
            }
            assert_eq!(order, (f.q - 1) as u32);
        }
    }
}
