//! Small finite fields `GF(p^k)` with `q <= 81`, backed by full operation
//! tables.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` is the reduced polynomial
//! representative modulo the stored irreducible polynomial.

use super::ring::Ring;
use crate::error::{Error, Result};

pub type FieldElem = u32;

/// Irreducible moduli for the non-prime fields, coefficients low to high.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<FieldElem>,
    mul: Vec<FieldElem>,
    neg: Vec<FieldElem>,
    inv: Vec<Option<FieldElem>>,
}

/// Builds `GF(p^k)`.
pub fn gf_make(p: u32, k: u32) -> Result<FiniteField> {
    FiniteField::new(p, k)
}

impl FiniteField {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if !SUPPORTED_PRIMES.contains(&p) || k == 0 {
            return Err(Error::Unsupported(format!("field GF({p}^{k}) is out of range")));
        }
        let q = p.checked_pow(k).filter(|&q| q <= 81).ok_or_else(|| {
            Error::Unsupported(format!("field GF({p}^{k}) is out of range (q <= 81)"))
        })?;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(mp, mk, _)| *mp == p && *mk == k)
                .map(|(_, _, m)| m.to_vec())
                .ok_or_else(|| {
                    Error::Unsupported(format!("no irreducible polynomial stored for q = {q}"))
                })?
        };
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    /// Builds the field of order `q`, if `q` is a supported prime power.
    pub fn of_order(q: u32) -> Result<Self> {
        for &p in &SUPPORTED_PRIMES {
            let mut k = 0;
            let mut x = q;
            while x > 1 && x % p == 0 {
                x /= p;
                k += 1;
            }
            if x == 1 && k > 0 {
                return Self::new(p, k);
            }
        }
        Err(Error::Unsupported(format!("{q} is not a supported prime power")))
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        self.add = vec![0; q * q];
        self.mul = vec![0; q * q];
        self.neg = vec![0; q];
        self.inv = vec![None; q];
        for a in 0..q {
            let ca = self.coeffs(a as u32);
            self.neg[a] = self.encode(&ca.iter().map(|&c| (self.p - c) % self.p).collect::<Vec<_>>());
            for b in 0..q {
                let cb = self.coeffs(b as u32);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
                self.add[a * q + b] = self.encode(&sum);
                self.mul[a * q + b] = self.encode(&self.poly_mul_mod(&ca, &cb));
            }
        }
        for a in 1..q {
            self.inv[a] = (1..q).find(|&b| self.mul[a * q + b] == 1).map(|b| b as u32);
        }
    }

    fn poly_mul_mod(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce from the top using the monic modulus
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m) % p;
            }
        }
        prod.truncate(k);
        prod
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus polynomial, coefficients low to high (monic, degree `k`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Coefficient vector (low to high, length `k`) of an element.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        let mut x = a;
        (0..self.k)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    pub fn encode(&self, coeffs: &[u32]) -> FieldElem {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    /// The class of `x` in the polynomial representation.
    pub fn generator(&self) -> FieldElem {
        if self.k == 1 {
            // For prime fields the polynomial generator is meaningless; return a primitive root.
            self.primitive_element()
        } else {
            self.p
        }
    }

    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(&a, self.p as u64)
    }

    /// Smallest (by encoding) generator of the cyclic group `F_q^*`.
    pub fn primitive_element(&self) -> FieldElem {
        let n = (self.q - 1) as u64;
        (1..self.q)
            .find(|&g| self.multiplicative_order(g) == Some(n))
            .expect("F_q^* is cyclic")
    }

    pub fn multiplicative_order(&self, a: FieldElem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(&x, &a);
            n += 1;
        }
        Some(n)
    }

    pub fn format_elem(&self, a: FieldElem) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl Ring for FiniteField {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        0
    }

    fn one(&self) -> FieldElem {
        1
    }

    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add[(*a * self.q + *b) as usize]
    }

    fn neg(&self, a: &FieldElem) -> FieldElem {
        self.neg[*a as usize]
    }

    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul[(*a * self.q + *b) as usize]
    }

    fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        self.inv[*a as usize]
    }

    fn from_int(&self, k: i64) -> FieldElem {
        k.rem_euclid(self.p as i64) as FieldElem
    }

    fn elements(&self) -> Option<Vec<FieldElem>> {
        Some((0..self.q).collect())
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDERS: [u32; 14] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81, 2, 3];

    #[test]
    fn prime_field_examples() {
        let f2 = gf_make(2, 1).unwrap();
        assert_eq!(f2.elements().unwrap(), vec![0, 1]);
        assert_eq!(f2.add(&1, &1), 0);
        let f3 = gf_make(3, 1).unwrap();
        assert_eq!(f3.mul(&2, &2), 1);
    }

    #[test]
    fn gf4_generator_squares_to_g_plus_one() {
        let f4 = gf_make(2, 2).unwrap();
        let g = f4.generator();
        assert_eq!(f4.mul(&g, &g), f4.add(&g, &1));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(gf_make(4, 1), Err(Error::Invalid(_))));
        assert!(gf_make(2, 7).is_err());
        assert!(gf_make(11, 1).is_err());
        assert!(gf_make(3, 5).is_err());
        assert!(gf_make(2, 0).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &q in &ORDERS {
            let f = FiniteField::of_order(q).unwrap();
            let els = f.elements().unwrap();
            for &a in &els {
                assert_eq!(f.add(&a, &f.neg(&a)), 0);
                if a != 0 {
                    let inv = f.inv(&a).unwrap_or_else(|| panic!("q={q}: {a} has no inverse"));
                    assert_eq!(f.mul(&a, &inv), 1);
                }
                for &b in &els {
                    assert_eq!(f.add(&a, &b), f.add(&b, &a));
                    assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
                    // Frobenius is additive
                    assert_eq!(f.frobenius(f.add(&a, &b)), f.add(&f.frobenius(a), &f.frobenius(b)));
                    for &c in &els {
                        assert_eq!(f.mul(&a, &f.mul(&b, &c)), f.mul(&f.mul(&a, &b), &c));
                        assert_eq!(f.add(&a, &f.add(&b, &c)), f.add(&f.add(&a, &b), &c));
                        assert_eq!(
                            f.mul(&a, &f.add(&b, &c)),
                            f.add(&f.mul(&a, &b), &f.mul(&a, &c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_element_generates() {
        for &q in &ORDERS {
            let f = FiniteField::of_order(q).unwrap();
            let g = f.primitive_element();
            assert_eq!(f.multiplicative_order(g), Some((q - 1) as u64));
        }
    }
}
