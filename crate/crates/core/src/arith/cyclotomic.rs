//! Cyclotomic integers `Z[zeta_m] = Z[x] / Phi_m(x)`, the exact home of
//! character values and of matrices evaluated through a character.

use super::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicRing {
    m: u64,
    /// Monic `Phi_m`, coefficients low to high.
    phi: Vec<i64>,
}

/// Reduced coefficient vector of length `phi(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloElem(Vec<i64>);

impl CycloElem {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

/// `Phi_n` with integer coefficients, low to high.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        poly = exact_div(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

impl CyclotomicRing {
    pub fn new(m: u64) -> Self {
        CyclotomicRing {
            m: m.max(1),
            phi: cyclotomic_polynomial(m.max(1)),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduces an arbitrary polynomial in `zeta`.
    pub fn reduce(&self, poly: &[i64]) -> CycloElem {
        let m = self.m as usize;
        let mut folded = vec![0i64; m];
        for (i, &c) in poly.iter().enumerate() {
            folded[i % m] += c;
        }
        let deg = self.degree();
        for i in (deg..folded.len()).rev() {
            let c = folded[i];
            if c == 0 {
                continue;
            }
            for (j, &b) in self.phi.iter().enumerate() {
                folded[i - deg + j] -= c * b;
            }
        }
        folded.truncate(deg);
        CycloElem(folded)
    }

    /// `zeta^k`.
    pub fn root(&self, k: i64) -> CycloElem {
        let e = k.rem_euclid(self.m as i64) as usize;
        let mut poly = vec![0i64; e + 1];
        poly[e] = 1;
        self.reduce(&poly)
    }
}

impl Ring for CyclotomicRing {
    type Elem = CycloElem;

    fn zero(&self) -> CycloElem {
        CycloElem(vec![0; self.degree()])
    }

    fn one(&self) -> CycloElem {
        self.root(0)
    }

    fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().map(|x| -x).collect())
    }

    fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        let mut prod = vec![0i64; a.0.len() + b.0.len()];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce(&prod)
    }

    /// Inverts `+-zeta^k` only.
    fn inv(&self, a: &CycloElem) -> Option<CycloElem> {
        (0..self.m as i64).find_map(|k| {
            let z = self.root(k);
            if *a == z {
                Some(self.root(-k))
            } else if *a == self.neg(&z) {
                Some(self.neg(&self.root(-k)))
            } else {
                None
            }
        })
    }

    fn from_int(&self, k: i64) -> CycloElem {
        let mut x = self.zero();
        x.0[0] = k;
        x
    }
}
