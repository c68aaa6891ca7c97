//! Commutator constants `C_ijrs` read off from a symbolic matrix identity
//! over `Z[t, u]`.

use super::realization::SlnRealization;
use crate::arith::ring::Ring;
use crate::error::{invalid, Result};
use crate::roots::RootSystem;

/// Dense polynomials in `t, u` with total degree per variable at most `CAP`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BivariateRing;

pub const CAP: usize = 4;
const W: usize = CAP + 1;

/// `coeffs[i * (CAP + 1) + j]` is the coefficient of `t^i u^j`.
pub type BiPoly = Vec<i64>;

impl BivariateRing {
    pub fn monomial(&self, c: i64, i: usize, j: usize) -> BiPoly {
        let mut p = vec![0; W * W];
        p[i * W + j] = c;
        p
    }

    pub fn t(&self) -> BiPoly {
        self.monomial(1, 1, 0)
    }

    pub fn u(&self) -> BiPoly {
        self.monomial(1, 0, 1)
    }

    pub fn coeff(&self, p: &BiPoly, i: usize, j: usize) -> i64 {
        p[i * W + j]
    }

    /// Substitutes `t, u` in a ring `R`.
    pub fn eval<R: Ring>(&self, ring: &R, p: &BiPoly, t: &R::Elem, u: &R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        for i in 0..W {
            for j in 0..W {
                let c = p[i * W + j];
                if c != 0 {
                    let m = ring.mul(&ring.pow(t, i as u64), &ring.pow(u, j as u64));
                    acc = ring.add(&acc, &ring.mul(&ring.from_int(c), &m));
                }
            }
        }
        acc
    }
}

impl Ring for BivariateRing {
    type Elem = BiPoly;

    fn zero(&self) -> BiPoly {
        vec![0; W * W]
    }

    fn one(&self) -> BiPoly {
        self.monomial(1, 0, 0)
    }

    fn add(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(&self, a: &BiPoly) -> BiPoly {
        a.iter().map(|x| -x).collect()
    }

    /// Panics if a product exceeds the degree cap.
    fn mul(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        let mut out = vec![0; W * W];
        for (ka, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (kb, &y) in b.iter().enumerate().filter(|(_, &y)| y != 0) {
                let (i, j) = (ka / W + kb / W, ka % W + kb % W);
                assert!(i < W && j < W, "degree cap {CAP} exceeded");
                out[i * W + j] += x * y;
            }
        }
        out
    }

    fn inv(&self, a: &BiPoly) -> Option<BiPoly> {
        if *a == self.one() || *a == self.neg(&self.one()) {
            Some(a.clone())
        } else {
            None
        }
    }

    fn from_int(&self, k: i64) -> BiPoly {
        self.monomial(k, 0, 0)
    }
}

/// `(i, j, C_ij)` with
/// `x_s(u)^{-1} x_r(t) x_s(u) x_r(t)^{-1} = prod x_{ir+js}(C_ij t^i u^j)`,
/// the product taken in increasing `i + j`.
pub fn commutator_constants(rs: &RootSystem, r: usize, s: usize) -> Result<Vec<(u32, u32, i64)>> {
    if s == r || s == rs.neg(r) {
        return invalid("roots must be linearly independent");
    }
    let sl = SlnRealization::from_root_system(rs, BivariateRing)?;
    let z = BivariateRing;
    let (t, u) = (z.t(), z.u());
    let lhs = commutator(&sl, r, s, &t, &u);
    let mut residual = lhs;
    let mut out = Vec::new();
    let mut candidates: Vec<(u32, u32, usize)> = Vec::new();
    for i in 1..=3u32 {
        for j in 1..=3u32 {
            let v: Vec<i64> = rs
                .root(r)
                .iter()
                .zip(rs.root(s))
                .map(|(a, b)| i as i64 * a + j as i64 * b)
                .collect();
            if let Some(k) = rs.index_of(&v) {
                candidates.push((i, j, k));
            }
        }
    }
    candidates.sort_by_key(|&(i, j, _)| (i + j, i));
    for (i, j, k) in candidates {
        let (a, b) = sl.pair(k);
        let c = z.coeff(&residual[a][b], i as usize, j as usize);
        if c != 0 {
            let term = z.monomial(c, i as usize, j as usize);
            residual = sl.mul(&sl.x_r(k, &z.neg(&term)), &residual);
            out.push((i, j, c));
        }
    }
    if residual != sl.identity() {
        return invalid("commutator is not a product of the expected root elements");
    }
    Ok(out)
}

/// `x_s(u)^{-1} x_r(t) x_s(u) x_r(t)^{-1}`
pub fn commutator<R: Ring + Clone>(
    sl: &SlnRealization<R>,
    r: usize,
    s: usize,
    t: &R::Elem,
    u: &R::Elem,
) -> Vec<Vec<R::Elem>> {
    let ring = sl.ring();
    let m = [
        sl.x_r(s, &ring.neg(u)),
        sl.x_r(r, t),
        sl.x_r(s, u),
        sl.x_r(r, &ring.neg(t)),
    ];
    m.iter().fold(sl.identity(), |acc, x| sl.mul(&acc, x))
}

/// Right-hand side `prod x_{ir+js}(C t^i u^j)` evaluated in `R`.
pub fn commutator_rhs<R: Ring + Clone>(
    sl: &SlnRealization<R>,
    r: usize,
    s: usize,
    constants: &[(u32, u32, i64)],
    t: &R::Elem,
    u: &R::Elem,
) -> Vec<Vec<R::Elem>> {
    let ring = sl.ring();
    let rs = sl.root_system();
    constants.iter().fold(sl.identity(), |acc, &(i, j, c)| {
        let v: Vec<i64> = rs
            .root(r)
            .iter()
            .zip(rs.root(s))
            .map(|(a, b)| i as i64 * a + j as i64 * b)
            .collect();
        let k = rs.index_of(&v).expect("root");
        let coeff = ring.mul(
            &ring.from_int(c),
            &ring.mul(&ring.pow(t, i as u64), &ring.pow(u, j as u64)),
        );
        sl.mul(&acc, &sl.x_r(k, &coeff))
    })
}
