//! Bruhat decomposition `g = u h n_w u'` over a field by elimination from
//! the last row upward.

use super::matrix::{self, RingMatrix};
use super::realization::{Evaluator, SlnRealization};
use crate::arith::ring::Ring;
use crate::error::{invalid, Result};
use crate::tits::ExtWeylElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatFactors<E> {
    /// Upper unitriangular.
    pub u: RingMatrix<E>,
    /// Diagonal.
    pub h: RingMatrix<E>,
    pub w: usize,
    /// In `U_w`: coordinates vanish outside `Phi_w`.
    pub u_prime: RingMatrix<E>,
}

pub fn bruhat_decompose<R: Ring + Clone>(
    sl: &SlnRealization<R>,
    g: &RingMatrix<R::Elem>,
) -> Result<BruhatFactors<R::Elem>> {
    let ring = sl.ring();
    let n = sl.dim();
    let mut a = g.clone();
    let mut u = sl.identity();
    let mut up = sl.identity();
    for i in (0..n).rev() {
        let Some(p) = (0..n).find(|&j| !ring.is_zero(&a[i][j])) else {
            return invalid("singular matrix");
        };
        let Some(piv_inv) = ring.inv(&a[i][p]) else {
            return invalid("pivot is not invertible");
        };
        // column operations clear row i to the right of the pivot
        for j in p + 1..n {
            let c = ring.mul(&a[i][j], &piv_inv);
            if ring.is_zero(&c) {
                continue;
            }
            for row in a.iter_mut() {
                row[j] = ring.sub(&row[j], &ring.mul(&c, &row[p]));
            }
            // u' <- (I + c E_pj) u'
            let add: Vec<R::Elem> = up[j].iter().map(|x| ring.mul(&c, x)).collect();
            for (x, y) in up[p].iter_mut().zip(&add) {
                *x = ring.add(x, y);
            }
        }
        // row operations clear column p above the pivot
        for k in 0..i {
            let c = ring.mul(&a[k][p], &piv_inv);
            if ring.is_zero(&c) {
                continue;
            }
            let sub: Vec<R::Elem> = a[i].iter().map(|x| ring.mul(&c, x)).collect();
            for (x, y) in a[k].iter_mut().zip(&sub) {
                *x = ring.sub(x, y);
            }
            // u <- u (I + c E_ki)
            for row in u.iter_mut() {
                let extra = ring.mul(&row[k], &c);
                row[i] = ring.add(&row[i], &extra);
            }
        }
    }
    let Some(w) = sl.weyl_from_pattern(&a) else {
        return invalid("elimination did not reach a monomial matrix");
    };
    let h = matrix::mul(ring, &a, &matrix::transpose(sl.weyl_lift(w)));
    if !matrix::is_diagonal(ring, &h) {
        return invalid("monomial part is not h n_w");
    }
    Ok(BruhatFactors { u, h, w, u_prime: up })
}

impl<E: Clone> BruhatFactors<E> {
    pub fn reconstruct<R: Ring<Elem = E> + Clone>(&self, sl: &SlnRealization<R>) -> RingMatrix<E> {
        let uh = sl.mul(&self.u, &self.h);
        sl.mul(&sl.mul(&uh, sl.weyl_lift(self.w)), &self.u_prime)
    }
}

/// Coordinates of `g` under `e_G`: `(a, n, b)` with `psi(a) e_N(n) psi_w(b) = g`.
pub fn invert_e_g<R: Ring + Clone>(
    ev: &Evaluator<R>,
    g: &RingMatrix<R::Elem>,
) -> Result<(Vec<R::Elem>, ExtWeylElement, Vec<R::Elem>)> {
    let sl = ev.realization();
    let f = bruhat_decompose(sl, g)?;
    let a = sl.extract_psi(&f.u).ok_or_else(|| crate::Error::Invalid("u is not unipotent".into()))?;
    let b = sl
        .extract_psi_w(f.w, &f.u_prime)
        .ok_or_else(|| crate::Error::Invalid("u' is not in U_w".into()))?;
    let t = ev
        .torus_from_diagonal(&f.h)
        .ok_or_else(|| crate::Error::Invalid("diagonal is not in the torus image".into()))?;
    Ok((a, ExtWeylElement { t, w: f.w }, b))
}

/// `g = u n v` with `n` over the longest element, when `g` lies in the big cell.
pub fn big_cell_factor<R: Ring + Clone>(
    sl: &SlnRealization<R>,
    g: &RingMatrix<R::Elem>,
) -> Result<Option<(RingMatrix<R::Elem>, RingMatrix<R::Elem>, RingMatrix<R::Elem>)>> {
    let f = bruhat_decompose(sl, g)?;
    if f.w != sl.weyl().longest_element() {
        return Ok(None);
    }
    let n = sl.mul(&f.h, sl.weyl_lift(f.w));
    Ok(Some((f.u, n, f.u_prime)))
}
