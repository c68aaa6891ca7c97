//! `SL_{l+1}` as the Chevalley group of type `A_l`: `x_r(t) = I + t E_ij`
//! for `r = e_i - e_j`.

use std::collections::HashMap;

use super::matrix::{self, RingMatrix};
use crate::arith::group::{GroupElem, PointedAbelianGroup};
use crate::arith::ring::Ring;
use crate::error::{invalid, Error, Result};
use crate::roots::{parse_root_system, LatticeKind, RootSystem};
use crate::tits::{ExtWeylElement, TitsGroup, TorusPoint};
use crate::weyl::{weyl_enumerate, WeylGroup, DEFAULT_WEYL_CAP};

#[derive(Clone, Debug)]
pub struct SlnRealization<R: Ring> {
    ring: R,
    weyl: WeylGroup,
    pairs: Vec<(usize, usize)>,
    /// `n_w`, the product of `n_{a_i}(1)` along the stored word of `w`.
    lifts: Vec<RingMatrix<R::Elem>>,
}

impl<R: Ring + Clone> SlnRealization<R> {
    pub fn new(rank: usize, ring: R) -> Result<Self> {
        Self::from_root_system(&parse_root_system(&format!("A{rank}"))?, ring)
    }

    pub fn from_root_system(rs: &RootSystem, ring: R) -> Result<Self> {
        if rs.lattice() != LatticeKind::SimplyConnected || rs.diagonal_characters().is_none() {
            return Err(Error::Unsupported(format!(
                "matrix realization exists only for simply connected type A, not {rs}"
            )));
        }
        let weyl = weyl_enumerate(rs, DEFAULT_WEYL_CAP)?;
        let pairs = (0..rs.num_roots()).map(|r| rs.type_a_pair(r).expect("type A")).collect();
        let mut sl = SlnRealization { ring, weyl, pairs, lifts: Vec::new() };
        let simple: Vec<_> = (0..rs.rank())
            .map(|i| sl.n_r(i, &sl.ring.one()).expect("1 is a unit"))
            .collect();
        sl.lifts = sl
            .weyl
            .elements()
            .iter()
            .map(|w| matrix::product(&sl.ring, sl.dim(), w.word().iter().map(|&i| &simple[i])))
            .collect();
        Ok(sl)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn root_system(&self) -> &RootSystem {
        self.weyl.root_system()
    }

    pub fn dim(&self) -> usize {
        self.root_system().rank() + 1
    }

    pub fn identity(&self) -> RingMatrix<R::Elem> {
        matrix::identity(&self.ring, self.dim())
    }

    pub fn mul(&self, a: &RingMatrix<R::Elem>, b: &RingMatrix<R::Elem>) -> RingMatrix<R::Elem> {
        matrix::mul(&self.ring, a, b)
    }

    /// `(i, j)` with `r = e_i - e_j`.
    pub fn pair(&self, r: usize) -> (usize, usize) {
        self.pairs[r]
    }

    pub fn x_r(&self, r: usize, t: &R::Elem) -> RingMatrix<R::Elem> {
        let (i, j) = self.pairs[r];
        let mut m = self.identity();
        m[i][j] = t.clone();
        m
    }

    /// `n_r(t) = x_r(t) x_{-r}(-t^{-1}) x_r(t)`
    pub fn n_r(&self, r: usize, t: &R::Elem) -> Result<RingMatrix<R::Elem>> {
        let ti = self
            .ring
            .inv(t)
            .ok_or_else(|| Error::Invalid(format!("{t:?} is not invertible")))?;
        let neg = self.root_system().neg(r);
        let x = self.x_r(r, t);
        Ok(self.mul(&self.mul(&x, &self.x_r(neg, &self.ring.neg(&ti))), &x))
    }

    /// `h_r(t) = n_r(t) n_r(-1)`
    pub fn h_r(&self, r: usize, t: &R::Elem) -> Result<RingMatrix<R::Elem>> {
        let m1 = self.ring.neg(&self.ring.one());
        Ok(self.mul(&self.n_r(r, t)?, &self.n_r(r, &m1)?))
    }

    /// Product of `x_r(t_r)` over `roots` in the given order.
    pub fn product_over(&self, roots: &[usize], coords: &[R::Elem]) -> RingMatrix<R::Elem> {
        assert_eq!(roots.len(), coords.len());
        roots
            .iter()
            .zip(coords)
            .fold(self.identity(), |acc, (&r, t)| self.mul(&acc, &self.x_r(r, t)))
    }

    /// `psi(t) = prod_{r > 0} x_r(t_r)` in increasing root order.
    pub fn psi(&self, coords: &[R::Elem]) -> RingMatrix<R::Elem> {
        let roots: Vec<usize> = self.root_system().positive_roots().collect();
        self.product_over(&roots, coords)
    }

    /// `psi_w(t) = prod_{r in Phi_w} x_r(t_r)` in increasing root order.
    pub fn psi_w(&self, w: usize, coords: &[R::Elem]) -> RingMatrix<R::Elem> {
        self.product_over(&self.weyl.inversion_set(w), coords)
    }

    /// Recovers the coordinates of a product over `roots` (increasing order)
    /// by peeling factors off from the left; `None` when the matrix is not
    /// such a product.
    pub fn extract(&self, u: &RingMatrix<R::Elem>, roots: &[usize]) -> Option<Vec<R::Elem>> {
        let mut residual = u.clone();
        let mut out = Vec::with_capacity(roots.len());
        for &r in roots {
            let (i, j) = self.pairs[r];
            let t = residual[i][j].clone();
            residual = self.mul(&self.x_r(r, &self.ring.neg(&t)), &residual);
            out.push(t);
        }
        (residual == self.identity()).then_some(out)
    }

    pub fn extract_psi(&self, u: &RingMatrix<R::Elem>) -> Option<Vec<R::Elem>> {
        let roots: Vec<usize> = self.root_system().positive_roots().collect();
        self.extract(u, &roots)
    }

    pub fn extract_psi_w(&self, w: usize, u: &RingMatrix<R::Elem>) -> Option<Vec<R::Elem>> {
        self.extract(u, &self.weyl.inversion_set(w))
    }

    /// `n_w` as a signed permutation matrix.
    pub fn weyl_lift(&self, w: usize) -> &RingMatrix<R::Elem> {
        &self.lifts[w]
    }

    /// The Weyl element whose lift has the same support as `m`.
    pub fn weyl_from_pattern(&self, m: &RingMatrix<R::Elem>) -> Option<usize> {
        let support = |a: &RingMatrix<R::Elem>| -> Vec<Vec<bool>> {
            a.iter().map(|row| row.iter().map(|x| !self.ring.is_zero(x)).collect()).collect()
        };
        let target = support(m);
        self.lifts.iter().position(|l| support(l) == target)
    }
}

/// Evaluation of abstract points as matrices, given the images of the
/// elements of `D` as units of the ring.
#[derive(Clone, Debug)]
pub struct Evaluator<R: Ring> {
    sl: SlnRealization<R>,
    tits: TitsGroup,
    units: Vec<R::Elem>,
    unit_index: HashMap<R::Elem, GroupElem>,
}

impl<R: Ring + Clone> Evaluator<R> {
    /// `units[g]` is the image of `g in D`; it must be a homomorphism into
    /// the unit group.
    pub fn new(sl: SlnRealization<R>, d: &PointedAbelianGroup, units: Vec<R::Elem>) -> Result<Self> {
        if units.len() != d.order() {
            return invalid("one unit per element of D required");
        }
        let ring = sl.ring();
        for a in d.elements() {
            for b in d.elements() {
                if units[d.add(a, b)] != ring.mul(&units[a], &units[b]) {
                    return invalid("unit images are not multiplicative");
                }
            }
        }
        let tits = TitsGroup::from_weyl(sl.weyl().clone(), d);
        let unit_index = units.iter().cloned().enumerate().map(|(g, u)| (u, g)).collect();
        Ok(Evaluator { sl, tits, units, unit_index })
    }

    pub fn realization(&self) -> &SlnRealization<R> {
        &self.sl
    }

    pub fn tits(&self) -> &TitsGroup {
        &self.tits
    }

    pub fn ring(&self) -> &R {
        self.sl.ring()
    }

    pub fn unit(&self, g: GroupElem) -> &R::Elem {
        &self.units[g]
    }

    /// `0` for `None`, the unit image otherwise.
    pub fn coordinate(&self, x: Option<GroupElem>) -> R::Elem {
        x.map_or_else(|| self.ring().zero(), |g| self.units[g].clone())
    }

    /// `diag(t(e_1), ..., t(e_{l+1}))`
    pub fn torus_matrix(&self, t: &TorusPoint) -> RingMatrix<R::Elem> {
        let d = self.tits.group();
        let e = self.sl.root_system().diagonal_characters().expect("type A");
        let mut m = self.sl.identity();
        for (i, ei) in e.iter().enumerate() {
            let v = ei
                .iter()
                .zip(t)
                .fold(d.zero(), |acc, (&k, &x)| d.add(acc, d.scale(x, k)));
            m[i][i] = self.units[v].clone();
        }
        m
    }

    /// The torus point with the given diagonal, on the fundamental-weight
    /// basis: `t(w_k) = d_1 ... d_k`.
    pub fn torus_from_diagonal(&self, h: &RingMatrix<R::Elem>) -> Option<TorusPoint> {
        let ring = self.ring();
        let mut acc = ring.one();
        let mut t = Vec::with_capacity(self.sl.root_system().rank());
        for (k, row) in h.iter().enumerate().take(self.sl.root_system().rank()) {
            acc = ring.mul(&acc, &row[k]);
            t.push(*self.unit_index.get(&acc)?);
        }
        (self.torus_matrix(&t) == *h).then_some(t)
    }

    /// `e_N((t, w)) = diag(t) n_w`
    pub fn e_n(&self, n: &ExtWeylElement) -> RingMatrix<R::Elem> {
        self.sl.mul(&self.torus_matrix(&n.t), self.sl.weyl_lift(n.w))
    }

    /// `e_G(a, n, b) = psi(a) e_N(n) psi_w(b)` with ring coordinates.
    pub fn e_g(&self, a: &[R::Elem], n: &ExtWeylElement, b: &[R::Elem]) -> RingMatrix<R::Elem> {
        let left = self.sl.mul(&self.sl.psi(a), &self.e_n(n));
        self.sl.mul(&left, &self.sl.psi_w(n.w, b))
    }

    /// `e_G` on a graded point: absent coordinates become `0`.
    pub fn e_g_graded(&self, a: &[Option<GroupElem>], n: &ExtWeylElement, b: &[Option<GroupElem>]) -> RingMatrix<R::Elem> {
        let a: Vec<_> = a.iter().map(|&x| self.coordinate(x)).collect();
        let b: Vec<_> = b.iter().map(|&x| self.coordinate(x)).collect();
        self.e_g(&a, n, &b)
    }
}
