//! Point sets of the basic gadgets: `Spec D`, `G_m`, affine and projective
//! space.

use super::graded::GradedSet;
use super::polynomial::CountingPolynomial;
use crate::arith::character::{Character, RootOfUnity};
use crate::arith::group::{hom_set, GroupElem, GroupHom, PointedAbelianGroup};

/// A point of `({0} u D)^F`: `None` is the zero coordinate.
pub type AffinePoint = Vec<Option<GroupElem>>;

/// `Spec D0 (D) = Hom(D0, D)`, concentrated in degree 0.
pub fn spec_points(d0: &PointedAbelianGroup, d: &PointedAbelianGroup) -> GradedSet<GroupHom> {
    GradedSet::new(hom_set(d0, d).into_iter().map(|f| (0, f)).collect())
}

/// `G_m(D) = D` in degree 1.
pub fn gm_points(d: &PointedAbelianGroup) -> GradedSet<GroupElem> {
    GradedSet::new(d.elements().map(|g| (1, g)).collect())
}

/// Every point of `({0} u D)^f`, in odometer order (last coordinate fastest).
pub(crate) fn all_affine(f: usize, d: &PointedAbelianGroup) -> Vec<AffinePoint> {
    let base = d.order() + 1;
    let mut out = Vec::with_capacity(base.pow(f as u32));
    let mut digits = vec![0usize; f];
    loop {
        out.push(digits.iter().map(|&x| x.checked_sub(1)).collect());
        let mut k = f;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < base {
                break;
            }
            digits[k] = 0;
        }
    }
}

pub fn support_size(x: &[Option<GroupElem>]) -> usize {
    x.iter().filter(|c| c.is_some()).count()
}

/// `A^F(D)`, graded by the size of the support.
pub fn affine_points(f: usize, d: &PointedAbelianGroup) -> GradedSet<AffinePoint> {
    GradedSet::new(all_affine(f, d).into_iter().map(|x| (support_size(&x), x)).collect())
}

/// `P^d(D)`: non-zero points of `A^{d+1}(D)` modulo the diagonal action of
/// `D`, represented by the point whose first non-zero coordinate is the
/// identity; degree is the support size minus one.
pub fn proj_points(dim: usize, d: &PointedAbelianGroup) -> GradedSet<AffinePoint> {
    GradedSet::new(
        all_affine(dim + 1, d)
            .into_iter()
            .filter(|x| x.iter().flatten().next() == Some(&d.zero()))
            .map(|x| (support_size(&x) - 1, x))
            .collect(),
    )
}

/// `e_F`: coordinates `chi(g_j)` on the support and `0` (here `None`) off it.
pub fn e_f(chi: &Character, x: &[Option<GroupElem>]) -> Vec<Option<RootOfUnity>> {
    x.iter().map(|c| c.map(|g| chi.eval(g))).collect()
}

/// `(q - 1)`
pub fn gm_polynomial() -> CountingPolynomial {
    CountingPolynomial::linear(-1)
}

/// `q^f`
pub fn affine_polynomial(f: usize) -> CountingPolynomial {
    CountingPolynomial::var().pow(f as u32)
}

/// `1 + q + ... + q^d`
pub fn proj_polynomial(dim: usize) -> CountingPolynomial {
    CountingPolynomial::new(vec![1; dim + 1])
}

/// `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
