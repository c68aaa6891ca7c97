//! Integral group rings `Z[D]` and their reduced quotients
//! `Z[D, eps] = Z[D] / (1 + eps)`.
//!
//! In the reduced ring every `eps`-orbit `{g, eps + g}` keeps its
//! lexicographically smaller member as basis vector; the other member is
//! folded onto the negative of that basis vector.

use serde_json::{json, Value};

use super::group::{GroupElem, PointedAbelianGroup};
use super::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingElement {
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    /// Coefficients on the canonical representatives.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGroupRing {
    group: PointedAbelianGroup,
    reps: Vec<GroupElem>,
    /// For every group element: (position of its representative, sign).
    fold: Vec<(usize, i64)>,
}

/// `Z[D, eps]` when `eps` is non-trivial, plain `Z[D]` otherwise.
pub fn reduced_group_ring(d: &PointedAbelianGroup) -> ReducedGroupRing {
    ReducedGroupRing::new(d)
}

impl ReducedGroupRing {
    pub fn new(d: &PointedAbelianGroup) -> Self {
        let eps = d.eps();
        let mut reps = Vec::new();
        let mut fold = vec![(usize::MAX, 0i64); d.order()];
        for g in d.elements() {
            if fold[g].1 != 0 {
                continue;
            }
            let pos = reps.len();
            reps.push(g);
            fold[g] = (pos, 1);
            if eps != 0 {
                fold[d.add(g, eps)] = (pos, -1);
            }
        }
        ReducedGroupRing {
            group: d.clone(),
            reps,
            fold,
        }
    }

    pub fn group(&self) -> &PointedAbelianGroup {
        &self.group
    }

    /// True when this is the quotient by `1 + eps` (non-trivial `eps`).
    pub fn is_reduced(&self) -> bool {
        self.group.is_pointed()
    }

    /// Rank of the underlying free abelian group.
    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[GroupElem] {
        &self.reps
    }

    /// Image of a group element under `D -> Z[D, eps]`.
    pub fn embed(&self, g: GroupElem) -> GroupRingElement {
        let (pos, sign) = self.fold[g];
        let mut coeffs = vec![0; self.reps.len()];
        coeffs[pos] = sign;
        GroupRingElement { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: Vec<i64>) -> GroupRingElement {
        assert_eq!(coeffs.len(), self.reps.len());
        GroupRingElement { coeffs }
    }

    /// Non-zero `(tuple, coefficient)` pairs.
    pub fn support(&self, x: &GroupRingElement) -> Vec<(Vec<u32>, i64)> {
        self.reps
            .iter()
            .zip(&x.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(&g, &c)| (self.group.tuple(g), c))
            .collect()
    }

    /// `{"support": [[tuple, coeff], ...]}`
    pub fn to_json(&self, x: &GroupRingElement) -> Value {
        let support: Vec<Value> = self
            .support(x)
            .into_iter()
            .map(|(t, c)| json!([t, c]))
            .collect();
        json!({ "support": support })
    }

    /// `+-g` when `x` is a signed group element.
    pub fn as_signed_group_element(&self, x: &GroupRingElement) -> Option<(GroupElem, i64)> {
        let mut nz = x.coeffs.iter().enumerate().filter(|(_, &c)| c != 0);
        let (pos, &c) = nz.next()?;
        if nz.next().is_some() || c.abs() != 1 {
            return None;
        }
        Some((self.reps[pos], c))
    }
}

impl Ring for ReducedGroupRing {
    type Elem = GroupRingElement;

    fn zero(&self) -> GroupRingElement {
        GroupRingElement {
            coeffs: vec![0; self.reps.len()],
        }
    }

    fn one(&self) -> GroupRingElement {
        self.embed(self.group.zero())
    }

    fn add(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        GroupRingElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    fn neg(&self, a: &GroupRingElement) -> GroupRingElement {
        GroupRingElement {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    fn mul(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        let mut coeffs = vec![0; self.reps.len()];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let (pos, sign) = self.fold[self.group.add(self.reps[i], self.reps[j])];
                coeffs[pos] += sign * x * y;
            }
        }
        GroupRingElement { coeffs }
    }

    /// Only the trivial units `+-g` are inverted.
    fn inv(&self, a: &GroupRingElement) -> Option<GroupRingElement> {
        let (g, sign) = self.as_signed_group_element(a)?;
        let mut inv = self.embed(self.group.neg(g));
        if sign < 0 {
            inv = self.neg(&inv);
        }
        Some(inv)
    }

    fn from_int(&self, k: i64) -> GroupRingElement {
        let mut x = self.zero();
        x.coeffs[self.fold[0].0] = k;
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::group::group_make;

    #[test]
    fn z2_with_eps_is_integers() {
        let d = group_make(&[2], &[1]).unwrap();
        let r = reduced_group_ring(&d);
        assert_eq!(r.rank(), 1);
        assert!(r.is_reduced());
        let gen = r.embed(1);
        assert_eq!(gen, r.from_int(-1));
        assert_eq!(r.mul(&gen, &gen), r.one());
    }

    #[test]
    fn z4_with_eps_is_gaussian_integers() {
        let d = group_make(&[4], &[2]).unwrap();
        let r = reduced_group_ring(&d);
        assert_eq!(r.rank(), 2);
        let i = r.embed(1);
        assert_eq!(r.mul(&i, &i), r.from_int(-1));
        assert_eq!(r.representatives(), &[0, 1]);
        assert_eq!(r.to_json(&r.add(&i, &r.from_int(3))).to_string(), r#"{"support":[[[0],3],[[1],1]]}"#);
    }

    #[test]
    fn trivial_eps_gives_polynomial_quotient() {
        // Z[Z/n] = Z[T]/(T^n - 1): T^n = 1 and 1, T, ..., T^{n-1} independent
        for n in 1..=6u32 {
            let d = group_make(&[n], &[0]).unwrap();
            let r = reduced_group_ring(&d);
            assert_eq!(r.rank(), n as usize);
            assert!(!r.is_reduced());
            let t = r.embed(d.basis(0));
            assert_eq!(r.pow(&t, n as u64), r.one());
            let powers: std::collections::HashSet<_> = (0..n as u64).map(|k| r.pow(&t, k)).collect();
            assert_eq!(powers.len(), n as usize);
        }
    }

    #[test]
    fn embedding_is_injective_and_multiplicative() {
        for (orders, eps) in [(vec![2u32], vec![1u32]), (vec![4], vec![2]), (vec![6], vec![3]), (vec![2, 4], vec![1, 0]), (vec![3], vec![0])] {
            let d = group_make(&orders, &eps).unwrap();
            let r = reduced_group_ring(&d);
            let images: std::collections::HashSet<_> = d.elements().map(|g| r.embed(g)).collect();
            assert_eq!(images.len(), d.order());
            for a in d.elements() {
                for b in d.elements() {
                    assert_eq!(r.embed(d.add(a, b)), r.mul(&r.embed(a), &r.embed(b)));
                }
            }
            assert_eq!(r.add(&r.one(), &r.embed(d.eps())), if d.is_pointed() { r.zero() } else { r.from_int(2) });
        }
    }
}
