//! Enumerative check of `Hom(Z[D, eps], A) = Hom((D, eps), (A, -1))`.

use super::group::PointedAbelianGroup;
use super::group_ring::reduced_group_ring;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    /// Ring homomorphisms out of `Z[D, eps]` (or out of `Z[D]/(2)` when
    /// `eps` is trivial, which is what `Z[D]/(1 + eps)` means then).
    pub ring_homs: usize,
    /// Pointed monoid maps `D u {0} -> A` sending `eps` to `-1`.
    pub monoid_homs: usize,
    /// Whether restriction along `D -> Z[D, eps]` is a bijection.
    pub bijective: bool,
}

/// Enumerates both sides of the adjunction for a finite ring `A` and compares
/// them through restriction to `D`.
pub fn adjunction_check<R: Ring>(d: &PointedAbelianGroup, a: &R) -> Result<AdjunctionReport> {
    let els = a
        .elements()
        .ok_or_else(|| Error::Unsupported("target ring must be finite".into()))?;
    let minus_one = a.neg(&a.one());

    // Right side: maps f with f(0) = 1, f(g + h) = f(g) f(h), f(eps) = -1.
    let mut monoid_homs: Vec<Vec<R::Elem>> = Vec::new();
    let gens: Vec<_> = (0..d.factor_orders().len()).map(|i| d.basis(i)).collect();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let f: Vec<R::Elem> = d
            .elements()
            .map(|g| {
                let t = d.tuple(g);
                t.iter().zip(&choice).fold(a.one(), |acc, (&k, &c)| {
                    a.mul(&acc, &a.pow(&els[c], k as u64))
                })
            })
            .collect();
        let is_hom = d
            .elements()
            .all(|g| d.elements().all(|h| f[d.add(g, h)] == a.mul(&f[g], &f[h])));
        let well_defined = gens
            .iter()
            .zip(&choice)
            .zip(d.factor_orders())
            .all(|((_, &c), &m)| a.is_one(&a.pow(&els[c], m as u64)));
        if is_hom && well_defined && f[d.eps()] == minus_one {
            monoid_homs.push(f);
        }
        for slot in choice.iter_mut() {
            *slot += 1;
            if *slot < els.len() {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }

    // Left side: additive maps on the basis of Z[D, eps] that are
    // multiplicative, unital and kill 1 + eps.
    let ring = reduced_group_ring(d);
    let reps = ring.representatives().to_vec();
    let mut restrictions: Vec<Vec<R::Elem>> = Vec::new();
    let mut choice = vec![0usize; reps.len()];
    let apply = |choice: &[usize], x: &[i64]| -> R::Elem {
        x.iter().zip(choice).fold(a.zero(), |acc, (&c, &i)| {
            a.add(&acc, &a.mul(&a.from_int(c), &els[i]))
        })
    };
    'outer2: loop {
        let basis: Vec<_> = reps.iter().map(|&g| ring.embed(g)).collect();
        let unital = apply(&choice, ring.one().coeffs()) == a.one();
        let multiplicative = basis.iter().all(|x| {
            basis.iter().all(|y| {
                apply(&choice, ring.mul(x, y).coeffs())
                    == a.mul(&apply(&choice, x.coeffs()), &apply(&choice, y.coeffs()))
            })
        });
        let kills_j = a.is_zero(&a.add(
            &apply(&choice, ring.one().coeffs()),
            &apply(&choice, ring.embed(d.eps()).coeffs()),
        ));
        if unital && multiplicative && kills_j {
            restrictions.push(
                d.elements()
                    .map(|g| apply(&choice, ring.embed(g).coeffs()))
                    .collect(),
            );
        }
        for slot in choice.iter_mut() {
            *slot += 1;
            if *slot < els.len() {
                continue 'outer2;
            }
            *slot = 0;
        }
        break;
    }

    let mut image = restrictions.clone();
    image.sort();
    image.dedup();
    let injective = image.len() == restrictions.len();
    let lands = restrictions.iter().all(|f| monoid_homs.contains(f));
    let bijective = injective && lands && restrictions.len() == monoid_homs.len();
    Ok(AdjunctionReport {
        ring_homs: restrictions.len(),
        monoid_homs: monoid_homs.len(),
        bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::FiniteField;
    use crate::arith::group::group_make;
    use crate::arith::integers::IntegersMod;

    #[test]
    fn z4_into_f5_has_two_homs() {
        // gen -> square roots of -1 in F_5, namely 2 and 3
        let d = group_make(&[4], &[2]).unwrap();
        let r = adjunction_check(&d, &FiniteField::new(5, 1).unwrap()).unwrap();
        assert_eq!((r.ring_homs, r.monoid_homs, r.bijective), (2, 2, true));
    }

    #[test]
    fn z4_into_f3_is_empty() {
        let d = group_make(&[4], &[2]).unwrap();
        let r = adjunction_check(&d, &FiniteField::new(3, 1).unwrap()).unwrap();
        assert_eq!((r.ring_homs, r.monoid_homs), (0, 0));
        assert!(r.bijective);
    }

    #[test]
    fn sweep() {
        let groups = [
            group_make(&[1], &[0]).unwrap(),
            group_make(&[2], &[1]).unwrap(),
            group_make(&[2], &[0]).unwrap(),
            group_make(&[4], &[2]).unwrap(),
            group_make(&[6], &[3]).unwrap(),
            group_make(&[2, 2], &[1, 0]).unwrap(),
            group_make(&[3], &[0]).unwrap(),
        ];
        for d in &groups {
            for q in [2, 3, 4, 5, 7, 9] {
                let r = adjunction_check(d, &FiniteField::of_order(q).unwrap()).unwrap();
                assert!(r.bijective, "{d} into F_{q}: {r:?}");
            }
            for m in [4, 6, 8] {
                let r = adjunction_check(d, &IntegersMod::new(m)).unwrap();
                assert!(r.bijective, "{d} into Z/{m}: {r:?}");
            }
        }
    }
}
