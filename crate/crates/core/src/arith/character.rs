//! Characters of finite abelian groups with exact root-of-unity values.

use std::fmt;

use super::cyclotomic::{CycloElem, CyclotomicRing};
use super::group::{GroupElem, GroupHom, PointedAbelianGroup};
use crate::error::{Error, Result};

/// A root of unity `exp(2 pi i num/den)`, stored as a reduced fraction in `Q/Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };

    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0);
        let n = num.rem_euclid(den as i64) as u64;
        let g = num_integer::gcd(n, den);
        RootOfUnity {
            num: n / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Order of the root in `C^*`.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let den = num_integer::lcm(self.den, other.den);
        RootOfUnity::new(
            (self.num * (den / self.den) + other.num * (den / other.den)) as i64,
            den,
        )
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(-(self.num as i64), self.den)
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        RootOfUnity::new((self.num as i64) * k, self.den)
    }

    /// Image in `Z[zeta_m]`; requires the order to divide `m`.
    pub fn to_cyclotomic(&self, ring: &CyclotomicRing) -> CycloElem {
        let m = ring.conductor();
        assert!(m % self.den == 0, "root of order {} not in Z[zeta_{m}]", self.den);
        ring.root((self.num * (m / self.den)) as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "1")
        } else if *self == Self::MINUS_ONE {
            write!(f, "-1")
        } else {
            write!(f, "e({}/{})", self.num, self.den)
        }
    }
}

/// `chi(x) = exp(2 pi i sum_i a_i x_i / m_i)` for the angles `a_i in Z/m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    group: PointedAbelianGroup,
    angles: Vec<u32>,
}

impl Character {
    pub fn new(group: &PointedAbelianGroup, angles: Vec<u32>) -> Result<Self> {
        if angles.len() != group.factor_orders().len() {
            return Err(Error::Invalid("one angle per cyclic factor required".into()));
        }
        let angles = angles
            .iter()
            .zip(group.factor_orders())
            .map(|(&a, &m)| a % m)
            .collect();
        Ok(Character {
            group: group.clone(),
            angles,
        })
    }

    pub fn group(&self) -> &PointedAbelianGroup {
        &self.group
    }

    pub fn angles(&self) -> &[u32] {
        &self.angles
    }

    pub fn eval(&self, g: GroupElem) -> RootOfUnity {
        self.group
            .tuple(g)
            .iter()
            .zip(&self.angles)
            .zip(self.group.factor_orders())
            .fold(RootOfUnity::ONE, |acc, ((&x, &a), &m)| {
                acc.mul(&RootOfUnity::new(x as i64 * a as i64, m as u64))
            })
    }

    /// `chi o f`, a character of the source of `f`.
    pub fn pullback(&self, f: &GroupHom) -> Result<Character> {
        if f.target() != &self.group {
            return Err(Error::Invalid("character and homomorphism target differ".into()));
        }
        let src = f.source();
        let angles = src
            .factor_orders()
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let v = self.eval(f.apply(src.basis(i)));
                (v.num() * (m as u64 / v.den())) as u32
            })
            .collect();
        Character::new(src, angles)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .angles
            .iter()
            .zip(self.group.factor_orders())
            .map(|(a, m)| format!("{a}/{m}"))
            .collect();
        write!(f, "chi[{}]", parts.join(","))
    }
}

/// The characters of `C[D, eps]`: those with `chi(eps) = -1` when `eps` is
/// non-trivial, all of `Hom(D, C^*)` otherwise. Lexicographic in the angles.
pub fn characters(d: &PointedAbelianGroup) -> Vec<Character> {
    let dual = PointedAbelianGroup::new(d.factor_orders(), &vec![0; d.factor_orders().len()])
        .expect("dual of a valid group");
    dual.elements()
        .map(|a| Character {
            group: d.clone(),
            angles: dual.tuple(a),
        })
        .filter(|chi| !d.is_pointed() || chi.eval(d.eps()) == RootOfUnity::MINUS_ONE)
        .collect()
}
