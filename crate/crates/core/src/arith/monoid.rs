//! Commutative monoids with a zero and a designated element of square one.

use super::field::FiniteField;
use super::group::{GroupElem, PointedAbelianGroup};
use super::group_ring::ReducedGroupRing;
use super::integers::IntegersMod;
use super::ring::Ring;
use crate::error::{Error, Result};

pub type MonoidElem = usize;

/// Where the elements of a finite monoid come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidSource {
    /// `D` with a zero adjoined; element `0` is the zero, `g + 1` is `g in D`.
    AdjoinedZero(PointedAbelianGroup),
    /// Multiplicative monoid of a finite field; element index = field element.
    Field(FiniteField),
    /// Multiplicative monoid of `Z/m`; element index = residue.
    IntegersMod(IntegersMod),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    source: MonoidSource,
    size: usize,
    table: Vec<MonoidElem>,
    zero: MonoidElem,
    one: MonoidElem,
    designated: MonoidElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidWithZero {
    Finite(FiniteMonoid),
    /// The multiplicative monoid of `Z[D, eps]`; infinite, so only its
    /// operations are available.
    GroupRing(ReducedGroupRing),
}

/// `D` with a zero adjoined; the designated element is `eps`.
pub fn adjoin_zero(d: &PointedAbelianGroup) -> MonoidWithZero {
    let size = d.order() + 1;
    let mut table = vec![0; size * size];
    for a in d.elements() {
        for b in d.elements() {
            table[(a + 1) * size + b + 1] = d.add(a, b) + 1;
        }
    }
    MonoidWithZero::Finite(FiniteMonoid {
        source: MonoidSource::AdjoinedZero(d.clone()),
        size,
        table,
        zero: 0,
        one: 1,
        designated: d.eps() + 1,
    })
}

/// Supported exact rings for `monoid_of_ring`.
#[derive(Clone, Debug)]
pub enum RingSpec {
    Field(FiniteField),
    IntegersMod(u64),
    GroupRing(ReducedGroupRing),
}

/// The ring viewed as a multiplicative monoid, designated element `-1`.
pub fn monoid_of_ring(ring: &RingSpec) -> MonoidWithZero {
    match ring {
        RingSpec::Field(f) => MonoidWithZero::Finite(finite_ring_monoid(
            MonoidSource::Field(f.clone()),
            f,
        )),
        RingSpec::IntegersMod(m) => {
            let r = IntegersMod::new(*m);
            MonoidWithZero::Finite(finite_ring_monoid(MonoidSource::IntegersMod(r), &r))
        }
        RingSpec::GroupRing(r) => MonoidWithZero::GroupRing(r.clone()),
    }
}

fn finite_ring_monoid<R>(source: MonoidSource, ring: &R) -> FiniteMonoid
where
    R: Ring,
    R::Elem: Into<u64>,
{
    let els = ring.elements().expect("finite ring");
    let size = els.len();
    let idx = |x: R::Elem| -> usize { x.into() as usize };
    let mut table = vec![0; size * size];
    for a in &els {
        for b in &els {
            table[idx(a.clone()) * size + idx(b.clone())] = idx(ring.mul(a, b));
        }
    }
    FiniteMonoid {
        source,
        size,
        table,
        zero: idx(ring.zero()),
        one: idx(ring.one()),
        designated: idx(ring.neg(&ring.one())),
    }
}

impl MonoidWithZero {
    pub fn as_finite(&self) -> Result<&FiniteMonoid> {
        match self {
            MonoidWithZero::Finite(m) => Ok(m),
            MonoidWithZero::GroupRing(_) => Err(Error::Unsupported(
                "the monoid of Z[D,eps] is infinite and cannot be enumerated".into(),
            )),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, MonoidWithZero::Finite(_))
    }
}

impl FiniteMonoid {
    pub fn source(&self) -> &MonoidSource {
        &self.source
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<MonoidElem> {
        0..self.size
    }

    pub fn mul(&self, a: MonoidElem, b: MonoidElem) -> MonoidElem {
        self.table[a * self.size + b]
    }

    pub fn zero(&self) -> MonoidElem {
        self.zero
    }

    pub fn one(&self) -> MonoidElem {
        self.one
    }

    pub fn designated(&self) -> MonoidElem {
        self.designated
    }

    pub fn is_unit(&self, a: MonoidElem) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one)
    }

    pub fn units(&self) -> Vec<MonoidElem> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    /// The unit group `M^*` as a pointed cyclic group (designated element
    /// becomes `eps`) together with the embedding `M^* -> M`.
    ///
    /// Fails when `M^*` is not cyclic (and `M` is not an adjoined-zero group).
    pub fn unit_group(&self) -> Result<(PointedAbelianGroup, Vec<MonoidElem>)> {
        if let MonoidSource::AdjoinedZero(d) = &self.source {
            return Ok((d.clone(), d.elements().map(|g| g + 1).collect()));
        }
        let units = self.units();
        let n = units.len();
        let generator = units
            .iter()
            .copied()
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != self.one {
                    x = self.mul(x, g);
                    k += 1;
                }
                k == n
            })
            .ok_or_else(|| Error::Unsupported("unit group is not cyclic".into()))?;
        let mut embed = Vec::with_capacity(n);
        let mut x = self.one;
        for _ in 0..n {
            embed.push(x);
            x = self.mul(x, generator);
        }
        let eps = embed
            .iter()
            .position(|&u| u == self.designated)
            .ok_or_else(|| Error::Invalid("designated element is not a unit".into()))?;
        let d = PointedAbelianGroup::new(&[n as u32], &[eps as u32])?;
        Ok((d, embed))
    }

    pub fn unit_index(&self, embed: &[MonoidElem], a: MonoidElem) -> Option<GroupElem> {
        embed.iter().position(|&u| u == a)
    }
}
