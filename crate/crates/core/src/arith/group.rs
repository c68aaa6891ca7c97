//! Finite abelian groups `Z/m_1 x ... x Z/m_k` with a designated element of
//! order at most two.
//!
//! Elements are addressed by their position in the lexicographic enumeration
//! of tuples (first factor most significant), so `GroupElem` is a plain index.

use std::fmt;

use crate::error::{Error, Result};

pub type GroupElem = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedAbelianGroup {
    orders: Vec<u32>,
    strides: Vec<usize>,
    eps: GroupElem,
    size: usize,
}

/// Validates `(D, eps)`; `eps` must satisfy `2 eps = 0`.
pub fn group_make(orders: &[u32], eps: &[u32]) -> Result<PointedAbelianGroup> {
    PointedAbelianGroup::new(orders, eps)
}

impl PointedAbelianGroup {
    pub fn new(orders: &[u32], eps: &[u32]) -> Result<Self> {
        if orders.iter().any(|&m| m == 0) {
            return Err(Error::Invalid("cyclic factor orders must be >= 1".into()));
        }
        if eps.len() != orders.len() {
            return Err(Error::Invalid(format!(
                "eps has {} components but the group has {} factors",
                eps.len(),
                orders.len()
            )));
        }
        for (&e, &m) in eps.iter().zip(orders) {
            if (2 * e as u64) % m as u64 != 0 {
                return Err(Error::Invalid(format!(
                    "eps component {e} has order > 2 in Z/{m}"
                )));
            }
        }
        let mut strides = vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        let size = orders.iter().map(|&m| m as usize).product();
        let mut group = PointedAbelianGroup {
            orders: orders.to_vec(),
            strides,
            eps: 0,
            size,
        };
        let reduced: Vec<u32> = eps.iter().zip(orders).map(|(&e, &m)| e % m).collect();
        group.eps = group.index(&reduced);
        Ok(group)
    }

    /// `Z/n` with trivial designated element.
    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(&[n], &[0])
    }

    /// `Z/n` with `eps` the element of order two (`n` even) or trivial (`n` odd).
    pub fn cyclic_pointed(n: u32) -> Result<Self> {
        let e = if n % 2 == 0 { n / 2 } else { 0 };
        Self::new(&[n], &[e])
    }

    pub fn trivial() -> Self {
        Self::new(&[], &[]).expect("trivial group")
    }

    pub fn factor_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn eps(&self) -> GroupElem {
        self.eps
    }

    /// True when the designated element is non-trivial.
    pub fn is_pointed(&self) -> bool {
        self.eps != 0
    }

    /// Copy of the group with `eps` replaced.
    pub fn with_eps(&self, eps: GroupElem) -> Result<Self> {
        Self::new(&self.orders, &self.tuple(eps))
    }

    pub fn zero(&self) -> GroupElem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<GroupElem> {
        0..self.size
    }

    pub fn tuple(&self, g: GroupElem) -> Vec<u32> {
        self.orders
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| ((g / s) % m as usize) as u32)
            .collect()
    }

    pub fn index(&self, tuple: &[u32]) -> GroupElem {
        tuple
            .iter()
            .zip(&self.orders)
            .zip(&self.strides)
            .map(|((&a, &m), &s)| (a % m) as usize * s)
            .sum()
    }

    /// Canonical generator of the `i`-th cyclic factor.
    pub fn basis(&self, i: usize) -> GroupElem {
        if self.orders[i] == 1 {
            0
        } else {
            self.strides[i]
        }
    }

    pub fn add(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        let mut out = 0;
        for (&m, &s) in self.orders.iter().zip(&self.strides) {
            let m = m as usize;
            let x = (a / s) % m + (b / s) % m;
            out += (x % m) * s;
        }
        out
    }

    pub fn neg(&self, a: GroupElem) -> GroupElem {
        let mut out = 0;
        for (&m, &s) in self.orders.iter().zip(&self.strides) {
            let m = m as usize;
            out += ((m - (a / s) % m) % m) * s;
        }
        out
    }

    pub fn sub(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        self.add(a, self.neg(b))
    }

    /// `k * a` in additive notation (`a^k` multiplicatively), `k` of any sign.
    pub fn scale(&self, a: GroupElem, k: i64) -> GroupElem {
        let mut out = 0;
        for (&m, &s) in self.orders.iter().zip(&self.strides) {
            let mi = m as i64;
            let x = ((a / s) % m as usize) as i64;
            out += (x * k).rem_euclid(mi) as usize * s;
        }
        out
    }

    pub fn element_order(&self, a: GroupElem) -> u64 {
        self.tuple(a)
            .iter()
            .zip(&self.orders)
            .map(|(&x, &m)| (m / num_integer::gcd(x, m)) as u64)
            .fold(1, num_integer::lcm)
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &m| num_integer::lcm(acc, m as u64))
    }

    pub fn format_elem(&self, g: GroupElem) -> String {
        let t = self.tuple(g);
        if t.len() == 1 {
            t[0].to_string()
        } else {
            format!(
                "({})",
                t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )
        }
    }
}

impl fmt::Display for PointedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "Z/1");
        }
        let body: Vec<String> = self.orders.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", body.join("x"))?;
        if self.is_pointed() {
            write!(f, ":eps={}", self.format_elem(self.eps))?;
        }
        Ok(())
    }
}

/// Parses `Z/2xZ/4:eps=(0,2)`, `Z/4:eps=2` or `Z/3`; `Z/1` is the trivial group.
impl std::str::FromStr for PointedAbelianGroup {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad group spec {spec:?} (expected e.g. Z/2xZ/4:eps=(0,2))"));
        let spec_t = spec.trim();
        let (body, eps) = match spec_t.split_once(':') {
            Some((b, e)) => (b, Some(e.trim().strip_prefix("eps=").ok_or_else(bad)?)),
            None => (spec_t, None),
        };
        let orders = body
            .split(['x', '*'])
            .map(|f| f.trim().strip_prefix("Z/").and_then(|m| m.parse::<u32>().ok()).ok_or_else(bad))
            .collect::<Result<Vec<u32>>>()?;
        let eps = match eps {
            None => vec![0; orders.len()],
            Some(e) => e
                .trim_start_matches('(')
                .trim_end_matches(')')
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<u32>>>()?,
        };
        if orders == [1] && eps == [0] {
            return Ok(Self::trivial());
        }
        Self::new(&orders, &eps)
    }
}

/// A homomorphism `D0 -> D`, stored by the images of the factor generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom {
    source: PointedAbelianGroup,
    target: PointedAbelianGroup,
    images: Vec<GroupElem>,
}

impl GroupHom {
    /// Builds a homomorphism from generator images, checking `m_i * image_i = 0`.
    pub fn new(
        source: &PointedAbelianGroup,
        target: &PointedAbelianGroup,
        images: Vec<GroupElem>,
    ) -> Result<Self> {
        if images.len() != source.factor_orders().len() {
            return Err(Error::Invalid("one image per cyclic factor required".into()));
        }
        for (&img, &m) in images.iter().zip(source.factor_orders()) {
            if img >= target.order() || target.scale(img, m as i64) != 0 {
                return Err(Error::Invalid(format!(
                    "generator of Z/{m} cannot map to {}",
                    target.format_elem(img.min(target.order().saturating_sub(1)))
                )));
            }
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(group: &PointedAbelianGroup) -> Self {
        let images = (0..group.factor_orders().len()).map(|i| group.basis(i)).collect();
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images,
        }
    }

    pub fn source(&self) -> &PointedAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &PointedAbelianGroup {
        &self.target
    }

    pub fn images(&self) -> &[GroupElem] {
        &self.images
    }

    pub fn apply(&self, g: GroupElem) -> GroupElem {
        self.source
            .tuple(g)
            .iter()
            .zip(&self.images)
            .fold(0, |acc, (&a, &img)| self.target.add(acc, self.target.scale(img, a as i64)))
    }

    /// True when `eps` is sent to `eps'`.
    pub fn preserves_eps(&self) -> bool {
        self.apply(self.source.eps()) == self.target.eps()
    }

    pub fn compose(&self, after: &GroupHom) -> Result<GroupHom> {
        if after.source != self.target {
            return Err(Error::Invalid("composition of non-matching homomorphisms".into()));
        }
        let images = (0..self.source.factor_orders().len())
            .map(|i| after.apply(self.apply(self.source.basis(i))))
            .collect();
        Ok(GroupHom {
            source: self.source.clone(),
            target: after.target.clone(),
            images,
        })
    }
}

/// All homomorphisms `D0 -> D`, lexicographic in the generator images.
///
/// When both groups carry a non-trivial designated element, only the
/// homomorphisms sending `eps` to `eps` are returned.
pub fn hom_set(d0: &PointedAbelianGroup, d: &PointedAbelianGroup) -> Vec<GroupHom> {
    let candidates: Vec<Vec<GroupElem>> = d0
        .factor_orders()
        .iter()
        .map(|&m| d.elements().filter(|&x| d.scale(x, m as i64) == 0).collect())
        .collect();
    let filter_eps = d0.is_pointed() && d.is_pointed();
    let mut out = Vec::new();
    let mut choice = vec![0usize; candidates.len()];
    loop {
        let images: Vec<GroupElem> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        let hom = GroupHom {
            source: d0.clone(),
            target: d.clone(),
            images,
        };
        if !filter_eps || hom.preserves_eps() {
            out.push(hom);
        }
        // odometer, last generator fastest
        let mut i = candidates.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        for spec in ["Z/2xZ/4:eps=(0,2)", "Z/4:eps=2", "Z/3", "Z/1", "Z/2xZ/2:eps=(1,1)"] {
            let d: PointedAbelianGroup = spec.parse().unwrap();
            assert_eq!(d.to_string(), spec);
        }
        let d: PointedAbelianGroup = "Z/2xZ/4:eps=(0,2)".parse().unwrap();
        assert_eq!(d.tuple(d.eps()), vec![0, 2]);
        assert!(matches!("Z/4:eps=1".parse::<PointedAbelianGroup>(), Err(Error::Invalid(_))));
        assert!(matches!("Z4".parse::<PointedAbelianGroup>(), Err(Error::Parse(_))));
        assert!("Z/2:eps=(0,1)".parse::<PointedAbelianGroup>().is_err());
    }

    #[test]
    fn group_make_examples() {
        let z5 = group_make(&[5], &[0]).unwrap();
        assert_eq!(z5.order(), 5);
        assert!(!z5.is_pointed());
        let z2 = group_make(&[2], &[1]).unwrap();
        assert_eq!(z2.eps(), 1);
        assert!(matches!(group_make(&[4], &[1]), Err(Error::Invalid(_))));
        assert!(group_make(&[0], &[0]).is_err());
        assert!(group_make(&[2, 4], &[1]).is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let g = group_make(&[2, 3], &[0, 0]).unwrap();
        let tuples: Vec<Vec<u32>> = g.elements().map(|x| g.tuple(x)).collect();
        assert_eq!(
            tuples,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        for x in g.elements() {
            assert_eq!(g.index(&g.tuple(x)), x);
        }
    }

    #[test]
    fn group_law() {
        let g = group_make(&[2, 4], &[0, 2]).unwrap();
        for a in g.elements() {
            assert_eq!(g.add(a, g.neg(a)), 0);
            assert_eq!(g.scale(a, -1), g.neg(a));
            assert_eq!(g.scale(a, g.element_order(a) as i64), 0);
            for b in g.elements() {
                assert_eq!(g.add(a, b), g.add(b, a));
            }
        }
        assert_eq!(g.add(g.eps(), g.eps()), 0);
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.to_string(), "Z/2xZ/4:eps=(0,2)");
    }

    #[test]
    fn hom_set_examples() {
        let z2 = PointedAbelianGroup::cyclic(2).unwrap();
        let z4 = PointedAbelianGroup::cyclic(4).unwrap();
        assert_eq!(hom_set(&z2, &z4).len(), 2);
        for n in 1..=7 {
            let zn = PointedAbelianGroup::cyclic(n).unwrap();
            assert_eq!(hom_set(&zn, &zn).len(), n as usize);
        }
        let one = PointedAbelianGroup::trivial();
        assert_eq!(hom_set(&one, &z4).len(), 1);
        // pointed on both sides: eps must go to eps
        let z2p = PointedAbelianGroup::cyclic_pointed(2).unwrap();
        let z4p = PointedAbelianGroup::cyclic_pointed(4).unwrap();
        let homs = hom_set(&z2p, &z4p);
        assert_eq!(homs.len(), 1);
        assert!(homs[0].preserves_eps());
    }

    #[test]
    fn homs_are_homomorphisms_and_distinct() {
        let d0 = group_make(&[2, 2], &[0, 0]).unwrap();
        let d = group_make(&[4, 2], &[0, 0]).unwrap();
        let homs = hom_set(&d0, &d);
        assert_eq!(homs.len(), 16);
        let mut seen = std::collections::HashSet::new();
        for h in &homs {
            let table: Vec<_> = d0.elements().map(|x| h.apply(x)).collect();
            assert!(seen.insert(table));
            for a in d0.elements() {
                for b in d0.elements() {
                    assert_eq!(h.apply(d0.add(a, b)), d.add(h.apply(a), h.apply(b)));
                }
            }
        }
    }
}
