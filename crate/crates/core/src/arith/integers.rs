use super::ring::Ring;

/// The integers, with `i64` elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = i64;

    fn zero(&self) -> i64 {
        0
    }

    fn one(&self) -> i64 {
        1
    }

    fn add(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn neg(&self, a: &i64) -> i64 {
        -a
    }

    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a * b
    }

    fn inv(&self, a: &i64) -> Option<i64> {
        matches!(a, 1 | -1).then_some(*a)
    }

    fn from_int(&self, k: i64) -> i64 {
        k
    }
}

/// `Z/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    m: u64,
}

impl IntegersMod {
    pub fn new(m: u64) -> Self {
        assert!(m >= 1, "modulus must be positive");
        IntegersMod { m }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.m
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.m
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.m - a % self.m) % self.m
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.m
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (0..self.m).find(|b| self.mul(a, b) == self.one())
    }

    fn from_int(&self, k: i64) -> u64 {
        k.rem_euclid(self.m as i64) as u64
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.m).collect())
    }
}
