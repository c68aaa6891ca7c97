//! Weyl groups as permutation groups on the indexed root set.

use std::collections::HashMap;

use crate::error::{invalid, Error, Result};
use crate::gadgets::CountingPolynomial;
use crate::roots::RootSystem;

pub const DEFAULT_WEYL_CAP: usize = 100_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    perm: Vec<u32>,
    word: Vec<usize>,
    /// Action on `L`: column `j` is the image of the `j`-th basis vector.
    matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    /// Index of `w(r)`.
    pub fn apply(&self, r: usize) -> usize {
        self.perm[r] as usize
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    /// The lexicographically smallest reduced word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn act(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u32>, usize>,
    /// `right[w][i] = w s_i`
    right: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    table: Option<Vec<u32>>,
}

/// Breadth-first enumeration from the identity by right multiplication with
/// simple reflections, so elements come sorted by length and then by their
/// (lexicographically minimal) reduced word.
pub fn weyl_enumerate(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    let l = rs.rank();
    let nr = rs.num_roots();
    let id: Vec<u32> = (0..nr as u32).collect();
    let eye: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect();
    let simple_mats: Vec<Vec<Vec<i64>>> = (0..l)
        .map(|i| {
            let cols: Vec<Vec<i64>> = (0..l).map(|j| rs.reflect_lattice(i, &eye[j])).collect();
            (0..l).map(|a| (0..l).map(|b| cols[b][a]).collect()).collect()
        })
        .collect();
    let mut elements = vec![WeylElement {
        perm: id.clone(),
        word: Vec::new(),
        matrix: eye,
    }];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(l);
        for i in 0..l {
            // (w s_i)(r) = w(s_i(r))
            let w = &elements[head];
            let perm: Vec<u32> = (0..nr).map(|r| w.perm[rs.reflect_index(i, r)]).collect();
            let next = match index.get(&perm) {
                Some(&k) => k,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::BudgetExceeded {
                            needed: elements.len() as u128 + 1,
                            budget: cap as u128,
                        });
                    }
                    let mut word = w.word.clone();
                    word.push(i);
                    let matrix = mat_mul(&w.matrix, &simple_mats[i]);
                    let k = elements.len();
                    index.insert(perm.clone(), k);
                    elements.push(WeylElement { perm, word, matrix });
                    k
                }
            };
            row.push(next);
        }
        right.push(row);
        head += 1;
    }
    let n = elements.len();
    let mut inverse = vec![0; n];
    for (k, w) in elements.iter().enumerate() {
        let mut inv = vec![0u32; nr];
        for (r, &img) in w.perm.iter().enumerate() {
            inv[img as usize] = r as u32;
        }
        inverse[k] = index[&inv];
    }
    let mut group = WeylGroup {
        rs: rs.clone(),
        elements,
        index,
        right,
        inverse,
        table: None,
    };
    for (k, w) in group.elements.iter().enumerate() {
        if group.inversion_count(k) != w.word.len() {
            return invalid("breadth-first word is not reduced");
        }
    }
    if n <= TABLE_LIMIT {
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = group.compose(a, b) as u32;
            }
        }
        group.table = Some(table);
    }
    Ok(group)
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

impl WeylGroup {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        &self.elements[w]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the simple reflection `s_i`.
    pub fn simple(&self, i: usize) -> usize {
        self.right[0][i]
    }

    pub fn right_simple(&self, w: usize, i: usize) -> usize {
        self.right[w][i]
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].word.len()
    }

    pub fn index_of_perm(&self, perm: &[u32]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    fn compose(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (&self.elements[a].perm, &self.elements[b].perm);
        let perm: Vec<u32> = pb.iter().map(|&r| pa[r as usize]).collect();
        self.index[&perm]
    }

    /// Index of `ab`, acting as `a` after `b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.compose(a, b),
        }
    }

    pub fn inv(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// Index of the element given by a word in the simple reflections.
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |w, &i| self.right[w][i])
    }

    fn inversion_count(&self, w: usize) -> usize {
        self.rs
            .positive_roots()
            .filter(|&r| !self.rs.is_positive(self.elements[w].apply(r)))
            .count()
    }

    /// `{r > 0 : w(r) < 0}` as sorted root indices.
    pub fn inversion_set(&self, w: usize) -> Vec<usize> {
        self.rs
            .positive_roots()
            .filter(|&r| !self.rs.is_positive(self.elements[w].apply(r)))
            .collect()
    }

    /// The unique element with `w(Phi+) = -Phi+`.
    pub fn longest_element(&self) -> usize {
        let n = self.rs.num_positive();
        let found: Vec<usize> = (0..self.order()).filter(|&w| self.length(w) == n).collect();
        assert_eq!(found.len(), 1, "longest element is unique");
        found[0]
    }

    /// Index of the reflection `s_r`.
    pub fn reflection(&self, r: usize) -> usize {
        let perm: Vec<u32> = (0..self.rs.num_roots())
            .map(|x| self.rs.reflect_root(r, x) as u32)
            .collect();
        self.index[&perm]
    }

    /// All reduced words of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: usize) -> Vec<Vec<usize>> {
        if w == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rs.rank() {
            let v = self.right[w][i];
            if self.length(v) < self.length(w) {
                for mut word in self.reduced_words(v) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }

    /// `sum_w q^{l(w)}`
    pub fn poincare_polynomial(&self) -> CountingPolynomial {
        let mut coeffs = vec![0i128; self.rs.num_positive() + 1];
        for w in &self.elements {
            coeffs[w.length()] += 1;
        }
        CountingPolynomial::new(coeffs)
    }
}

pub fn inversion_set(group: &WeylGroup, w: usize) -> Vec<usize> {
    group.inversion_set(w)
}

pub fn longest_element(group: &WeylGroup) -> usize {
    group.longest_element()
}

pub fn poincare_polynomial(group: &WeylGroup) -> CountingPolynomial {
    group.poincare_polynomial()
}

/// `m_ij` = half the number of roots in the span of `a_i` and `a_j`.
pub fn coxeter_matrix(rs: &RootSystem) -> Result<Vec<Vec<u32>>> {
    let l = rs.rank();
    let mut m = vec![vec![1u32; l]; l];
    for i in 0..l {
        for j in 0..l {
            if i == j {
                continue;
            }
            let count = (0..rs.num_roots())
                .filter(|&r| {
                    rs.root(r)
                        .iter()
                        .enumerate()
                        .all(|(k, &c)| c == 0 || k == i || k == j)
                })
                .count();
            if count % 2 != 0 {
                return invalid(format!("odd root count {count} in a rank-2 span"));
            }
            m[i][j] = (count / 2) as u32;
        }
    }
    Ok(m)
}

/// `prod(m; a, b) = a b a ...` with `m` factors.
pub fn alternating_product(group: &WeylGroup, m: u32, a: usize, b: usize) -> usize {
    (0..m).fold(group.identity(), |acc, k| group.mul(acc, if k % 2 == 0 { a } else { b }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::parse_root_system;

    fn group(name: &str) -> WeylGroup {
        weyl_enumerate(&parse_root_system(name).unwrap(), DEFAULT_WEYL_CAP).unwrap()
    }

    #[test]
    fn orders() {
        for (name, n) in [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("G2", 12), ("B3", 48), ("A1xA1", 4), ("A2:adjoint", 6)] {
            assert_eq!(group(name).order(), n, "{name}");
        }
    }

    #[test]
    fn a2_lengths_and_words() {
        let w = group("A2");
        let lengths: Vec<usize> = w.elements().iter().map(WeylElement::length).collect();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
        let words: Vec<&[usize]> = w.elements().iter().map(WeylElement::word).collect();
        assert_eq!(words, vec![&[][..], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]]);
        assert_eq!(w.inversion_set(w.simple(0)), vec![0]);
        assert_eq!(w.inversion_set(w.longest_element()), vec![0, 1, 2]);
        assert!(w.inversion_set(0).is_empty());
        assert_eq!(w.poincare_polynomial().coeffs(), &[1, 2, 2, 1]);
    }

    #[test]
    fn coxeter_matrices() {
        let cases = [("A2", 3), ("A1xA1", 2), ("B2", 4), ("G2", 6)];
        for (name, m) in cases {
            let rs = parse_root_system(name).unwrap();
            assert_eq!(coxeter_matrix(&rs).unwrap(), vec![vec![1, m], vec![m, 1]]);
            let w = group(name);
            let st = w.mul(w.simple(0), w.simple(1));
            let mut x = st;
            let mut order = 1;
            while x != 0 {
                x = w.mul(x, st);
                order += 1;
            }
            assert_eq!(order, m);
        }
    }

    #[test]
    fn longest_elements() {
        for (name, len) in [("A1", 1), ("A2", 3), ("G2", 6), ("B3", 9)] {
            let w = group(name);
            let w0 = w.longest_element();
            assert_eq!(w.length(w0), len);
            let rs = w.root_system();
            assert!(rs.positive_roots().all(|r| !rs.is_positive(w.element(w0).apply(r))));
        }
    }

    #[test]
    fn reduced_words_of_longest_a2() {
        let w = group("A2");
        assert_eq!(w.reduced_words(w.longest_element()), vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn lattice_matrices_match_permutations() {
        for name in ["A2", "B2:adjoint", "G2", "A1xA1"] {
            let w = group(name);
            let rs = w.root_system();
            for el in w.elements() {
                for r in 0..rs.num_roots() {
                    assert_eq!(el.act(rs.root_in_lattice(r)), rs.root_in_lattice(el.apply(r)));
                }
            }
        }
    }
}
