//! Root systems `{L, Phi, n_r}` generated from Cartan data.
//!
//! Conventions: `cartan[i][j] = n_{a_i}(a_j)`. Roots are stored in
//! simple-root coordinates; coroots in simple-coroot coordinates. The lattice
//! `L` is either the weight lattice (basis: fundamental weights) or the root
//! lattice (basis: simple roots).

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{invalid, Error, Result};

pub const DEFAULT_ROOT_CAP: usize = 240;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    SimplyConnected,
    Adjoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    name: String,
    cartan: Vec<Vec<i64>>,
    lattice: LatticeKind,
    /// Positive roots first in increasing order, then their negatives in the
    /// same order, so `roots[k + N] = -roots[k]`.
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    lattice_coords: Vec<Vec<i64>>,
    coroot_forms: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, usize>,
    /// `simple_perm[i][r]` is the index of `s_i(r)`.
    simple_perm: Vec<Vec<usize>>,
    diagonal: Option<Vec<Vec<i64>>>,
}

/// Cartan matrix of a named irreducible type.
pub fn cartan_matrix(letter: char, rank: usize) -> Result<Vec<Vec<i64>>> {
    let ok = match letter {
        'A' => rank >= 1,
        'B' | 'C' => rank >= 2,
        'D' => rank >= 3,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => false,
    };
    if !ok {
        return Err(Error::Parse(format!("unknown type {letter}{rank}")));
    }
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match letter {
        'A' | 'B' | 'C' | 'F' | 'G' => (0..rank - 1).for_each(|i| link(i, i + 1)),
        'D' => {
            (0..rank - 2).for_each(|i| link(i, i + 1));
            link(rank - 3, rank - 1);
        }
        _ => {
            // Bourbaki numbering: 1-3-4-5-..., with 2 attached to 4
            link(0, 2);
            link(1, 3);
            (2..rank - 1).for_each(|i| link(i, i + 1));
        }
    }
    match letter {
        'B' => a[rank - 1][rank - 2] = -2,
        'C' => a[rank - 2][rank - 1] = -2,
        'F' => a[2][1] = -2,
        'G' => a[0][1] = -3,
        _ => {}
    }
    Ok(a)
}

fn block_diagonal(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut a = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                a[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    a
}

/// Parses `"A2"`, `"G2"`, `"A1xA1"`, `"A3:adjoint"`, `"B2:sc"` or a JSON
/// Cartan matrix such as `"[[2,-1],[-1,2]]"` (optionally with a `:adjoint`
/// suffix).
pub fn parse_root_system(spec: &str) -> Result<RootSystem> {
    parse_root_system_with_cap(spec, DEFAULT_ROOT_CAP)
}

pub fn parse_root_system_with_cap(spec: &str, cap: usize) -> Result<RootSystem> {
    let spec = spec.trim();
    let (body, kind) = match spec.rsplit_once(':') {
        Some((b, "adjoint" | "ad")) => (b, LatticeKind::Adjoint),
        Some((b, "sc" | "simply-connected")) => (b, LatticeKind::SimplyConnected),
        Some((_, other)) => return Err(Error::Parse(format!("unknown lattice tag '{other}'"))),
        None => (spec, LatticeKind::SimplyConnected),
    };
    if body.starts_with('[') {
        let cartan: Vec<Vec<i64>> = serde_json::from_str(body)
            .map_err(|e| Error::Parse(format!("Cartan matrix: {e}")))?;
        return RootSystem::from_cartan(body, cartan, kind, cap);
    }
    let mut blocks = Vec::new();
    for part in body.split(['x', '×']) {
        let mut chars = part.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse(format!("empty component in '{body}'")))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in '{part}'")))?;
        blocks.push(cartan_matrix(letter, rank)?);
    }
    RootSystem::from_cartan(body, block_diagonal(&blocks), kind, cap)
}

/// `root_system("A2", LatticeKind::SimplyConnected)`.
pub fn root_system(name: &str, kind: LatticeKind) -> Result<RootSystem> {
    let rs = parse_root_system(name)?;
    if rs.lattice == kind {
        Ok(rs)
    } else {
        RootSystem::from_cartan(&rs.name, rs.cartan, kind, DEFAULT_ROOT_CAP)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

pub(crate) fn determinant(m: &[Vec<i64>]) -> i64 {
    // fraction-free Bareiss elimination
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

impl RootSystem {
    pub fn from_cartan(
        name: &str,
        cartan: Vec<Vec<i64>>,
        lattice: LatticeKind,
        cap: usize,
    ) -> Result<Self> {
        let l = cartan.len();
        if l == 0 || cartan.iter().any(|r| r.len() != l) {
            return invalid("Cartan matrix must be square and non-empty");
        }
        for i in 0..l {
            if cartan[i][i] != 2 {
                return invalid("Cartan matrix diagonal must be 2");
            }
            for j in 0..l {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return invalid("Cartan matrix off-diagonal entries must be <= 0 and symmetric in support");
                }
            }
        }
        let at = transpose(&cartan);
        // closure of the simple (root, coroot) pairs under simple reflections
        let unit = |i: usize| -> Vec<i64> { (0..l).map(|k| i64::from(k == i)).collect() };
        let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = (0..l).map(|i| (unit(i), unit(i))).collect();
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = pairs.iter().cloned().collect();
        let mut head = 0;
        while head < pairs.len() {
            let (x, d) = pairs[head].clone();
            head += 1;
            for j in 0..l {
                let nx = cartan[j].iter().zip(&x).map(|(a, b)| a * b).sum::<i64>();
                let nd = at[j].iter().zip(&d).map(|(a, b)| a * b).sum::<i64>();
                let mut y = x.clone();
                y[j] -= nx;
                let mut e = d.clone();
                e[j] -= nd;
                match seen.get(&y) {
                    Some(prev) if *prev != e => {
                        return invalid("inconsistent coroots: not a root system");
                    }
                    Some(_) => {}
                    None => {
                        if seen.len() >= cap {
                            return Err(Error::NotFiniteType { cap });
                        }
                        seen.insert(y.clone(), e.clone());
                        pairs.push((y, e));
                    }
                }
            }
        }
        let mut positive: Vec<(Vec<i64>, Vec<i64>)> = pairs
            .into_iter()
            .filter(|(x, _)| x.iter().all(|&c| c >= 0))
            .collect();
        if positive.len() * 2 != seen.len() {
            return invalid("roots are not split into positive and negative halves");
        }
        positive.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let mut roots: Vec<Vec<i64>> = positive.iter().map(|p| p.0.clone()).collect();
        let mut coroots: Vec<Vec<i64>> = positive.iter().map(|p| p.1.clone()).collect();
        for k in 0..positive.len() {
            roots.push(roots[k].iter().map(|c| -c).collect());
            coroots.push(coroots[k].iter().map(|c| -c).collect());
        }
        let lookup: HashMap<Vec<i64>, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let (lattice_coords, coroot_forms) = match lattice {
            LatticeKind::SimplyConnected => (
                roots.iter().map(|x| mat_vec(&cartan, x)).collect(),
                coroots.clone(),
            ),
            LatticeKind::Adjoint => (
                roots.clone(),
                coroots.iter().map(|d| mat_vec(&at, d)).collect(),
            ),
        };
        let mut rs = RootSystem {
            name: name.to_string(),
            cartan,
            lattice,
            roots,
            coroots,
            lattice_coords,
            coroot_forms,
            lookup,
            simple_perm: Vec::new(),
            diagonal: None,
        };
        rs.simple_perm = (0..l)
            .map(|i| (0..rs.num_roots()).map(|r| rs.reflect_index(i, r)).collect())
            .collect();
        rs.check_axioms()?;
        rs.diagonal = rs.compute_diagonal();
        Ok(rs)
    }

    fn check_axioms(&self) -> Result<()> {
        for r in 0..self.num_roots() {
            if self.pairing(r, &self.lattice_coords[r]) != 2 {
                return invalid("n_r(r) != 2");
            }
            for s in 0..self.num_roots() {
                let img = self.reflect_coords(s, &self.roots[r]);
                if !self.lookup.contains_key(&img) {
                    return invalid("root set not closed under reflections");
                }
            }
            // reduced: the only multiples of r in Phi are +-r
            let x = &self.roots[r];
            for s in 0..self.num_roots() {
                let y = &self.roots[s];
                let proportional = (0..x.len())
                    .all(|i| (0..x.len()).all(|j| x[i] * y[j] == x[j] * y[i]));
                if proportional && y != x && *y != x.iter().map(|c| -c).collect::<Vec<_>>() {
                    return invalid("non-reduced root system");
                }
            }
        }
        Ok(())
    }

    /// For a single type `A_l` on the weight lattice, the characters
    /// `e_1, ..., e_{l+1}` of the diagonal torus in `L`-coordinates.
    fn compute_diagonal(&self) -> Option<Vec<Vec<i64>>> {
        let l = self.rank();
        if self.lattice != LatticeKind::SimplyConnected
            || self.cartan != cartan_matrix('A', l).ok()?
        {
            return None;
        }
        // e_1 = w_1; e_{j+1} = e_j - a_j
        let mut out = Vec::with_capacity(l + 1);
        let mut cur: Vec<i64> = (0..l).map(|k| i64::from(k == 0)).collect();
        out.push(cur.clone());
        for j in 0..l {
            let a = &self.lattice_coords[j];
            cur = cur.iter().zip(a).map(|(x, y)| x - y).collect();
            out.push(cur.clone());
        }
        Some(out)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn lattice(&self) -> LatticeKind {
        self.lattice
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> std::ops::Range<usize> {
        0..self.num_positive()
    }

    pub fn simple_roots(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.num_positive()
    }

    pub fn neg(&self, r: usize) -> usize {
        (r + self.num_positive()) % self.num_roots()
    }

    pub fn height(&self, r: usize) -> i64 {
        self.roots[r].iter().sum()
    }

    /// Simple-root coordinates.
    pub fn root(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }

    /// Simple-coroot coordinates of the coroot.
    pub fn coroot(&self, r: usize) -> &[i64] {
        &self.coroots[r]
    }

    /// Coordinates of the root in the chosen basis of `L`.
    pub fn root_in_lattice(&self, r: usize) -> &[i64] {
        &self.lattice_coords[r]
    }

    /// `n_r` as an integral covector on the chosen basis of `L`.
    pub fn coroot_form(&self, r: usize) -> &[i64] {
        &self.coroot_forms[r]
    }

    /// The primitive integral covector proportional to `n_r`.
    pub fn primitive_coroot_form(&self, r: usize) -> Vec<i64> {
        let f = &self.coroot_forms[r];
        let g = f.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        f.iter().map(|x| x / g).collect()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    /// `n_r(x)` for `x` in `L`-coordinates.
    pub fn pairing(&self, r: usize, x: &[i64]) -> i64 {
        dot(&self.coroot_forms[r], x)
    }

    /// `n_r(x)` for `x` in simple-root coordinates.
    fn pairing_root_coords(&self, r: usize, x: &[i64]) -> i64 {
        let d = &self.coroots[r];
        (0..self.rank()).map(|i| d[i] * dot(&self.cartan[i], x)).sum()
    }

    fn reflect_coords(&self, r: usize, x: &[i64]) -> Vec<i64> {
        let n = self.pairing_root_coords(r, x);
        x.iter().zip(&self.roots[r]).map(|(a, b)| a - n * b).collect()
    }

    /// `s_r(x) = x - n_r(x) r` on `L`-coordinates.
    pub fn reflect_lattice(&self, r: usize, x: &[i64]) -> Vec<i64> {
        let n = self.pairing(r, x);
        x.iter()
            .zip(&self.lattice_coords[r])
            .map(|(a, b)| a - n * b)
            .collect()
    }

    /// `s_r(x)` where `r` is given in simple-root coordinates and `x` in
    /// `L`-coordinates.
    pub fn reflect(&self, r: &[i64], x: &[i64]) -> Result<Vec<i64>> {
        let idx = self
            .index_of(r)
            .ok_or_else(|| Error::Invalid(format!("{r:?} is not a root")))?;
        if x.len() != self.rank() {
            return invalid("lattice vector has wrong length");
        }
        Ok(self.reflect_lattice(idx, x))
    }

    /// Index of `s_i(r)` for a simple reflection `s_i`.
    pub fn reflect_index(&self, i: usize, r: usize) -> usize {
        if let Some(perm) = self.simple_perm.get(i) {
            return perm[r];
        }
        self.lookup[&self.reflect_coords(i, &self.roots[r])]
    }

    /// Index of `s_s(r)` for arbitrary roots.
    pub fn reflect_root(&self, s: usize, r: usize) -> usize {
        self.lookup[&self.reflect_coords(s, &self.roots[r])]
    }

    /// Diagonal characters `e_1, ..., e_{l+1}` in `L`-coordinates (type `A`
    /// on the weight lattice only).
    pub fn diagonal_characters(&self) -> Option<&[Vec<i64>]> {
        self.diagonal.as_deref()
    }

    /// For type `A`: the pair `(i, j)` with `r = e_i - e_j` (0-based).
    pub fn type_a_pair(&self, r: usize) -> Option<(usize, usize)> {
        let l = self.rank();
        if self.cartan != cartan_matrix('A', l).ok()? {
            return None;
        }
        let x = &self.roots[r];
        let support: Vec<usize> = (0..l).filter(|&k| x[k] != 0).collect();
        let (lo, hi) = (*support.first()?, *support.last()?);
        if x[lo] > 0 {
            Some((lo, hi + 1))
        } else {
            Some((hi + 1, lo))
        }
    }

    /// `|det A|`, the index of the root lattice in the weight lattice.
    pub fn connection_index(&self) -> u64 {
        determinant(&self.cartan).unsigned_abs()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lattice {
            LatticeKind::SimplyConnected => write!(f, "{}", self.name),
            LatticeKind::Adjoint => write!(f, "{}:adjoint", self.name),
        }
    }
}

/// A linear map `L -> L'` given by its integer matrix: column `j` is the
/// image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    matrix: Vec<Vec<i64>>,
}

impl LatticeMap {
    pub fn new(matrix: Vec<Vec<i64>>) -> Self {
        LatticeMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LatticeMap {
            matrix: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
        }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrix, x)
    }

    /// `[L' : phi(L)]` for a map between lattices of equal rank.
    pub fn index(&self) -> u64 {
        determinant(&self.matrix).unsigned_abs()
    }
}

/// The simply connected system with the same roots, and the map `phi` from
/// `L` into its weight lattice.
pub fn simply_connected_cover(rs: &RootSystem) -> (RootSystem, LatticeMap) {
    match rs.lattice {
        LatticeKind::SimplyConnected => (rs.clone(), LatticeMap::identity(rs.rank())),
        LatticeKind::Adjoint => {
            let mut sc = rs.clone();
            sc.lattice = LatticeKind::SimplyConnected;
            sc.lattice_coords = rs.roots.iter().map(|x| mat_vec(&rs.cartan, x)).collect();
            sc.coroot_forms = rs.coroots.clone();
            sc.diagonal = sc.compute_diagonal();
            (sc, LatticeMap::new(rs.cartan.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(name: &str) -> RootSystem {
        parse_root_system(name).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (name, n) in [("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("B2", 4), ("C2", 4), ("G2", 6), ("B3", 9), ("A1xA1", 2), ("D4", 12), ("F4", 24), ("E6", 36)] {
            assert_eq!(sc(name).num_positive(), n, "{name}");
        }
    }

    #[test]
    fn simple_roots_come_first() {
        let rs = sc("G2");
        assert_eq!(rs.root(0), &[1, 0]);
        assert_eq!(rs.root(1), &[0, 1]);
        // highest root of G2 is 3a1 + 2a2
        assert_eq!(rs.root(5), &[3, 2]);
    }

    #[test]
    fn reflection_examples() {
        let rs = sc("A2:adjoint");
        assert_eq!(rs.reflect(&[1, 0], &[1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(rs.reflect(&[1, 0], &[0, 1]).unwrap(), vec![1, 1]);
        assert!(rs.reflect(&[2, 0], &[0, 1]).is_err());
        let a1 = sc("A1xA1:adjoint");
        assert_eq!(a1.reflect(&[1, 0], &[0, 1]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn rejects_non_finite_type() {
        let affine = RootSystem::from_cartan("A1~", vec![vec![2, -2], vec![-2, 2]], LatticeKind::SimplyConnected, 240);
        assert_eq!(affine, Err(Error::NotFiniteType { cap: 240 }));
        assert!(parse_root_system("[[2,-1],[-1,3]]").is_err());
        assert!(parse_root_system("Q3").is_err());
    }

    #[test]
    fn covers() {
        let (cover, phi) = simply_connected_cover(&sc("A1:adjoint"));
        assert_eq!(phi.matrix(), &[vec![2]]);
        assert_eq!(phi.index(), 2);
        assert_eq!(cover.lattice(), LatticeKind::SimplyConnected);
        assert_eq!(simply_connected_cover(&sc("A2:adjoint")).1.index(), 3);
        let (same, id) = simply_connected_cover(&sc("B2"));
        assert_eq!(same, sc("B2"));
        assert_eq!(id, LatticeMap::identity(2));
    }

    #[test]
    fn cover_intertwines_coroots() {
        for name in ["A1:adjoint", "A2:adjoint", "B2:adjoint", "G2:adjoint", "A3:adjoint", "B3:adjoint"] {
            let rs = sc(name);
            let (cover, phi) = simply_connected_cover(&rs);
            for r in 0..rs.num_roots() {
                assert_eq!(phi.apply(rs.root_in_lattice(r)), cover.root_in_lattice(r));
                for j in 0..rs.rank() {
                    let v: Vec<i64> = (0..rs.rank()).map(|k| i64::from(k == j)).collect();
                    assert_eq!(rs.pairing(r, &v), cover.pairing(r, &phi.apply(&v)));
                }
            }
        }
    }

    #[test]
    fn diagonal_characters_of_type_a() {
        for l in 1..=4 {
            let rs = sc(&format!("A{l}"));
            let e = rs.diagonal_characters().unwrap();
            assert_eq!(e.len(), l + 1);
            for i in 0..l {
                for (j, ej) in e.iter().enumerate() {
                    let expected = i64::from(i == j) - i64::from(i + 1 == j);
                    assert_eq!(rs.pairing(i, ej), expected);
                }
            }
            for r in 0..rs.num_roots() {
                let (i, j) = rs.type_a_pair(r).unwrap();
                let diff: Vec<i64> = e[i].iter().zip(&e[j]).map(|(a, b)| a - b).collect();
                assert_eq!(diff, rs.root_in_lattice(r));
            }
        }
        assert!(sc("A2:adjoint").diagonal_characters().is_none());
        assert!(sc("B2").diagonal_characters().is_none());
    }
}
