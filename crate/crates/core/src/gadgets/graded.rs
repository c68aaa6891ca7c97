/// A finite graded set, kept sorted by `(degree, payload)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSet<T> {
    items: Vec<(usize, T)>,
}

impl<T: Ord> GradedSet<T> {
    pub fn new(mut items: Vec<(usize, T)>) -> Self {
        items.sort();
        GradedSet { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, T)> {
        self.items.iter()
    }

    pub fn items(&self) -> &[(usize, T)] {
        &self.items
    }

    /// Number of elements in each degree `0..=max`.
    pub fn census(&self) -> Vec<u128> {
        let top = self.items.last().map_or(0, |(k, _)| k + 1);
        let mut out = vec![0u128; top];
        for (k, _) in &self.items {
            out[*k] += 1;
        }
        out
    }

    pub fn degree(&self, k: usize) -> impl Iterator<Item = &T> {
        self.items.iter().filter(move |(d, _)| *d == k).map(|(_, x)| x)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.items.first().map(|(k, _)| *k)
    }

    pub fn map<U: Ord>(self, f: impl Fn(T) -> U) -> GradedSet<U> {
        GradedSet::new(self.items.into_iter().map(|(k, x)| (k, f(x))).collect())
    }
}

impl<T> IntoIterator for GradedSet<T> {
    type Item = (usize, T);
    type IntoIter = std::vec::IntoIter<(usize, T)>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.into_iter()
    }
}

/// Pointwise product of two degree censuses.
pub fn convolve(a: &[u128], b: &[u128]) -> Vec<u128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Adds `b` into `acc` degree by degree.
pub fn accumulate(acc: &mut Vec<u128>, b: &[u128]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), 0);
    }
    for (x, y) in acc.iter_mut().zip(b) {
        *x += y;
    }
}
