//! Square matrices over a [`Ring`], stored row-major as nested vectors.

use crate::arith::ring::Ring;

pub type RingMatrix<E> = Vec<Vec<E>>;

pub fn identity<R: Ring>(ring: &R, n: usize) -> RingMatrix<R::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect()
}

pub fn mul<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, b: &RingMatrix<R::Elem>) -> RingMatrix<R::Elem> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(ring.zero(), |acc, k| {
                        if ring.is_zero(&a[i][k]) || ring.is_zero(&b[k][j]) {
                            acc
                        } else {
                            ring.add(&acc, &ring.mul(&a[i][k], &b[k][j]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn product<'a, R: Ring + 'a>(
    ring: &R,
    n: usize,
    factors: impl IntoIterator<Item = &'a RingMatrix<R::Elem>>,
) -> RingMatrix<R::Elem> {
    factors.into_iter().fold(identity(ring, n), |acc, m| mul(ring, &acc, m))
}

pub fn transpose<E: Clone>(a: &RingMatrix<E>) -> RingMatrix<E> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

pub fn map<E, F>(a: &RingMatrix<E>, f: impl Fn(&E) -> F) -> RingMatrix<F> {
    a.iter().map(|row| row.iter().map(&f).collect()).collect()
}

/// Determinant by cofactor expansion along the first row; exact over any
/// commutative ring and fine for the small sizes used here.
pub fn det<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> R::Elem {
    let n = a.len();
    match n {
        0 => ring.one(),
        1 => a[0][0].clone(),
        2 => ring.sub(&ring.mul(&a[0][0], &a[1][1]), &ring.mul(&a[0][1], &a[1][0])),
        _ => {
            let mut acc = ring.zero();
            for j in 0..n {
                if ring.is_zero(&a[0][j]) {
                    continue;
                }
                let minor: RingMatrix<R::Elem> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = ring.mul(&a[0][j], &det(ring, &minor));
                acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
            }
            acc
        }
    }
}

pub fn is_diagonal<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || ring.is_zero(x)))
}

/// Upper unitriangular.
pub fn is_unipotent_upper<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| match i.cmp(&j) {
            std::cmp::Ordering::Equal => ring.is_one(x),
            std::cmp::Ordering::Greater => ring.is_zero(x),
            std::cmp::Ordering::Less => true,
        })
    })
}
