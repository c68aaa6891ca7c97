use super::matrix::{self, RingMatrix};
use crate::arith::field::{FieldElem, FiniteField};
use crate::arith::ring::Ring;
use crate::error::{Error, Result};

pub const DEFAULT_GROUP_BUDGET: u128 = 100_000_000;

/// All of `SL_{l+1}(F_q)` by filtering every matrix on its determinant, in
/// lexicographic order of the row-major entries.
pub fn enumerate_group(rank: usize, field: &FiniteField, budget: u128) -> Result<Vec<RingMatrix<FieldElem>>> {
    let n = rank + 1;
    let q = field.order() as u128;
    let cells = (n * n) as u32;
    let total = q.checked_pow(cells).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded { needed: total, budget });
    }
    let mut out = Vec::new();
    let mut entries = vec![0 as FieldElem; n * n];
    loop {
        let m: RingMatrix<FieldElem> = entries.chunks(n).map(<[FieldElem]>::to_vec).collect();
        if field.is_one(&matrix::det(field, &m)) {
            out.push(m);
        }
        // odometer, last entry fastest
        let mut k = n * n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            entries[k] += 1;
            if entries[k] < field.order() {
                break;
            }
            entries[k] = 0;
        }
    }
}
