//! Exact rank of integer matrices over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cycle::CycleIndexSet;

/// Rank over `Q` via fraction-free (Bareiss) elimination on arbitrary-precision integers.
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    assert!(m.iter().all(|r| r.len() == n_cols), "ragged matrix");

    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in below {
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (&pivot * &*x - &factor * p) / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Rank of the cycle vertices named by `set`, materialized as integer rows.
pub fn cycle_set_rank(set: &CycleIndexSet) -> usize {
    let rows: Vec<Vec<i64>> = set.vertices().iter().map(|v| v.to_values()).collect();
    exact_rank(&rows)
}
