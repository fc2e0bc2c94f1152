//! Brute-force decomposition by enumerating every subset of `V(R)`.
//!
//! This path shares nothing with [`crate::decompose`] beyond the lazy cycle
//! components: it walks all `2^(2t)` subsets in Gray-code order, updating the
//! coordinate sums one vertex at a time, and keeps each subset whose sum is a
//! vertex of `H(t, 2)`. The minimum is then certified to be the unique
//! inclusion-minimal subset: it is the only one of its size, and every other
//! subset with the same sum strictly contains it.

use crate::cycle::{cycle_component, CycleIndexSet};
use crate::error::{Error, Result};
use crate::sign::{check_dimension, SignVector};

/// Largest dimension accepted by the oracle (`2^20` subsets).
pub const ORACLE_MAX_DIMENSION: u64 = 10;

fn check_oracle_dimension(t: u64) -> Result<()> {
    check_dimension(t)?;
    if t > ORACLE_MAX_DIMENSION {
        return Err(Error::Range {
            what: "oracle dimension",
            value: t,
            lo: crate::sign::MIN_DIMENSION,
            hi: ORACLE_MAX_DIMENSION,
        });
    }
    Ok(())
}

/// Calls `visit(negative_mask, subset_mask)` for every subset of `{R^0..R^{2t-1}}`
/// whose coordinate sum is a `±1` vector.
fn for_each_vertex_sum(t: u64, mut visit: impl FnMut(u32, u32)) {
    let t_us = t as usize;
    let rows: Vec<Vec<i32>> = (0..2 * t)
        .map(|k| {
            (1..=t)
                .map(|e| cycle_component(t, k, e).expect("in range").value() as i32)
                .collect()
        })
        .collect();
    let mut sums = vec![0i32; t_us];
    let mut mask = 0u32;
    let total = 1u64 << (2 * t);
    for step in 1..total {
        let j = step.trailing_zeros() as usize;
        mask ^= 1 << j;
        let sign = if mask & (1 << j) != 0 { 1 } else { -1 };
        for (s, r) in sums.iter_mut().zip(&rows[j]) {
            *s += sign * r;
        }
        let mut neg = 0u32;
        let mut ok = true;
        for (e, &s) in sums.iter().enumerate() {
            match s {
                1 => {}
                -1 => neg |= 1 << e,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            visit(neg, mask);
        }
    }
}

fn mask_to_indices(mask: u32) -> Vec<u64> {
    (0..32u32)
        .filter(|j| mask & (1 << j) != 0)
        .map(u64::from)
        .collect()
}

fn negative_mask(v: &SignVector) -> u32 {
    v.negative_words()[0] as u32
}

/// Picks the minimum among all subsets summing to one vertex and certifies it.
fn certify(t: u64, neg: u32, masks: &[u32]) -> Result<CycleIndexSet> {
    let Some(&min) = masks.iter().min_by_key(|m| m.count_ones()) else {
        return Err(Error::Oracle(format!(
            "no subset of V(R) sums to the vertex with negative mask {neg:#b} (t={t})"
        )));
    };
    let size = min.count_ones();
    for &m in masks {
        if m == min {
            continue;
        }
        if m.count_ones() == size {
            return Err(Error::Oracle(format!(
                "two minimum subsets {:?} and {:?} for mask {neg:#b}",
                mask_to_indices(min),
                mask_to_indices(m)
            )));
        }
        if m & min != min {
            return Err(Error::Oracle(format!(
                "subset {:?} sums to the same vertex but does not contain {:?}",
                mask_to_indices(m),
                mask_to_indices(min)
            )));
        }
    }
    CycleIndexSet::new(t, mask_to_indices(min))
}

/// Decomposes `v` by exhaustive enumeration. Only for `3 <= t <= 10`.
pub fn brute_force_decompose(v: &SignVector) -> Result<CycleIndexSet> {
    let t = v.dim();
    check_oracle_dimension(t)?;
    let target = negative_mask(v);
    let mut masks = Vec::new();
    for_each_vertex_sum(t, |neg, mask| {
        if neg == target {
            masks.push(mask);
        }
    });
    certify(t, target, &masks)
}

/// Every decomposition for one dimension, from a single enumeration pass.
#[derive(Debug, Clone)]
pub struct OracleTable {
    t: u64,
    sets: Vec<CycleIndexSet>,
    summing_subsets: u64,
}

impl OracleTable {
    pub fn build(t: u64) -> Result<Self> {
        check_oracle_dimension(t)?;
        let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); 1 << t];
        let mut summing_subsets = 0;
        for_each_vertex_sum(t, |neg, mask| {
            by_vertex[neg as usize].push(mask);
            summing_subsets += 1;
        });
        let sets = by_vertex
            .iter()
            .enumerate()
            .map(|(neg, masks)| certify(t, neg as u32, masks))
            .collect::<Result<Vec<_>>>()?;
        Ok(OracleTable {
            t,
            sets,
            summing_subsets,
        })
    }

    pub fn dim(&self) -> u64 {
        self.t
    }

    /// Number of subsets (of any size) whose sum is some vertex.
    pub fn summing_subsets(&self) -> u64 {
        self.summing_subsets
    }

    pub fn get(&self, v: &SignVector) -> Result<&CycleIndexSet> {
        if v.dim() != self.t {
            return Err(Error::DimensionMismatch {
                left: self.t,
                right: v.dim(),
            });
        }
        Ok(&self.sets[negative_mask(v) as usize])
    }

    /// All `2^t` vertices with their decompositions, ordered by negative mask.
    pub fn iter(&self) -> impl Iterator<Item = (SignVector, &CycleIndexSet)> + '_ {
        self.sets.iter().enumerate().map(move |(neg, set)| {
            let v = SignVector::from_negative_words(self.t, vec![neg as u64]).expect("t >= 3");
            (v, set)
        })
    }
}
