//! The distinguished symmetric cycle `R = (R^0, R^1, ..., R^{2t-1}, R^0)` of `H(t, 2)`.
//!
//! `R^0` is all-ones, `R^s` for `1 <= s <= t-1` is `-1` on `1..=s` and `+1`
//! after, and `R^{k+t} = -R^k`. Cycle vertices are never stored; any
//! coordinate is computed from its index in constant time.

use std::fmt;

use crate::error::{Error, Result};
use crate::sign::{check_dimension, Sign, SignVector};

fn check_index(t: u64, k: u64) -> Result<()> {
    if k >= 2 * t {
        return Err(Error::Range {
            what: "cycle index",
            value: k,
            lo: 0,
            hi: 2 * t - 1,
        });
    }
    Ok(())
}

/// Coordinate `e` of `R^k`, without range checks.
#[inline(always)]
pub(crate) fn component_unchecked(t: u64, k: u64, e: u64) -> Sign {
    let (base, flipped) = if k < t { (k, false) } else { (k - t, true) };
    let neg = (e <= base) ^ flipped;
    if neg {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Coordinate `e` (1-based) of the cycle vertex `R^k` (0-based).
pub fn cycle_component(t: u64, k: u64, e: u64) -> Result<Sign> {
    check_dimension(t)?;
    check_index(t, k)?;
    if !(1..=t).contains(&e) {
        return Err(Error::Range {
            what: "coordinate",
            value: e,
            lo: 1,
            hi: t,
        });
    }
    Ok(component_unchecked(t, k, e))
}

/// Materializes `R^k`.
pub fn cycle_vertex(t: u64, k: u64) -> Result<SignVector> {
    check_dimension(t)?;
    check_index(t, k)?;
    if k < t {
        let mut v = SignVector::ones(t)?;
        if k > 0 {
            v.set_negative_range(1, k);
        }
        Ok(v)
    } else {
        Ok(-cycle_vertex(t, k - t)?)
    }
}

/// A set of cycle indices naming a subset of `V(R)`.
///
/// Invariants: odd cardinality, strictly increasing, every index below `2t`,
/// and no antipodal pair `{k, k + t}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleIndexSet {
    t: u64,
    indices: Vec<u64>,
}

impl CycleIndexSet {
    pub fn new(t: u64, indices: Vec<u64>) -> Result<Self> {
        check_dimension(t)?;
        validate_indices(t, &indices).map_err(Error::IndexSet)?;
        Ok(CycleIndexSet { t, indices })
    }

    pub(crate) fn from_canonical(t: u64, indices: Vec<u64>) -> Self {
        debug_assert!(validate_indices(t, &indices).is_ok(), "{indices:?}");
        CycleIndexSet { t, indices }
    }

    #[inline]
    pub fn dim(&self) -> u64 {
        self.t
    }

    #[inline]
    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn into_indices(self) -> Vec<u64> {
        self.indices
    }

    /// `q(T)`, the number of cycle vertices in the set.
    #[inline]
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.indices.binary_search(&k).is_ok()
    }

    /// Materializes every named cycle vertex. Only meant for small `t`.
    pub fn vertices(&self) -> Vec<SignVector> {
        self.indices
            .iter()
            .map(|&k| cycle_vertex(self.t, k).expect("validated index"))
            .collect()
    }
}

/// Checks the index-set invariants, returning a human-readable reason on failure.
pub(crate) fn validate_indices(t: u64, indices: &[u64]) -> std::result::Result<(), String> {
    if indices.len().is_multiple_of(2) {
        return Err(format!("cardinality {} is even", indices.len()));
    }
    for pair in indices.windows(2) {
        if pair[0] >= pair[1] {
            return Err(format!(
                "indices not strictly increasing: {} then {}",
                pair[0], pair[1]
            ));
        }
    }
    if let Some(&k) = indices.last() {
        if k >= 2 * t {
            return Err(format!("index {k} exceeds {}", 2 * t - 1));
        }
    }
    let split = indices.partition_point(|&k| k < t);
    let (low, high) = indices.split_at(split);
    let (mut i, mut j) = (0, 0);
    while i < low.len() && j < high.len() {
        let h = high[j] - t;
        match low[i].cmp(&h) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                return Err(format!("antipodal pair {} and {}", low[i], high[j]));
            }
        }
    }
    Ok(())
}

impl fmt::Debug for CycleIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleIndexSet(t={}, ", self.t)?;
        f.debug_set().entries(&self.indices).finish()?;
        write!(f, ")")
    }
}
