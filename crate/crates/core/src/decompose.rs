//! Decomposition of a vertex of `H(t, 2)` over the symmetric cycle, and its inverse.
//!
//! With the negative part split into maximal intervals `[a_1, b_1] < ... < [a_m, b_m]`,
//! every interval contributes the close index `b_i` and the open index
//! `t + a_i - 1`. The boundary cases then fix the set:
//!
//! * `m = 0`: `{0}`;
//! * `a_1 > 1` and `b_m < t`: add `0`, cardinality `2m + 1`;
//! * otherwise drop one candidate equal to `t` (the open of `a_1 = 1` or the
//!   close of `b_m = t`), cardinality `2m - 1`.
//!
//! All closes lie in `1..=t` and all opens in `t..=2t-1`, so concatenating the
//! two ascending candidate lists is already sorted.

use crate::cycle::{component_unchecked, CycleIndexSet};
use crate::error::{Error, Result};
use crate::interval::NegativeRuns;
use crate::sign::{check_dimension, Sign, SignVector};

fn assemble(t: u64, mut closes: Vec<u64>, opens: Vec<u64>) -> Vec<u64> {
    debug_assert_eq!(closes.len(), opens.len());
    if closes.is_empty() {
        return vec![0];
    }
    let starts_at_one = opens[0] == t;
    let ends_at_t = *closes.last().unwrap() == t;
    let skip_first_open = match (starts_at_one, ends_at_t) {
        (false, false) => {
            let mut out = Vec::with_capacity(closes.len() + opens.len() + 1);
            out.push(0);
            out.extend_from_slice(&closes);
            out.extend_from_slice(&opens);
            return out;
        }
        (_, true) => {
            closes.pop();
            false
        }
        (true, false) => true,
    };
    let opens = if skip_first_open {
        &opens[1..]
    } else {
        &opens[..]
    };
    closes.reserve_exact(opens.len());
    closes.extend_from_slice(opens);
    closes
}

/// The unique inclusion-minimal set of cycle indices whose vertices sum to `v`.
pub fn decompose(v: &SignVector) -> CycleIndexSet {
    let t = v.dim();
    let mut closes = Vec::new();
    let mut opens = Vec::new();
    for iv in NegativeRuns::new(v) {
        closes.push(iv.end());
        opens.push(t + iv.start() - 1);
    }
    CycleIndexSet::from_canonical(t, assemble(t, closes, opens))
}

/// Single-pass decomposer fed one sign per coordinate, in order.
///
/// Keeps only the candidate indices found so far plus a few counters; the
/// input vector is never stored. Open candidates are kept as `a - 1` and shifted
/// by `t` when the session finishes, which also lets a session run without
/// knowing `t` in advance (see [`StreamDecomposer::open_ended`]).
#[derive(Debug, Clone)]
pub struct StreamDecomposer {
    expected: Option<u64>,
    pos: u64,
    in_run: bool,
    closes: Vec<u64>,
    open_offsets: Vec<u64>,
}

impl StreamDecomposer {
    /// A session that expects exactly `t` sign events.
    pub fn new(t: u64) -> Result<Self> {
        check_dimension(t)?;
        Ok(Self::with_expected(Some(t)))
    }

    /// A session whose dimension is the number of events seen at [`finish`](Self::finish).
    pub fn open_ended() -> Self {
        Self::with_expected(None)
    }

    fn with_expected(expected: Option<u64>) -> Self {
        StreamDecomposer {
            expected,
            pos: 0,
            in_run: false,
            closes: Vec::new(),
            open_offsets: Vec::new(),
        }
    }

    /// Number of sign events consumed so far.
    pub fn position(&self) -> u64 {
        self.pos
    }

    /// Candidate indices currently held.
    pub fn candidate_count(&self) -> usize {
        self.closes.len() + self.open_offsets.len()
    }

    pub fn push(&mut self, s: Sign) -> Result<()> {
        if let Some(t) = self.expected {
            if self.pos == t {
                return Err(Error::Protocol {
                    expected: t,
                    got: t + 1,
                });
            }
        }
        self.pos += 1;
        match (s, self.in_run) {
            (Sign::Minus, false) => {
                self.open_offsets.push(self.pos - 1);
                self.in_run = true;
            }
            (Sign::Plus, true) => {
                self.closes.push(self.pos - 1);
                self.in_run = false;
            }
            _ => {}
        }
        Ok(())
    }

    /// Feeds eight signs from a byte, most significant bit first, bit `1` meaning `-1`.
    pub fn push_byte(&mut self, byte: u8) -> Result<()> {
        if let Some(t) = self.expected {
            if t - self.pos < 8 {
                return Err(Error::Protocol {
                    expected: t,
                    got: self.pos + 8,
                });
            }
        }
        let uniform = if self.in_run { 0xFF } else { 0x00 };
        if byte == uniform {
            self.pos += 8;
            return Ok(());
        }
        for shift in (0..8).rev() {
            let s = if (byte >> shift) & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            };
            self.push(s)?;
        }
        Ok(())
    }

    pub fn push_bytes(&mut self, bytes: &[u8]) -> Result<()> {
        bytes.iter().try_for_each(|&b| self.push_byte(b))
    }

    /// Ends the session and returns the decomposition of the vector that was streamed.
    pub fn finish(mut self) -> Result<CycleIndexSet> {
        let t = match self.expected {
            Some(t) if t != self.pos => {
                return Err(Error::Protocol {
                    expected: t,
                    got: self.pos,
                })
            }
            Some(t) => t,
            None => {
                check_dimension(self.pos)?;
                self.pos
            }
        };
        if self.in_run {
            self.closes.push(t);
        }
        let mut opens = self.open_offsets;
        opens.iter_mut().for_each(|a| *a += t);
        Ok(CycleIndexSet::from_canonical(
            t,
            assemble(t, self.closes, opens),
        ))
    }
}

/// Streams `signs` through a [`StreamDecomposer`] expecting exactly `t` events.
pub fn decompose_stream<I>(t: u64, signs: I) -> Result<CycleIndexSet>
where
    I: IntoIterator<Item = Sign>,
{
    let mut session = StreamDecomposer::new(t)?;
    for s in signs {
        session.push(s)?;
    }
    session.finish()
}

/// Sums the cycle vertices named by `indices` and returns the result if it is a vertex.
///
/// The sum is piecewise constant in the coordinate: `R^k` for `1 <= k < t`
/// steps from `-1` to `+1` after coordinate `k`, and `R^{k+t}` steps the other
/// way. The value at coordinate 1 comes from the lazy components and the
/// breakpoints are swept in order, so no cycle vertex is materialized.
pub fn recompose(t: u64, indices: &[u64]) -> Result<SignVector> {
    check_dimension(t)?;
    for pair in indices.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::IndexSet(format!(
                "indices not strictly increasing: {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    if let Some(&k) = indices.last() {
        if k >= 2 * t {
            return Err(Error::Range {
                what: "cycle index",
                value: k,
                lo: 0,
                hi: 2 * t - 1,
            });
        }
    }

    let mut value: i64 = indices
        .iter()
        .map(|&k| component_unchecked(t, k, 1).value())
        .sum();

    let split = indices.partition_point(|&k| k < t);
    let (low, high) = indices.split_at(split);
    // (coordinate where the step takes effect, delta)
    let mut rising = low
        .iter()
        .filter(|&&k| k >= 1)
        .map(|&k| (k + 1, 2i64))
        .peekable();
    let mut falling = high
        .iter()
        .filter(|&&k| k > t)
        .map(|&k| (k - t + 1, -2i64))
        .peekable();

    let mut out = SignVector::ones(t)?;
    let mut seg_start = 1u64;
    loop {
        let next = match (rising.peek(), falling.peek()) {
            (None, None) => None,
            (Some(r), None) => Some(r.0),
            (None, Some(f)) => Some(f.0),
            (Some(r), Some(f)) => Some(r.0.min(f.0)),
        };
        let seg_end = next.map_or(t, |c| c - 1);
        if seg_end >= seg_start {
            match value {
                1 => {}
                -1 => out.set_negative_range(seg_start, seg_end),
                sum => {
                    return Err(Error::NotAVertex {
                        coordinate: seg_start,
                        sum,
                    })
                }
            }
        }
        let Some(c) = next else { break };
        while rising.peek().is_some_and(|r| r.0 == c) {
            value += rising.next().unwrap().1;
        }
        while falling.peek().is_some_and(|f| f.0 == c) {
            value += falling.next().unwrap().1;
        }
        seg_start = c;
    }
    Ok(out)
}

impl CycleIndexSet {
    /// The vertex these indices sum to.
    pub fn recompose(&self) -> Result<SignVector> {
        recompose(self.dim(), self.indices())
    }
}
