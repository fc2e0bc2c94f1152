//! Inclusion-maximal intervals of the negative part of a sign vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::sign::SignVector;

/// A closed 1-based coordinate interval `[start, end]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    start: u64,
    end: u64,
}

impl Interval {
    pub fn new(start: u64, end: u64) -> Result<Self> {
        if start == 0 || start > end {
            return Err(Error::Format(format!("bad interval [{start}, {end}]")));
        }
        Ok(Interval { start, end })
    }

    #[inline]
    pub fn start(&self) -> u64 {
        self.start
    }

    #[inline]
    pub fn end(&self) -> u64 {
        self.end
    }

    pub fn len(&self) -> u64 {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: u64) -> bool {
        (self.start..=self.end).contains(&e)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end)
    }
}

/// Sorted, pairwise disjoint and non-adjacent intervals inside `[1, t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSet {
    t: u64,
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(t: u64, intervals: Vec<Interval>) -> Result<Self> {
        if let Some(last) = intervals.last() {
            if last.end > t {
                return Err(Error::Format(format!(
                    "interval {last:?} exceeds dimension {t}"
                )));
            }
        }
        for pair in intervals.windows(2) {
            if pair[0].end + 1 >= pair[1].start {
                return Err(Error::Format(format!(
                    "intervals {:?} and {:?} are not separated",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(IntervalSet { t, intervals })
    }

    pub fn dim(&self) -> u64 {
        self.t
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// The vector whose negative part is exactly the union of the intervals.
    pub fn to_sign_vector(&self) -> Result<SignVector> {
        let mut v = SignVector::ones(self.t)?;
        for iv in &self.intervals {
            v.set_negative_range(iv.start, iv.end);
        }
        Ok(v)
    }
}

/// Iterator over the maximal negative runs of a [`SignVector`], word at a time.
pub struct NegativeRuns<'a> {
    words: &'a [u64],
    t: u64,
    // 0-based bit position where the next search begins
    pos: u64,
}

impl<'a> NegativeRuns<'a> {
    pub fn new(v: &'a SignVector) -> Self {
        NegativeRuns {
            words: v.negative_words(),
            t: v.dim(),
            pos: 0,
        }
    }

    fn next_one(&self, from: u64) -> Option<u64> {
        let mut w = (from / 64) as usize;
        if w >= self.words.len() {
            return None;
        }
        let mut bits = self.words[w] & (!0u64 << (from % 64));
        loop {
            if bits != 0 {
                let p = w as u64 * 64 + u64::from(bits.trailing_zeros());
                return (p < self.t).then_some(p);
            }
            w += 1;
            if w >= self.words.len() {
                return None;
            }
            bits = self.words[w];
        }
    }

    fn next_zero(&self, from: u64) -> u64 {
        let mut w = (from / 64) as usize;
        if w >= self.words.len() {
            return self.t;
        }
        let mut bits = !self.words[w] & (!0u64 << (from % 64));
        loop {
            if bits != 0 {
                let p = w as u64 * 64 + u64::from(bits.trailing_zeros());
                return p.min(self.t);
            }
            w += 1;
            if w >= self.words.len() {
                return self.t;
            }
            bits = !self.words[w];
        }
    }
}

impl Iterator for NegativeRuns<'_> {
    type Item = Interval;

    fn next(&mut self) -> Option<Interval> {
        if self.pos >= self.t {
            return None;
        }
        let start = self.next_one(self.pos)?;
        let stop = self.next_zero(start);
        self.pos = stop;
        Some(Interval {
            start: start + 1,
            end: stop,
        })
    }
}

/// The inclusion-maximal intervals of `{e : T(e) = -1}`, ascending.
pub fn negative_intervals(v: &SignVector) -> IntervalSet {
    IntervalSet {
        t: v.dim(),
        intervals: NegativeRuns::new(v).collect(),
    }
}
