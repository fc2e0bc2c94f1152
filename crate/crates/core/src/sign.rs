//! Vertices of the hypercube graph `H(t, 2)`: length-`t` vectors over `{+1, -1}`.
//!
//! Coordinates are addressed `1..=t`. Storage is bit-packed, one bit per
//! coordinate, with a set bit meaning `-1`. Bits past `t` in the last word are
//! always zero.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Smallest dimension for which the distinguished symmetric cycle is defined.
pub const MIN_DIMENSION: u64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

pub(crate) fn check_dimension(t: u64) -> Result<()> {
    if t < MIN_DIMENSION {
        return Err(Error::Dimension {
            got: t,
            min: MIN_DIMENSION,
        });
    }
    Ok(())
}

#[inline]
fn word_count(t: u64) -> usize {
    usize::try_from(t.div_ceil(64)).expect("dimension exceeds addressable memory")
}

/// A vertex of `H(t, 2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    t: u64,
    words: Vec<u64>,
}

impl SignVector {
    /// The all-`+1` vector.
    pub fn ones(t: u64) -> Result<Self> {
        check_dimension(t)?;
        Ok(SignVector {
            t,
            words: vec![0; word_count(t)],
        })
    }

    /// The all-`-1` vector.
    pub fn minus_ones(t: u64) -> Result<Self> {
        let mut v = Self::ones(t)?;
        v.words.iter_mut().for_each(|w| *w = !0);
        v.clear_tail();
        Ok(v)
    }

    pub fn from_signs(signs: &[Sign]) -> Result<Self> {
        let mut v = Self::ones(signs.len() as u64)?;
        for (i, s) in signs.iter().enumerate() {
            if s.is_negative() {
                v.words[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(v)
    }

    /// Builds a vector from integer entries, each of which must be `1` or `-1`.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        let signs = values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                Sign::from_value(v).ok_or_else(|| {
                    Error::Format(format!("coordinate {} has value {v}, not +1 or -1", i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_signs(&signs)
    }

    pub fn from_fn(t: u64, mut f: impl FnMut(u64) -> Sign) -> Result<Self> {
        let mut v = Self::ones(t)?;
        for e in 1..=t {
            if f(e).is_negative() {
                v.set_bit(e);
            }
        }
        Ok(v)
    }

    /// Wraps packed words where bit `i` set means coordinate `i + 1` is `-1`.
    pub fn from_negative_words(t: u64, mut words: Vec<u64>) -> Result<Self> {
        check_dimension(t)?;
        if words.len() != word_count(t) {
            return Err(Error::Format(format!(
                "{} words cannot hold exactly {t} coordinates",
                words.len()
            )));
        }
        let rem = t % 64;
        if rem != 0 {
            let last = words.last_mut().unwrap();
            *last &= (1u64 << rem) - 1;
        }
        Ok(SignVector { t, words })
    }

    #[inline]
    pub fn dim(&self) -> u64 {
        self.t
    }

    /// Packed negative-part bitmap, bit `i` of the sequence is coordinate `i + 1`.
    #[inline]
    pub fn negative_words(&self) -> &[u64] {
        &self.words
    }

    /// Sign at the 1-based coordinate `e`.
    ///
    /// # Panics
    /// Panics if `e` is not in `1..=t`.
    #[inline]
    pub fn sign(&self, e: u64) -> Sign {
        assert!(
            (1..=self.t).contains(&e),
            "coordinate {e} out of range 1..={}",
            self.t
        );
        let i = (e - 1) as usize;
        if (self.words[i / 64] >> (i % 64)) & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn get(&self, e: u64) -> Result<Sign> {
        if !(1..=self.t).contains(&e) {
            return Err(Error::Range {
                what: "coordinate",
                value: e,
                lo: 1,
                hi: self.t,
            });
        }
        Ok(self.sign(e))
    }

    pub fn set(&mut self, e: u64, s: Sign) {
        assert!((1..=self.t).contains(&e), "coordinate {e} out of range");
        let i = (e - 1) as usize;
        match s {
            Sign::Minus => self.words[i / 64] |= 1 << (i % 64),
            Sign::Plus => self.words[i / 64] &= !(1 << (i % 64)),
        }
    }

    #[inline]
    fn set_bit(&mut self, e: u64) {
        let i = (e - 1) as usize;
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// Sets coordinates `a..=b` to `-1`.
    pub(crate) fn set_negative_range(&mut self, a: u64, b: u64) {
        debug_assert!(1 <= a && a <= b && b <= self.t);
        let (lo, hi) = ((a - 1) as usize, b as usize);
        let (first, last) = (lo / 64, (hi - 1) / 64);
        for w in first..=last {
            let start = if w == first { lo % 64 } else { 0 };
            let end = if w == last { (hi - 1) % 64 + 1 } else { 64 };
            let mask = if end - start == 64 {
                !0
            } else {
                ((1u64 << (end - start)) - 1) << start
            };
            self.words[w] |= mask;
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.t % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        (1..=self.t).map(move |e| self.sign(e))
    }

    pub fn to_values(&self) -> Vec<i64> {
        self.iter().map(Sign::value).collect()
    }

    /// Number of `-1` coordinates.
    pub fn negative_count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Number of coordinates where the two vectors disagree.
    pub fn hamming_distance(&self, other: &SignVector) -> Result<u64> {
        if self.t != other.t {
            return Err(Error::DimensionMismatch {
                left: self.t,
                right: other.t,
            });
        }
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum())
    }

    /// Whether `{self, other}` is an edge of `H(t, 2)`.
    pub fn is_adjacent(&self, other: &SignVector) -> Result<bool> {
        Ok(self.hamming_distance(other)? == 1)
    }
}

pub fn hamming_distance(x: &SignVector, y: &SignVector) -> Result<u64> {
    x.hamming_distance(y)
}

impl Neg for &SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        let mut v = SignVector {
            t: self.t,
            words: self.words.iter().map(|w| !w).collect(),
        };
        v.clear_tail();
        v
    }
}

impl Neg for SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        -&self
    }
}

/// `+`/`-` pattern, e.g. `+-+`.
impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use fmt::Write;
        for s in self.iter() {
            f.write_char(s.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t <= 128 {
            write!(f, "SignVector({self})")
        } else {
            write!(
                f,
                "SignVector {{ t: {}, negatives: {} }}",
                self.t,
                self.negative_count()
            )
        }
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::Format(format!(
                    "sign pattern may only contain '+' and '-', found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        SignVector::from_signs(&signs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_dimensions() {
        assert!(matches!(
            SignVector::ones(2),
            Err(Error::Dimension { got: 2, min: 3 })
        ));
        assert!(SignVector::from_signs(&[Sign::Plus, Sign::Minus]).is_err());
        assert!(SignVector::ones(3).is_ok());
    }

    #[test]
    fn values_must_be_unit() {
        assert!(SignVector::from_values(&[1, -1, 1]).is_ok());
        assert!(SignVector::from_values(&[1, 0, 1]).is_err());
        assert!(SignVector::from_values(&[1, 2, -1]).is_err());
    }

    #[test]
    fn pattern_roundtrip() {
        let v: SignVector = "+-+--".parse().unwrap();
        assert_eq!(v.to_values(), vec![1, -1, 1, -1, -1]);
        assert_eq!(v.to_string(), "+-+--");
        assert!("+x+".parse::<SignVector>().is_err());
    }

    #[test]
    fn hamming() {
        let x: SignVector = "++++".parse().unwrap();
        let y: SignVector = "-+++".parse().unwrap();
        assert_eq!(x.hamming_distance(&x).unwrap(), 0);
        assert_eq!(x.hamming_distance(&y).unwrap(), 1);
        assert!(x.is_adjacent(&y).unwrap());
        assert_eq!(x.hamming_distance(&-&x).unwrap(), 4);
        let z = SignVector::ones(5).unwrap();
        assert!(matches!(
            x.hamming_distance(&z),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn negation_keeps_tail_clear() {
        for t in [3, 63, 64, 65, 130] {
            let v = SignVector::ones(t).unwrap();
            let n = -&v;
            assert_eq!(n, SignVector::minus_ones(t).unwrap());
            assert_eq!(n.negative_count(), t);
        }
    }

    #[test]
    fn negative_range_spans_words() {
        for (t, a, b) in [
            (200, 1, 200),
            (200, 60, 70),
            (200, 64, 64),
            (200, 65, 128),
            (10, 3, 3),
        ] {
            let mut v = SignVector::ones(t).unwrap();
            v.set_negative_range(a, b);
            for e in 1..=t {
                assert_eq!(v.sign(e).is_negative(), (a..=b).contains(&e), "t={t} e={e}");
            }
        }
    }

    #[test]
    fn out_of_range_get() {
        let v = SignVector::ones(4).unwrap();
        assert!(v.get(0).is_err());
        assert!(v.get(5).is_err());
        assert_eq!(v.get(4).unwrap(), Sign::Plus);
    }
}
