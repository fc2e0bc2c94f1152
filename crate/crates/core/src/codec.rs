//! Byte streams and bit matrices to portraits and back.
//!
//! Two ways of reading bytes as sign vectors are supported:
//!
//! * **matrix**: byte `j` becomes column `j` of an `8 x n` bit-plane matrix,
//!   most significant bit in row 1; each row is decomposed separately.
//! * **vector**: the bytes are read as one bit stream, most significant bit
//!   first, giving a single row of length `8n`.
//!
//! Bits map to signs by `0 -> +1`, `1 -> -1`.

use std::fmt;
use std::io::Read;
use std::str::FromStr;

use crate::cycle::CycleIndexSet;
use crate::decompose::{decompose, StreamDecomposer};
use crate::error::{Error, Result};
use crate::sign::{check_dimension, SignVector};

/// The 8 bits of `b`, most significant first.
pub fn byte_to_column(b: u8) -> [u8; 8] {
    std::array::from_fn(|i| (b >> (7 - i)) & 1)
}

/// Maps `0 -> +1` and `1 -> -1`.
pub fn bits_to_signs(bits: &[u8]) -> Result<SignVector> {
    let t = bits.len() as u64;
    check_dimension(t)?;
    let mut words = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        match b {
            0 => {}
            1 => words[i / 64] |= 1 << (i % 64),
            other => {
                return Err(Error::Format(format!(
                    "bit {} has value {other}, expected 0 or 1",
                    i + 1
                )))
            }
        }
    }
    SignVector::from_negative_words(t, words)
}

/// Maps `+1 -> 0` and `-1 -> 1`.
pub fn signs_to_bits(v: &SignVector) -> Vec<u8> {
    v.iter().map(|s| u8::from(s.is_negative())).collect()
}

/// A `tau x t` matrix over `{0, 1}`, one packed bit row per matrix row.
#[derive(Clone, PartialEq, Eq)]
pub struct BitPlaneMatrix {
    t: u64,
    rows: Vec<SignVector>,
}

impl BitPlaneMatrix {
    /// Builds a matrix from explicit `{0,1}` rows of equal length `t >= 3`.
    pub fn new(rows: &[Vec<u8>]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::Format("matrix has no rows".into()));
        };
        let t = first.len() as u64;
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() as u64 != t {
                    return Err(Error::Format(format!(
                        "row {} has {} columns, expected {t}",
                        i + 1,
                        r.len()
                    )));
                }
                bits_to_signs(r)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BitPlaneMatrix { t, rows })
    }

    /// The `8 x n` bit-plane matrix of `bytes`: column `j` is byte `j`, MSB in row 1.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let t = bytes.len() as u64;
        check_dimension(t)?;
        let words = bytes.len().div_ceil(64);
        let mut planes = vec![vec![0u64; words]; 8];
        for (j, &b) in bytes.iter().enumerate() {
            for (r, plane) in planes.iter_mut().enumerate() {
                plane[j / 64] |= u64::from((b >> (7 - r)) & 1) << (j % 64);
            }
        }
        let rows = planes
            .into_iter()
            .map(|w| SignVector::from_negative_words(t, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(BitPlaneMatrix { t, rows })
    }

    fn from_sign_rows(rows: Vec<SignVector>) -> Self {
        let t = rows[0].dim();
        BitPlaneMatrix { t, rows }
    }

    pub fn tau(&self) -> usize {
        self.rows.len()
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Entry at 1-based row `i` and column `j`.
    pub fn get(&self, i: usize, j: u64) -> u8 {
        u8::from(self.rows[i - 1].sign(j).is_negative())
    }

    /// Row `i` (1-based) as a sign vector.
    pub fn row_signs(&self, i: usize) -> &SignVector {
        &self.rows[i - 1]
    }

    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        signs_to_bits(&self.rows[i - 1])
    }

    /// Reads columns back as bytes. Requires exactly 8 rows.
    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        if self.rows.len() != 8 {
            return Err(Error::Format(format!(
                "byte columns need 8 rows, matrix has {}",
                self.rows.len()
            )));
        }
        let n = usize::try_from(self.t).expect("column count fits in memory");
        let mut out = vec![0u8; n];
        for (r, row) in self.rows.iter().enumerate() {
            let words = row.negative_words();
            for (j, byte) in out.iter_mut().enumerate() {
                let bit = (words[j / 64] >> (j % 64)) & 1;
                *byte |= (bit as u8) << (7 - r);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BitPlaneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitPlaneMatrix({} x {})", self.rows.len(), self.t)
    }
}

/// The bytes as one sign vector of length `8n`, MSB first within each byte.
pub fn bytes_to_sign_vector(bytes: &[u8]) -> Result<SignVector> {
    let t = 8 * bytes.len() as u64;
    check_dimension(t)?;
    let mut words = vec![0u64; bytes.len().div_ceil(8)];
    for (j, &b) in bytes.iter().enumerate() {
        words[j / 8] |= u64::from(b.reverse_bits()) << (8 * (j % 8));
    }
    SignVector::from_negative_words(t, words)
}

/// Inverse of [`bytes_to_sign_vector`]; `t` must be a multiple of 8.
pub fn sign_vector_to_bytes(v: &SignVector) -> Result<Vec<u8>> {
    if !v.dim().is_multiple_of(8) {
        return Err(Error::Format(format!(
            "vector of dimension {} is not a whole number of bytes",
            v.dim()
        )));
    }
    let n = (v.dim() / 8) as usize;
    let words = v.negative_words();
    Ok((0..n)
        .map(|j| ((words[j / 8] >> (8 * (j % 8))) as u8).reverse_bits())
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Matrix,
    Vector,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Matrix => "matrix",
            Mode::Vector => "vector",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matrix" => Ok(Mode::Matrix),
            "vector" => Ok(Mode::Vector),
            other => Err(Error::Format(format!("unknown mode {other:?}"))),
        }
    }
}

/// The exact representation of a `tau x t` sign matrix: `(t, tau, Q(T^1), ..., Q(T^tau))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Portrait {
    t: u64,
    mode: Mode,
    rows: Vec<CycleIndexSet>,
}

impl Portrait {
    pub fn new(t: u64, tau: u64, mode: Mode, rows: Vec<CycleIndexSet>) -> Result<Self> {
        check_dimension(t)?;
        if tau == 0 {
            return Err(Error::Format("portrait must have at least one row".into()));
        }
        if rows.len() as u64 != tau {
            return Err(Error::Format(format!(
                "portrait declares {tau} rows but holds {}",
                rows.len()
            )));
        }
        if mode == Mode::Vector && tau != 1 {
            return Err(Error::Format(format!(
                "vector-mode portrait must have one row, not {tau}"
            )));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.dim() != t) {
            return Err(Error::Format(format!(
                "row {} has dimension {}, portrait has {t}",
                i + 1,
                r.dim()
            )));
        }
        Ok(Portrait { t, mode, rows })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn tau(&self) -> u64 {
        self.rows.len() as u64
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rows(&self) -> &[CycleIndexSet] {
        &self.rows
    }

    /// `sum_i q(T^i)`.
    pub fn weight(&self) -> u64 {
        self.rows.iter().map(|r| r.len() as u64).sum()
    }

    pub fn stats(&self) -> PortraitStats {
        let (lower, upper) = weight_bounds(self.t, self.tau());
        let weight = self.weight();
        PortraitStats {
            t: self.t,
            tau: self.tau(),
            mode: self.mode,
            row_weights: self.rows.iter().map(|r| r.len() as u64).collect(),
            weight,
            lower,
            upper,
        }
    }
}

pub fn portrait_weight(p: &Portrait) -> u64 {
    p.weight()
}

/// Exact bounds `(tau, tau*t)` for odd `t`, `(tau, tau*(t-1))` for even `t`, on the weight.
pub fn weight_bounds(t: u64, tau: u64) -> (u64, u64) {
    let per_row = if t % 2 == 1 { t } else { t - 1 };
    (tau, tau * per_row)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PortraitStats {
    pub t: u64,
    pub tau: u64,
    pub mode: Mode,
    pub row_weights: Vec<u64>,
    pub weight: u64,
    pub lower: u64,
    pub upper: u64,
}

impl PortraitStats {
    pub fn within_bounds(&self) -> bool {
        self.lower <= self.weight && self.weight <= self.upper
    }

    /// `weight / upper`.
    pub fn fill_ratio(&self) -> f64 {
        self.weight as f64 / self.upper as f64
    }
}

impl fmt::Display for PortraitStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode: {}", self.mode)?;
        writeln!(f, "t: {}", self.t)?;
        writeln!(f, "tau: {}", self.tau)?;
        for (i, q) in self.row_weights.iter().enumerate() {
            writeln!(f, "row {}: q={q}", i + 1)?;
        }
        writeln!(f, "weight: {}", self.weight)?;
        writeln!(f, "bounds: {}..{}", self.lower, self.upper)?;
        writeln!(f, "ratio: {:.6}", self.fill_ratio())
    }
}

/// Decomposes every row of a bit matrix; the result is a matrix-mode portrait.
pub fn encode_bit_matrix(m: &BitPlaneMatrix) -> Result<Portrait> {
    let rows = m.rows.iter().map(decompose).collect();
    Portrait::new(m.t, m.rows.len() as u64, Mode::Matrix, rows)
}

/// Matrix-mode portrait of `data` (`tau = 8`, `t` = byte count).
pub fn encode_matrix(data: &[u8]) -> Result<Portrait> {
    encode_bit_matrix(&BitPlaneMatrix::from_bytes(data)?)
}

/// Vector-mode portrait of `data` (`tau = 1`, `t = 8n`).
pub fn encode_vector(data: &[u8]) -> Result<Portrait> {
    let v = bytes_to_sign_vector(data)?;
    Portrait::new(v.dim(), 1, Mode::Vector, vec![decompose(&v)])
}

/// Vector-mode portrait of everything `reader` yields, in one pass.
///
/// When `len` is known the session checks that exactly `len` bytes arrive.
/// Only the candidate indices are held in memory, never the input.
pub fn encode_vector_reader<R: Read>(mut reader: R, len: Option<u64>) -> Result<Portrait> {
    let mut session = match len {
        Some(n) => StreamDecomposer::new(8 * n)?,
        None => StreamDecomposer::open_ended(),
    };
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = match reader.read(&mut buf) {
            Ok(0) => break,
            Ok(n) => n,
            Err(e) if e.kind() == std::io::ErrorKind::Interrupted => continue,
            Err(e) => return Err(e.into()),
        };
        session.push_bytes(&buf[..n])?;
    }
    let set = session.finish()?;
    Portrait::new(set.dim(), 1, Mode::Vector, vec![set])
}

fn recompose_rows(p: &Portrait) -> Result<Vec<SignVector>> {
    p.rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.recompose().map_err(|e| match e {
                Error::NotAVertex { coordinate, sum } => Error::InvalidPortrait {
                    row: i as u64 + 1,
                    coordinate,
                    sum,
                },
                other => other,
            })
        })
        .collect()
}

/// Restores the bit matrix a portrait describes, for any mode and `tau`.
pub fn decode_bit_matrix(p: &Portrait) -> Result<BitPlaneMatrix> {
    Ok(BitPlaneMatrix::from_sign_rows(recompose_rows(p)?))
}

/// Restores the original bytes.
pub fn decode(p: &Portrait) -> Result<Vec<u8>> {
    match p.mode {
        Mode::Matrix => {
            if p.tau() != 8 {
                return Err(Error::Format(format!(
                    "matrix-mode bytes need tau = 8, portrait has {}",
                    p.tau()
                )));
            }
            decode_bit_matrix(p)?.to_bytes()
        }
        Mode::Vector => {
            if !p.t.is_multiple_of(8) {
                return Err(Error::Format(format!(
                    "vector-mode bytes need t divisible by 8, portrait has {}",
                    p.t
                )));
            }
            let rows = recompose_rows(p)?;
            sign_vector_to_bytes(&rows[0])
        }
    }
}
