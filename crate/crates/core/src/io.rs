//! Serialized portraits.
//!
//! Text (`SCP1`):
//!
//! ```text
//! SCP1 <mode> <t> <tau>
//! <q_1> <k_0> <k_1> ... <k_{q_1 - 1}>
//! ...
//! ```
//!
//! One line per row, decimal, single spaces, every line newline-terminated.
//! The reader is strict: anything it accepts re-serializes byte for byte.
//!
//! Binary (`SCPB`): the magic, one mode byte (`0` matrix, `1` vector), then
//! `t` and `tau` as little-endian `u64`, then per row `q` followed by `q`
//! indices, all little-endian `u64`.
//!
//! Coordinates are 1-based and cycle indices 0-based in both formats.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use crate::codec::{BitPlaneMatrix, Mode, Portrait};
use crate::cycle::{validate_indices, CycleIndexSet};
use crate::error::{Error, Location, Result};
use crate::sign::MIN_DIMENSION;

pub const TEXT_MAGIC: &str = "SCP1";
pub const BINARY_MAGIC: &[u8; 4] = b"SCPB";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Binary,
}

impl Format {
    /// Binary when the stream starts with the binary magic, text otherwise.
    pub fn detect(bytes: &[u8]) -> Format {
        if bytes.starts_with(BINARY_MAGIC) {
            Format::Binary
        } else {
            Format::Text
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Binary => "binary",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "binary" => Ok(Format::Binary),
            other => Err(Error::Format(format!("unknown format {other:?}"))),
        }
    }
}

pub fn write_text<W: Write>(p: &Portrait, mut w: W) -> std::io::Result<()> {
    writeln!(w, "{TEXT_MAGIC} {} {} {}", p.mode(), p.t(), p.tau())?;
    for row in p.rows() {
        write!(w, "{}", row.len())?;
        for k in row.indices() {
            write!(w, " {k}")?;
        }
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn to_text(p: &Portrait) -> String {
    let mut buf = Vec::new();
    write_text(p, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii output")
}

fn parse_number(tok: &str, line: usize, what: &str) -> Result<u64> {
    let bad = || Error::parse(Location::Line(line), format!("bad {what} {tok:?}"));
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if tok.len() > 1 && tok.starts_with('0') {
        return Err(bad());
    }
    tok.parse().map_err(|_| bad())
}

/// Parses an `SCP1` document.
pub fn read_text(s: &str) -> Result<Portrait> {
    let body = s.strip_suffix('\n').ok_or_else(|| {
        let line = s.split('\n').count();
        Error::parse(Location::Line(line), "missing final newline")
    })?;
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().expect("split yields at least one item");
    let tokens: Vec<&str> = header.split(' ').collect();
    if tokens.len() != 4 {
        return Err(Error::parse(
            Location::Line(1),
            format!("header needs 4 fields, found {}", tokens.len()),
        ));
    }
    if tokens[0] != TEXT_MAGIC {
        return Err(Error::parse(
            Location::Line(1),
            format!("bad magic {:?}", tokens[0]),
        ));
    }
    let mode: Mode = tokens[1]
        .parse()
        .map_err(|_| Error::parse(Location::Line(1), format!("bad mode {:?}", tokens[1])))?;
    let t = parse_number(tokens[2], 1, "dimension")?;
    let tau = parse_number(tokens[3], 1, "row count")?;
    check_header(t, tau, mode, Location::Line(1))?;

    let mut rows = Vec::new();
    for (line, text) in lines.by_ref() {
        if rows.len() as u64 == tau {
            return Err(Error::parse(
                Location::Line(line),
                format!("unexpected line after {tau} rows"),
            ));
        }
        let mut toks = text.split(' ');
        let q = parse_number(toks.next().unwrap_or(""), line, "cardinality")?;
        let indices = toks
            .map(|tok| parse_number(tok, line, "index"))
            .collect::<Result<Vec<u64>>>()?;
        if indices.len() as u64 != q {
            return Err(Error::parse(
                Location::Line(line),
                format!("cardinality {q} but {} indices", indices.len()),
            ));
        }
        validate_indices(t, &indices).map_err(|m| Error::parse(Location::Line(line), m))?;
        rows.push(CycleIndexSet::new(t, indices)?);
    }
    if (rows.len() as u64) < tau {
        return Err(Error::parse(
            Location::Line(rows.len() + 2),
            format!("expected {tau} rows, found {}", rows.len()),
        ));
    }
    Portrait::new(t, tau, mode, rows)
}

fn check_header(t: u64, tau: u64, mode: Mode, at: Location) -> Result<()> {
    if t < MIN_DIMENSION {
        return Err(Error::parse(
            at,
            format!("dimension {t} below {MIN_DIMENSION}"),
        ));
    }
    if t > u64::MAX / 2 {
        return Err(Error::parse(at, format!("dimension {t} too large")));
    }
    if tau == 0 {
        return Err(Error::parse(at, "row count is zero"));
    }
    if mode == Mode::Vector && tau != 1 {
        return Err(Error::parse(at, format!("vector mode with {tau} rows")));
    }
    Ok(())
}

pub fn write_binary<W: Write>(p: &Portrait, mut w: W) -> std::io::Result<()> {
    w.write_all(BINARY_MAGIC)?;
    w.write_all(&[match p.mode() {
        Mode::Matrix => 0,
        Mode::Vector => 1,
    }])?;
    w.write_all(&p.t().to_le_bytes())?;
    w.write_all(&p.tau().to_le_bytes())?;
    for row in p.rows() {
        w.write_all(&(row.len() as u64).to_le_bytes())?;
        for k in row.indices() {
            w.write_all(&k.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn to_binary(p: &Portrait) -> Vec<u8> {
    let mut buf = Vec::with_capacity(21 + 8 * (p.weight() + p.tau()) as usize);
    write_binary(p, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn remaining(&self) -> usize {
        self.bytes.len() - self.pos
    }

    fn take(&mut self, n: usize, what: &str) -> Result<&[u8]> {
        if self.remaining() < n {
            return Err(Error::parse(
                Location::Offset(self.pos),
                format!(
                    "truncated {what}: need {n} bytes, {} left",
                    self.remaining()
                ),
            ));
        }
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u64(&mut self, what: &str) -> Result<u64> {
        let b = self.take(8, what)?;
        Ok(u64::from_le_bytes(b.try_into().unwrap()))
    }
}

/// Parses an `SCPB` document.
pub fn read_binary(bytes: &[u8]) -> Result<Portrait> {
    let mut cur = Cursor { bytes, pos: 0 };
    if cur.take(4, "magic")? != BINARY_MAGIC {
        return Err(Error::parse(Location::Offset(0), "bad magic"));
    }
    let mode = match cur.take(1, "mode")?[0] {
        0 => Mode::Matrix,
        1 => Mode::Vector,
        other => {
            return Err(Error::parse(
                Location::Offset(4),
                format!("bad mode byte {other}"),
            ))
        }
    };
    let t = cur.u64("dimension")?;
    let tau = cur.u64("row count")?;
    check_header(t, tau, mode, Location::Offset(5))?;

    let mut rows = Vec::new();
    for _ in 0..tau {
        let row_at = cur.pos;
        let q = cur.u64("cardinality")?;
        if q > 2 * t {
            return Err(Error::parse(
                Location::Offset(row_at),
                format!("cardinality {q} exceeds {}", 2 * t),
            ));
        }
        let need = (q as usize)
            .checked_mul(8)
            .filter(|&n| n <= cur.remaining());
        let Some(need) = need else {
            return Err(Error::parse(
                Location::Offset(cur.pos),
                format!("truncated row: {q} indices, {} bytes left", cur.remaining()),
            ));
        };
        let indices: Vec<u64> = cur
            .take(need, "indices")?
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        validate_indices(t, &indices).map_err(|m| Error::parse(Location::Offset(row_at), m))?;
        rows.push(CycleIndexSet::new(t, indices)?);
    }
    if cur.remaining() != 0 {
        return Err(Error::parse(
            Location::Offset(cur.pos),
            format!("{} trailing bytes", cur.remaining()),
        ));
    }
    Portrait::new(t, tau, mode, rows)
}

/// Parses either format, chosen by [`Format::detect`].
pub fn read_portrait(bytes: &[u8]) -> Result<Portrait> {
    match Format::detect(bytes) {
        Format::Binary => read_binary(bytes),
        Format::Text => {
            let s = std::str::from_utf8(bytes)
                .map_err(|e| Error::parse(Location::Offset(e.valid_up_to()), "not UTF-8 text"))?;
            read_text(s)
        }
    }
}

pub fn write_portrait<W: Write>(p: &Portrait, format: Format, w: W) -> std::io::Result<()> {
    match format {
        Format::Text => write_text(p, w),
        Format::Binary => write_binary(p, w),
    }
}

/// Raw `{0,1}` matrix: one row per line, characters `0` and `1` only.
pub fn read_matrix_text(s: &str) -> Result<BitPlaneMatrix> {
    let rows = s
        .lines()
        .enumerate()
        .map(|(i, line)| {
            line.bytes()
                .map(|b| match b {
                    b'0' => Ok(0),
                    b'1' => Ok(1),
                    other => Err(Error::parse(
                        Location::Line(i + 1),
                        format!("unexpected character {:?}", other as char),
                    )),
                })
                .collect::<Result<Vec<u8>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    BitPlaneMatrix::new(&rows)
}

pub fn write_matrix_text<W: Write>(m: &BitPlaneMatrix, mut w: W) -> std::io::Result<()> {
    for i in 1..=m.tau() {
        let line: Vec<u8> = m.row_bits(i).iter().map(|b| b'0' + b).collect();
        w.write_all(&line)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}
