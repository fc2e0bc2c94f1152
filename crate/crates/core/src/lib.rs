//! Exact "portraits" of binary arrays over the distinguished symmetric cycle of
//! the hypercube graph `H(t, 2)`.
//!
//! Every vertex `T` of `H(t, 2)` (a `±1` vector of length `t >= 3`) is the sum of
//! a unique inclusion-minimal set of vertices of the symmetric cycle
//! `R^0, ..., R^{2t-1}`. Reporting the indices of that set, row by row, gives a
//! lossless representation of a `±1` matrix, and through `0 -> +1`, `1 -> -1`
//! of any bit matrix or byte stream.
//!
//! ```
//! use symcycle::{decode, encode_vector};
//!
//! let portrait = encode_vector(b"Hi!").unwrap();
//! assert_eq!(decode(&portrait).unwrap(), b"Hi!");
//! ```

pub mod codec;
pub mod cycle;
pub mod decompose;
pub mod error;
pub mod interval;
pub mod io;
pub mod oracle;
pub mod rank;
pub mod sign;

pub use codec::{
    bits_to_signs, byte_to_column, decode, decode_bit_matrix, encode_bit_matrix, encode_matrix,
    encode_vector, encode_vector_reader, portrait_weight, signs_to_bits, weight_bounds,
    BitPlaneMatrix, Mode, Portrait, PortraitStats,
};
pub use cycle::{cycle_component, cycle_vertex, CycleIndexSet};
pub use decompose::{decompose, decompose_stream, recompose, StreamDecomposer};
pub use error::{Error, Location, Result};
pub use interval::{negative_intervals, Interval, IntervalSet, NegativeRuns};
pub use io::{read_binary, read_portrait, read_text, write_binary, write_text, Format};
pub use oracle::{brute_force_decompose, OracleTable, ORACLE_MAX_DIMENSION};
pub use rank::{cycle_set_rank, exact_rank};
pub use sign::{hamming_distance, Sign, SignVector, MIN_DIMENSION};
