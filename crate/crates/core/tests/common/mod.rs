#![allow(dead_code)]

use std::path::PathBuf;

pub const DESDEMONA: &[u8; 36] = b"Have you pray'd to-night, Desdemona?";

/// The eight index sets of the matrix-mode portrait of [`DESDEMONA`].
pub const MATRIX_SETS: [&[u64]; 8] = [
    &[0],
    &[4, 8, 13, 15, 18, 24, 35, 41, 45, 50, 52, 55, 62],
    &[26, 37, 63],
    &[
        3, 6, 8, 11, 13, 17, 24, 29, 38, 41, 43, 45, 48, 52, 59, 64, 71,
    ],
    &[1, 7, 13, 21, 23, 25, 34, 36, 41, 48, 53, 58, 60, 67, 71],
    &[
        4, 8, 15, 20, 22, 25, 28, 34, 38, 42, 49, 52, 57, 59, 62, 65, 71,
    ],
    &[
        3, 7, 11, 14, 18, 20, 22, 29, 34, 38, 42, 46, 49, 53, 55, 57, 64, 68, 71,
    ],
    &[
        2, 4, 8, 14, 19, 22, 29, 33, 37, 39, 41, 47, 53, 56, 63, 66, 70,
    ],
];

/// The single index set of the vector-mode portrait of [`DESDEMONA`].
pub const VECTOR_SET: [u64; 145] = [
    2, 5, 11, 16, 20, 23, 27, 30, 32, 35, 45, 48, 51, 56, 60, 62, 64, 67, 76, 84, 87, 91, 96, 101,
    104, 107, 112, 115, 118, 123, 132, 134, 139, 144, 147, 150, 152, 155, 159, 163, 165, 168, 171,
    176, 179, 181, 188, 190, 195, 198, 203, 210, 214, 219, 222, 224, 228, 232, 235, 238, 243, 246,
    248, 251, 254, 256, 259, 264, 267, 271, 275, 280, 289, 292, 297, 303, 305, 309, 313, 317, 319,
    322, 329, 335, 337, 340, 345, 349, 351, 354, 361, 369, 374, 377, 383, 385, 391, 394, 397, 401,
    405, 410, 417, 421, 425, 428, 434, 436, 439, 441, 444, 449, 452, 455, 457, 461, 465, 468, 473,
    477, 482, 484, 490, 497, 501, 505, 509, 511, 513, 518, 521, 525, 529, 533, 535, 537, 540, 543,
    545, 548, 553, 556, 561, 567, 570,
];

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

pub fn read_data(name: &str) -> Vec<u8> {
    std::fs::read(data_path(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"))
}

/// Rows of the +/- fixture transcribed from the appendix sign matrix.
pub fn sign_rows() -> Vec<String> {
    String::from_utf8(read_data("desdemona_signs.txt"))
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}
