//! Worked examples: the 36-character string, its bit-plane matrix and both portraits.

mod common;

use common::*;
use symcycle::io::{read_matrix_text, to_binary, to_text};
use symcycle::*;

fn row(i: usize) -> SignVector {
    sign_rows()[i - 1].parse().unwrap()
}

#[test]
fn bit_planes_match_fixture_matrix() {
    let from_bytes = BitPlaneMatrix::from_bytes(DESDEMONA).unwrap();
    let fixture =
        read_matrix_text(std::str::from_utf8(&read_data("desdemona_bits.txt")).unwrap()).unwrap();
    assert_eq!(from_bytes, fixture);
    assert_eq!(from_bytes.to_bytes().unwrap(), DESDEMONA);
    for i in 1..=8 {
        assert_eq!(
            bits_to_signs(&fixture.row_bits(i)).unwrap(),
            row(i),
            "row {i}"
        );
    }
    // first byte is 'H'
    assert_eq!(
        (1..=8).map(|i| fixture.get(i, 1)).collect::<Vec<_>>(),
        byte_to_column(b'H')
    );
}

#[test]
fn first_row_is_all_ones() {
    let bits = BitPlaneMatrix::from_bytes(DESDEMONA).unwrap().row_bits(1);
    assert_eq!(bits, vec![0; 36]);
    assert_eq!(bits_to_signs(&bits).unwrap(), SignVector::ones(36).unwrap());
}

#[test]
fn third_row_intervals_and_decomposition() {
    let t3 = row(3);
    let ivs: Vec<_> = negative_intervals(&t3)
        .intervals()
        .iter()
        .map(|i| (i.start(), i.end()))
        .collect();
    assert_eq!(ivs, vec![(2, 26), (28, 36)]);
    assert_eq!(decompose(&t3).indices(), &[26, 37, 63]);
    assert_eq!(recompose(36, &[26, 37, 63]).unwrap(), t3);
    assert_eq!(
        decompose_stream(36, t3.iter()).unwrap().indices(),
        &[26, 37, 63]
    );
}

#[test]
fn second_row_decomposition() {
    let t2 = row(2);
    let ivs: Vec<_> = negative_intervals(&t2)
        .intervals()
        .iter()
        .map(|i| (i.start(), i.end()))
        .collect();
    assert_eq!(
        ivs,
        vec![
            (1, 4),
            (6, 8),
            (10, 13),
            (15, 15),
            (17, 18),
            (20, 24),
            (27, 35)
        ]
    );
    assert_eq!(decompose(&t2).indices(), MATRIX_SETS[1]);
}

#[test]
fn displayed_cycle_vertices() {
    let r26 = cycle_vertex(36, 26).unwrap();
    assert_eq!(
        r26.to_string(),
        format!("{}{}", "-".repeat(26), "+".repeat(10))
    );
    let r37 = cycle_vertex(36, 37).unwrap();
    assert_eq!(r37.to_string(), format!("+{}", "-".repeat(35)));
    let r63 = cycle_vertex(36, 63).unwrap();
    assert_eq!(
        r63.to_string(),
        format!("{}{}", "+".repeat(27), "-".repeat(9))
    );
}

#[test]
fn matrix_portrait() {
    let p = encode_matrix(DESDEMONA).unwrap();
    assert_eq!((p.t(), p.tau(), p.mode()), (36, 8, Mode::Matrix));
    for (i, (got, want)) in p.rows().iter().zip(MATRIX_SETS).enumerate() {
        assert_eq!(got.indices(), want, "row {}", i + 1);
    }
    assert_eq!(portrait_weight(&p), 102);
    let stats = p.stats();
    assert_eq!((stats.lower, stats.upper), (8, 280));
    assert!(stats.within_bounds());
    assert_eq!(decode(&p).unwrap(), DESDEMONA);
}

#[test]
fn vector_portrait() {
    let p = encode_vector(DESDEMONA).unwrap();
    assert_eq!((p.t(), p.tau(), p.mode()), (288, 1, Mode::Vector));
    assert_eq!(p.rows()[0].indices(), &VECTOR_SET[..]);
    assert_eq!(portrait_weight(&p), 145);
    assert_eq!(weight_bounds(288, 1), (1, 287));
    assert_eq!(decode(&p).unwrap(), DESDEMONA);
}

#[test]
fn glued_vector_starts_and_ends_like_the_appendix() {
    let bits = signs_to_bits(&codec::bytes_to_sign_vector(DESDEMONA).unwrap());
    assert_eq!(
        &bits[..16],
        &[0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1]
    );
    assert_eq!(
        &bits[272..],
        &[0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1]
    );
}

#[test]
fn golden_files_parse_to_appendix_portraits() {
    let m = read_text(std::str::from_utf8(&read_data("desdemona_matrix.scp")).unwrap()).unwrap();
    assert_eq!(m, encode_matrix(DESDEMONA).unwrap());
    assert_eq!(m.rows()[2].indices(), &[26, 37, 63]);
    assert!(to_text(&m).contains("\n3 26 37 63\n"));
    let v = read_binary(&read_data("desdemona_vector.scpb")).unwrap();
    assert_eq!(v, encode_vector(DESDEMONA).unwrap());
    assert_eq!(to_binary(&v), read_data("desdemona_vector.scpb"));
}
