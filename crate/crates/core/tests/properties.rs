use proptest::collection::vec;
use proptest::prelude::*;

use symcycle::io::{to_binary, to_text};
use symcycle::*;

fn sign_vector(max_t: usize) -> impl Strategy<Value = SignVector> {
    vec(any::<bool>(), 3..=max_t).prop_map(|bits| {
        let signs: Vec<Sign> = bits
            .into_iter()
            .map(|b| if b { Sign::Minus } else { Sign::Plus })
            .collect();
        SignVector::from_signs(&signs).unwrap()
    })
}

/// Vectors with long runs, so boundary cases come up often.
fn runny_vector(max_t: usize) -> impl Strategy<Value = SignVector> {
    (any::<bool>(), vec(1usize..40, 1..=max_t / 4)).prop_map(|(neg_first, runs)| {
        let mut signs = Vec::new();
        let mut neg = neg_first;
        for r in runs {
            let s = if neg { Sign::Minus } else { Sign::Plus };
            signs.extend(std::iter::repeat_n(s, r));
            neg = !neg;
        }
        while signs.len() < 3 {
            signs.push(Sign::Plus);
        }
        SignVector::from_signs(&signs).unwrap()
    })
}

fn naive_recompose(t: u64, indices: &[u64]) -> Vec<i64> {
    (1..=t)
        .map(|e| {
            indices
                .iter()
                .map(|&k| cycle_component(t, k, e).unwrap().value())
                .sum()
        })
        .collect()
}

fn cardinality_law(v: &SignVector) -> usize {
    let ivs = negative_intervals(v);
    let m = ivs.len();
    if m == 0 {
        return 1;
    }
    let first = ivs.intervals()[0];
    let last = ivs.intervals()[m - 1];
    if first.start() > 1 && last.end() < v.dim() {
        2 * m + 1
    } else {
        2 * m - 1
    }
}

fn portrait() -> impl Strategy<Value = Portrait> {
    prop_oneof![
        vec(any::<u8>(), 3..64).prop_map(|d| encode_matrix(&d).unwrap()),
        vec(any::<u8>(), 1..64).prop_map(|d| encode_vector(&d).unwrap()),
        (3usize..20, 1usize..6)
            .prop_flat_map(|(t, tau)| vec(vec(0u8..2, t), tau))
            .prop_map(|rows| encode_bit_matrix(&BitPlaneMatrix::new(&rows).unwrap()).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn decomposition_invariants(v in prop_oneof![sign_vector(300), runny_vector(400)]) {
        let set = decompose(&v);
        let t = v.dim();
        prop_assert_eq!(set.len() % 2, 1);
        prop_assert_eq!(set.len(), cardinality_law(&v));
        prop_assert!(set.indices().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(set.indices().iter().all(|&k| !set.contains((k + t) % (2 * t))));
        if set.len() > 1 {
            let bound = if t % 2 == 1 { t } else { t - 1 };
            prop_assert!(set.len() as u64 <= bound);
        }
        prop_assert_eq!(recompose(t, set.indices()).unwrap(), v.clone());
        prop_assert_eq!(naive_recompose(t, set.indices()), v.to_values());
    }

    #[test]
    fn stream_equals_batch(v in prop_oneof![sign_vector(300), runny_vector(400)]) {
        prop_assert_eq!(decompose_stream(v.dim(), v.iter()).unwrap(), decompose(&v));
        let mut open = StreamDecomposer::open_ended();
        v.iter().for_each(|s| open.push(s).unwrap());
        prop_assert_eq!(open.finish().unwrap(), decompose(&v));
    }

    #[test]
    fn bits_signs_roundtrip(bits in vec(0u8..2, 3..200)) {
        prop_assert_eq!(signs_to_bits(&bits_to_signs(&bits).unwrap()), bits);
    }

    #[test]
    fn codec_roundtrip(data in vec(any::<u8>(), 3..300)) {
        let m = encode_matrix(&data).unwrap();
        let v = encode_vector(&data).unwrap();
        prop_assert_eq!(decode(&m).unwrap(), data.clone());
        prop_assert_eq!(decode(&v).unwrap(), data.clone());
        prop_assert!(m.stats().within_bounds());
        prop_assert!(v.stats().within_bounds());
        prop_assert_eq!(encode_matrix(&data).unwrap(), m);
        prop_assert_eq!(encode_vector_reader(&data[..], None).unwrap(), v);
    }

    #[test]
    fn serialization_roundtrip(p in portrait()) {
        let from_text = read_text(&to_text(&p)).unwrap();
        let from_binary = read_binary(&to_binary(&p)).unwrap();
        prop_assert_eq!(&from_text, &p);
        prop_assert_eq!(&from_binary, &from_text);
    }

    #[test]
    fn truncated_binary_is_rejected(p in portrait(), cut in 1usize..16) {
        let bytes = to_binary(&p);
        let cut = cut.min(bytes.len());
        let is_parse_error = matches!(
            read_binary(&bytes[..bytes.len() - cut]),
            Err(Error::Parse { location: Location::Offset(_), .. })
        );
        prop_assert!(is_parse_error);
    }

    #[test]
    fn mutated_text_is_rejected_or_canonical(p in portrait(), pos in any::<prop::sample::Index>(), byte in any::<u8>()) {
        let mut text = to_text(&p).into_bytes();
        let i = pos.index(text.len());
        text[i] = byte;
        if let Ok(s) = std::str::from_utf8(&text) {
            match read_text(s) {
                Ok(q) => prop_assert_eq!(to_text(&q).into_bytes(), text),
                Err(e) => {
                    let is_line_error = matches!(
                        e,
                        Error::Parse { location: Location::Line(_), .. }
                    );
                    prop_assert!(is_line_error, "{}", e);
                }
            }
        }
    }

    #[test]
    fn mutated_binary_is_rejected_or_canonical(p in portrait(), pos in any::<prop::sample::Index>(), byte in any::<u8>()) {
        let mut bytes = to_binary(&p);
        let i = pos.index(bytes.len());
        bytes[i] = byte;
        match read_binary(&bytes) {
            Ok(q) => prop_assert_eq!(to_binary(&q), bytes),
            Err(e) => {
                let is_offset_error = matches!(
                    e,
                    Error::Parse { location: Location::Offset(_), .. }
                );
                prop_assert!(is_offset_error, "{}", e);
            }
        }
    }
}

#[test]
fn all_short_inputs_roundtrip_in_vector_mode() {
    let mut buf = Vec::with_capacity(4);
    for len in 1..=3usize {
        let total = 1u64 << (8 * len);
        for x in 0..total {
            buf.clear();
            buf.extend((0..len).map(|i| (x >> (8 * i)) as u8));
            let p = encode_vector(&buf).unwrap();
            assert_eq!(decode(&p).unwrap(), buf);
        }
    }
}

fn four_byte_roundtrips(values: impl Iterator<Item = u32>) {
    for x in values {
        let bytes = x.to_be_bytes();
        let p = encode_vector(&bytes).unwrap();
        assert_eq!(decode(&p).unwrap(), bytes, "input {x:#010x}");
    }
}

#[test]
fn four_byte_inputs_sampled() {
    // every 251st value plus all inputs whose middle bytes are zero
    four_byte_roundtrips((0..=u32::MAX).step_by(251));
    four_byte_roundtrips((0..=0xFFFFu32).map(|x| ((x & 0xFF00) << 16) | (x & 0xFF)));
}

#[test]
#[ignore = "2^32 inputs, several minutes; run with --ignored"]
fn all_four_byte_inputs_roundtrip_in_vector_mode() {
    four_byte_roundtrips(0..=u32::MAX);
}

#[test]
fn oracle_agrees_on_small_dimensions() {
    for t in 3..=7 {
        let table = OracleTable::build(t).unwrap();
        for (v, set) in table.iter() {
            assert_eq!(&decompose(&v), set, "t={t} v={v}");
        }
    }
}
