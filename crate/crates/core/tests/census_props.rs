use hit_core::census::{census_galois, census_reducible, merge_reports, CensusOptions};
use hit_core::field::{fqu, rationals, BoxSpec, GlobalField};
use hit_core::poly::BiRing;
use proptest::prelude::*;

fn q_poly(a: i64, b: i64, c: i64) -> String {
    format!("Y^2 + {a}*T*Y - {b}*T - {c}")
}

#[test]
fn thread_count_does_not_change_reports() {
    let br = BiRing::new(rationals());
    let f = br.parse("Y^3 - T*Y - T^2").unwrap();
    let b = BoxSpec::integer(300);
    let one = census_galois(
        &br,
        &f,
        &b,
        &CensusOptions {
            threads: Some(1),
            ..Default::default()
        },
    )
    .unwrap();
    let many = census_galois(
        &br,
        &f,
        &b,
        &CensusOptions {
            threads: Some(4),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(one, many);
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&many).unwrap()
    );
}

#[test]
fn report_json_round_trip() {
    let br = BiRing::new(fqu(3).unwrap());
    let f = br.parse("Y^2 - T").unwrap();
    let r = census_reducible(
        &br,
        &f,
        &BoxSpec::Power { q: 3, n: 4 },
        &CensusOptions::default(),
    )
    .unwrap();
    let back = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(r, back);
}

#[test]
fn box_elements_are_distinct_and_bounded() {
    let k = fqu(2).unwrap();
    let b = BoxSpec::Power { q: 2, n: 5 };
    let n = k.box_len(&b).unwrap();
    let elems: std::collections::BTreeSet<String> = (0..n)
        .map(|i| k.format_int_canonical(&k.box_elem(&b, i)))
        .collect();
    assert_eq!(elems.len() as u64, n);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn census_monotone_in_box(a in -3i64..=3, b in 1i64..=4, c in -5i64..=5, b1 in 1u64..60, extra in 0u64..60) {
        let br = BiRing::new(rationals());
        let f = br.parse(&q_poly(a, b, c)).unwrap();
        let opts = CensusOptions::default();
        let Ok(small) = census_reducible(&br, &f, &BoxSpec::integer(b1), &opts) else {
            // reducible inputs are rejected up front
            return Ok(());
        };
        let large = census_reducible(&br, &f, &BoxSpec::integer(b1 + extra), &opts).unwrap();
        prop_assert!(small.count <= large.count);
        // the smaller box is a prefix of the enumeration
        prop_assert_eq!(&large.witnesses[..small.witnesses.len()], &small.witnesses[..]);
    }

    #[test]
    fn shards_merge_to_full_census(n in 1u64..6, b in 5u64..80, order in any::<u64>()) {
        let br = BiRing::new(rationals());
        let f = br.parse("Y^2 - T^3 - 1").unwrap();
        let bx = BoxSpec::integer(b);
        let full = census_reducible(&br, &f, &bx, &CensusOptions::default()).unwrap();
        let mut parts: Vec<_> = (0..n)
            .map(|i| {
                let range = CensusOptions::shard(full.box_size, n, i).unwrap();
                census_reducible(&br, &f, &bx, &CensusOptions { range: Some(range), ..Default::default() }).unwrap()
            })
            .collect();
        parts.rotate_left((order % n) as usize);
        prop_assert_eq!(merge_reports(parts).unwrap(), full);
    }

    #[test]
    fn parse_format_round_trip(cs in proptest::collection::vec(-9i64..=9, 1..9)) {
        let br = BiRing::new(rationals());
        let terms: Vec<String> = cs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}*T^{}*Y^{}", i % 3, i / 3))
            .collect();
        let f = br.parse(&terms.join(" + ")).unwrap();
        let s = br.format(&f);
        prop_assert_eq!(br.parse(&s).unwrap(), f);
    }
}
