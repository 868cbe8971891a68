use std::collections::HashMap;

use num_bigint::BigUint;
use partition_involution::enumerate::restricted_growth_string;
use partition_involution::partition::{format, is_nonoverlapping_all_pairs, parse};
use partition_involution::*;
use proptest::prelude::*;

fn all_up_to(n_max: u32) -> impl Iterator<Item = SetPartition> {
    (1..=n_max).flat_map(|n| enumerate_all(n).unwrap())
}

#[test]
fn format_parse_round_trip_exhaustive() {
    for p in all_up_to(8) {
        for compact in [true, false] {
            let text = format(&p, compact).unwrap();
            assert_eq!(parse(&text).unwrap(), p, "{text}");
        }
    }
}

#[test]
fn pruned_nonoverlapping_matches_all_pairs() {
    for p in all_up_to(8) {
        assert_eq!(p.is_nonoverlapping(), is_nonoverlapping_all_pairs(&p), "{p}");
    }
}

#[test]
fn statistics_properties() {
    for p in all_up_to(10) {
        let n = p.n();
        let (x, y) = (stat_x(&p), stat_y(&p));
        assert!((1..=n).contains(&x) && (1..=n).contains(&y), "{p}");

        // X is the minimum of block maxima
        assert_eq!(x, p.blocks().iter().map(Block::max_entry).min().unwrap());

        if let Ok(r) = aux_r(&p) {
            let min_of_max = p.blocks().iter().filter(|b| !b.is_singleton()).map(Block::max_entry).min();
            assert_eq!(Some(r), min_of_max, "{p}");
        }

        let (_, one) = p.block_containing_one();
        if one.is_singleton() {
            assert_eq!(y, 1);
            assert_eq!(aux_s(&p), Err(Error::OneIsSingleton));
        } else {
            let mut sorted = one.entries().to_vec();
            sorted.sort_unstable();
            assert_eq!(aux_s(&p).unwrap(), sorted[1], "{p}");
            assert_eq!(y, aux_r(&p).unwrap().min(aux_s(&p).unwrap()), "{p}");
        }

        if x < y {
            assert!(p.blocks()[0].is_singleton(), "{p}");
        }
    }
}

fn sorted_spans(p: &SetPartition) -> Vec<Span> {
    let mut s = p.nonsingleton_spans();
    s.sort_unstable();
    s
}

#[test]
fn involution_properties_exhaustive() {
    for p in all_up_to(10) {
        let q = sigma(&p);
        q.check_invariants().unwrap();
        assert_eq!(sigma(&q), p, "{p}");
        assert_eq!((stat_x(&q), stat_y(&q)), (stat_y(&p), stat_x(&p)), "{p}");
        assert_eq!(q == p, stat_x(&p) == stat_y(&p), "{p}");
        assert_eq!(sorted_spans(&p), sorted_spans(&q), "{p}");
        assert_eq!(p.is_nonoverlapping(), q.is_nonoverlapping(), "{p}");
        let expected_class = match stat_x(&p).cmp(&stat_y(&p)) {
            std::cmp::Ordering::Less => OrbitClass::Lower,
            std::cmp::Ordering::Equal => OrbitClass::Fixed,
            std::cmp::Ordering::Greater => OrbitClass::Upper,
        };
        assert_eq!(orbit_class(&p), expected_class);

        if orbit_class(&p) == OrbitClass::Lower {
            let (r, s) = (aux_r(&p).unwrap(), aux_s(&p).unwrap());
            assert_eq!(q.blocks()[0].is_singleton(), r > s, "{p} -> {q}");
        }
    }
}

#[test]
fn lower_and_upper_have_equal_sizes() {
    for n in 1..=9 {
        let mut counts = HashMap::new();
        for p in enumerate_all(n).unwrap() {
            *counts.entry(orbit_class(&p)).or_insert(0u64) += 1;
        }
        assert_eq!(counts.get(&OrbitClass::Lower), counts.get(&OrbitClass::Upper), "n = {n}");
        if n <= 2 {
            assert_eq!(counts.get(&OrbitClass::Lower), None);
        }
    }
}

#[test]
fn inverse_matches_brute_force_preimage() {
    for n in 1..=8 {
        let lower: Vec<SetPartition> =
            enumerate_all(n).unwrap().filter(|p| orbit_class(p) == OrbitClass::Lower).collect();
        let mut preimages: HashMap<SetPartition, Vec<SetPartition>> = HashMap::new();
        for p in &lower {
            preimages.entry(sigma(p)).or_default().push(p.clone());
        }
        for q in enumerate_all(n).unwrap().filter(|q| orbit_class(q) == OrbitClass::Upper) {
            let found = preimages.get(&q).map(Vec::as_slice).unwrap_or(&[]);
            assert_eq!(found.len(), 1, "{q} has preimages {found:?}");
            assert_eq!(sigma_inverse(&q).unwrap(), found[0], "{q}");
        }
    }
}

#[test]
fn bessel_matches_enumeration() {
    let table = v_table(12);
    for n in 1..=12 {
        let count = enumerate_nonoverlapping(n).unwrap().count();
        assert_eq!(BigUint::from(count), table.row_sum(n).unwrap(), "n = {n}");
        assert_eq!(BigUint::from(count), bessel(n), "n = {n}");
    }
}

#[test]
fn y_distribution_matches_v_on_nonoverlapping() {
    let table = v_table(10);
    for n in 1..=10 {
        let mut counts = vec![0u64; n as usize];
        for p in enumerate_nonoverlapping(n).unwrap() {
            counts[stat_y(&p) as usize - 1] += 1;
        }
        let row: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
        assert_eq!(row.as_slice(), table.row(n).unwrap(), "n = {n}");
    }
}

#[test]
fn avoider_distribution_matches_v() {
    let table = v_table(8);
    for n in 1..=8 {
        let dist = avoider_last_entry_distribution(n).unwrap();
        let row: Vec<BigUint> = dist.values().map(|&c| BigUint::from(c)).collect();
        assert_eq!(row.as_slice(), table.row(n).unwrap(), "n = {n}");
        assert_eq!(BigUint::from(dist.values().sum::<u64>()), bessel(n));
    }
}

/// A random restricted-growth string, as a partition.
fn arb_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(any::<u32>(), 1..=max_n).prop_map(|seeds| {
        let mut labels = Vec::with_capacity(seeds.len());
        let mut blocks = 0u32;
        for (i, s) in seeds.into_iter().enumerate() {
            let label = if i == 0 { 0 } else { s % (blocks + 1) };
            blocks = blocks.max(label + 1);
            labels.push(label);
        }
        let mut groups = vec![Vec::new(); blocks as usize];
        for (i, l) in labels.iter().enumerate() {
            groups[*l as usize].push(i as u32 + 1);
        }
        SetPartition::normalize(groups).unwrap()
    })
}

proptest! {
    #[test]
    fn sigma_is_an_involution_at_large_n(p in arb_partition(40)) {
        let q = sigma(&p);
        prop_assert_eq!(sigma(&q), p.clone());
        prop_assert_eq!((stat_x(&q), stat_y(&q)), (stat_y(&p), stat_x(&p)));
        prop_assert_eq!(sorted_spans(&p), sorted_spans(&q));
        prop_assert_eq!(p.is_nonoverlapping(), q.is_nonoverlapping());
    }

    #[test]
    fn text_and_json_round_trip(p in arb_partition(25)) {
        prop_assert_eq!(parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(parse(&format(&p, false).unwrap()).unwrap(), p.clone());
        let back: SetPartition = serde_json::from_value(p.to_json()).unwrap();
        prop_assert_eq!(back, p.clone());
        prop_assert_eq!(restricted_growth_string(&p)[0], 0);
    }
}
