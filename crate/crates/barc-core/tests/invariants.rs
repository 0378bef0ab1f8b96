//! Cross-module invariants: the three counting routes agree, the juggling
//! map round-trips, and the structural properties of the recursion hold on
//! exhaustive small grids and random inputs.

use num_bigint::BigUint;
use proptest::prelude::*;

use barc_core::{
    brute_force_barcodes, count_barcodes, differential, enumerate_barcodes,
    enumerate_sequences_capped, kostant_count, kostant_partitions, partition_to_barcode, sigma,
    sigma_inverse, weight_of_betti, young_overlays, Barcode, BettiCurve, Interval, JugglingState,
};

/// All curves of length `1..=max_n` with entries `0..=max_entry`.
fn curve_grid(max_n: usize, max_entry: u64) -> Vec<BettiCurve> {
    let mut grid = Vec::new();
    for n in 1..=max_n {
        let mut stack = vec![Vec::new()];
        for _ in 0..n {
            stack = stack
                .into_iter()
                .flat_map(|prefix: Vec<u64>| {
                    (0..=max_entry).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        grid.extend(stack.into_iter().map(BettiCurve::new));
    }
    grid
}

#[test]
fn recursion_agrees_with_brute_force_on_small_grid() {
    for beta in curve_grid(4, 3) {
        let recursive = enumerate_barcodes(&beta).unwrap();
        let brute = brute_force_barcodes(&beta);
        assert_eq!(recursive, brute, "fiber mismatch for {beta}");
        assert_eq!(
            count_barcodes(&beta),
            BigUint::from(recursive.len() as u64),
            "count mismatch for {beta}"
        );
    }
}

#[test]
fn kostant_route_agrees_on_small_grid() {
    for beta in curve_grid(3, 3) {
        let mu = weight_of_betti(&beta);
        assert_eq!(
            kostant_count(&mu).unwrap(),
            count_barcodes(&beta),
            "Kostant count mismatch for {beta}"
        );
        let partitions = kostant_partitions(&mu).unwrap();
        let converted: Vec<Barcode> = partitions.iter().map(partition_to_barcode).collect();
        assert_eq!(
            converted,
            enumerate_barcodes(&beta).unwrap(),
            "partition/barcode bijection mismatch for {beta}"
        );
    }
}

#[test]
fn juggling_route_agrees_on_small_grid() {
    for beta in curve_grid(3, 2) {
        let n = beta.len();
        let initial = differential(&beta).to_state();
        let sequences =
            enumerate_sequences_capped(&initial, &JugglingState::zero(), n, 1_000_000).unwrap();
        assert_eq!(
            BigUint::from(sequences.len() as u64),
            count_barcodes(&beta),
            "sequence count mismatch for {beta}"
        );
        for seq in &sequences {
            assert!(seq.is_valid());
            let barcode = sigma_inverse(seq).unwrap();
            assert_eq!(&sigma(&barcode, n).unwrap(), seq, "sigma round trip for {beta}");
        }
        for barcode in enumerate_barcodes(&beta).unwrap() {
            let seq = sigma(&barcode, n).unwrap();
            assert_eq!(seq.initial(), &initial);
            assert!(seq.terminal().is_zero());
            assert_eq!(sigma_inverse(&seq).unwrap(), barcode);
        }
    }
}

#[test]
fn overlay_groups_partition_the_fiber() {
    for beta in curve_grid(3, 3) {
        if beta.values()[0] == 0 {
            continue;
        }
        let fiber = enumerate_barcodes(&beta).unwrap();
        for overlay in young_overlays(&beta).unwrap() {
            let initial = overlay.initial_bars();
            let group = fiber
                .iter()
                .filter(|b| {
                    let born_first: Barcode =
                        b.bars().filter(|(iv, _)| iv.birth() == 1).collect();
                    born_first == initial
                })
                .count();
            let rest: Vec<u64> = beta.values()[1..]
                .iter()
                .zip(&overlay.values()[1..])
                .map(|(b, y)| b - y)
                .collect();
            let expected = count_barcodes(&BettiCurve::new(rest));
            assert_eq!(
                BigUint::from(group as u64),
                expected,
                "overlay group size mismatch for {beta}"
            );
        }
    }
}

#[test]
fn unit_barcode_section_of_betti_map() {
    for beta in curve_grid(6, 4) {
        let unit = Barcode::unit_of(&beta);
        assert_eq!(unit.betti_curve(beta.len()).unwrap(), beta);
    }
}

#[test]
fn throw_height_cap_loses_no_sequences() {
    // Compare capped enumeration against a much looser cap on a small
    // grid; equal outputs mean the tight cap is safe.
    for beta in curve_grid(3, 2) {
        let n = beta.len();
        let initial = differential(&beta).to_state();
        let capped =
            enumerate_sequences_capped(&initial, &JugglingState::zero(), n, 1_000_000).unwrap();
        let loose = enumerate_sequences_loose(&initial, n);
        assert_eq!(capped, loose, "height cap dropped sequences for {beta}");
    }
}

/// Reference enumeration with a crude, generous height bound: no ball in
/// any state of a valid sequence can sit above `initial.height() + n`.
fn enumerate_sequences_loose(
    initial: &JugglingState,
    n: usize,
) -> Vec<barc_core::JugglingSequence> {
    let hmax = initial.height() + n + 2;
    let mut out = Vec::new();
    let mut path = vec![initial.clone()];
    loose_rec(&mut path, n, hmax, &mut out);
    out.sort();
    out
}

fn loose_rec(
    path: &mut Vec<JugglingState>,
    n: usize,
    hmax: usize,
    out: &mut Vec<barc_core::JugglingSequence>,
) {
    if path.len() == n + 1 {
        if path.last().unwrap().is_zero() {
            out.push(barc_core::JugglingSequence::new(path.clone()));
        }
        return;
    }
    let current = path.last().unwrap().clone();
    let budget = current.entry(1);
    if budget < 0 {
        return;
    }
    let base: Vec<i64> = current.entries().iter().skip(1).copied().collect();
    let mut throws = vec![0i64; hmax];
    loose_throws(&base, &mut throws, 0, budget, path, n, hmax, out);
}

#[allow(clippy::too_many_arguments)]
fn loose_throws(
    base: &[i64],
    throws: &mut Vec<i64>,
    from: usize,
    budget: i64,
    path: &mut Vec<JugglingState>,
    n: usize,
    hmax: usize,
    out: &mut Vec<barc_core::JugglingSequence>,
) {
    if from == throws.len() {
        if budget != 0 {
            return;
        }
        let height = base.len().max(throws.len());
        let entries: Vec<i64> = (0..height)
            .map(|k| base.get(k).copied().unwrap_or(0) + throws.get(k).copied().unwrap_or(0))
            .collect();
        path.push(JugglingState::new(entries).expect("sums stay nonnegative"));
        loose_rec(path, n, hmax, out);
        path.pop();
        return;
    }
    for t in 0..=budget {
        throws[from] = t;
        loose_throws(base, throws, from + 1, budget - t, path, n, hmax, out);
        throws[from] = 0;
    }
}

proptest! {
    #[test]
    fn betti_of_unit_barcode_is_identity(values in prop::collection::vec(0u64..=4, 0..=6)) {
        let beta = BettiCurve::new(values);
        prop_assert_eq!(Barcode::unit_of(&beta).betti_curve(beta.len()).unwrap(), beta);
    }

    #[test]
    fn betti_map_is_additive(
        a in prop::collection::vec((1usize..=5, 1usize..=4, 1u64..=3), 0..=6),
        b in prop::collection::vec((1usize..=5, 1usize..=4, 1u64..=3), 0..=6),
    ) {
        let build = |spec: &[(usize, usize, u64)]| -> Barcode {
            spec.iter()
                .map(|&(birth, span, m)| (Interval::new(birth, birth + span), m))
                .collect()
        };
        let left = build(&a);
        let right = build(&b);
        let n = 10;
        let sum = left
            .betti_curve(n)
            .unwrap()
            .pointwise_add(&right.betti_curve(n).unwrap());
        prop_assert_eq!(left.union(&right).betti_curve(n).unwrap(), sum);
    }

    #[test]
    fn barcode_json_is_canonically_idempotent(
        spec in prop::collection::vec((1u64..=5, 1u64..=4, 1u64..=3), 0..=6),
    ) {
        let triples: Vec<(u64, u64, u64)> =
            spec.iter().map(|&(b, span, m)| (b, b + span, m)).collect();
        let barcode = Barcode::from_triples(triples).unwrap();
        let once = serde_json::to_string(&barcode).unwrap();
        let reparsed: Barcode = serde_json::from_str(&once).unwrap();
        let twice = serde_json::to_string(&reparsed).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(reparsed, barcode);
    }

    #[test]
    fn interval_root_is_indicator_of_support(birth in 1usize..=6, span in 1usize..=6) {
        let interval = Interval::new(birth, birth + span);
        let weight = barc_core::interval_to_root(interval);
        let coords = weight.simple_coords();
        prop_assert_eq!(coords.len(), birth + span - 1);
        for (k, &z) in coords.iter().enumerate() {
            let index = k + 1;
            prop_assert_eq!(z, i64::from(index >= birth && index < birth + span));
        }
    }

    #[test]
    fn simple_standard_round_trip(coords in prop::collection::vec(-5i64..=5, 0..=7)) {
        let weight = barc_core::Weight::from_simple(coords.clone());
        let standard = weight.standard_coords();
        prop_assert_eq!(standard.iter().sum::<i64>(), 0);
        let back = barc_core::Weight::from_standard(&standard).unwrap();
        prop_assert_eq!(back.simple_coords(), coords.as_slice());
    }

    #[test]
    fn zero_columns_split_the_count(
        left in prop::collection::vec(0u64..=3, 0..=3),
        right in prop::collection::vec(0u64..=3, 0..=3),
    ) {
        let mut values = left.clone();
        values.push(0);
        values.extend(right.iter().copied());
        let whole = count_barcodes(&BettiCurve::new(values));
        let product = count_barcodes(&BettiCurve::new(left)) * count_barcodes(&BettiCurve::new(right));
        prop_assert_eq!(whole, product);
    }

    #[test]
    fn counts_are_at_least_one(values in prop::collection::vec(0u64..=4, 0..=6)) {
        prop_assert!(count_barcodes(&BettiCurve::new(values)) >= BigUint::from(1u32));
    }
}
