//! Property tests for the ordering, transform, synthesis, and oracle
//! invariants, plus the deterministic seeded sweeps that pin the wider
//! equivalences.

use muxrot::angles::{parity_transform_direct, phis_from_thetas, thetas_from_phis, AngleVector};
use muxrot::gray::{
    flip_sequence_by_tree, flip_sequence_closed_form, lazy_ordering, validate_lazy, BitWord,
    LazyOrdering,
};
use muxrot::sim::{apply_circuit, circuit_matrix, max_abs_diff, StateVector};
use muxrot::synth::{
    cancel_adjacent, emit_naive, emit_optimized, gate_counts, natural_order, Circuit, Gate,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_thetas(m: u32, seed: u64) -> AngleVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    AngleVector::subscript(
        m,
        (0..1usize << m)
            .map(|_| rng.random_range(-3.0..3.0))
            .collect(),
    )
    .unwrap()
}

fn theta_vector(max_m: u32) -> impl Strategy<Value = AngleVector> {
    (0..=max_m).prop_flat_map(|m| {
        prop::collection::vec(-3.0f64..3.0, 1usize << m)
            .prop_map(move |v| AngleVector::subscript(m, v).unwrap())
    })
}

proptest! {
    #[test]
    fn tree_and_closed_form_agree(m in 1u32..=16) {
        prop_assert_eq!(
            flip_sequence_by_tree(m).unwrap(),
            flip_sequence_closed_form(m).unwrap()
        );
    }

    #[test]
    fn generated_orderings_validate(m in 1u32..=16) {
        prop_assert!(validate_lazy(&lazy_ordering(m).unwrap()));
    }

    #[test]
    fn flip_counts_follow_ruler_pattern(m in 1u32..=16) {
        let flips = flip_sequence_closed_form(m).unwrap();
        prop_assert_eq!(flips.iter().filter(|&&p| p == 0).count(), 1);
        prop_assert_eq!(
            flips.iter().filter(|&&p| p == m - 1).count(),
            1usize << (m - 1)
        );
    }

    #[test]
    fn swapping_two_codes_invalidates(m in 2u32..=8, swap_seed in 0u64..1000) {
        let ordering = lazy_ordering(m).unwrap();
        let mut codes = ordering.codes().to_vec();
        let mut rng = ChaCha8Rng::seed_from_u64(swap_seed);
        let i = rng.random_range(1..codes.len());
        let mut j = rng.random_range(1..codes.len());
        while j == i {
            j = rng.random_range(1..codes.len());
        }
        codes.swap(i, j);
        let tampered = LazyOrdering::from_parts(m, ordering.flips().to_vec(), codes);
        prop_assert!(!validate_lazy(&tampered));
    }

    #[test]
    fn transform_round_trips(thetas in theta_vector(10)) {
        let back = thetas_from_phis(&phis_from_thetas(&thetas).unwrap()).unwrap();
        for (x, y) in thetas.values().iter().zip(back.values()) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn butterfly_matches_direct_reference(thetas in theta_vector(8)) {
        let fast = phis_from_thetas(&thetas).unwrap();
        let direct = parity_transform_direct(thetas.values());
        for (x, y) in fast.values().iter().zip(&direct) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn cancellation_reaches_the_collapsed_form(
        m in 1u32..=6,
        seed in 0u64..1000,
    ) {
        let thetas = random_thetas(m, seed);
        let naive = emit_naive(&thetas, lazy_ordering(m).unwrap().codes()).unwrap();
        prop_assert_eq!(
            cancel_adjacent(&naive).unwrap(),
            emit_optimized(&thetas).unwrap()
        );
    }

    #[test]
    fn count_law(m in 0u32..=10, seed in 0u64..1000) {
        let thetas = random_thetas(m, seed);
        let optimized = gate_counts(&emit_optimized(&thetas).unwrap());
        let n = 1usize << m;
        prop_assert_eq!(optimized.rotations, n);
        prop_assert_eq!(optimized.cnots, if m == 0 { 0 } else { n });
        let naive = gate_counts(&emit_naive(&thetas, &natural_order(m)).unwrap());
        prop_assert_eq!(naive.rotations, n);
        prop_assert_eq!(naive.cnots, m as usize * n);
    }

    #[test]
    fn one_cnot_separates_consecutive_rotations(m in 1u32..=10, seed in 0u64..1000) {
        // In application order: no CNOT before the first rotation, exactly
        // one between consecutive rotations, exactly one after the last.
        let circuit = emit_optimized(&random_thetas(m, seed)).unwrap();
        let mut run = 0usize;
        let mut rotations_seen = 0usize;
        for gate in circuit.gates() {
            match gate {
                Gate::CNot { .. } => run += 1,
                Gate::RotY { .. } => {
                    prop_assert_eq!(run, if rotations_seen == 0 { 0 } else { 1 });
                    rotations_seen += 1;
                    run = 0;
                }
            }
        }
        prop_assert_eq!(run, 1);
        prop_assert_eq!(rotations_seen, 1usize << m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn naive_order_does_not_matter(
        m in 1u32..=3,
        seed in 0u64..1000,
        shuffle_seed in 0u64..1000,
    ) {
        let thetas = random_thetas(m, seed);
        let mut order = natural_order(m);
        let mut rng = ChaCha8Rng::seed_from_u64(shuffle_seed);
        order.shuffle(&mut rng);
        let shuffled = circuit_matrix(&emit_naive(&thetas, &order).unwrap()).unwrap();
        let optimized = circuit_matrix(&emit_optimized(&thetas).unwrap()).unwrap();
        prop_assert!(max_abs_diff(&shuffled, &optimized).unwrap() <= 1e-10);
    }

    #[test]
    fn circuits_stay_real_and_unitary(m in 0u32..=4, seed in 0u64..1000) {
        let u = circuit_matrix(&emit_optimized(&random_thetas(m, seed)).unwrap()).unwrap();
        prop_assert!(u.max_imag() <= 1e-15);
        prop_assert!(u.unitarity_error() <= 1e-10);
    }

    #[test]
    fn cancel_is_idempotent_on_supported_shapes(
        nb in 2u32..=5,
        gate_picks in prop::collection::vec((0u32..4, -3.0f64..3.0), 0..40),
    ) {
        let target = nb - 1;
        let gates: Vec<Gate> = gate_picks
            .into_iter()
            .map(|(pick, angle)| {
                if pick == 3 {
                    Gate::rot_y(angle, target)
                } else {
                    Gate::cnot(pick % (nb - 1), target)
                }
            })
            .collect();
        let circuit = Circuit::new(nb, gates).unwrap();
        let once = cancel_adjacent(&circuit).unwrap();
        let twice = cancel_adjacent(&once).unwrap();
        prop_assert_eq!(&once, &twice);
        // The pass must preserve the operator.
        prop_assert!(
            max_abs_diff(
                &circuit_matrix(&circuit).unwrap(),
                &circuit_matrix(&once).unwrap()
            )
            .unwrap()
                <= 1e-12
        );
    }
}

/// Matrix-level equivalence of the collapsed and term-by-term emissions,
/// swept deterministically across widths with seeded angles and one
/// seeded shuffle per width.
#[test]
fn optimized_matches_naive_up_to_width_eight() {
    for m in 1..=8u32 {
        let thetas = random_thetas(m, 7000 + u64::from(m));
        let mut order = natural_order(m);
        let mut rng = ChaCha8Rng::seed_from_u64(8000 + u64::from(m));
        order.shuffle(&mut rng);
        let naive = circuit_matrix(&emit_naive(&thetas, &order).unwrap()).unwrap();
        let optimized = circuit_matrix(&emit_optimized(&thetas).unwrap()).unwrap();
        let diff = max_abs_diff(&naive, &optimized).unwrap();
        assert!(diff <= 1e-10, "width {m}: diff {diff}");
    }
}

/// Statevector sweeps agree with dense circuit matrices column by column.
#[test]
fn statevector_matches_dense_columns_up_to_eight_bits() {
    for nb in 1..=8u32 {
        let thetas = random_thetas(nb - 1, 9000 + u64::from(nb));
        let circuit = emit_optimized(&thetas).unwrap();
        let dense = circuit_matrix(&circuit).unwrap();
        for col in 0..dense.dim() {
            let out = apply_circuit(&circuit, &StateVector::basis(nb, col).unwrap()).unwrap();
            for (row, amp) in out.amplitudes().iter().enumerate() {
                assert!(
                    (amp - dense.get(row, col)).norm() <= 1e-12,
                    "nb {nb}, column {col}, row {row}"
                );
            }
        }
    }
}

/// The closing CNOT of the collapsed form is controlled by the single set
/// bit of the last lazy code, which this construction pins to bit 0.
#[test]
fn closing_control_is_bit_zero() {
    for m in 1..=10u32 {
        let circuit = emit_optimized(&random_thetas(m, 100 + u64::from(m))).unwrap();
        match circuit.gates().last().unwrap() {
            Gate::CNot { control, target } => {
                assert_eq!(*control, 0);
                assert_eq!(*target, m);
            }
            other => panic!("expected closing CNOT, got {other:?}"),
        }
        let last_code = *lazy_ordering(m).unwrap().codes().last().unwrap();
        assert_eq!(last_code, BitWord::new(1, m).unwrap());
    }
}
