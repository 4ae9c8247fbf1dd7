//! Gate-level synthesis of multiplexed y-rotation circuits.
//!
//! A width-m multiplexed rotation over `nb = m + 1` bits factors into one
//! conjugated rotation per word `b`: CNOTs controlled on each set bit of
//! `b` around a y-rotation on the target bit. [`emit_naive`] writes that
//! product out term by term; [`emit_optimized`] emits the collapsed form
//! that a lazy ordering of the terms admits, with a single CNOT between
//! consecutive rotations; [`cancel_adjacent`] is the peephole pass mapping
//! the former onto the latter.

use crate::angles::{AngleVector, Basis};
use crate::error::{Error, Result};
use crate::gray::{lazy_ordering, BitWord};

/// A primitive gate. Rotation blocks follow the `[[cos t, sin t],
/// [-sin t, cos t]]` convention fixed in [`crate::sim`]; CNOT controls are
/// active on bit value 1.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Gate {
    RotY { target: u32, angle: f64 },
    CNot { control: u32, target: u32 },
}

impl Gate {
    /// Y-rotation by `angle` radians on bit `target`.
    pub fn rot_y(angle: f64, target: u32) -> Self {
        Gate::RotY { target, angle }
    }

    /// CNOT flipping `target` when `control` is 1.
    pub fn cnot(control: u32, target: u32) -> Self {
        Gate::CNot { control, target }
    }

    pub(crate) fn check(&self, nb: u32) -> Result<()> {
        match *self {
            Gate::RotY { target, .. } => {
                if target >= nb {
                    return Err(Error::invalid(format!(
                        "rotation target {target} out of range for {nb} bit(s)"
                    )));
                }
            }
            Gate::CNot { control, target } => {
                if control >= nb || target >= nb {
                    return Err(Error::invalid(format!(
                        "CNOT {control}->{target} out of range for {nb} bit(s)"
                    )));
                }
                if control == target {
                    return Err(Error::invalid(format!(
                        "CNOT control and target coincide at {control}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// An ordered gate list over `nb` bits.
///
/// Gates are stored in application order: `gates[0]` acts on the state
/// first, i.e. it is the rightmost factor in the operator product the
/// circuit denotes. This is the one fixed convention of the crate; the
/// file format in [`crate::files`] states it in its header.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    nb: u32,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Validates every gate against the bit count.
    pub fn new(nb: u32, gates: Vec<Gate>) -> Result<Self> {
        for gate in &gates {
            gate.check(nb)?;
        }
        Ok(Circuit { nb, gates })
    }

    pub fn empty(nb: u32) -> Self {
        Circuit {
            nb,
            gates: Vec::new(),
        }
    }

    pub fn nb(&self) -> u32 {
        self.nb
    }

    /// Gates in application order.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }
}

/// Exact per-kind gate tallies.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GateCounts {
    pub rotations: usize,
    pub cnots: usize,
}

/// Tally rotations and CNOTs.
pub fn gate_counts(circuit: &Circuit) -> GateCounts {
    let mut counts = GateCounts {
        rotations: 0,
        cnots: 0,
    };
    for gate in circuit.gates() {
        match gate {
            Gate::RotY { .. } => counts.rotations += 1,
            Gate::CNot { .. } => counts.cnots += 1,
        }
    }
    counts
}

/// The word ordering by ascending integer value, width `m` (length `2^m`;
/// the single empty word for m = 0).
pub fn natural_order(m: u32) -> Vec<BitWord> {
    (0..1u32 << m)
        .map(|v| BitWord::new(v, m).expect("value below 2^m"))
        .collect()
}

/// One conjugated-rotation term: CNOTs controlled on each set bit of `b`
/// (ascending) targeting bit `nb - 1`, the rotation, then the same CNOTs
/// descending. The palindrome order is canonical so gate-for-gate
/// comparisons are deterministic; the CNOTs commute, so any order denotes
/// the same operator.
pub fn emit_term(b: BitWord, theta: f64, nb: u32) -> Result<Circuit> {
    if b.width() + 1 != nb {
        return Err(Error::invalid(format!(
            "term word width {} does not match {} bit(s) (want nb - 1)",
            b.width(),
            nb
        )));
    }
    let target = nb - 1;
    let mut gates = Vec::with_capacity(2 * b.popcount() as usize + 1);
    for control in b.set_bits() {
        gates.push(Gate::cnot(control, target));
    }
    gates.push(Gate::rot_y(theta, target));
    for control in b.set_bits().rev() {
        gates.push(Gate::cnot(control, target));
    }
    Circuit::new(nb, gates)
}

/// The full term-by-term product over `order`, which must be a
/// permutation of the width-m words. `order[0]` is applied first. The
/// result has `2^m` rotations and `2 * sum_b popcount(b) = m 2^m` CNOTs.
pub fn emit_naive(thetas: &AngleVector, order: &[BitWord]) -> Result<Circuit> {
    if thetas.basis() != Basis::Subscript {
        return Err(Error::invalid("emit_naive expects subscript-basis angles"));
    }
    let m = thetas.width();
    let n = 1usize << m;
    if order.len() != n {
        return Err(Error::invalid(format!(
            "order has {} words, expected {n}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for b in order {
        if b.width() != m {
            return Err(Error::invalid(format!(
                "order word width {} does not match angle width {m}",
                b.width()
            )));
        }
        let v = b.value() as usize;
        if seen[v] {
            return Err(Error::invalid(format!(
                "order repeats the word {b}; not a permutation"
            )));
        }
        seen[v] = true;
    }
    let nb = m + 1;
    let mut gates = Vec::new();
    for b in order {
        let term = emit_term(*b, thetas.values()[b.value() as usize], nb)?;
        gates.extend_from_slice(term.gates());
    }
    Circuit::new(nb, gates)
}

/// The collapsed lazy-order circuit: a rotation per code word with exactly
/// one CNOT between consecutive rotations and a single closing CNOT, `2^m`
/// of each. For m = 0 the circuit is the bare rotation.
pub fn emit_optimized(thetas: &AngleVector) -> Result<Circuit> {
    if thetas.basis() != Basis::Subscript {
        return Err(Error::invalid(
            "emit_optimized expects subscript-basis angles",
        ));
    }
    let m = thetas.width();
    if m == 0 {
        return Circuit::new(1, vec![Gate::rot_y(thetas.values()[0], 0)]);
    }
    let nb = m + 1;
    let target = nb - 1;
    let ordering = lazy_ordering(m)?;
    let codes = ordering.codes();
    let theta = |b: BitWord| thetas.values()[b.value() as usize];

    let mut gates = Vec::with_capacity(2 * codes.len());
    gates.push(Gate::rot_y(theta(codes[0]), target));
    for (j, &control) in ordering.flips().iter().enumerate() {
        gates.push(Gate::cnot(control, target));
        gates.push(Gate::rot_y(theta(codes[j + 1]), target));
    }
    // The last code has a single set bit; its CNOT closes the circuit.
    let closing = codes[codes.len() - 1]
        .set_bits()
        .next()
        .expect("last lazy code has one set bit");
    gates.push(Gate::cnot(closing, target));
    Circuit::new(nb, gates)
}

/// Normal form of a single-target circuit: every maximal run of
/// consecutive CNOTs collapses to the odd-parity controls of the run,
/// emitted in ascending control order. CNOTs sharing a target commute and
/// cancel in equal pairs, so the result denotes the same operator.
/// Rotations are untouched. Idempotent.
///
/// Supports only the shape this module emits: all rotations on one common
/// target bit and all CNOTs targeting that same bit.
pub fn cancel_adjacent(circuit: &Circuit) -> Result<Circuit> {
    let mut common: Option<u32> = None;
    for gate in circuit.gates() {
        let t = match *gate {
            Gate::RotY { target, .. } => target,
            Gate::CNot { target, .. } => target,
        };
        match common {
            None => common = Some(t),
            Some(prev) if prev != t => {
                return Err(Error::UnsupportedShape(format!(
                    "gates target both bit {prev} and bit {t}"
                )));
            }
            _ => {}
        }
    }
    let nb = circuit.nb();
    let mut parity = vec![false; nb as usize];
    let mut gates = Vec::with_capacity(circuit.gates().len());
    let flush = |parity: &mut [bool], gates: &mut Vec<Gate>, target: u32| {
        for control in 0..nb {
            if parity[control as usize] {
                parity[control as usize] = false;
                gates.push(Gate::cnot(control, target));
            }
        }
    };
    for gate in circuit.gates() {
        match *gate {
            Gate::CNot { control, .. } => {
                parity[control as usize] = !parity[control as usize];
            }
            Gate::RotY { target, angle } => {
                flush(&mut parity, &mut gates, target);
                gates.push(Gate::rot_y(angle, target));
            }
        }
    }
    if let Some(target) = common {
        flush(&mut parity, &mut gates, target);
    }
    Circuit::new(nb, gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::AngleVector;

    fn word(value: u32, width: u32) -> BitWord {
        BitWord::new(value, width).unwrap()
    }

    fn subscript(m: u32, values: Vec<f64>) -> AngleVector {
        AngleVector::subscript(m, values).unwrap()
    }

    #[test]
    fn term_with_no_controls_is_bare_rotation() {
        let c = emit_term(word(0b00, 2), 0.5, 3).unwrap();
        assert_eq!(c.gates(), &[Gate::rot_y(0.5, 2)]);
    }

    #[test]
    fn term_with_one_control() {
        let c = emit_term(word(0b10, 2), 0.5, 3).unwrap();
        assert_eq!(
            c.gates(),
            &[Gate::cnot(1, 2), Gate::rot_y(0.5, 2), Gate::cnot(1, 2),]
        );
    }

    #[test]
    fn term_with_two_controls_is_a_palindrome() {
        let c = emit_term(word(0b11, 2), 0.5, 3).unwrap();
        assert_eq!(
            c.gates(),
            &[
                Gate::cnot(0, 2),
                Gate::cnot(1, 2),
                Gate::rot_y(0.5, 2),
                Gate::cnot(1, 2),
                Gate::cnot(0, 2),
            ]
        );
    }

    #[test]
    fn term_width_mismatch_rejected() {
        assert!(emit_term(word(0, 2), 0.5, 2).is_err());
        assert!(emit_term(word(0, 2), 0.5, 4).is_err());
    }

    #[test]
    fn naive_width_one_gate_list() {
        let thetas = subscript(1, vec![0.25, 0.75]);
        let c = emit_naive(&thetas, &[word(0, 1), word(1, 1)]).unwrap();
        assert_eq!(
            c.gates(),
            &[
                Gate::rot_y(0.25, 1),
                Gate::cnot(0, 1),
                Gate::rot_y(0.75, 1),
                Gate::cnot(0, 1),
            ]
        );
    }

    #[test]
    fn naive_counts_over_lazy_order() {
        let thetas = subscript(2, vec![0.1, 0.2, 0.3, 0.4]);
        let order = lazy_ordering(2).unwrap();
        let c = emit_naive(&thetas, order.codes()).unwrap();
        assert_eq!(
            gate_counts(&c),
            GateCounts {
                rotations: 4,
                cnots: 8
            }
        );
    }

    #[test]
    fn naive_rejects_non_permutations() {
        let thetas = subscript(1, vec![0.1, 0.2]);
        assert!(emit_naive(&thetas, &[word(0, 1), word(0, 1)]).is_err());
        assert!(emit_naive(&thetas, &[word(0, 1)]).is_err());
        assert!(emit_naive(&thetas, &[word(0, 2), word(1, 2)]).is_err());
    }

    #[test]
    fn optimized_width_two_matches_collapsed_product() {
        // theta indices in lazy order: 00, 10, 11, 01.
        let thetas = subscript(2, vec![10.0, 11.0, 12.0, 13.0]);
        let c = emit_optimized(&thetas).unwrap();
        assert_eq!(
            c.gates(),
            &[
                Gate::rot_y(10.0, 2),
                Gate::cnot(1, 2),
                Gate::rot_y(12.0, 2),
                Gate::cnot(0, 2),
                Gate::rot_y(13.0, 2),
                Gate::cnot(1, 2),
                Gate::rot_y(11.0, 2),
                Gate::cnot(0, 2),
            ]
        );
    }

    #[test]
    fn optimized_width_zero_is_single_rotation() {
        let c = emit_optimized(&subscript(0, vec![0.4])).unwrap();
        assert_eq!(c.nb(), 1);
        assert_eq!(c.gates(), &[Gate::rot_y(0.4, 0)]);
    }

    #[test]
    fn optimized_width_three_control_sequence() {
        let thetas = subscript(3, (0..8).map(f64::from).collect());
        let c = emit_optimized(&thetas).unwrap();
        assert_eq!(
            gate_counts(&c),
            GateCounts {
                rotations: 8,
                cnots: 8
            }
        );
        let controls: Vec<u32> = c
            .gates()
            .iter()
            .filter_map(|g| match g {
                Gate::CNot { control, .. } => Some(*control),
                _ => None,
            })
            .collect();
        assert_eq!(controls, vec![2, 1, 2, 0, 2, 1, 2, 0]);
    }

    #[test]
    fn cancel_removes_equal_pairs() {
        let c = Circuit::new(3, vec![Gate::cnot(1, 2), Gate::cnot(1, 2)]).unwrap();
        assert!(cancel_adjacent(&c).unwrap().gates().is_empty());
    }

    #[test]
    fn cancel_commutes_shared_target_cnots() {
        let c = Circuit::new(
            3,
            vec![Gate::cnot(0, 2), Gate::cnot(1, 2), Gate::cnot(0, 2)],
        )
        .unwrap();
        assert_eq!(cancel_adjacent(&c).unwrap().gates(), &[Gate::cnot(1, 2)]);
    }

    #[test]
    fn cancel_maps_naive_lazy_onto_optimized() {
        let thetas = subscript(2, vec![0.1, 0.2, 0.3, 0.4]);
        let order = lazy_ordering(2).unwrap();
        let naive = emit_naive(&thetas, order.codes()).unwrap();
        let cancelled = cancel_adjacent(&naive).unwrap();
        assert_eq!(cancelled, emit_optimized(&thetas).unwrap());
    }

    #[test]
    fn cancel_is_idempotent() {
        let thetas = subscript(3, (0..8).map(|v| 0.1 * f64::from(v)).collect());
        let naive = emit_naive(&thetas, &natural_order(3)).unwrap();
        let once = cancel_adjacent(&naive).unwrap();
        let twice = cancel_adjacent(&once).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn cancel_rejects_mixed_targets() {
        let split_rotation = Circuit::new(3, vec![Gate::rot_y(0.1, 1), Gate::cnot(0, 2)]).unwrap();
        assert!(matches!(
            cancel_adjacent(&split_rotation),
            Err(Error::UnsupportedShape(_))
        ));
        let split_cnot = Circuit::new(3, vec![Gate::cnot(0, 2), Gate::cnot(2, 1)]).unwrap();
        assert!(cancel_adjacent(&split_cnot).is_err());
    }

    #[test]
    fn counts_of_empty_circuit() {
        assert_eq!(
            gate_counts(&Circuit::empty(3)),
            GateCounts {
                rotations: 0,
                cnots: 0
            }
        );
    }

    #[test]
    fn circuit_validates_positions() {
        assert!(Circuit::new(2, vec![Gate::rot_y(0.0, 2)]).is_err());
        assert!(Circuit::new(2, vec![Gate::cnot(0, 0)]).is_err());
        assert!(Circuit::new(2, vec![Gate::cnot(2, 1)]).is_err());
    }

    #[test]
    fn natural_order_covers_all_words() {
        let order = natural_order(3);
        assert_eq!(order.len(), 8);
        assert!(order
            .iter()
            .enumerate()
            .all(|(i, b)| b.value() as usize == i));
        assert_eq!(natural_order(0), vec![BitWord::zero(0)]);
    }
}
