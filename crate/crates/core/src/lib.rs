//! Synthesis of multiplexed y-rotation circuits.
//!
//! A multiplexed y-rotation over `m + 1` bits applies a different
//! y-rotation to the target bit for each pattern of the `m` control bits.
//! This crate decomposes such an operator into single-bit rotations and
//! CNOTs. Walking the rotation terms in a lazy (Gray-code) order makes
//! all but one CNOT between consecutive rotations cancel, cutting the
//! CNOT count from `m 2^m` to `2^m`.
//!
//! The pieces:
//!
//! - [`gray`]: lazy orderings of the width-m words, by tree traversal or
//!   closed form, plus a validator.
//! - [`angles`]: the parity transform between per-control target angles
//!   and the rotation parameters the circuit applies.
//! - [`synth`]: circuit emitters (term-by-term and collapsed lazy-order)
//!   and the CNOT cancellation pass connecting them.
//! - [`sim`]: the brute-force oracle — dense gate/circuit/target
//!   matrices and a statevector runner for widths past the dense guard.
//! - [`files`]: the angles and circuit text formats used by the CLI.
//! - [`verify`]: circuit-against-target checking with automatic fallback
//!   from dense to statevector mode.
//!
//! ```
//! use muxrot::angles::{thetas_from_phis, AngleVector};
//! use muxrot::synth::{emit_optimized, gate_counts};
//! use muxrot::verify::verify_circuit;
//!
//! let phis = AngleVector::control(2, vec![0.3, -1.1, 0.25, 2.0])?;
//! let circuit = emit_optimized(&thetas_from_phis(&phis)?)?;
//! assert_eq!(gate_counts(&circuit).cnots, 4);
//! assert!(verify_circuit(&phis, &circuit, 1e-10)?.passed);
//! # Ok::<(), muxrot::Error>(())
//! ```

pub mod angles;
pub mod error;
pub mod files;
pub mod gray;
pub mod sim;
pub mod synth;
pub mod verify;

pub use angles::{AngleVector, Basis};
pub use error::{Error, Result};
pub use gray::{BitWord, LazyOrdering};
pub use sim::{DenseUnitary, StateVector};
pub use synth::{Circuit, Gate, GateCounts};
