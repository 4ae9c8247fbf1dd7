//! Circuit-against-target verification used by the CLI and the C API.
//!
//! Small circuits are compared as dense matrices. Above the dense guard
//! the check falls back to applying the circuit to a fixed set of seeded
//! random basis states and comparing against the analytically known
//! columns of the target.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angles::AngleVector;
use crate::error::{Error, Result};
use crate::sim::{
    apply_circuit, circuit_matrix, max_abs_diff, target_d_matrix, StateVector, DENSE_MAX_BITS,
    STATEVECTOR_MAX_BITS,
};
use crate::synth::Circuit;

/// Basis states sampled in the statevector fallback.
pub const SPOT_CHECK_SAMPLES: usize = 32;

const SPOT_CHECK_SEED: u64 = 0x2c9f_31a7;

/// How a verification ran.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Full dense-matrix comparison.
    Dense,
    /// Circuit applied to sampled basis states.
    Statevector { samples: usize },
}

/// Outcome of [`verify_circuit`].
#[derive(Copy, Clone, Debug)]
pub struct VerifyReport {
    pub max_abs_diff: f64,
    pub passed: bool,
    pub mode: VerifyMode,
}

/// Compare `circuit` against the multiplexed rotation the control-basis
/// angles `phis` define. Passes when the largest observed entry
/// difference is at most `tol`.
pub fn verify_circuit(phis: &AngleVector, circuit: &Circuit, tol: f64) -> Result<VerifyReport> {
    let nb = circuit.nb();
    if phis.width() + 1 != nb {
        return Err(Error::invalid(format!(
            "angle width {} does not match circuit over {nb} bit(s)",
            phis.width()
        )));
    }
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::invalid(format!("tolerance {tol} must be >= 0")));
    }
    let (diff, mode) = if nb <= DENSE_MAX_BITS {
        let built = circuit_matrix(circuit)?;
        let target = target_d_matrix(phis, nb)?;
        (max_abs_diff(&built, &target)?, VerifyMode::Dense)
    } else if nb <= STATEVECTOR_MAX_BITS {
        (
            spot_check(phis, circuit)?,
            VerifyMode::Statevector {
                samples: SPOT_CHECK_SAMPLES,
            },
        )
    } else {
        return Err(Error::ResourceLimit(format!(
            "verification supports at most {STATEVECTOR_MAX_BITS} bits, got {nb}"
        )));
    };
    Ok(VerifyReport {
        max_abs_diff: diff,
        passed: diff <= tol,
        mode,
    })
}

/// Run the circuit on seeded random basis states and compare each result
/// with the corresponding target column, which is supported on two basis
/// states only: for input `x = tau * 2^m + c` the output carries
/// `(cos phi_c, -sin phi_c)` on `(c, c + 2^m)` when `tau = 0` and
/// `(sin phi_c, cos phi_c)` when `tau = 1`.
fn spot_check(phis: &AngleVector, circuit: &Circuit) -> Result<f64> {
    let nb = circuit.nb();
    let dim = 1usize << nb;
    let half = dim / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
    let mut worst = 0.0f64;
    for _ in 0..SPOT_CHECK_SAMPLES {
        let x = rng.random_range(0..dim);
        let (tau, c) = (x / half, x % half);
        let phi = phis.values()[c];
        let (lo, hi) = if tau == 0 {
            (phi.cos(), -phi.sin())
        } else {
            (phi.sin(), phi.cos())
        };
        let out = apply_circuit(circuit, &StateVector::basis(nb, x)?)?;
        for (index, amp) in out.amplitudes().iter().enumerate() {
            let expected = if index == c {
                lo
            } else if index == c + half {
                hi
            } else {
                0.0
            };
            worst = worst.max((*amp - expected).norm());
        }
    }
    Ok(worst)
}
