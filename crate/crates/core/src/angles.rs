//! Conversion between the two angle bases of a multiplexed rotation.
//!
//! A multiplexed y-rotation is described either by the rotation each
//! control pattern receives (the control basis, one angle per pattern `c`)
//! or by the parameters of the conjugated rotations the circuit actually
//! applies (the subscript basis, one angle per word `b`). The two are
//! related by a parity (Walsh) transform:
//!
//! ```text
//! phi_c   = sum_b (-1)^{popcount(b & c)} theta_b
//! theta_b = 2^-m sum_c (-1)^{popcount(b & c)} phi_c
//! ```
//!
//! The `2^-m` normalization is placed on the control-to-subscript
//! direction so the subscript angles feed straight into the emitted
//! rotation gates; the matrix oracle in `sim` pins this convention.
//! Angles are plain radians with no range reduction, so values outside
//! `(-pi, pi]` survive round trips unchanged.

use crate::error::{Error, Result};
use crate::gray::MAX_WIDTH;

/// Which meaning the entries of an [`AngleVector`] carry.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Per-control-pattern target rotations (the block angles of the
    /// multiplexed rotation).
    Control,
    /// Per-word parameters of the conjugated rotations in the emitted
    /// circuit.
    Subscript,
}

/// `2^m` finite angles in radians, tagged with their basis. The entry at
/// integer index `i` belongs to the width-m word with value `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleVector {
    width: u32,
    basis: Basis,
    values: Vec<f64>,
}

impl AngleVector {
    pub fn new(width: u32, basis: Basis, values: Vec<f64>) -> Result<Self> {
        if width > MAX_WIDTH {
            return Err(Error::invalid(format!(
                "angle width {width} exceeds maximum {MAX_WIDTH}"
            )));
        }
        let expected = 1usize << width;
        if values.len() != expected {
            return Err(Error::invalid(format!(
                "angle vector of width {width} needs {expected} entries, got {}",
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("non-finite angle {bad}")));
        }
        Ok(AngleVector {
            width,
            basis,
            values,
        })
    }

    /// Control-basis vector.
    pub fn control(width: u32, values: Vec<f64>) -> Result<Self> {
        Self::new(width, Basis::Control, values)
    }

    /// Subscript-basis vector.
    pub fn subscript(width: u32, values: Vec<f64>) -> Result<Self> {
        Self::new(width, Basis::Subscript, values)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Entry count, always `2^width`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.values.len()
    }
}

/// In-place parity (Walsh) butterfly: replaces `v` with `H v` where
/// `H[k][j] = (-1)^{popcount(k & j)}`. O(m 2^m).
fn parity_butterfly(v: &mut [f64]) {
    let n = v.len();
    let mut h = 1;
    while h < n {
        let mut block = 0;
        while block < n {
            for i in block..block + h {
                let (a, b) = (v[i], v[i + h]);
                v[i] = a + b;
                v[i + h] = a - b;
            }
            block += 2 * h;
        }
        h *= 2;
    }
}

/// The same parity transform as the butterfly, evaluated term by term in
/// O(4^m). Kept as the independent reference the test suites compare the
/// fast path against.
pub fn parity_transform_direct(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    (0..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    let sign = if (k & j).count_ones() % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    };
                    sign * values[j]
                })
                .sum()
        })
        .collect()
}

/// Convert control-basis angles to the subscript basis:
/// `theta_b = 2^-m sum_c (-1)^{popcount(b & c)} phi_c`.
pub fn thetas_from_phis(phis: &AngleVector) -> Result<AngleVector> {
    if phis.basis() != Basis::Control {
        return Err(Error::invalid(
            "thetas_from_phis expects a control-basis vector",
        ));
    }
    let scale = 1.0 / phis.len() as f64;
    let mut values = phis.values().to_vec();
    parity_butterfly(&mut values);
    for v in &mut values {
        *v *= scale;
    }
    AngleVector::subscript(phis.width(), values)
}

/// Convert subscript-basis angles to the control basis:
/// `phi_c = sum_b (-1)^{popcount(b & c)} theta_b`.
pub fn phis_from_thetas(thetas: &AngleVector) -> Result<AngleVector> {
    if thetas.basis() != Basis::Subscript {
        return Err(Error::invalid(
            "phis_from_thetas expects a subscript-basis vector",
        ));
    }
    let mut values = thetas.values().to_vec();
    parity_butterfly(&mut values);
    AngleVector::control(thetas.width(), values)
}
