//! Brute-force verification oracle.
//!
//! Everything here is dense and direct on purpose: gate matrices are
//! built by explicit tensor embedding, circuits by multiplying those
//! matrices out, and the target multiplexed rotation by writing its block
//! structure down entrywise. The synthesized circuits are checked against
//! these constructions rather than against each other. For widths where
//! dense matrices are infeasible, [`apply_circuit`] runs the circuit on a
//! state vector instead.
//!
//! Storage is complex even though every matrix this crate produces is
//! real orthogonal; that keeps the reality of the outputs a checkable
//! property instead of a type constraint.

use num_complex::Complex64;

use crate::angles::{AngleVector, Basis};
use crate::error::{Error, Result};
use crate::synth::{Circuit, Gate};

/// Bit-count guard for dense matrices (dim = 2^nb <= 1024).
pub const DENSE_MAX_BITS: u32 = 10;
/// Bit-count guard for state vectors.
pub const STATEVECTOR_MAX_BITS: u32 = 24;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A square complex matrix over the `2^nb`-dimensional state space,
/// row-major, indexed by basis-state integers. Basis state `x` has bit
/// `k` as the coefficient of `2^k`, matching the word convention.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseUnitary {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseUnitary {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        DenseUnitary { dim, entries }
    }

    fn zeros(dim: usize) -> Self {
        DenseUnitary {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &DenseUnitary) -> Result<DenseUnitary> {
        check_dims(self, rhs)?;
        let mut out = DenseUnitary::zeros(self.dim);
        mul_into(self, rhs, &mut out);
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> DenseUnitary {
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entries[r * n + c].conj();
            }
        }
        DenseUnitary { dim: n, entries }
    }

    /// Max-entry distance of `U U+` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let product = self
            .mul(&self.dagger())
            .expect("dagger preserves dimension");
        let mut err = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let expected = if r == c { ONE } else { ZERO };
                err = err.max((product.get(r, c) - expected).norm());
            }
        }
        err
    }

    /// Largest absolute imaginary part over all entries.
    pub fn max_imag(&self) -> f64 {
        self.entries
            .iter()
            .fold(0.0f64, |acc, z| acc.max(z.im.abs()))
    }
}

fn check_dims(a: &DenseUnitary, b: &DenseUnitary) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::invalid(format!(
            "dimension mismatch: {} vs {}",
            a.dim, b.dim
        )));
    }
    Ok(())
}

/// `out += lhs * rhs` with `out` zeroed first. Skips exact-zero entries of
/// `lhs`, which makes products against sparse gate matrices linear in the
/// matrix size.
fn mul_into(lhs: &DenseUnitary, rhs: &DenseUnitary, out: &mut DenseUnitary) {
    let n = lhs.dim;
    out.entries.fill(ZERO);
    for i in 0..n {
        for k in 0..n {
            let a = lhs.entries[i * n + k];
            if a == ZERO {
                continue;
            }
            let row_out = &mut out.entries[i * n..(i + 1) * n];
            let row_rhs = &rhs.entries[k * n..(k + 1) * n];
            for (o, r) in row_out.iter_mut().zip(row_rhs) {
                *o += a * r;
            }
        }
    }
}

/// Complex amplitudes over the basis states of some power-of-two
/// dimension. Normalization is not required; the oracle applies circuits
/// to arbitrary vectors, basis columns included.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if !amplitudes.len().is_power_of_two() {
            return Err(Error::invalid(format!(
                "state dimension {} is not a power of two",
                amplitudes.len()
            )));
        }
        if amplitudes
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::invalid("non-finite amplitude"));
        }
        Ok(StateVector { amplitudes })
    }

    /// The basis state `e_index` over `nb` bits.
    pub fn basis(nb: u32, index: usize) -> Result<Self> {
        if nb > STATEVECTOR_MAX_BITS {
            return Err(Error::ResourceLimit(format!(
                "state vectors support at most {STATEVECTOR_MAX_BITS} bits, got {nb}"
            )));
        }
        let dim = 1usize << nb;
        if index >= dim {
            return Err(Error::invalid(format!(
                "basis index {index} out of range for {nb} bit(s)"
            )));
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Ok(StateVector { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }
}

fn check_gate_positions(gate: &Gate, nb: u32) -> Result<()> {
    let ok = match *gate {
        Gate::RotY { target, .. } => target < nb,
        Gate::CNot { control, target } => control < nb && target < nb && control != target,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "gate {gate:?} out of range for {nb} bit(s)"
        )))
    }
}

fn check_dense_bits(nb: u32) -> Result<usize> {
    if nb > DENSE_MAX_BITS {
        return Err(Error::ResourceLimit(format!(
            "dense matrices support at most {DENSE_MAX_BITS} bits, got {nb}"
        )));
    }
    Ok(1usize << nb)
}

fn write_gate_matrix(out: &mut DenseUnitary, gate: &Gate) {
    let dim = out.dim;
    out.entries.fill(ZERO);
    match *gate {
        Gate::RotY { target, angle } => {
            // 2x2 block [[cos, sin], [-sin, cos]] on bit `target`.
            let (c, s) = (
                Complex64::new(angle.cos(), 0.0),
                Complex64::new(angle.sin(), 0.0),
            );
            let tbit = 1usize << target;
            for x in 0..dim {
                if x & tbit == 0 {
                    let y = x | tbit;
                    out.entries[x * dim + x] = c;
                    out.entries[x * dim + y] = s;
                    out.entries[y * dim + x] = -s;
                    out.entries[y * dim + y] = c;
                }
            }
        }
        Gate::CNot { control, target } => {
            let (cbit, tbit) = (1usize << control, 1usize << target);
            for x in 0..dim {
                let image = if x & cbit != 0 { x ^ tbit } else { x };
                out.entries[image * dim + x] = ONE;
            }
        }
    }
}

/// Dense matrix of a single gate over `nb` bits. A y-rotation embeds the
/// block `[[cos t, sin t], [-sin t, cos t]]` (the exponential of
/// `i t sigma_y`) on its target bit; a CNOT permutes `x` to
/// `x XOR 2^target` whenever bit `control` of `x` is set.
pub fn gate_matrix(gate: &Gate, nb: u32) -> Result<DenseUnitary> {
    check_gate_positions(gate, nb)?;
    let dim = check_dense_bits(nb)?;
    let mut out = DenseUnitary::zeros(dim);
    write_gate_matrix(&mut out, gate);
    Ok(out)
}

/// Dense matrix of a whole circuit: the product of its gate matrices with
/// `gates[0]` as the rightmost factor.
pub fn circuit_matrix(circuit: &Circuit) -> Result<DenseUnitary> {
    let dim = check_dense_bits(circuit.nb())?;
    for gate in circuit.gates() {
        check_gate_positions(gate, circuit.nb())?;
    }
    let mut acc = DenseUnitary::identity(dim);
    let mut gate_buf = DenseUnitary::zeros(dim);
    let mut product = DenseUnitary::zeros(dim);
    for gate in circuit.gates() {
        write_gate_matrix(&mut gate_buf, gate);
        mul_into(&gate_buf, &acc, &mut product);
        std::mem::swap(&mut acc, &mut product);
    }
    Ok(acc)
}

/// The target multiplexed rotation, written down directly from its block
/// structure: with basis index `x = tau * 2^m + c` (`tau` the target bit,
/// `c` the control word), entry `((tau', c'), (tau, c))` is
/// `R(phi_c)[tau', tau] * delta(c', c)` where `R` is the rotation block of
/// [`gate_matrix`].
pub fn target_d_matrix(phis: &AngleVector, nb: u32) -> Result<DenseUnitary> {
    if phis.basis() != Basis::Control {
        return Err(Error::invalid(
            "target_d_matrix expects control-basis angles",
        ));
    }
    if phis.width() + 1 != nb {
        return Err(Error::invalid(format!(
            "angle width {} does not match {nb} bit(s) (want nb - 1)",
            phis.width()
        )));
    }
    let dim = check_dense_bits(nb)?;
    let half = dim / 2;
    let mut out = DenseUnitary::zeros(dim);
    for (c, &phi) in phis.values().iter().enumerate() {
        let (cos, sin) = (phi.cos(), phi.sin());
        out.entries[c * dim + c] = Complex64::new(cos, 0.0);
        out.entries[c * dim + (c + half)] = Complex64::new(sin, 0.0);
        out.entries[(c + half) * dim + c] = Complex64::new(-sin, 0.0);
        out.entries[(c + half) * dim + (c + half)] = Complex64::new(cos, 0.0);
    }
    Ok(out)
}

/// Run `circuit` on `state` by in-place strided sweeps, one gate at a
/// time in application order. Agrees with the columns of
/// [`circuit_matrix`] wherever both are in range, but is feasible up to
/// [`STATEVECTOR_MAX_BITS`].
pub fn apply_circuit(circuit: &Circuit, state: &StateVector) -> Result<StateVector> {
    let nb = circuit.nb();
    if nb > STATEVECTOR_MAX_BITS {
        return Err(Error::ResourceLimit(format!(
            "state vectors support at most {STATEVECTOR_MAX_BITS} bits, got {nb}"
        )));
    }
    let dim = 1usize << nb;
    if state.dim() != dim {
        return Err(Error::invalid(format!(
            "state dimension {} does not match circuit over {nb} bit(s)",
            state.dim()
        )));
    }
    for gate in circuit.gates() {
        check_gate_positions(gate, nb)?;
    }
    let mut amps = state.amplitudes.clone();
    for gate in circuit.gates() {
        match *gate {
            Gate::RotY { target, angle } => {
                let (cos, sin) = (angle.cos(), angle.sin());
                let tbit = 1usize << target;
                for x in 0..dim {
                    if x & tbit == 0 {
                        let y = x | tbit;
                        let (a, b) = (amps[x], amps[y]);
                        amps[x] = cos * a + sin * b;
                        amps[y] = -sin * a + cos * b;
                    }
                }
            }
            Gate::CNot { control, target } => {
                let (cbit, tbit) = (1usize << control, 1usize << target);
                for x in 0..dim {
                    if x & cbit != 0 && x & tbit == 0 {
                        amps.swap(x, x | tbit);
                    }
                }
            }
        }
    }
    Ok(StateVector { amplitudes: amps })
}

/// Max absolute entry of `AB - BA`.
pub fn commutator_norm(a: &DenseUnitary, b: &DenseUnitary) -> Result<f64> {
    check_dims(a, b)?;
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    max_abs_diff(&ab, &ba)
}

/// Entrywise max of `|A - B|`.
pub fn max_abs_diff(a: &DenseUnitary, b: &DenseUnitary) -> Result<f64> {
    check_dims(a, b)?;
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).norm())))
}
