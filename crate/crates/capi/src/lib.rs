//! C ABI for the muxrot synthesis library.
//!
//! Circuits travel as opaque `MuxCircuit*` handles allocated by this
//! library and released with [`mux_circuit_free`]; strings returned by
//! the library are released with [`mux_string_free`]. Every fallible
//! call reports a [`MuxStatus`]; outputs are written through pointers
//! only when the call returns [`MuxStatus::Ok`] (plus the measured
//! difference on [`MuxStatus::VerifyFailed`]).
//!
//! The generated header lives at `include/muxrot.h`.

use std::ffi::{c_char, CStr, CString};

use muxrot::angles::{phis_from_thetas, thetas_from_phis, AngleVector};
use muxrot::error::Error;
use muxrot::files::{format_circuit, parse_circuit};
use muxrot::gray::{lazy_ordering, BitWord};
use muxrot::synth::{cancel_adjacent, emit_naive, emit_optimized, gate_counts, natural_order};
use muxrot::verify::verify_circuit;
use muxrot::{Circuit, Gate};

/// Result of a `mux_*` call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MuxStatus {
    /// Success.
    Ok = 0,
    /// Verification ran to completion and the circuit does not match.
    VerifyFailed = 1,
    /// A precondition on an argument was violated.
    InvalidArgument = 2,
    /// Text input does not conform to its format.
    ParseError = 3,
    /// A size guard was exceeded.
    ResourceLimit = 4,
    /// A required pointer was null.
    NullPointer = 5,
    /// The circuit shape is not supported by the requested pass.
    UnsupportedShape = 6,
}

fn status_of(err: &Error) -> MuxStatus {
    match err {
        Error::InvalidArgument(_) => MuxStatus::InvalidArgument,
        Error::UnsupportedShape(_) => MuxStatus::UnsupportedShape,
        Error::ResourceLimit(_) => MuxStatus::ResourceLimit,
        Error::Parse { .. } => MuxStatus::ParseError,
    }
}

/// Opaque circuit handle.
pub struct MuxCircuit {
    inner: Circuit,
}

/// Discriminates the two gate kinds of [`MuxGate`].
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MuxGateKind {
    RotY = 0,
    CNot = 1,
}

/// One gate, flattened for the C side. `control` is `UINT32_MAX` for
/// rotations; `angle` is 0 for CNOTs.
#[repr(C)]
#[derive(Copy, Clone, Debug)]
pub struct MuxGate {
    pub kind: MuxGateKind,
    pub control: u32,
    pub target: u32,
    pub angle: f64,
}

const VERSION: &CStr = c"muxrot 0.1.0";

/// Library name and version as a static string; never freed.
#[no_mangle]
pub extern "C" fn mux_version() -> *const c_char {
    VERSION.as_ptr()
}

fn width_of_len(len: usize) -> Result<u32, MuxStatus> {
    if len == 0 || !len.is_power_of_two() || len > 1 << 30 {
        return Err(MuxStatus::InvalidArgument);
    }
    Ok(len.trailing_zeros())
}

unsafe fn angles_from_raw(values: *const f64, len: usize) -> Result<AngleVector, MuxStatus> {
    if values.is_null() {
        return Err(MuxStatus::NullPointer);
    }
    let width = width_of_len(len)?;
    let values = std::slice::from_raw_parts(values, len);
    AngleVector::control(width, values.to_vec()).map_err(|e| status_of(&e))
}

unsafe fn circuit_ref<'a>(circuit: *const MuxCircuit) -> Result<&'a Circuit, MuxStatus> {
    circuit
        .as_ref()
        .map(|handle| &handle.inner)
        .ok_or(MuxStatus::NullPointer)
}

fn export_circuit(circuit: Circuit, out: *mut *mut MuxCircuit) -> MuxStatus {
    if out.is_null() {
        return MuxStatus::NullPointer;
    }
    let handle = Box::new(MuxCircuit { inner: circuit });
    unsafe { *out = Box::into_raw(handle) };
    MuxStatus::Ok
}

/// Write the lazy flip sequence for width `m` into `out`.
///
/// # Safety
/// `out` must point to `len` writable `uint32_t`s with `len == 2^m - 1`.
#[no_mangle]
pub unsafe extern "C" fn mux_flip_sequence(m: u32, out: *mut u32, len: usize) -> MuxStatus {
    if out.is_null() {
        return MuxStatus::NullPointer;
    }
    let ordering = match lazy_ordering(m) {
        Ok(o) => o,
        Err(e) => return status_of(&e),
    };
    if len != ordering.flips().len() {
        return MuxStatus::InvalidArgument;
    }
    std::slice::from_raw_parts_mut(out, len).copy_from_slice(ordering.flips());
    MuxStatus::Ok
}

/// Write the lazy code sequence for width `m` into `out` as word values.
///
/// # Safety
/// `out` must point to `len` writable `uint32_t`s with `len == 2^m`.
#[no_mangle]
pub unsafe extern "C" fn mux_lazy_codes(m: u32, out: *mut u32, len: usize) -> MuxStatus {
    if out.is_null() {
        return MuxStatus::NullPointer;
    }
    let ordering = match lazy_ordering(m) {
        Ok(o) => o,
        Err(e) => return status_of(&e),
    };
    if len != ordering.codes().len() {
        return MuxStatus::InvalidArgument;
    }
    for (slot, code) in std::slice::from_raw_parts_mut(out, len)
        .iter_mut()
        .zip(ordering.codes())
    {
        *slot = code.value();
    }
    MuxStatus::Ok
}

/// Convert control-basis angles to the subscript basis. `len` must be a
/// power of two; it fixes the width.
///
/// # Safety
/// `phis` must point to `len` readable doubles and `out` to `len`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn mux_thetas_from_phis(
    phis: *const f64,
    len: usize,
    out: *mut f64,
) -> MuxStatus {
    if out.is_null() {
        return MuxStatus::NullPointer;
    }
    let phis = match angles_from_raw(phis, len) {
        Ok(v) => v,
        Err(status) => return status,
    };
    match thetas_from_phis(&phis) {
        Ok(thetas) => {
            std::slice::from_raw_parts_mut(out, len).copy_from_slice(thetas.values());
            MuxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Convert subscript-basis angles to the control basis.
///
/// # Safety
/// `thetas` must point to `len` readable doubles and `out` to `len`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn mux_phis_from_thetas(
    thetas: *const f64,
    len: usize,
    out: *mut f64,
) -> MuxStatus {
    if thetas.is_null() || out.is_null() {
        return MuxStatus::NullPointer;
    }
    let width = match width_of_len(len) {
        Ok(w) => w,
        Err(status) => return status,
    };
    let values = std::slice::from_raw_parts(thetas, len);
    let vector = match AngleVector::subscript(width, values.to_vec()) {
        Ok(v) => v,
        Err(e) => return status_of(&e),
    };
    match phis_from_thetas(&vector) {
        Ok(phis) => {
            std::slice::from_raw_parts_mut(out, len).copy_from_slice(phis.values());
            MuxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Synthesize the collapsed lazy-order circuit for `len = 2^m`
/// control-basis angles and return a new handle through `out`.
///
/// # Safety
/// `phis` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_synth_optimized(
    phis: *const f64,
    len: usize,
    out: *mut *mut MuxCircuit,
) -> MuxStatus {
    let phis = match angles_from_raw(phis, len) {
        Ok(v) => v,
        Err(status) => return status,
    };
    let circuit = thetas_from_phis(&phis).and_then(|t| emit_optimized(&t));
    match circuit {
        Ok(c) => export_circuit(c, out),
        Err(e) => status_of(&e),
    }
}

/// Synthesize the term-by-term circuit, in lazy or natural order, with
/// the cancellation pass optionally applied.
///
/// # Safety
/// `phis` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_synth_naive(
    phis: *const f64,
    len: usize,
    lazy: bool,
    cancel: bool,
    out: *mut *mut MuxCircuit,
) -> MuxStatus {
    let phis = match angles_from_raw(phis, len) {
        Ok(v) => v,
        Err(status) => return status,
    };
    let m = phis.width();
    let build = || -> Result<Circuit, Error> {
        let thetas = thetas_from_phis(&phis)?;
        let order = if lazy && m > 0 {
            lazy_ordering(m)?.codes().to_vec()
        } else if lazy {
            vec![BitWord::zero(0)]
        } else {
            natural_order(m)
        };
        let naive = emit_naive(&thetas, &order)?;
        if cancel {
            cancel_adjacent(&naive)
        } else {
            Ok(naive)
        }
    };
    match build() {
        Ok(c) => export_circuit(c, out),
        Err(e) => status_of(&e),
    }
}

/// Parse a circuit from its text format.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_circuit_parse(
    text: *const c_char,
    out: *mut *mut MuxCircuit,
) -> MuxStatus {
    if text.is_null() {
        return MuxStatus::NullPointer;
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(t) => t,
        Err(_) => return MuxStatus::ParseError,
    };
    match parse_circuit(text) {
        Ok(c) => export_circuit(c, out),
        Err(e) => status_of(&e),
    }
}

/// Render a circuit in its text format as a newly allocated string;
/// release with [`mux_string_free`].
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_circuit_format(
    circuit: *const MuxCircuit,
    out: *mut *mut c_char,
) -> MuxStatus {
    let circuit = match circuit_ref(circuit) {
        Ok(c) => c,
        Err(status) => return status,
    };
    if out.is_null() {
        return MuxStatus::NullPointer;
    }
    match CString::new(format_circuit(circuit)) {
        Ok(s) => {
            *out = s.into_raw();
            MuxStatus::Ok
        }
        Err(_) => MuxStatus::InvalidArgument,
    }
}

/// Number of bits the circuit acts on.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_circuit_num_bits(
    circuit: *const MuxCircuit,
    out: *mut u32,
) -> MuxStatus {
    match (circuit_ref(circuit), out.is_null()) {
        (Ok(c), false) => {
            *out = c.nb();
            MuxStatus::Ok
        }
        (Err(status), _) => status,
        (_, true) => MuxStatus::NullPointer,
    }
}

/// Number of gates in application order.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_circuit_num_gates(
    circuit: *const MuxCircuit,
    out: *mut usize,
) -> MuxStatus {
    match (circuit_ref(circuit), out.is_null()) {
        (Ok(c), false) => {
            *out = c.gates().len();
            MuxStatus::Ok
        }
        (Err(status), _) => status,
        (_, true) => MuxStatus::NullPointer,
    }
}

/// Fetch gate `index` (application order).
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_circuit_gate(
    circuit: *const MuxCircuit,
    index: usize,
    out: *mut MuxGate,
) -> MuxStatus {
    let circuit = match circuit_ref(circuit) {
        Ok(c) => c,
        Err(status) => return status,
    };
    if out.is_null() {
        return MuxStatus::NullPointer;
    }
    let Some(gate) = circuit.gates().get(index) else {
        return MuxStatus::InvalidArgument;
    };
    *out = match *gate {
        Gate::RotY { target, angle } => MuxGate {
            kind: MuxGateKind::RotY,
            control: u32::MAX,
            target,
            angle,
        },
        Gate::CNot { control, target } => MuxGate {
            kind: MuxGateKind::CNot,
            control,
            target,
            angle: 0.0,
        },
    };
    MuxStatus::Ok
}

/// Tally rotations and CNOTs.
///
/// # Safety
/// `circuit` must be a live handle; `rotations` and `cnots` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mux_circuit_gate_counts(
    circuit: *const MuxCircuit,
    rotations: *mut usize,
    cnots: *mut usize,
) -> MuxStatus {
    let circuit = match circuit_ref(circuit) {
        Ok(c) => c,
        Err(status) => return status,
    };
    if rotations.is_null() || cnots.is_null() {
        return MuxStatus::NullPointer;
    }
    let counts = gate_counts(circuit);
    *rotations = counts.rotations;
    *cnots = counts.cnots;
    MuxStatus::Ok
}

/// Run the CNOT cancellation pass, returning a new handle.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_cancel_adjacent(
    circuit: *const MuxCircuit,
    out: *mut *mut MuxCircuit,
) -> MuxStatus {
    let circuit = match circuit_ref(circuit) {
        Ok(c) => c,
        Err(status) => return status,
    };
    match cancel_adjacent(circuit) {
        Ok(c) => export_circuit(c, out),
        Err(e) => status_of(&e),
    }
}

/// Check `circuit` against the multiplexed rotation defined by `len =
/// 2^m` control-basis angles. Writes the largest observed difference and
/// returns `Ok` when it is at most `tol`, `VerifyFailed` otherwise.
///
/// # Safety
/// `phis` must point to `len` readable doubles; `circuit` must be a live
/// handle; `max_abs_diff` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mux_verify(
    phis: *const f64,
    len: usize,
    circuit: *const MuxCircuit,
    tol: f64,
    max_abs_diff: *mut f64,
) -> MuxStatus {
    let phis = match angles_from_raw(phis, len) {
        Ok(v) => v,
        Err(status) => return status,
    };
    let circuit = match circuit_ref(circuit) {
        Ok(c) => c,
        Err(status) => return status,
    };
    if max_abs_diff.is_null() {
        return MuxStatus::NullPointer;
    }
    match verify_circuit(&phis, circuit, tol) {
        Ok(report) => {
            *max_abs_diff = report.max_abs_diff;
            if report.passed {
                MuxStatus::Ok
            } else {
                MuxStatus::VerifyFailed
            }
        }
        Err(e) => status_of(&e),
    }
}

/// Release a circuit handle. Null is ignored.
///
/// # Safety
/// `circuit` must have come from this library and not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn mux_circuit_free(circuit: *mut MuxCircuit) {
    if !circuit.is_null() {
        drop(Box::from_raw(circuit));
    }
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must have come from this library and not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn mux_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
