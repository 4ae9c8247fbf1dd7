#ifndef MUXROT_H
#define MUXROT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a `mux_*` call.
typedef enum MuxStatus {
  // Success.
  MUX_STATUS_OK = 0,
  // Verification ran to completion and the circuit does not match.
  MUX_STATUS_VERIFY_FAILED = 1,
  // A precondition on an argument was violated.
  MUX_STATUS_INVALID_ARGUMENT = 2,
  // Text input does not conform to its format.
  MUX_STATUS_PARSE_ERROR = 3,
  // A size guard was exceeded.
  MUX_STATUS_RESOURCE_LIMIT = 4,
  // A required pointer was null.
  MUX_STATUS_NULL_POINTER = 5,
  // The circuit shape is not supported by the requested pass.
  MUX_STATUS_UNSUPPORTED_SHAPE = 6,
} MuxStatus;

// Discriminates the two gate kinds of [`MuxGate`].
typedef enum MuxGateKind {
  MUX_GATE_KIND_ROT_Y = 0,
  MUX_GATE_KIND_C_NOT = 1,
} MuxGateKind;

// Opaque circuit handle.
typedef struct MuxCircuit MuxCircuit;

// One gate, flattened for the C side. `control` is `UINT32_MAX` for
// rotations; `angle` is 0 for CNOTs.
typedef struct MuxGate {
  enum MuxGateKind kind;
  uint32_t control;
  uint32_t target;
  double angle;
} MuxGate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library name and version as a static string; never freed.
const char *mux_version(void);

// Write the lazy flip sequence for width `m` into `out`.
//
// # Safety
// `out` must point to `len` writable `uint32_t`s with `len == 2^m - 1`.
enum MuxStatus mux_flip_sequence(uint32_t m, uint32_t *out, size_t len);

// Write the lazy code sequence for width `m` into `out` as word values.
//
// # Safety
// `out` must point to `len` writable `uint32_t`s with `len == 2^m`.
enum MuxStatus mux_lazy_codes(uint32_t m, uint32_t *out, size_t len);

// Convert control-basis angles to the subscript basis. `len` must be a
// power of two; it fixes the width.
//
// # Safety
// `phis` must point to `len` readable doubles and `out` to `len`
// writable doubles.
enum MuxStatus mux_thetas_from_phis(const double *phis, size_t len, double *out);

// Convert subscript-basis angles to the control basis.
//
// # Safety
// `thetas` must point to `len` readable doubles and `out` to `len`
// writable doubles.
enum MuxStatus mux_phis_from_thetas(const double *thetas, size_t len, double *out);

// Synthesize the collapsed lazy-order circuit for `len = 2^m`
// control-basis angles and return a new handle through `out`.
//
// # Safety
// `phis` must point to `len` readable doubles; `out` must be writable.
enum MuxStatus mux_synth_optimized(const double *phis, size_t len, struct MuxCircuit **out);

// Synthesize the term-by-term circuit, in lazy or natural order, with
// the cancellation pass optionally applied.
//
// # Safety
// `phis` must point to `len` readable doubles; `out` must be writable.
enum MuxStatus mux_synth_naive(const double *phis,
                               size_t len,
                               bool lazy,
                               bool cancel,
                               struct MuxCircuit **out);

// Parse a circuit from its text format.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be writable.
enum MuxStatus mux_circuit_parse(const char *text, struct MuxCircuit **out);

// Render a circuit in its text format as a newly allocated string;
// release with [`mux_string_free`].
//
// # Safety
// `circuit` must be a live handle; `out` must be writable.
enum MuxStatus mux_circuit_format(const struct MuxCircuit *circuit, char **out);

// Number of bits the circuit acts on.
//
// # Safety
// `circuit` must be a live handle; `out` must be writable.
enum MuxStatus mux_circuit_num_bits(const struct MuxCircuit *circuit, uint32_t *out);

// Number of gates in application order.
//
// # Safety
// `circuit` must be a live handle; `out` must be writable.
enum MuxStatus mux_circuit_num_gates(const struct MuxCircuit *circuit, size_t *out);

// Fetch gate `index` (application order).
//
// # Safety
// `circuit` must be a live handle; `out` must be writable.
enum MuxStatus mux_circuit_gate(const struct MuxCircuit *circuit,
                                size_t index,
                                struct MuxGate *out);

// Tally rotations and CNOTs.
//
// # Safety
// `circuit` must be a live handle; `rotations` and `cnots` must be
// writable.
enum MuxStatus mux_circuit_gate_counts(const struct MuxCircuit *circuit,
                                       size_t *rotations,
                                       size_t *cnots);

// Run the CNOT cancellation pass, returning a new handle.
//
// # Safety
// `circuit` must be a live handle; `out` must be writable.
enum MuxStatus mux_cancel_adjacent(const struct MuxCircuit *circuit, struct MuxCircuit **out);

// Check `circuit` against the multiplexed rotation defined by `len =
// 2^m` control-basis angles. Writes the largest observed difference and
// returns `Ok` when it is at most `tol`, `VerifyFailed` otherwise.
//
// # Safety
// `phis` must point to `len` readable doubles; `circuit` must be a live
// handle; `max_abs_diff` must be writable.
enum MuxStatus mux_verify(const double *phis,
                          size_t len,
                          const struct MuxCircuit *circuit,
                          double tol,
                          double *max_abs_diff);

// Release a circuit handle. Null is ignored.
//
// # Safety
// `circuit` must have come from this library and not been freed yet.
void mux_circuit_free(struct MuxCircuit *circuit);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `text` must have come from this library and not been freed yet.
void mux_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MUXROT_H */
