//! On-disk text formats for angle vectors and circuits.
//!
//! Angles file:
//!
//! ```text
//! # optional comments
//! m 2
//! 0.1
//! 0.2
//! 0.3
//! 0.4
//! ```
//!
//! Line 1 declares the control width; exactly `2^m` value lines follow,
//! the i-th holding the angle for control pattern `i`, in radians.
//!
//! Circuit file:
//!
//! ```text
//! NB 3
//! ROTY 0.35 AT 2
//! CNOT 1 -> 2
//! ```
//!
//! One gate per line in application order: the first line acts on the
//! state first. Rotation angles are printed with the shortest decimal
//! that round-trips the double, so re-parsing a written file reproduces
//! the gate list exactly. In both formats blank lines and lines starting
//! with `#` are ignored.

use crate::angles::AngleVector;
use crate::error::{Error, Result};
use crate::synth::{Circuit, Gate};

/// Significant lines with their 1-based numbers; comments and blanks
/// dropped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Parse an angles file into a control-basis vector.
pub fn parse_angles(text: &str) -> Result<AngleVector> {
    let mut lines = significant_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `m <integer>` header"))?;
    let width: u32 = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["m", digits] => digits
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad width `{digits}`")))?,
        _ => {
            return Err(Error::parse(
                line_no,
                format!("expected `m <integer>`, got `{header}`"),
            ))
        }
    };
    if width > crate::gray::MAX_WIDTH {
        return Err(Error::parse(
            line_no,
            format!("width {width} exceeds maximum {}", crate::gray::MAX_WIDTH),
        ));
    }
    let expected = 1usize << width;
    let mut values = Vec::with_capacity(expected);
    for (line_no, line) in lines {
        if values.len() == expected {
            return Err(Error::parse(
                line_no,
                format!("more than {expected} value line(s) for width {width}"),
            ));
        }
        let value: f64 = line
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad angle `{line}`")))?;
        if !value.is_finite() {
            return Err(Error::parse(line_no, format!("non-finite angle `{line}`")));
        }
        values.push(value);
    }
    if values.len() != expected {
        return Err(Error::parse(
            0,
            format!(
                "width {width} declares {expected} value(s), found {}",
                values.len()
            ),
        ));
    }
    AngleVector::control(width, values)
}

/// Render a control-basis vector in the angles format.
pub fn format_angles(phis: &AngleVector) -> String {
    let mut out = String::new();
    out.push_str("# multiplexed rotation angles in radians, one per control pattern\n");
    out.push_str(&format!("m {}\n", phis.width()));
    for value in phis.values() {
        out.push_str(&format!("{value}\n"));
    }
    out
}

/// Parse a circuit file.
pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut lines = significant_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `NB <integer>` header"))?;
    let nb: u32 = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["NB", digits] => digits
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad bit count `{digits}`")))?,
        _ => {
            return Err(Error::parse(
                line_no,
                format!("expected `NB <integer>`, got `{header}`"),
            ))
        }
    };
    if nb == 0 {
        return Err(Error::parse(line_no, "bit count must be at least 1"));
    }
    let mut gates = Vec::new();
    for (line_no, line) in lines {
        let gate = match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["ROTY", angle, "AT", target] => {
                let angle: f64 = angle
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad angle `{angle}`")))?;
                if !angle.is_finite() {
                    return Err(Error::parse(line_no, "non-finite angle"));
                }
                let target: u32 = target
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad target `{target}`")))?;
                Gate::rot_y(angle, target)
            }
            ["CNOT", control, "->", target] => {
                let control: u32 = control
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad control `{control}`")))?;
                let target: u32 = target
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad target `{target}`")))?;
                Gate::cnot(control, target)
            }
            _ => return Err(Error::parse(line_no, format!("unrecognized gate `{line}`"))),
        };
        // Bounds-check against the declared bit count right away so the
        // error carries the offending line.
        if let Err(Error::InvalidArgument(msg)) = gate.check(nb) {
            return Err(Error::parse(line_no, msg));
        }
        gates.push(gate);
    }
    Circuit::new(nb, gates)
}

/// Render a circuit in the circuit format, including the header comment
/// that states the application-order convention.
pub fn format_circuit(circuit: &Circuit) -> String {
    let mut out = String::new();
    out.push_str("# gates in application order: the first line acts on the state first\n");
    out.push_str(&format!("NB {}\n", circuit.nb()));
    for gate in circuit.gates() {
        match *gate {
            Gate::RotY { target, angle } => {
                out.push_str(&format!("ROTY {angle} AT {target}\n"));
            }
            Gate::CNot { control, target } => {
                out.push_str(&format!("CNOT {control} -> {target}\n"));
            }
        }
    }
    out
}
