//! Lazy (Gray-code) orderings of the words of `Bool^m`.
//!
//! A lazy ordering visits every m-bit word exactly once, starting at the
//! zero word and ending at a word with a single set bit, flipping one bit
//! per step. The flip positions are generated either by an inorder
//! traversal of a depth-labeled full binary tree or by an equivalent
//! ruler-sequence closed form; both are exposed and tested against each
//! other.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported word width. Sequences have `2^m` entries, so this is
/// a resource guard, not a mathematical limit.
pub const MAX_WIDTH: u32 = 30;

/// An element of `Bool^m`: a nonnegative integer tagged with its width.
///
/// Bit positions increase from right to left; the rightmost bit is
/// position 0. Width 0 is allowed (the single empty word), which the
/// synthesis path uses for the degenerate zero-control case; ordering
/// generation itself requires width >= 1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    value: u32,
    width: u32,
}

impl BitWord {
    /// Tag `value` as a width-`width` word. Fails unless
    /// `value < 2^width` and `width <= MAX_WIDTH`.
    pub fn new(value: u32, width: u32) -> Result<Self> {
        if width > MAX_WIDTH {
            return Err(Error::invalid(format!(
                "word width {width} exceeds maximum {MAX_WIDTH}"
            )));
        }
        if value >= 1u32 << width {
            return Err(Error::invalid(format!(
                "value {value} does not fit in {width} bit(s)"
            )));
        }
        Ok(BitWord { value, width })
    }

    /// The zero word of the given width.
    pub fn zero(width: u32) -> Self {
        assert!(width <= MAX_WIDTH);
        BitWord { value: 0, width }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn width(self) -> u32 {
        self.width
    }

    /// Whether bit `pos` is set.
    pub fn bit(self, pos: u32) -> bool {
        pos < self.width && (self.value >> pos) & 1 == 1
    }

    /// Number of set bits.
    pub fn popcount(self) -> u32 {
        self.value.count_ones()
    }

    /// Positions of the set bits, ascending.
    pub fn set_bits(self) -> impl DoubleEndedIterator<Item = u32> {
        let value = self.value;
        (0..self.width).filter(move |&p| (value >> p) & 1 == 1)
    }

    /// The word with bit `pos` toggled.
    pub fn flipped(self, pos: u32) -> Result<Self> {
        if pos >= self.width {
            return Err(Error::invalid(format!(
                "bit position {pos} out of range for width {}",
                self.width
            )));
        }
        Ok(BitWord {
            value: self.value ^ (1 << pos),
            width: self.width,
        })
    }
}

impl fmt::Display for BitWord {
    /// Zero-padded binary, bit 0 rightmost (`BitWord::new(2, 2)` prints `10`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.width as usize)
    }
}

/// A lazy ordering of `Bool^m`: the flip-position sequence together with
/// the code sequence it induces from the zero word.
///
/// `flips` is 0-indexed: `flips[j]` is the bit flipped between `codes[j]`
/// and `codes[j + 1]` (the construction's 1-indexed `s_{j+1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LazyOrdering {
    width: u32,
    flips: Vec<u32>,
    codes: Vec<BitWord>,
}

impl LazyOrdering {
    /// Assemble an ordering from raw parts without validation; pair with
    /// [`validate_lazy`] for externally supplied data.
    pub fn from_parts(width: u32, flips: Vec<u32>, codes: Vec<BitWord>) -> Self {
        LazyOrdering {
            width,
            flips,
            codes,
        }
    }

    /// Build an ordering from a bare code sequence, deriving each flip
    /// position from the adjacent XOR (0 when the step is not a single-bit
    /// flip, which [`validate_lazy`] then rejects).
    pub fn from_codes(width: u32, codes: Vec<BitWord>) -> Self {
        let flips = codes
            .windows(2)
            .map(|w| {
                let x = w[0].value() ^ w[1].value();
                if x == 0 {
                    0
                } else {
                    x.trailing_zeros()
                }
            })
            .collect();
        LazyOrdering {
            width,
            flips,
            codes,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Flip positions, length `2^m - 1`.
    pub fn flips(&self) -> &[u32] {
        &self.flips
    }

    /// Code sequence, length `2^m`.
    pub fn codes(&self) -> &[BitWord] {
        &self.codes
    }
}

fn check_width(m: u32) -> Result<()> {
    if m == 0 || m > MAX_WIDTH {
        return Err(Error::invalid(format!(
            "width must be in 1..={MAX_WIDTH}, got {m}"
        )));
    }
    Ok(())
}

/// A full binary tree whose nodes carry their depth as label.
struct Node {
    label: u32,
    left: Option<Box<Node>>,
    right: Option<Box<Node>>,
}

fn build_tree(depth: u32, max_depth: u32) -> Node {
    let child = |d| {
        if d <= max_depth {
            Some(Box::new(build_tree(d, max_depth)))
        } else {
            None
        }
    };
    Node {
        label: depth,
        left: child(depth + 1),
        right: child(depth + 1),
    }
}

fn inorder(node: &Node, out: &mut Vec<u32>) {
    if let Some(left) = &node.left {
        inorder(left, out);
    }
    out.push(node.label);
    if let Some(right) = &node.right {
        inorder(right, out);
    }
}

/// Flip sequence for width `m` via inorder traversal of the label tree.
///
/// The tree has rows at depths 0 through `m - 1` inclusive, the root
/// labeled 0 and the deepest row labeled `m - 1`; this is the reading that
/// yields `(2,1,2,0,2,1,2)` for m = 3. The result has `2^m - 1` entries.
pub fn flip_sequence_by_tree(m: u32) -> Result<Vec<u32>> {
    check_width(m)?;
    let tree = build_tree(0, m - 1);
    let mut out = Vec::with_capacity((1usize << m) - 1);
    inorder(&tree, &mut out);
    Ok(out)
}

/// Flip sequence for width `m` in closed form: entry `j` (1-indexed) is
/// `m - 1 - v2(j)` where `v2` is the exponent of 2 in `j`. Identical to
/// [`flip_sequence_by_tree`] without materializing the tree.
pub fn flip_sequence_closed_form(m: u32) -> Result<Vec<u32>> {
    check_width(m)?;
    Ok((1..1u32 << m).map(|j| m - 1 - j.trailing_zeros()).collect())
}

/// The lazy ordering of `Bool^m`: starts at the zero word and flips
/// `flips[j]` at each step.
pub fn lazy_ordering(m: u32) -> Result<LazyOrdering> {
    let flips = flip_sequence_closed_form(m)?;
    let mut codes = Vec::with_capacity(1usize << m);
    let mut current = BitWord::zero(m);
    codes.push(current);
    for &pos in &flips {
        current = current.flipped(pos)?;
        codes.push(current);
    }
    Ok(LazyOrdering::from_parts(m, flips, codes))
}

/// Whether `ordering` is a valid lazy ordering: the codes start at the
/// zero word, step by the recorded single-bit flips, end on a word with
/// exactly one set bit, and visit every width-m word exactly once.
pub fn validate_lazy(ordering: &LazyOrdering) -> bool {
    let m = ordering.width;
    if m == 0 || m > MAX_WIDTH {
        return false;
    }
    let n = 1usize << m;
    let codes = &ordering.codes;
    let flips = &ordering.flips;
    if codes.len() != n || flips.len() != n - 1 {
        return false;
    }
    if codes.iter().any(|c| c.width() != m) {
        return false;
    }
    if codes[0].value() != 0 {
        return false;
    }
    for (j, &pos) in flips.iter().enumerate() {
        if pos >= m || codes[j].value() ^ codes[j + 1].value() != 1 << pos {
            return false;
        }
    }
    if codes[n - 1].popcount() != 1 {
        return false;
    }
    let mut seen = vec![false; n];
    for code in codes {
        let v = code.value() as usize;
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_sequence_width_3_matches_construction() {
        assert_eq!(flip_sequence_by_tree(3).unwrap(), vec![2, 1, 2, 0, 2, 1, 2]);
    }

    #[test]
    fn tree_sequence_small_widths() {
        assert_eq!(flip_sequence_by_tree(1).unwrap(), vec![0]);
        assert_eq!(flip_sequence_by_tree(2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn closed_form_matches_tree() {
        for m in 1..=12 {
            assert_eq!(
                flip_sequence_closed_form(m).unwrap(),
                flip_sequence_by_tree(m).unwrap(),
                "width {m}"
            );
        }
    }

    #[test]
    fn closed_form_width_4_element_8() {
        // v2(8) = 3, so the 1-indexed element 8 is 4 - 1 - 3 = 0.
        let s = flip_sequence_closed_form(4).unwrap();
        assert_eq!(s[7], 0);
    }

    #[test]
    fn width_out_of_range_rejected() {
        assert!(flip_sequence_by_tree(0).is_err());
        assert!(flip_sequence_closed_form(0).is_err());
        assert!(flip_sequence_by_tree(31).is_err());
        assert!(lazy_ordering(0).is_err());
    }

    #[test]
    fn ordering_width_2_matches_product_order() {
        // 00, 10, 11, 01 as values.
        let ord = lazy_ordering(2).unwrap();
        let values: Vec<u32> = ord.codes().iter().map(|c| c.value()).collect();
        assert_eq!(values, vec![0b00, 0b10, 0b11, 0b01]);
    }

    #[test]
    fn ordering_width_3_codes() {
        let ord = lazy_ordering(3).unwrap();
        let values: Vec<u32> = ord.codes().iter().map(|c| c.value()).collect();
        assert_eq!(
            values,
            vec![0b000, 0b100, 0b110, 0b010, 0b011, 0b111, 0b101, 0b001]
        );
    }

    #[test]
    fn ordering_width_1_codes() {
        let ord = lazy_ordering(1).unwrap();
        let values: Vec<u32> = ord.codes().iter().map(|c| c.value()).collect();
        assert_eq!(values, vec![0, 1]);
    }

    #[test]
    fn generated_orderings_validate() {
        for m in 1..=12 {
            assert!(validate_lazy(&lazy_ordering(m).unwrap()), "width {m}");
        }
    }

    #[test]
    fn generated_orderings_end_on_bit_zero() {
        // Stronger than the unit-vector requirement: this construction
        // always lands on the word with only bit 0 set.
        for m in 1..=16 {
            let ord = lazy_ordering(m).unwrap();
            assert_eq!(ord.codes().last().unwrap().value(), 1, "width {m}");
        }
    }

    #[test]
    fn double_flip_step_rejected() {
        let codes = [0b00, 0b11, 0b10, 0b01]
            .iter()
            .map(|&v| BitWord::new(v, 2).unwrap())
            .collect();
        assert!(!validate_lazy(&LazyOrdering::from_codes(2, codes)));
    }

    #[test]
    fn repeated_code_rejected() {
        let codes = [0b00, 0b10, 0b11, 0b10]
            .iter()
            .map(|&v| BitWord::new(v, 2).unwrap())
            .collect();
        assert!(!validate_lazy(&LazyOrdering::from_codes(2, codes)));
    }

    #[test]
    fn flip_position_mismatch_rejected() {
        let ord = lazy_ordering(2).unwrap();
        let mut flips = ord.flips().to_vec();
        flips[0] = 0;
        assert!(!validate_lazy(&LazyOrdering::from_parts(
            2,
            flips,
            ord.codes().to_vec()
        )));
    }

    #[test]
    fn ruler_counts() {
        for m in 1..=10u32 {
            let s = flip_sequence_closed_form(m).unwrap();
            let zeros = s.iter().filter(|&&p| p == 0).count();
            let tops = s.iter().filter(|&&p| p == m - 1).count();
            assert_eq!(zeros, 1, "width {m}");
            assert_eq!(tops, 1usize << (m - 1), "width {m}");
        }
    }

    #[test]
    fn bitword_bounds() {
        assert!(BitWord::new(4, 2).is_err());
        assert!(BitWord::new(3, 2).is_ok());
        assert!(BitWord::new(0, 0).is_ok());
        assert!(BitWord::new(0, 31).is_err());
    }

    #[test]
    fn bitword_display_is_bit_zero_rightmost() {
        assert_eq!(BitWord::new(2, 2).unwrap().to_string(), "10");
        assert_eq!(BitWord::new(1, 3).unwrap().to_string(), "001");
        assert_eq!(BitWord::zero(2).to_string(), "00");
    }

    #[test]
    fn set_bits_ascending() {
        let w = BitWord::new(0b1011, 4).unwrap();
        assert_eq!(w.set_bits().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(w.popcount(), 3);
    }
}
