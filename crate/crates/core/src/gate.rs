//! Two-input gate functions as 4-bit truth tables.
//!
//! A table row is indexed by `(left << 1) | right`, so row 0 is the output on
//! `(0,0)` and row 3 the output on `(1,1)`. The textual form prints the rows
//! in that order, e.g. AND is `0001` and XOR is `0110`.

use std::fmt;

/// A Boolean function of two inputs, stored as a 4-bit truth table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GateFunction {
    table: u8,
}

/// The `((x ^ a) & (y ^ b)) ^ c` normal form of a nondegenerate function
/// outside the xor pair. Every such function has exactly one representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct U2Form {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl U2Form {
    pub fn to_function(self) -> GateFunction {
        let mut table = 0u8;
        for row in 0..4u8 {
            let x = row & 0b10 != 0;
            let y = row & 0b01 != 0;
            if ((x ^ self.a) & (y ^ self.b)) ^ self.c {
                table |= 1 << row;
            }
        }
        GateFunction { table }
    }
}

/// What a gate collapses to once one operand is fixed (or both operands are
/// the same node).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryShape {
    Constant(bool),
    /// The remaining operand passes through unchanged.
    Pass,
    /// The remaining operand passes through complemented.
    Negate,
}

impl GateFunction {
    pub const AND: GateFunction = GateFunction { table: 0b1000 };
    pub const OR: GateFunction = GateFunction { table: 0b1110 };
    pub const NAND: GateFunction = GateFunction { table: 0b0111 };
    pub const NOR: GateFunction = GateFunction { table: 0b0001 };
    /// `x AND NOT y`
    pub const ANDNY: GateFunction = GateFunction { table: 0b0100 };
    /// `NOT x AND y`
    pub const ANDNX: GateFunction = GateFunction { table: 0b0010 };
    /// `x OR NOT y`
    pub const ORNY: GateFunction = GateFunction { table: 0b1101 };
    /// `NOT x OR y`
    pub const ORNX: GateFunction = GateFunction { table: 0b1011 };
    pub const XOR: GateFunction = GateFunction { table: 0b0110 };
    pub const XNOR: GateFunction = GateFunction { table: 0b1001 };

    /// The eight nondegenerate functions of the and/or family, in the fixed
    /// order used by the canonical enumeration.
    pub const NONDEGENERATE_U2: [GateFunction; 8] = [
        Self::AND,
        Self::OR,
        Self::NAND,
        Self::NOR,
        Self::ANDNY,
        Self::ANDNX,
        Self::ORNY,
        Self::ORNX,
    ];

    /// All ten functions the circuit text format can name.
    pub const NAMED: [GateFunction; 10] = [
        Self::AND,
        Self::OR,
        Self::NAND,
        Self::NOR,
        Self::ANDNY,
        Self::ANDNX,
        Self::ORNY,
        Self::ORNX,
        Self::XOR,
        Self::XNOR,
    ];

    pub fn from_table_bits(table: u8) -> GateFunction {
        GateFunction { table: table & 0xf }
    }

    /// Builds a function from its four row outputs `[f(0,0), f(0,1), f(1,0), f(1,1)]`.
    pub fn from_rows(rows: [bool; 4]) -> GateFunction {
        let mut table = 0u8;
        for (row, &bit) in rows.iter().enumerate() {
            if bit {
                table |= 1 << row;
            }
        }
        GateFunction { table }
    }

    pub fn table_bits(self) -> u8 {
        self.table
    }

    pub fn eval(self, left: bool, right: bool) -> bool {
        let row = ((left as u8) << 1) | right as u8;
        self.table & (1 << row) != 0
    }

    /// True for every table except xor and its complement.
    pub fn is_u2(self) -> bool {
        self != Self::XOR && self != Self::XNOR
    }

    /// True when the output does not depend on both operands.
    pub fn is_degenerate(self) -> bool {
        !self.left_essential() || !self.right_essential()
    }

    pub fn left_essential(self) -> bool {
        (0..2).any(|y| self.eval(false, y != 0) != self.eval(true, y != 0))
    }

    pub fn right_essential(self) -> bool {
        (0..2).any(|x| self.eval(x != 0, false) != self.eval(x != 0, true))
    }

    /// The `(a, b, c)` normal form, present exactly for the eight
    /// nondegenerate functions other than xor/xnor.
    pub fn u2_form(self) -> Option<U2Form> {
        let ones = self.table.count_ones();
        let (c, special) = match ones {
            1 => (false, self.table.trailing_zeros() as u8),
            3 => (true, (self.table ^ 0xf).trailing_zeros() as u8),
            _ => return None,
        };
        // `special` is the unique row where the and-part is 1, i.e. where
        // x = !a and y = !b.
        Some(U2Form {
            a: special & 0b10 == 0,
            b: special & 0b01 == 0,
            c,
        })
    }

    /// Replaces the left operand by its complement: `g(x, y) = f(!x, y)`.
    pub fn negate_left(self) -> GateFunction {
        let mut table = 0u8;
        for row in 0..4u8 {
            if self.table & (1 << (row ^ 0b10)) != 0 {
                table |= 1 << row;
            }
        }
        GateFunction { table }
    }

    /// Replaces the right operand by its complement: `g(x, y) = f(x, !y)`.
    pub fn negate_right(self) -> GateFunction {
        let mut table = 0u8;
        for row in 0..4u8 {
            if self.table & (1 << (row ^ 0b01)) != 0 {
                table |= 1 << row;
            }
        }
        GateFunction { table }
    }

    /// Complements the output: `g(x, y) = !f(x, y)`.
    pub fn negate_output(self) -> GateFunction {
        GateFunction {
            table: self.table ^ 0xf,
        }
    }

    /// The unary function of the right operand obtained by fixing the left
    /// operand to `value`.
    pub fn fix_left(self, value: bool) -> UnaryShape {
        let lo = self.eval(value, false);
        let hi = self.eval(value, true);
        UnaryShape::from_pair(lo, hi)
    }

    /// The unary function of the left operand obtained by fixing the right
    /// operand to `value`.
    pub fn fix_right(self, value: bool) -> UnaryShape {
        let lo = self.eval(false, value);
        let hi = self.eval(true, value);
        UnaryShape::from_pair(lo, hi)
    }

    /// The unary function computed when both operands are the same node.
    pub fn diagonal(self) -> UnaryShape {
        let lo = self.eval(false, false);
        let hi = self.eval(true, true);
        UnaryShape::from_pair(lo, hi)
    }

    /// Whether swapping the operands leaves the function unchanged.
    pub fn is_symmetric(self) -> bool {
        self.eval(false, true) == self.eval(true, false)
    }

    /// The text-format name, when the function has one.
    pub fn name(self) -> Option<&'static str> {
        Some(match self {
            Self::AND => "AND",
            Self::OR => "OR",
            Self::NAND => "NAND",
            Self::NOR => "NOR",
            Self::ANDNY => "ANDNY",
            Self::ANDNX => "ANDNX",
            Self::ORNY => "ORNY",
            Self::ORNX => "ORNX",
            Self::XOR => "XOR",
            Self::XNOR => "XNOR",
            _ => return None,
        })
    }

    pub fn from_name(name: &str) -> Option<GateFunction> {
        Some(match name {
            "AND" => Self::AND,
            "OR" => Self::OR,
            "NAND" => Self::NAND,
            "NOR" => Self::NOR,
            "ANDNY" => Self::ANDNY,
            "ANDNX" => Self::ANDNX,
            "ORNY" => Self::ORNY,
            "ORNX" => Self::ORNX,
            "XOR" => Self::XOR,
            "XNOR" => Self::XNOR,
            _ => return None,
        })
    }
}

impl UnaryShape {
    fn from_pair(on_false: bool, on_true: bool) -> UnaryShape {
        match (on_false, on_true) {
            (false, false) => UnaryShape::Constant(false),
            (true, true) => UnaryShape::Constant(true),
            (false, true) => UnaryShape::Pass,
            (true, false) => UnaryShape::Negate,
        }
    }
}

impl fmt::Display for GateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..4u8 {
            write!(f, "{}", (self.table >> row) & 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => write!(f, "GateFunction({name})"),
            None => write!(f, "GateFunction({self})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_tables() -> impl Iterator<Item = GateFunction> {
        (0..16u8).map(GateFunction::from_table_bits)
    }

    #[test]
    fn named_tables_match_definitions() {
        assert_eq!(GateFunction::AND.to_string(), "0001");
        assert_eq!(GateFunction::OR.to_string(), "0111");
        assert_eq!(GateFunction::NAND.to_string(), "1110");
        assert_eq!(GateFunction::NOR.to_string(), "1000");
        assert_eq!(GateFunction::XOR.to_string(), "0110");
        assert_eq!(GateFunction::XNOR.to_string(), "1001");
        for (x, y) in [(false, false), (false, true), (true, false), (true, true)] {
            assert_eq!(GateFunction::AND.eval(x, y), x && y);
            assert_eq!(GateFunction::OR.eval(x, y), x || y);
            assert_eq!(GateFunction::ANDNY.eval(x, y), x && !y);
            assert_eq!(GateFunction::ANDNX.eval(x, y), !x && y);
            assert_eq!(GateFunction::ORNY.eval(x, y), x || !y);
            assert_eq!(GateFunction::ORNX.eval(x, y), !x || y);
            assert_eq!(GateFunction::XOR.eval(x, y), x ^ y);
            assert_eq!(GateFunction::XNOR.eval(x, y), !(x ^ y));
        }
    }

    #[test]
    fn u2_counts() {
        // 14 of the 16 tables are in U2; exactly 8 of those are nondegenerate.
        assert_eq!(all_tables().filter(|f| f.is_u2()).count(), 14);
        assert_eq!(
            all_tables()
                .filter(|f| f.is_u2() && !f.is_degenerate())
                .count(),
            8
        );
    }

    #[test]
    fn is_u2_examples() {
        assert!(GateFunction::AND.is_u2());
        assert!(!GateFunction::XOR.is_u2());
        assert!(!GateFunction::XNOR.is_u2());
    }

    #[test]
    fn u2_form_present_iff_nondegenerate_u2() {
        for f in all_tables() {
            let expected = f.is_u2() && !f.is_degenerate();
            assert_eq!(f.u2_form().is_some(), expected, "table {f}");
        }
        // Xor and xnor never carry a normal form even though they are
        // nondegenerate as B2 functions.
        assert!(GateFunction::XOR.u2_form().is_none());
        assert!(GateFunction::XNOR.u2_form().is_none());
    }

    #[test]
    fn u2_form_round_trip() {
        for f in GateFunction::NONDEGENERATE_U2 {
            let form = f.u2_form().unwrap();
            assert_eq!(form.to_function(), f, "table {f}");
        }
    }

    #[test]
    fn u2_form_known_triples() {
        let and = GateFunction::AND.u2_form().unwrap();
        assert_eq!((and.a, and.b, and.c), (false, false, false));
        let nor = GateFunction::NOR.u2_form().unwrap();
        assert_eq!((nor.a, nor.b, nor.c), (true, true, false));
        let ornx = GateFunction::ORNX.u2_form().unwrap();
        assert_eq!((ornx.a, ornx.b, ornx.c), (false, true, true));
        let orny = GateFunction::ORNY.u2_form().unwrap();
        assert_eq!((orny.a, orny.b, orny.c), (true, false, true));
    }

    #[test]
    fn negations_behave_pointwise() {
        for f in all_tables() {
            for (x, y) in [(false, false), (false, true), (true, false), (true, true)] {
                assert_eq!(f.negate_left().eval(x, y), f.eval(!x, y));
                assert_eq!(f.negate_right().eval(x, y), f.eval(x, !y));
                assert_eq!(f.negate_output().eval(x, y), !f.eval(x, y));
            }
        }
    }

    #[test]
    fn fixing_operands() {
        assert_eq!(GateFunction::AND.fix_left(false), UnaryShape::Constant(false));
        assert_eq!(GateFunction::AND.fix_left(true), UnaryShape::Pass);
        assert_eq!(GateFunction::ANDNY.fix_right(false), UnaryShape::Pass);
        assert_eq!(GateFunction::ANDNY.fix_right(true), UnaryShape::Constant(false));
        assert_eq!(GateFunction::XOR.fix_left(true), UnaryShape::Negate);
        assert_eq!(GateFunction::NOR.diagonal(), UnaryShape::Negate);
        assert_eq!(GateFunction::AND.diagonal(), UnaryShape::Pass);
        assert_eq!(GateFunction::ANDNY.diagonal(), UnaryShape::Constant(false));
    }

    #[test]
    fn name_round_trip() {
        for f in GateFunction::NAMED {
            assert_eq!(GateFunction::from_name(f.name().unwrap()), Some(f));
        }
        assert_eq!(GateFunction::from_name("NOPE"), None);
    }
}
