//! Truth tables of Boolean functions over the actual inputs.
//!
//! Entry `ix` holds the value on the assignment whose bits spell `ix` with
//! `x1` as the most significant bit. The same convention drives the textual
//! form (`Parity_2` prints as `0110`) and the DIMACS variable order.

use std::fmt;
use std::str::FromStr;

use crate::error::TableError;

/// A tabulated Boolean function of `arity` inputs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    /// Largest arity the toolkit will tabulate.
    pub const MAX_ARITY: usize = 20;

    pub fn new(arity: usize, bits: Vec<bool>) -> Result<TruthTable, TableError> {
        if arity > Self::MAX_ARITY {
            return Err(TableError::ArityTooLarge {
                arity,
                limit: Self::MAX_ARITY,
            });
        }
        if bits.len() != 1 << arity {
            return Err(TableError::WrongLength {
                arity,
                expected: 1 << arity,
                got: bits.len(),
            });
        }
        Ok(TruthTable { arity, bits })
    }

    pub fn from_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> TruthTable {
        assert!(arity <= Self::MAX_ARITY);
        TruthTable {
            arity,
            bits: (0..1usize << arity).map(|ix| f(ix)).collect(),
        }
    }

    /// The function that is 1 exactly when an odd number of inputs are 1.
    pub fn parity(arity: usize) -> TruthTable {
        Self::from_fn(arity, |ix| ix.count_ones() % 2 == 1)
    }

    pub fn constant(arity: usize, value: bool) -> TruthTable {
        Self::from_fn(arity, |_| value)
    }

    /// The projection onto input `input` (0-based).
    pub fn projection(arity: usize, input: usize) -> TruthTable {
        assert!(input < arity);
        Self::from_fn(arity, |ix| ix & (1 << (arity - 1 - input)) != 0)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bit(&self, ix: usize) -> bool {
        self.bits[ix]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The table index of an input assignment, `x[0]` most significant.
    pub fn index_of(assignment: &[bool]) -> usize {
        assignment
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | b as usize)
    }

    /// The input assignment at table index `ix`.
    pub fn assignment_of(arity: usize, ix: usize) -> Vec<bool> {
        (0..arity).map(|k| ix & (1 << (arity - 1 - k)) != 0).collect()
    }

    /// Packs the table into the low `2^arity` bits of a word, entry 0 lowest.
    pub fn as_mask(&self) -> Option<u64> {
        if self.arity > 6 {
            return None;
        }
        let mut mask = 0u64;
        for (ix, &b) in self.bits.iter().enumerate() {
            if b {
                mask |= (b as u64) << ix;
            }
        }
        Some(mask)
    }

    pub fn from_mask(arity: usize, mask: u64) -> TruthTable {
        assert!(arity <= 6);
        Self::from_fn(arity, |ix| mask & (1 << ix) != 0)
    }

    /// True when the function changes somewhere if input `input` is flipped.
    pub fn depends_on(&self, input: usize) -> bool {
        let flip = 1 << (self.arity - 1 - input);
        (0..self.bits.len()).any(|ix| self.bits[ix] != self.bits[ix ^ flip])
    }

    /// The table of `f(x with input `input` complemented)`.
    pub fn flip_input(&self, input: usize) -> TruthTable {
        let flip = 1 << (self.arity - 1 - input);
        Self::from_fn(self.arity, |ix| self.bits[ix ^ flip])
    }

    pub fn complement(&self) -> TruthTable {
        Self::from_fn(self.arity, |ix| !self.bits[ix])
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b as u8)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({self})")
    }
}

impl FromStr for TruthTable {
    type Err = TableError;

    /// Accepts a bit string of power-of-two length, or `parity<k>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(k) = s.strip_prefix("parity") {
            let arity: usize = k
                .parse()
                .map_err(|_| TableError::BadLiteral(s.to_string()))?;
            if arity == 0 || arity > Self::MAX_ARITY {
                return Err(TableError::ArityTooLarge {
                    arity,
                    limit: Self::MAX_ARITY,
                });
            }
            return Ok(TruthTable::parity(arity));
        }
        if !s.len().is_power_of_two() || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(TableError::BadLiteral(s.to_string()));
        }
        let arity = s.len().trailing_zeros() as usize;
        TruthTable::new(arity, s.bytes().map(|b| b == b'1').collect())
    }
}
