//! Circuit representation and evaluation.
//!
//! A circuit is a DAG of fan-in-2 gates over actual inputs `x1..xn`, guess
//! inputs `y1..ym`, and the two constants. Gates are stored in topological
//! order (operands always reference earlier gates), which makes acyclicity
//! structural. Circuits are immutable once built; every rewrite in this crate
//! produces a new value, so shared circuits can be evaluated concurrently.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CircuitError;
use crate::gate::GateFunction;
use crate::table::TruthTable;

/// Default cap on `2^m` exhaustion during nondeterministic evaluation.
pub const DEFAULT_GUESS_LIMIT: usize = 24;

/// A reference to a circuit node. Input and gate indices are 0-based; the
/// text format prints them 1-based (`x1`, `y1`, `g1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeRef {
    Actual(usize),
    Guess(usize),
    Const(bool),
    Gate(usize),
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeRef::Actual(i) => write!(f, "x{}", i + 1),
            NodeRef::Guess(j) => write!(f, "y{}", j + 1),
            NodeRef::Const(b) => write!(f, "{}", *b as u8),
            NodeRef::Gate(k) => write!(f, "g{}", k + 1),
        }
    }
}

/// Which operand slot of a gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "l"),
            Side::Right => write!(f, "r"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gate {
    pub func: GateFunction,
    pub left: NodeRef,
    pub right: NodeRef,
}

impl Gate {
    pub fn operand(&self, side: Side) -> NodeRef {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    U2,
    B2,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::U2 => write!(f, "U2"),
            Basis::B2 => write!(f, "B2"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Circuit {
    name: String,
    n: usize,
    m: usize,
    basis: Basis,
    gates: Vec<Gate>,
    output: NodeRef,
}

/// Size, depth and per-node fan-out of a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    pub size: usize,
    pub depth: usize,
    /// Out-degree per node: uses as a gate operand plus the output
    /// designation. Every input, constant and gate has an entry.
    pub fanout: BTreeMap<NodeRef, usize>,
}

impl Circuit {
    /// Builds and validates a circuit from its parts. Gates must reference
    /// only earlier gates; under `Basis::U2` every gate function must avoid
    /// the xor pair.
    pub fn from_parts(
        name: impl Into<String>,
        n: usize,
        m: usize,
        basis: Basis,
        gates: Vec<Gate>,
        output: NodeRef,
    ) -> Result<Circuit, CircuitError> {
        let check_ref = |r: NodeRef, gate_idx: usize| -> Result<(), CircuitError> {
            match r {
                NodeRef::Actual(i) if i >= n => Err(CircuitError::ActualOutOfRange { index: i, n }),
                NodeRef::Guess(j) if j >= m => Err(CircuitError::GuessOutOfRange { index: j, m }),
                NodeRef::Gate(k) if k >= gate_idx => {
                    Err(CircuitError::ForwardGateReference { index: k })
                }
                _ => Ok(()),
            }
        };
        for (idx, gate) in gates.iter().enumerate() {
            check_ref(gate.left, idx)?;
            check_ref(gate.right, idx)?;
            if basis == Basis::U2 && !gate.func.is_u2() {
                return Err(CircuitError::NonU2Gate { index: idx });
            }
        }
        match output {
            NodeRef::Actual(i) if i >= n => return Err(CircuitError::ActualOutOfRange { index: i, n }),
            NodeRef::Guess(j) if j >= m => return Err(CircuitError::GuessOutOfRange { index: j, m }),
            NodeRef::Gate(k) if k >= gates.len() => {
                return Err(CircuitError::OutputOutOfRange { index: k })
            }
            _ => {}
        }
        Ok(Circuit {
            name: name.into(),
            n,
            m,
            basis,
            gates,
            output,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Count of actual inputs.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Count of guess inputs.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> NodeRef {
        self.output
    }

    /// Number of gates.
    pub fn size(&self) -> usize {
        self.gates.len()
    }

    pub fn is_deterministic(&self) -> bool {
        self.m == 0
    }

    /// Length in gates of the longest input-to-output path; 0 when the
    /// output is an input or constant.
    pub fn depth(&self) -> usize {
        let depths = self.gate_depths();
        self.node_depth(self.output, &depths)
    }

    /// Depth of each gate (1 + max operand depth).
    pub fn gate_depths(&self) -> Vec<usize> {
        let mut depths = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let d = 1 + self
                .node_depth(gate.left, &depths)
                .max(self.node_depth(gate.right, &depths));
            depths.push(d);
        }
        depths
    }

    fn node_depth(&self, node: NodeRef, depths: &[usize]) -> usize {
        match node {
            NodeRef::Gate(k) => depths[k],
            _ => 0,
        }
    }

    pub fn metrics(&self) -> Metrics {
        let mut fanout: BTreeMap<NodeRef, usize> = BTreeMap::new();
        for i in 0..self.n {
            fanout.insert(NodeRef::Actual(i), 0);
        }
        for j in 0..self.m {
            fanout.insert(NodeRef::Guess(j), 0);
        }
        fanout.insert(NodeRef::Const(false), 0);
        fanout.insert(NodeRef::Const(true), 0);
        for k in 0..self.gates.len() {
            fanout.insert(NodeRef::Gate(k), 0);
        }
        for gate in &self.gates {
            *fanout.get_mut(&gate.left).unwrap() += 1;
            *fanout.get_mut(&gate.right).unwrap() += 1;
        }
        *fanout.get_mut(&self.output).unwrap() += 1;
        Metrics {
            size: self.size(),
            depth: self.depth(),
            fanout,
        }
    }

    /// All operand slots reading `node`, in (gate, left-before-right) order.
    pub fn uses_of(&self, node: NodeRef) -> Vec<(usize, Side)> {
        let mut uses = Vec::new();
        for (k, gate) in self.gates.iter().enumerate() {
            if gate.left == node {
                uses.push((k, Side::Left));
            }
            if gate.right == node {
                uses.push((k, Side::Right));
            }
        }
        uses
    }

    fn resolve(&self, node: NodeRef, x: &[bool], y: &[bool], values: &[bool]) -> bool {
        match node {
            NodeRef::Actual(i) => x[i],
            NodeRef::Guess(j) => y[j],
            NodeRef::Const(b) => b,
            NodeRef::Gate(k) => values[k],
        }
    }

    /// Evaluates the circuit on a full assignment, gates in topological order.
    pub fn eval_det(&self, x: &[bool], y: &[bool]) -> Result<bool, CircuitError> {
        if x.len() != self.n {
            return Err(CircuitError::InputLengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        if y.len() != self.m {
            return Err(CircuitError::InputLengthMismatch {
                expected: self.m,
                got: y.len(),
            });
        }
        let mut values = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let l = self.resolve(gate.left, x, y, &values);
            let r = self.resolve(gate.right, x, y, &values);
            values.push(gate.func.eval(l, r));
        }
        Ok(self.resolve(self.output, x, y, &values))
    }

    /// Existential acceptance: 1 iff some guess assignment drives the output
    /// to 1. Stops at the first accepting assignment.
    pub fn eval_nondet(&self, x: &[bool]) -> Result<bool, CircuitError> {
        self.eval_nondet_with_limit(x, DEFAULT_GUESS_LIMIT)
    }

    pub fn eval_nondet_with_limit(&self, x: &[bool], limit: usize) -> Result<bool, CircuitError> {
        if self.m > limit {
            return Err(CircuitError::GuessLimitExceeded {
                m: self.m,
                limit,
            });
        }
        if x.len() != self.n {
            return Err(CircuitError::InputLengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mut y = vec![false; self.m];
        for guess in 0u64..(1u64 << self.m) {
            for (j, slot) in y.iter_mut().enumerate() {
                *slot = guess & (1 << j) != 0;
            }
            if self.eval_det(x, &y)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Tabulates the (nondeterministic) function computed by the circuit.
    /// For a deterministic circuit this is the plain truth table.
    pub fn nondet_truth_table(&self) -> Result<TruthTable, CircuitError> {
        self.nondet_truth_table_with_limit(DEFAULT_GUESS_LIMIT)
    }

    pub fn nondet_truth_table_with_limit(
        &self,
        limit: usize,
    ) -> Result<TruthTable, CircuitError> {
        if self.n > TruthTable::MAX_ARITY {
            return Err(CircuitError::TableTooLarge {
                n: self.n,
                limit: TruthTable::MAX_ARITY,
            });
        }
        if self.m > limit {
            return Err(CircuitError::GuessLimitExceeded {
                m: self.m,
                limit,
            });
        }
        let mut bits = Vec::with_capacity(1 << self.n);
        for ix in 0..1usize << self.n {
            let x = TruthTable::assignment_of(self.n, ix);
            bits.push(self.eval_nondet_with_limit(&x, limit)?);
        }
        Ok(TruthTable::new(self.n, bits).expect("length matches arity"))
    }
}

impl fmt::Debug for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Circuit({} inputs={} guess={} size={} output={})",
            self.name,
            self.n,
            self.m,
            self.size(),
            self.output
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_gate(func: GateFunction, left: NodeRef, right: NodeRef, n: usize, m: usize) -> Circuit {
        Circuit::from_parts(
            "t",
            n,
            m,
            Basis::U2,
            vec![Gate { func, left, right }],
            NodeRef::Gate(0),
        )
        .unwrap()
    }

    #[test]
    fn forward_reference_rejected() {
        let err = Circuit::from_parts(
            "bad",
            1,
            0,
            Basis::U2,
            vec![Gate {
                func: GateFunction::AND,
                left: NodeRef::Gate(0),
                right: NodeRef::Actual(0),
            }],
            NodeRef::Gate(0),
        )
        .unwrap_err();
        assert_eq!(err, CircuitError::ForwardGateReference { index: 0 });
    }

    #[test]
    fn u2_basis_rejects_xor() {
        let err = Circuit::from_parts(
            "bad",
            2,
            0,
            Basis::U2,
            vec![Gate {
                func: GateFunction::XOR,
                left: NodeRef::Actual(0),
                right: NodeRef::Actual(1),
            }],
            NodeRef::Gate(0),
        )
        .unwrap_err();
        assert_eq!(err, CircuitError::NonU2Gate { index: 0 });
    }

    #[test]
    fn eval_and_gate() {
        let c = single_gate(
            GateFunction::AND,
            NodeRef::Actual(0),
            NodeRef::Guess(0),
            1,
            1,
        );
        assert!(!c.eval_det(&[true], &[false]).unwrap());
        assert!(c.eval_det(&[true], &[true]).unwrap());
        // Existentially, AND(x1, y1) computes the identity on x1.
        assert!(c.eval_nondet(&[true]).unwrap());
        assert!(!c.eval_nondet(&[false]).unwrap());
        assert_eq!(c.nondet_truth_table().unwrap().to_string(), "01");
    }

    #[test]
    fn constant_output() {
        let c = Circuit::from_parts("k", 2, 0, Basis::U2, vec![], NodeRef::Const(true)).unwrap();
        assert!(c.eval_det(&[false, true], &[]).unwrap());
        assert_eq!(c.size(), 0);
        assert_eq!(c.depth(), 0);
    }

    #[test]
    fn guess_only_circuit_accepts_everywhere() {
        // AND(y1, y2) with one actual input: the guesses can always accept.
        let c = single_gate(
            GateFunction::AND,
            NodeRef::Guess(0),
            NodeRef::Guess(1),
            1,
            2,
        );
        assert_eq!(c.nondet_truth_table().unwrap().to_string(), "11");
    }

    #[test]
    fn projection_table() {
        let c = Circuit::from_parts("p", 1, 0, Basis::U2, vec![], NodeRef::Actual(0)).unwrap();
        assert_eq!(c.nondet_truth_table().unwrap().to_string(), "01");
    }

    #[test]
    fn metrics_single_gate() {
        let c = single_gate(
            GateFunction::AND,
            NodeRef::Actual(0),
            NodeRef::Actual(0),
            1,
            0,
        );
        let metrics = c.metrics();
        assert_eq!(metrics.size, 1);
        assert_eq!(metrics.depth, 1);
        assert_eq!(metrics.fanout[&NodeRef::Actual(0)], 2);
        assert_eq!(metrics.fanout[&NodeRef::Gate(0)], 1);
    }

    #[test]
    fn length_mismatch_rejected() {
        let c = single_gate(
            GateFunction::AND,
            NodeRef::Actual(0),
            NodeRef::Actual(0),
            1,
            0,
        );
        assert!(c.eval_det(&[], &[]).is_err());
        assert!(c.eval_nondet(&[true, false]).is_err());
    }

    #[test]
    fn guess_limit_enforced() {
        let c = single_gate(
            GateFunction::AND,
            NodeRef::Guess(0),
            NodeRef::Guess(1),
            1,
            2,
        );
        assert!(matches!(
            c.eval_nondet_with_limit(&[true], 1),
            Err(CircuitError::GuessLimitExceeded { m: 2, limit: 1 })
        ));
    }
}
