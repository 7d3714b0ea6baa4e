//! Deterministic and nondeterministic Boolean circuits over the U2 and B2
//! bases.
//!
//! The crate provides:
//!
//! - a validated circuit DAG with deterministic and existential (guess-input)
//!   evaluation, plus a line-oriented text format ([`circuit`], [`text`]);
//! - gate-elimination rewrites: blocking assignments, assign-and-simplify,
//!   input negation, the case-2 output reconstruction, and a full
//!   elimination round for parity circuits ([`transforms`]);
//! - conversion of deterministic circuits to nondeterministic 3CNF with one
//!   guess variable per gate, and to fan-out-1 formulas through a
//!   depth-bounding edge cut ([`cnf`], [`formula`]);
//! - exhaustive canonical enumeration of U2 circuits with minimal-size
//!   certificates, including the tightness check that parity over n inputs
//!   needs exactly `3(n-1)` gates even with guess inputs ([`search`]);
//! - seeded random circuit generators for the oracle-equivalence suites
//!   ([`gen`]).

pub mod circuit;
pub mod cnf;
pub mod error;
pub mod formula;
pub mod gate;
pub mod gen;
pub mod search;
pub mod table;
pub mod text;
pub mod transforms;

pub use circuit::{Basis, Circuit, Gate, Metrics, NodeRef, Side, DEFAULT_GUESS_LIMIT};
pub use gate::{GateFunction, U2Form, UnaryShape};
pub use table::TruthTable;
pub use text::{emit_circuit, emit_circuit_inline, parse_circuit, ParseError};
