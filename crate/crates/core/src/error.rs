//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("truth table arity {arity} exceeds the supported limit {limit}")]
    ArityTooLarge { arity: usize, limit: usize },
    #[error("truth table of arity {arity} needs {expected} entries, got {got}")]
    WrongLength {
        arity: usize,
        expected: usize,
        got: usize,
    },
    #[error("`{0}` is not a truth table literal (expected a power-of-two bit string or parity<k>)")]
    BadLiteral(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("actual input x{} out of range (circuit has {n} actual inputs)", index + 1)]
    ActualOutOfRange { index: usize, n: usize },
    #[error("guess input y{} out of range (circuit has {m} guess inputs)", index + 1)]
    GuessOutOfRange { index: usize, m: usize },
    #[error("gate g{} referenced before it is defined", index + 1)]
    ForwardGateReference { index: usize },
    #[error("gate g{} is not a U2 function but the circuit is tagged basis U2", index + 1)]
    NonU2Gate { index: usize },
    #[error("output references gate g{} which does not exist", index + 1)]
    OutputOutOfRange { index: usize },
    #[error("expected {expected} input bits, got {got}")]
    InputLengthMismatch { expected: usize, got: usize },
    #[error("circuit has {m} guess inputs, above the exhaustion limit {limit}")]
    GuessLimitExceeded { m: usize, limit: usize },
    #[error("circuit has {n} actual inputs, above the tabulation limit {limit}")]
    TableTooLarge { n: usize, limit: usize },
    #[error("gate g{} has no text-format name for table {table}", index + 1)]
    UnnamedFunction { index: usize, table: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("function {0} has no U2 normal form; it cannot be blocked")]
    NotBlockable(String),
    #[error("actual input x{} out of range (circuit has {n} actual inputs)", index + 1)]
    InputOutOfRange { index: usize, n: usize },
    #[error("a parity circuit needs at least one input")]
    EmptyParity,
    #[error("witness does not describe this circuit: {0}")]
    InvalidWitness(String),
    #[error("circuit does not compute the parity of its {n} actual inputs")]
    NotParity { n: usize },
    #[error("elimination needs at least 2 actual inputs, circuit has {n}")]
    TooFewInputs { n: usize },
    #[error("no actual input is connected to a gate; elimination cannot proceed")]
    NoActualInputs,
    #[error("no usable witness: no input feeds two gates and no gate pairs an actual input with a guess-only node")]
    NoWitness,
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CnfError {
    #[error("the circuit has {m} guess inputs; conversion requires a deterministic circuit")]
    NotDeterministic { m: usize },
    #[error("formula has {m} guess variables, above the exhaustion limit {limit}")]
    GuessLimitExceeded { m: usize, limit: usize },
    #[error("expected {expected} input bits, got {got}")]
    InputLengthMismatch { expected: usize, got: usize },
    #[error("clause {index} has {width} literals; clauses carry 1 to 3")]
    BadClauseWidth { index: usize, width: usize },
    #[error("clause {index} references variable {var}, outside 1..={nvars}")]
    VarOutOfRange {
        index: usize,
        var: usize,
        nvars: usize,
    },
    #[error("dimacs parse error at line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("target depth must be at least 1")]
    ZeroTargetDepth,
    #[error("cut references gate g{} which does not exist", index + 1)]
    CutGateOutOfRange { index: usize },
    #[error("the circuit has {m} guess inputs; formula conversion requires a deterministic circuit")]
    NotDeterministic { m: usize },
    #[error("bad cut edge spec `{0}` (expected g<id>.l or g<id>.r)")]
    BadEdgeSpec(String),
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("target arity {arity} exceeds the search limit {limit}")]
    ArityTooLarge { arity: usize, limit: usize },
    #[error("size bound {s_max} exceeds the hard enumeration limit {limit}")]
    SizeBoundTooLarge { s_max: usize, limit: usize },
    #[error("tightness verification supports n = 2 or 3, got {0}")]
    UnsupportedN(usize),
    #[error("the n = 3 nondeterministic search runs for hours; pass the long-run flag to confirm")]
    LongRunRequired,
    #[error("checkpoint file error: {0}")]
    Checkpoint(String),
    #[error("search produced a witness that fails revalidation; this is a bug")]
    UnsoundWitness,
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}
