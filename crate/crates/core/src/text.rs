//! The line-oriented circuit text format.
//!
//! ```text
//! # comments run to end of line
//! circuit <name> inputs=<n> guess=<m> [basis U2|B2]
//! <id> = <FN>(<operand>, <operand>)
//! output <operand>
//! ```
//!
//! Operands are `x<i>`, `y<j>`, `0`, `1`, or the id of an earlier gate.
//! `FN` is one of AND, OR, NAND, NOR, ANDNY, ANDNX, ORNY, ORNX, XOR, XNOR;
//! the xor pair is legal only under `basis B2`. A `/` separates logical
//! lines, so a whole circuit can be written inline.

use std::collections::HashMap;
use std::fmt;

use crate::circuit::{Basis, Circuit, Gate, NodeRef};
use crate::error::CircuitError;
use crate::gate::GateFunction;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("undefined node reference `{0}`")]
    UndefinedNode(String),
    #[error("cycle: `{0}` is used before the line that defines it")]
    Cycle(String),
    #[error("gate takes exactly 2 operands, got {0}")]
    ArityMismatch(usize),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("function `{0}` is not in U2; declare `basis B2` to use it")]
    NonU2Function(String),
    #[error("duplicate gate id `{0}`")]
    DuplicateId(String),
    #[error("`{0}` is reserved and cannot name a gate")]
    ReservedId(String),
    #[error("input `{name}` out of range: the header declares {count}")]
    InputOutOfRange { name: String, count: usize },
    #[error("missing `circuit` header")]
    MissingHeader,
    #[error("missing `output` line")]
    MissingOutput,
    #[error("unexpected content after the output line")]
    TrailingContent,
    #[error("invalid circuit: {0}")]
    Invalid(String),
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, col, kind }
}

/// A logical line with its position in the source.
struct Segment<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

fn segments(text: &str) -> Vec<Segment<'_>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut offset = 0;
        for piece in body.split('/') {
            let trimmed = piece.trim();
            if !trimmed.is_empty() {
                let col = offset + piece.len() - piece.trim_start().len() + 1;
                out.push(Segment {
                    line: lineno + 1,
                    col,
                    text: trimmed,
                });
            }
            offset += piece.len() + 1;
        }
    }
    out
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_reserved(s: &str) -> bool {
    if s == "output" || s == "circuit" || s == "basis" {
        return true;
    }
    let mut chars = s.chars();
    matches!(chars.next(), Some('x') | Some('y')) && !s[1..].is_empty()
        && s[1..].chars().all(|c| c.is_ascii_digit())
}

struct Header {
    name: String,
    n: usize,
    m: usize,
    basis: Basis,
}

fn parse_header(seg: &Segment<'_>) -> Result<Header, ParseError> {
    let mut words = seg.text.split_whitespace();
    if words.next() != Some("circuit") {
        return Err(err(seg.line, seg.col, ParseErrorKind::MissingHeader));
    }
    let name = words
        .next()
        .ok_or_else(|| err(seg.line, seg.col, ParseErrorKind::Syntax("missing circuit name".into())))?;
    if !is_identifier(name) {
        return Err(err(
            seg.line,
            seg.col,
            ParseErrorKind::Syntax(format!("`{name}` is not a valid circuit name")),
        ));
    }
    let mut n = None;
    let mut m = None;
    let mut basis = Basis::U2;
    let rest: Vec<&str> = words.collect();
    let mut i = 0;
    while i < rest.len() {
        let word = rest[i];
        if let Some(v) = word.strip_prefix("inputs=") {
            n = Some(v.parse::<usize>().map_err(|_| {
                err(seg.line, seg.col, ParseErrorKind::Syntax(format!("bad inputs count `{v}`")))
            })?);
        } else if let Some(v) = word.strip_prefix("guess=") {
            m = Some(v.parse::<usize>().map_err(|_| {
                err(seg.line, seg.col, ParseErrorKind::Syntax(format!("bad guess count `{v}`")))
            })?);
        } else if word == "basis" {
            i += 1;
            match rest.get(i) {
                Some(&"U2") => basis = Basis::U2,
                Some(&"B2") => basis = Basis::B2,
                other => {
                    return Err(err(
                        seg.line,
                        seg.col,
                        ParseErrorKind::Syntax(format!(
                            "basis must be U2 or B2, got `{}`",
                            other.copied().unwrap_or("")
                        )),
                    ))
                }
            }
        } else {
            return Err(err(
                seg.line,
                seg.col,
                ParseErrorKind::Syntax(format!("unexpected header token `{word}`")),
            ));
        }
        i += 1;
    }
    let n = n.ok_or_else(|| err(seg.line, seg.col, ParseErrorKind::Syntax("header needs inputs=<n>".into())))?;
    let m = m.ok_or_else(|| err(seg.line, seg.col, ParseErrorKind::Syntax("header needs guess=<m>".into())))?;
    Ok(Header {
        name: name.to_string(),
        n,
        m,
        basis,
    })
}

struct GateLine<'a> {
    id: &'a str,
    func_name: &'a str,
    operands: Vec<&'a str>,
}

fn parse_gate_line<'a>(seg: &Segment<'a>) -> Result<GateLine<'a>, ParseError> {
    let syntax = |msg: &str| err(seg.line, seg.col, ParseErrorKind::Syntax(msg.to_string()));
    let (id, rhs) = seg
        .text
        .split_once('=')
        .ok_or_else(|| syntax("expected `<id> = <FN>(<op>, <op>)`"))?;
    let id = id.trim();
    if !is_identifier(id) {
        return Err(syntax(&format!("`{id}` is not a valid gate id")));
    }
    let rhs = rhs.trim();
    let open = rhs
        .find('(')
        .ok_or_else(|| syntax("expected `(` after the function name"))?;
    if !rhs.ends_with(')') {
        return Err(syntax("expected `)` at end of gate line"));
    }
    let func_name = rhs[..open].trim();
    let args = &rhs[open + 1..rhs.len() - 1];
    let operands: Vec<&str> = if args.trim().is_empty() {
        Vec::new()
    } else {
        args.split(',').map(str::trim).collect()
    };
    Ok(GateLine {
        id,
        func_name,
        operands,
    })
}

/// Parses circuit text into a validated [`Circuit`].
pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    let segs = segments(text);
    if segs.is_empty() {
        return Err(err(1, 1, ParseErrorKind::MissingHeader));
    }
    let header = parse_header(&segs[0])?;

    // First pass: register gate ids in definition order so that a use of a
    // later gate can be reported as a cycle rather than an undefined node.
    let mut gate_ids: HashMap<&str, usize> = HashMap::new();
    let mut gate_segments = Vec::new();
    let mut output_seg: Option<(usize, &Segment<'_>)> = None;
    for (pos, seg) in segs.iter().enumerate().skip(1) {
        if let Some((out_pos, out_seg)) = output_seg {
            let _ = (out_pos, out_seg);
            return Err(err(seg.line, seg.col, ParseErrorKind::TrailingContent));
        }
        if seg.text.starts_with("output") {
            output_seg = Some((pos, seg));
            continue;
        }
        let gate = parse_gate_line(seg)?;
        if is_reserved(gate.id) {
            return Err(err(seg.line, seg.col, ParseErrorKind::ReservedId(gate.id.to_string())));
        }
        if gate_ids.contains_key(gate.id) {
            return Err(err(seg.line, seg.col, ParseErrorKind::DuplicateId(gate.id.to_string())));
        }
        gate_ids.insert(gate.id, gate_segments.len());
        gate_segments.push((seg, gate));
    }
    let (_, output_seg) = output_seg.ok_or_else(|| {
        let last = segs.last().unwrap();
        err(last.line, last.col, ParseErrorKind::MissingOutput)
    })?;

    let resolve = |name: &str, defined_before: usize, seg: &Segment<'_>| -> Result<NodeRef, ParseError> {
        match name {
            "0" => return Ok(NodeRef::Const(false)),
            "1" => return Ok(NodeRef::Const(true)),
            _ => {}
        }
        if let Some(idx) = name.strip_prefix('x').and_then(|v| v.parse::<usize>().ok()) {
            if idx == 0 || idx > header.n {
                return Err(err(
                    seg.line,
                    seg.col,
                    ParseErrorKind::InputOutOfRange {
                        name: name.to_string(),
                        count: header.n,
                    },
                ));
            }
            return Ok(NodeRef::Actual(idx - 1));
        }
        if let Some(idx) = name.strip_prefix('y').and_then(|v| v.parse::<usize>().ok()) {
            if idx == 0 || idx > header.m {
                return Err(err(
                    seg.line,
                    seg.col,
                    ParseErrorKind::InputOutOfRange {
                        name: name.to_string(),
                        count: header.m,
                    },
                ));
            }
            return Ok(NodeRef::Guess(idx - 1));
        }
        match gate_ids.get(name) {
            Some(&idx) if idx < defined_before => Ok(NodeRef::Gate(idx)),
            Some(_) => Err(err(seg.line, seg.col, ParseErrorKind::Cycle(name.to_string()))),
            None => Err(err(
                seg.line,
                seg.col,
                ParseErrorKind::UndefinedNode(name.to_string()),
            )),
        }
    };

    let mut gates = Vec::with_capacity(gate_segments.len());
    for (idx, (seg, line)) in gate_segments.iter().enumerate() {
        let func = GateFunction::from_name(line.func_name).ok_or_else(|| {
            err(
                seg.line,
                seg.col,
                ParseErrorKind::UnknownFunction(line.func_name.to_string()),
            )
        })?;
        if header.basis == Basis::U2 && !func.is_u2() {
            return Err(err(
                seg.line,
                seg.col,
                ParseErrorKind::NonU2Function(line.func_name.to_string()),
            ));
        }
        if line.operands.len() != 2 {
            return Err(err(
                seg.line,
                seg.col,
                ParseErrorKind::ArityMismatch(line.operands.len()),
            ));
        }
        let left = resolve(line.operands[0], idx, seg)?;
        let right = resolve(line.operands[1], idx, seg)?;
        gates.push(Gate { func, left, right });
    }

    let out_name = output_seg.text["output".len()..].trim();
    if out_name.is_empty() {
        return Err(err(
            output_seg.line,
            output_seg.col,
            ParseErrorKind::Syntax("output needs an operand".into()),
        ));
    }
    let output = resolve(out_name, gates.len(), output_seg)?;

    Circuit::from_parts(header.name, header.n, header.m, header.basis, gates, output).map_err(
        |e: CircuitError| {
            err(
                output_seg.line,
                output_seg.col,
                ParseErrorKind::Invalid(e.to_string()),
            )
        },
    )
}

fn operand_name(node: NodeRef) -> String {
    node.to_string()
}

/// Renders a circuit in the text format with canonical gate ids `g1..gs`.
/// Fails only when a gate function has no text-format name.
pub fn emit_circuit(circuit: &Circuit) -> Result<String, CircuitError> {
    let mut out = String::new();
    emit_into(circuit, &mut out, "\n")?;
    out.push('\n');
    Ok(out)
}

/// Renders a circuit in the inline one-line form, logical lines joined by `/`.
pub fn emit_circuit_inline(circuit: &Circuit) -> Result<String, CircuitError> {
    let mut out = String::new();
    emit_into(circuit, &mut out, " / ")?;
    Ok(out)
}

fn emit_into(circuit: &Circuit, out: &mut String, sep: &str) -> Result<(), CircuitError> {
    use fmt::Write;
    write!(
        out,
        "circuit {} inputs={} guess={} basis {}",
        circuit.name(),
        circuit.n(),
        circuit.m(),
        circuit.basis()
    )
    .unwrap();
    for (k, gate) in circuit.gates().iter().enumerate() {
        let name = gate.func.name().ok_or_else(|| CircuitError::UnnamedFunction {
            index: k,
            table: gate.func.to_string(),
        })?;
        write!(
            out,
            "{sep}g{} = {}({}, {})",
            k + 1,
            name,
            operand_name(gate.left),
            operand_name(gate.right)
        )
        .unwrap();
    }
    write!(out, "{sep}output {}", operand_name(circuit.output())).unwrap();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_gate_xor() {
        let text = "circuit p2 inputs=2 guess=0\n\
                    g1 = ANDNY(x1, x2)\n\
                    g2 = ANDNX(x1, x2)\n\
                    g3 = OR(g1, g2)\n\
                    output g3\n";
        let c = parse_circuit(text).unwrap();
        assert_eq!(c.size(), 3);
        assert_eq!(c.depth(), 2);
        assert_eq!(c.nondet_truth_table().unwrap().to_string(), "0110");
    }

    #[test]
    fn parses_inline_form() {
        let c = parse_circuit("circuit c inputs=1 guess=1 / g1=AND(x1,y1) / output g1").unwrap();
        assert_eq!((c.n(), c.m(), c.size()), (1, 1, 1));
    }

    #[test]
    fn xor_rejected_under_u2() {
        let e = parse_circuit("circuit bad inputs=1 guess=0 / g1=XOR(x1,x1) / output g1")
            .unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NonU2Function(_)));
        // ...but accepted under B2.
        let c =
            parse_circuit("circuit ok inputs=1 guess=0 basis B2 / g1=XOR(x1,x1) / output g1")
                .unwrap();
        assert_eq!(c.basis(), Basis::B2);
    }

    #[test]
    fn undefined_and_cycle_are_distinguished() {
        let e = parse_circuit("circuit c inputs=1 guess=0 / g1=AND(x1,g9) / output g1")
            .unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UndefinedNode(ref n) if n == "g9"));

        let e = parse_circuit("circuit c inputs=1 guess=0 / g1=AND(x1,g2) / g2=AND(g1,x1) / output g2")
            .unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Cycle(ref n) if n == "g2"));

        let e = parse_circuit("circuit c inputs=1 guess=0 / g1=AND(g1,x1) / output g1")
            .unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Cycle(ref n) if n == "g1"));
    }

    #[test]
    fn arity_and_function_errors() {
        let e = parse_circuit("circuit c inputs=2 guess=0 / g1=AND(x1) / output g1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::ArityMismatch(1)));
        let e = parse_circuit("circuit c inputs=2 guess=0 / g1=FOO(x1,x2) / output g1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownFunction(_)));
        let e = parse_circuit("circuit c inputs=1 guess=0 / g1=AND(x1,x2) / output g1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::InputOutOfRange { .. }));
    }

    #[test]
    fn error_positions_are_line_and_column() {
        let text = "circuit c inputs=1 guess=0\ng1 = AND(x1, x9)\noutput g1\n";
        let e = parse_circuit(text).unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.col, 1);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a parity circuit\n\ncircuit c inputs=1 guess=0 # header\noutput x1 # done\n";
        let c = parse_circuit(text).unwrap();
        assert_eq!(c.size(), 0);
    }

    #[test]
    fn trailing_content_rejected() {
        let e =
            parse_circuit("circuit c inputs=1 guess=0 / output x1 / g1=AND(x1,x1)").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::TrailingContent));
    }

    #[test]
    fn constants_as_operands() {
        let c = parse_circuit("circuit c inputs=1 guess=0 / g1=AND(x1, 1) / output g1").unwrap();
        assert_eq!(c.nondet_truth_table().unwrap().to_string(), "01");
    }

    #[test]
    fn emit_round_trip() {
        let text = "circuit c inputs=2 guess=1\n\
                    g1 = ANDNY(x1, y1)\n\
                    g2 = OR(g1, x2)\n\
                    output g2\n";
        let c = parse_circuit(text).unwrap();
        let emitted = emit_circuit(&c).unwrap();
        let reparsed = parse_circuit(&emitted).unwrap();
        assert_eq!(c, reparsed);

        let inline = emit_circuit_inline(&c).unwrap();
        assert_eq!(parse_circuit(&inline).unwrap(), c);
    }
}
