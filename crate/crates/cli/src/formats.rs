//! Instance and cycle file formats.
//!
//! Line-oriented, `#` starts a comment. An instance is
//!
//! ```text
//! p smith 6        # or: p ham <n>
//! c0 1 2 3 4 5 6   # the designated Hamiltonian cycle, any labels
//! e 1 4            # one line per non-cycle edge
//! e 2 5
//! e 3 6
//! ```
//!
//! Vertex labels are arbitrary positive integers; the parser renames them
//! so the designated cycle becomes `(1, …, n)`. `p smith` requires exactly
//! `n/2` chord lines forming a perfect matching. Cycle files hold one
//! `cycle v1 … vn` line in the renamed space.

use std::collections::HashMap;
use std::fmt;

use smith_core::graph::{CyclePerm, GeneralInstance, SmithInstance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub enum ParsedInstance {
    Smith(SmithInstance),
    General(GeneralInstance),
}

struct Tok<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

fn tokenize(text: &str) -> Vec<Vec<Tok<'_>>> {
    let mut lines = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let body = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut toks = Vec::new();
        let mut col = 0;
        for piece in body.split_whitespace() {
            let at = body[col..].find(piece).expect("piece came from body") + col;
            toks.push(Tok { line: li + 1, col: at + 1, text: piece });
            col = at + piece.len();
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    lines
}

fn err(tok: &Tok<'_>, msg: impl Into<String>) -> ParseError {
    ParseError { line: tok.line, col: tok.col, msg: msg.into() }
}

fn parse_usize(tok: &Tok<'_>, what: &str) -> Result<usize, ParseError> {
    tok.text
        .parse::<usize>()
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| err(tok, format!("expected a positive integer for {what}, got `{}`", tok.text)))
}

/// Parse an instance file; vertices are renamed so the designated cycle is
/// the identity order.
pub fn parse_instance(text: &str) -> Result<ParsedInstance, ParseError> {
    let lines = tokenize(text);
    let mut iter = lines.iter();

    let header = iter.next().ok_or(ParseError { line: 1, col: 1, msg: "empty instance".into() })?;
    if header[0].text != "p" {
        return Err(err(&header[0], "expected header `p smith <n>` or `p ham <n>`"));
    }
    if header.len() != 3 {
        return Err(err(&header[0], "header takes exactly two arguments: kind and n"));
    }
    let cubic = match header[1].text {
        "smith" => true,
        "ham" => false,
        other => return Err(err(&header[1], format!("unknown instance kind `{other}`"))),
    };
    let n = parse_usize(&header[2], "n")?;

    let c0_line = iter.next().ok_or(ParseError { line: header[0].line, col: 1, msg: "missing c0 line".into() })?;
    if c0_line[0].text != "c0" {
        return Err(err(&c0_line[0], "expected the `c0` line right after the header"));
    }
    if c0_line.len() != n + 1 {
        return Err(err(&c0_line[0], format!("c0 needs exactly {n} vertices, got {}", c0_line.len() - 1)));
    }
    let mut rename: HashMap<usize, usize> = HashMap::with_capacity(n);
    for (pos, tok) in c0_line[1..].iter().enumerate() {
        let label = parse_usize(tok, "a c0 vertex")?;
        if rename.insert(label, pos + 1).is_some() {
            return Err(err(tok, format!("vertex {label} appears twice in c0")));
        }
    }

    let mut chords = Vec::new();
    for line in iter {
        if line[0].text != "e" {
            return Err(err(&line[0], format!("expected an `e` line, got `{}`", line[0].text)));
        }
        if line.len() != 3 {
            return Err(err(&line[0], "edge lines are `e <a> <b>`"));
        }
        let mut ends = [0usize; 2];
        for (i, tok) in line[1..].iter().enumerate() {
            let label = parse_usize(tok, "an edge endpoint")?;
            ends[i] = *rename
                .get(&label)
                .ok_or_else(|| err(tok, format!("vertex {label} does not appear in c0")))?;
        }
        chords.push((ends[0], ends[1]));
    }

    // Structural validation lives with the instance constructors; report
    // failures at the header for lack of a better anchor.
    let at = &header[0];
    if cubic {
        SmithInstance::new(n, &chords)
            .map(ParsedInstance::Smith)
            .map_err(|e| err(at, e.to_string()))
    } else {
        GeneralInstance::new(n, &chords)
            .map(ParsedInstance::General)
            .map_err(|e| err(at, e.to_string()))
    }
}

pub fn serialize_smith(inst: &SmithInstance) -> String {
    let mut out = String::new();
    out.push_str(&format!("p smith {}\n", inst.n()));
    out.push_str(&c0_line(inst.n()));
    for &(a, b) in inst.chords() {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

pub fn serialize_general(inst: &GeneralInstance) -> String {
    let mut out = String::new();
    out.push_str(&format!("p ham {}\n", inst.n()));
    out.push_str(&c0_line(inst.n()));
    for &(a, b) in inst.chords() {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

fn c0_line(n: usize) -> String {
    let mut line = String::from("c0");
    for v in 1..=n {
        line.push(' ');
        line.push_str(&v.to_string());
    }
    line.push('\n');
    line
}

/// `cycle v1 … vn` (canonical order).
pub fn format_cycle(c: &CyclePerm) -> String {
    let mut line = String::from("cycle");
    for &v in c.as_slice() {
        line.push(' ');
        line.push_str(&v.to_string());
    }
    line.push('\n');
    line
}

/// Shorter helper for arbitrary (possibly non-spanning) cycles.
pub fn format_cycle_seq(seq: &[usize]) -> String {
    let mut line = String::from("cycle");
    for &v in seq {
        line.push(' ');
        line.push_str(&v.to_string());
    }
    line.push('\n');
    line
}

pub fn parse_cycle(text: &str) -> Result<CyclePerm, ParseError> {
    let lines = tokenize(text);
    let line = lines.first().ok_or(ParseError { line: 1, col: 1, msg: "empty cycle file".into() })?;
    if line[0].text != "cycle" {
        return Err(err(&line[0], "expected a `cycle v1 … vn` line"));
    }
    let mut seq = Vec::with_capacity(line.len() - 1);
    for tok in &line[1..] {
        seq.push(parse_usize(tok, "a cycle vertex")?);
    }
    CyclePerm::new(seq).map_err(|e| err(&line[0], e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k4() {
        let text = "p smith 4\nc0 1 2 3 4\ne 1 3\ne 2 4\n";
        match parse_instance(text).unwrap() {
            ParsedInstance::Smith(g) => {
                assert_eq!(g.n(), 4);
                assert_eq!(g.partner(1), 3);
            }
            _ => panic!("smith expected"),
        }
    }

    #[test]
    fn parses_k33_and_round_trips() {
        let text = "p smith 6\nc0 1 2 3 4 5 6\ne 1 4\ne 2 5\ne 3 6\n";
        let g = match parse_instance(text).unwrap() {
            ParsedInstance::Smith(g) => g,
            _ => panic!(),
        };
        assert_eq!(serialize_smith(&g), text);
    }

    #[test]
    fn renames_arbitrary_labels() {
        // Same K4 with labels 10, 20, 30, 40.
        let text = "p smith 4\nc0 10 20 30 40\ne 10 30\ne 20 40\n";
        let g = match parse_instance(text).unwrap() {
            ParsedInstance::Smith(g) => g,
            _ => panic!(),
        };
        assert_eq!(g.chords(), &[(1, 3), (2, 4)]);
    }

    #[test]
    fn reports_matching_violation() {
        let text = "p smith 6\nc0 1 2 3 4 5 6\ne 1 4\ne 2 4\ne 3 6\n";
        let e = parse_instance(text).unwrap_err();
        assert!(e.msg.contains("matching violation"), "{}", e.msg);
    }

    #[test]
    fn reports_syntax_position() {
        let text = "p smith 4\nc0 1 2 3 4\ne 1 x\n";
        let e = parse_instance(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.col, 5);
    }

    #[test]
    fn comments_and_ham_kind() {
        let text = "# general instance\np ham 6  # six vertices\nc0 1 2 3 4 5 6\ne 1 4\ne 2 5\ne 3 6\ne 1 3\n";
        match parse_instance(text).unwrap() {
            ParsedInstance::General(g) => {
                assert_eq!(g.min_degree(), 3);
                assert_eq!(g.max_degree(), 4);
            }
            _ => panic!("ham expected"),
        }
    }

    #[test]
    fn cycle_round_trip() {
        let c = CyclePerm::new(vec![1, 4, 3, 2, 5, 6]).unwrap();
        let text = format_cycle(&c);
        assert_eq!(text, "cycle 1 4 3 2 5 6\n");
        assert_eq!(parse_cycle(&text).unwrap(), c);
    }
}
