//! The line-oriented `.hg` (hypergroupoid) and `.fz` (fuzzy subset) formats.
//!
//! ```text
//! # a two-element table
//! elements: a b
//! a a : a
//! a b : a b
//! b a : b
//! b b : b
//! ```
//!
//! ```text
//! a 1/2
//! b 1
//! ```
//!
//! `#` starts a comment, blank lines are ignored and both `\n` and `\r\n`
//! line endings are accepted. Every diagnostic carries a 1-based line and
//! column.

use std::fmt::{self, Write as _};

use hyperfuzz_core::groupoid::DEFAULT_MAX_SIZE;
use hyperfuzz_core::{ElementSet, FuzzySubset, Grade, GradeError, HyperGroupoid};

/// 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownElement(String),
    DuplicateName(String),
    TooLarge { size: usize, limit: usize },
    MissingCell(String, String),
    DuplicateCell(String, String),
    EmptySet,
    MissingElement(String),
    DuplicateElement(String),
    GradeOutOfRange(String),
}

impl ParseErrorKind {
    /// Stable class name, as used in machine-readable output.
    pub fn class(&self) -> &'static str {
        match self {
            ParseErrorKind::Syntax(_) => "SyntaxError",
            ParseErrorKind::UnknownElement(_) => "UnknownElement",
            ParseErrorKind::DuplicateName(_) => "DuplicateName",
            ParseErrorKind::TooLarge { .. } => "TooLarge",
            ParseErrorKind::MissingCell(..) => "MissingCell",
            ParseErrorKind::DuplicateCell(..) => "DuplicateCell",
            ParseErrorKind::EmptySet => "EmptySet",
            ParseErrorKind::MissingElement(_) => "MissingElement",
            ParseErrorKind::DuplicateElement(_) => "DuplicateElement",
            ParseErrorKind::GradeOutOfRange(_) => "GradeOutOfRange",
        }
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::UnknownElement(t) => write!(f, "unknown element `{t}`"),
            ParseErrorKind::DuplicateName(t) => write!(f, "element `{t}` declared twice"),
            ParseErrorKind::TooLarge { size, limit } => {
                write!(f, "{size} elements exceed the limit of {limit}")
            }
            ParseErrorKind::MissingCell(x, y) => write!(f, "no cell given for `{x} {y}`"),
            ParseErrorKind::DuplicateCell(x, y) => write!(f, "cell `{x} {y}` given twice"),
            ParseErrorKind::EmptySet => f.write_str("a cell must name at least one element"),
            ParseErrorKind::MissingElement(t) => write!(f, "no grade given for `{t}`"),
            ParseErrorKind::DuplicateElement(t) => write!(f, "grade for `{t}` given twice"),
            ParseErrorKind::GradeOutOfRange(t) => write!(f, "grade `{t}` is outside [0, 1]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{position}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: Position,
}

fn err<T>(kind: ParseErrorKind, position: Position) -> Result<T, ParseError> {
    Err(ParseError { kind, position })
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    position: Position,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Column just past the last character before any comment.
    end: usize,
}

/// Splits `source` into non-blank lines of tokens. `:` is always a token of
/// its own.
fn lex(source: &str) -> (Vec<Line<'_>>, Position) {
    let mut lines = Vec::new();
    let mut eof = Position { line: 1, column: 1 };
    for (i, raw) in source.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let number = i + 1;
        let content = raw.split_once('#').map_or(raw, |(code, _)| code);
        if !raw.is_empty() || i == 0 {
            eof = Position { line: number, column: raw.chars().count() + 1 };
        }

        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        let mut column = 0;
        for (byte, c) in content.char_indices() {
            column += 1;
            let boundary = c.is_whitespace() || c == ':';
            if boundary {
                if let Some((b, col)) = start.take() {
                    tokens.push(Token { text: &content[b..byte], position: Position { line: number, column: col } });
                }
                if c == ':' {
                    tokens.push(Token { text: ":", position: Position { line: number, column } });
                }
            } else if start.is_none() {
                start = Some((byte, column));
            }
        }
        if let Some((b, col)) = start {
            tokens.push(Token { text: &content[b..], position: Position { line: number, column: col } });
        }
        if !tokens.is_empty() {
            lines.push(Line { number, tokens, end: column + 1 });
        }
    }
    (lines, eof)
}

fn check_name(tok: &Token<'_>) -> Result<(), ParseError> {
    if hyperfuzz_core::groupoid::is_valid_name(tok.text) {
        Ok(())
    } else {
        err(ParseErrorKind::Syntax(format!("`{}` is not a valid element name", tok.text)), tok.position)
    }
}

/// Parses a `.hg` document: an `elements:` header followed by one
/// `<x> <y> : <members>` line per ordered pair.
pub fn parse_hypergroupoid(source: &str) -> Result<HyperGroupoid, ParseError> {
    let (lines, eof) = lex(source);
    let mut lines = lines.into_iter();

    let Some(header) = lines.next() else {
        return err(ParseErrorKind::Syntax("expected an `elements:` header".into()), eof);
    };
    let toks = &header.tokens;
    if toks[0].text != "elements" || toks.get(1).map(|t| t.text) != Some(":") {
        return err(ParseErrorKind::Syntax("expected an `elements:` header".into()), toks[0].position);
    }
    let name_toks = &toks[2..];
    if name_toks.is_empty() {
        return err(
            ParseErrorKind::Syntax("the carrier needs at least one element".into()),
            Position { line: header.number, column: header.end },
        );
    }
    let mut names: Vec<String> = Vec::with_capacity(name_toks.len());
    for tok in name_toks {
        check_name(tok)?;
        if names.iter().any(|n| n == tok.text) {
            return err(ParseErrorKind::DuplicateName(tok.text.into()), tok.position);
        }
        names.push(tok.text.into());
    }
    if names.len() > DEFAULT_MAX_SIZE {
        return err(
            ParseErrorKind::TooLarge { size: names.len(), limit: DEFAULT_MAX_SIZE },
            name_toks[DEFAULT_MAX_SIZE].position,
        );
    }

    let n = names.len();
    let lookup = |tok: &Token<'_>| -> Result<usize, ParseError> {
        if tok.text == ":" {
            return err(ParseErrorKind::Syntax("expected an element name before `:`".into()), tok.position);
        }
        names
            .iter()
            .position(|s| s == tok.text)
            .map_or_else(|| err(ParseErrorKind::UnknownElement(tok.text.into()), tok.position), Ok)
    };

    let mut cells: Vec<Option<ElementSet>> = vec![None; n * n];
    for line in lines {
        let toks = &line.tokens;
        let Some(colon) = toks.iter().position(|t| t.text == ":") else {
            let at = toks.get(2).unwrap_or(&toks[0]).position;
            return err(ParseErrorKind::Syntax("expected `:` after the two operands".into()), at);
        };
        if colon != 2 {
            let at = toks.get(colon.min(2)).map_or(toks[0].position, |t| t.position);
            return err(ParseErrorKind::Syntax("expected exactly two elements before `:`".into()), at);
        }
        let (x, y) = (lookup(&toks[0])?, lookup(&toks[1])?);
        let mut set = ElementSet::EMPTY;
        for tok in &toks[3..] {
            let e = hyperfuzz_core::Element::new(lookup(tok)?);
            if !set.insert(e) {
                return err(ParseErrorKind::Syntax(format!("element `{}` listed twice", tok.text)), tok.position);
            }
        }
        if cells[x * n + y].is_some() {
            return err(ParseErrorKind::DuplicateCell(names[x].clone(), names[y].clone()), toks[0].position);
        }
        if set.is_empty() {
            return err(ParseErrorKind::EmptySet, toks[2].position);
        }
        cells[x * n + y] = Some(set);
    }

    let mut table = Vec::with_capacity(n * n);
    for (i, cell) in cells.into_iter().enumerate() {
        match cell {
            Some(set) => table.push(set),
            None => return err(ParseErrorKind::MissingCell(names[i / n].clone(), names[i % n].clone()), eof),
        }
    }
    Ok(HyperGroupoid::from_table(names, table).expect("parser established every table invariant"))
}

/// Parses a `.fz` document over the carrier of `h`: one `<element> <grade>`
/// line per element, grades written `0`, `1` or `p/q`.
pub fn parse_fuzzy(source: &str, h: &HyperGroupoid) -> Result<FuzzySubset, ParseError> {
    let (lines, eof) = lex(source);
    let mut grades: Vec<Option<Grade>> = vec![None; h.size()];
    for line in lines {
        let toks = &line.tokens;
        if toks.len() != 2 {
            let at = toks.get(2).map_or(Position { line: line.number, column: line.end }, |t| t.position);
            return err(ParseErrorKind::Syntax("expected `<element> <grade>`".into()), at);
        }
        let (name, grade) = (&toks[0], &toks[1]);
        let Some(e) = h.element_by_name(name.text) else {
            return err(ParseErrorKind::UnknownElement(name.text.into()), name.position);
        };
        let value = match grade.text.parse::<Grade>() {
            Ok(g) => g,
            Err(GradeError::OutOfRange) => {
                return err(ParseErrorKind::GradeOutOfRange(grade.text.into()), grade.position)
            }
            Err(GradeError::ZeroDenominator) => {
                return err(ParseErrorKind::Syntax("grade has a zero denominator".into()), grade.position)
            }
            Err(GradeError::Malformed) => {
                return err(
                    ParseErrorKind::Syntax(format!("`{}` is not a grade; write `0`, `1` or `p/q`", grade.text)),
                    grade.position,
                )
            }
        };
        let slot = &mut grades[e.index()];
        if slot.is_some() {
            return err(ParseErrorKind::DuplicateElement(name.text.into()), name.position);
        }
        *slot = Some(value);
    }
    let mut out = Vec::with_capacity(h.size());
    for (e, g) in h.elements().zip(grades) {
        match g {
            Some(g) => out.push(g),
            None => return err(ParseErrorKind::MissingElement(h.name(e).into()), eof),
        }
    }
    Ok(FuzzySubset::new(h, out).expect("one grade per element"))
}

/// Renders `h` in `.hg` form, cells in index order.
pub fn render_hypergroupoid(h: &HyperGroupoid) -> String {
    let mut out = String::from("elements:");
    for name in h.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for x in h.elements() {
        for y in h.elements() {
            let _ = write!(out, "{} {} :", h.name(x), h.name(y));
            for u in h.hyperop(x, y) {
                out.push(' ');
                out.push_str(h.name(u));
            }
            out.push('\n');
        }
    }
    out
}

/// Renders `f` in `.fz` form with grades in lowest terms.
pub fn render_fuzzy(h: &HyperGroupoid, f: &FuzzySubset) -> String {
    let mut out = String::new();
    for e in h.elements() {
        let _ = writeln!(out, "{} {}", h.name(e), f[e]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(line: usize, column: usize) -> Position {
        Position { line, column }
    }

    fn kind_at(r: Result<impl fmt::Debug, ParseError>) -> (ParseErrorKind, Position) {
        let e = r.unwrap_err();
        (e.kind, e.position)
    }

    const LEFT_ZERO: &str = "elements: a b\na a : a\na b : a\nb a : b\nb b : b";

    #[test]
    fn one_element() {
        let h = parse_hypergroupoid("elements: e\ne e : e").unwrap();
        assert_eq!(h.size(), 1);
        assert_eq!(h.names(), ["e"]);
    }

    #[test]
    fn left_zero_parses_and_associates() {
        let h = parse_hypergroupoid(LEFT_ZERO).unwrap();
        assert!(h.is_hypersemigroup().holds());
        assert_eq!(parse_hypergroupoid(&render_hypergroupoid(&h)).unwrap(), h);
    }

    #[test]
    fn comments_crlf_and_member_order() {
        let src = "# table\r\nelements: a b   # two\r\n\r\nb b : b\r\na b : b a\r\na a:a\r\nb a : b\r\n";
        let h = parse_hypergroupoid(src).unwrap();
        let (a, b) = (h.element(0).unwrap(), h.element(1).unwrap());
        assert_eq!(h.hyperop(a, b), ElementSet::full(2));
        assert_eq!(h.hyperop(b, b), ElementSet::singleton(b));
    }

    #[test]
    fn empty_cell_reports_line() {
        let (kind, at) = kind_at(parse_hypergroupoid("elements: a b\na a :\na b : a\nb a : b\nb b : b"));
        assert_eq!(kind, ParseErrorKind::EmptySet);
        assert_eq!(at, pos(2, 5));
    }

    #[test]
    fn hypergroupoid_errors() {
        assert_eq!(
            kind_at(parse_hypergroupoid("elements: a b\na a : a\na z : a")),
            (ParseErrorKind::UnknownElement("z".into()), pos(3, 3))
        );
        assert_eq!(
            kind_at(parse_hypergroupoid("elements: a\na a : a\na a : a\n")),
            (ParseErrorKind::DuplicateCell("a".into(), "a".into()), pos(3, 1))
        );
        assert_eq!(
            kind_at(parse_hypergroupoid("elements: a b\na a : a\n")),
            (ParseErrorKind::MissingCell("a".into(), "b".into()), pos(2, 8))
        );
        assert_eq!(
            kind_at(parse_hypergroupoid("elements: a a\n")).0,
            ParseErrorKind::DuplicateName("a".into())
        );
        assert!(matches!(kind_at(parse_hypergroupoid("")).0, ParseErrorKind::Syntax(_)));
        assert!(matches!(kind_at(parse_hypergroupoid("elements:")).0, ParseErrorKind::Syntax(_)));
        assert!(matches!(kind_at(parse_hypergroupoid("elements: a\na : a")).0, ParseErrorKind::Syntax(_)));
        assert!(matches!(kind_at(parse_hypergroupoid("elements: a\na a a")).0, ParseErrorKind::Syntax(_)));
        assert!(matches!(kind_at(parse_hypergroupoid("elements: a\na a : a a")).0, ParseErrorKind::Syntax(_)));
        assert!(matches!(kind_at(parse_hypergroupoid("elements: {a}\n")).0, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn fuzzy_parsing() {
        let h = parse_hypergroupoid(LEFT_ZERO).unwrap();
        let half = Grade::new(1, 2).unwrap();
        let f = parse_fuzzy("a 1/2\nb 1", &h).unwrap();
        assert_eq!(f.grades(), &[half, Grade::ONE]);
        let g = parse_fuzzy("a 2/4\nb 0\n", &h).unwrap();
        assert_eq!(g.grades(), &[half, Grade::ZERO]);
        assert_eq!(render_fuzzy(&h, &g), "a 1/2\nb 0\n");
        assert_eq!(parse_fuzzy(&render_fuzzy(&h, &f), &h).unwrap(), f);
    }

    #[test]
    fn fuzzy_errors() {
        let h = parse_hypergroupoid(LEFT_ZERO).unwrap();
        assert_eq!(
            kind_at(parse_fuzzy("a 3/2\nb 1", &h)),
            (ParseErrorKind::GradeOutOfRange("3/2".into()), pos(1, 3))
        );
        assert_eq!(
            kind_at(parse_fuzzy("a 1\nb 1\na 0", &h)),
            (ParseErrorKind::DuplicateElement("a".into()), pos(3, 1))
        );
        assert_eq!(
            kind_at(parse_fuzzy("a 1\n", &h)),
            (ParseErrorKind::MissingElement("b".into()), pos(1, 4))
        );
        assert_eq!(kind_at(parse_fuzzy("c 1", &h)).0, ParseErrorKind::UnknownElement("c".into()));
        assert!(matches!(kind_at(parse_fuzzy("a 0.5\nb 1", &h)).0, ParseErrorKind::Syntax(_)));
        assert!(matches!(kind_at(parse_fuzzy("a 1/0\nb 1", &h)).0, ParseErrorKind::Syntax(_)));
        assert!(matches!(kind_at(parse_fuzzy("a\nb 1", &h)).0, ParseErrorKind::Syntax(_)));
    }
}
