#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use hyperfuzz::{parse_fuzzy, parse_hypergroupoid, ParseError};
use hyperfuzz_core::HyperGroupoid;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn left_zero() -> HyperGroupoid {
    parse_hypergroupoid(&fs::read_to_string(fixture("left_zero.hg")).unwrap()).unwrap()
}

/// File under `fixtures/errors`, expected error class, line, column.
pub const ERROR_FIXTURES: [(&str, &str, usize, usize); 10] = [
    ("bad_header.hg", "SyntaxError", 2, 1),
    ("unknown_element.hg", "UnknownElement", 3, 7),
    ("missing_cell.hg", "MissingCell", 4, 8),
    ("duplicate_cell.hg", "DuplicateCell", 5, 1),
    ("empty_set.hg", "EmptySet", 3, 5),
    ("duplicate_name.hg", "DuplicateName", 1, 15),
    ("missing_colon.hg", "SyntaxError", 2, 5),
    ("unknown_element.fz", "UnknownElement", 2, 1),
    ("missing_element.fz", "MissingElement", 1, 6),
    ("grade_out_of_range.fz", "GradeOutOfRange", 1, 3),
];

/// Parses an error fixture (`.fz` files against the left-zero table) and
/// returns the error it must produce.
pub fn fixture_error(name: &str) -> ParseError {
    let text = fs::read_to_string(fixture(&format!("errors/{name}"))).unwrap();
    let result = if name.ends_with(".fz") {
        parse_fuzzy(&text, &left_zero()).map(|_| ())
    } else {
        parse_hypergroupoid(&text).map(|_| ())
    };
    result.expect_err("fixture must fail to parse")
}

/// Runs the command line in-process; returns (exit code, stdout, stderr).
pub fn run(args: &[&str]) -> (i32, String, String) {
    run_with_budget(args, None)
}

pub fn run_with_budget(args: &[&str], budget: Option<&str>) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("hyperfuzz").chain(args.iter().copied());
    let code = hyperfuzz::cli::run_with_budget(argv, budget, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
