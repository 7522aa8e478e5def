//! Text formats for codes and matroids.
//!
//! Code file (`#` starts a comment):
//!
//! ```text
//! field <p> <m> [modulus]
//! code <n> <k>
//! <k rows of n entries, space separated or as a digit string when q <= 10>
//! ```
//!
//! Matroid file: `matroid <n> <k>` followed by one basis bitmask per line,
//! or a single `from-code <path>` directive naming a code file.

use std::path::{Path, PathBuf};

use crate::algebra::{FieldSpec, Matrix};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// A whitespace-separated token with its 1-based position.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, each as its tokens.
fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..pos],
                        line: i + 1,
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

fn number<T: std::str::FromStr>(t: Token<'_>, what: &str) -> Result<T> {
    t.text
        .parse()
        .map_err(|_| parse_error(t.line, t.column, format!("expected {what}, found `{}`", t.text)))
}

fn end_position(line: &[Token<'_>]) -> (usize, usize) {
    let last = line.last().expect("lines are non-empty");
    (last.line, last.column + last.text.chars().count())
}

fn expect_keyword<'a>(
    lines: &mut impl Iterator<Item = Vec<Token<'a>>>,
    keyword: &str,
    previous: (usize, usize),
) -> Result<Vec<Token<'a>>> {
    let line = lines
        .next()
        .ok_or_else(|| parse_error(previous.0 + 1, 1, format!("missing `{keyword}` line")))?;
    if line[0].text != keyword {
        return Err(parse_error(
            line[0].line,
            line[0].column,
            format!("expected `{keyword}`, found `{}`", line[0].text),
        ));
    }
    Ok(line)
}

fn arity(line: &[Token<'_>], min: usize, max: usize, usage: &str) -> Result<()> {
    let args = line.len() - 1;
    if args < min {
        let (l, c) = end_position(line);
        return Err(parse_error(l, c, format!("too few arguments, expected `{usage}`")));
    }
    if args > max {
        let t = line[max + 1];
        return Err(parse_error(t.line, t.column, format!("unexpected `{}`, expected `{usage}`", t.text)));
    }
    Ok(())
}

/// Parses a code file. The declared `n` and `k` are checked against the
/// rows, and the rows must be linearly independent.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = tokenize(text).into_iter();
    let field_line = expect_keyword(&mut lines, "field", (0, 1))?;
    arity(&field_line, 2, 3, "field <p> <m> [modulus]")?;
    let p: u32 = number(field_line[1], "a prime")?;
    let m: u32 = number(field_line[2], "an extension degree")?;
    let modulus = field_line.get(3).map(|&t| number::<u64>(t, "a modulus")).transpose()?;
    let field = FieldSpec::new(p, m, modulus).map_err(|e| parse_error(field_line[0].line, field_line[0].column, e.to_string()))?;
    let code_line = expect_keyword(&mut lines, "code", (field_line[0].line, 1))?;
    arity(&code_line, 2, 2, "code <n> <k>")?;
    let n: usize = number(code_line[1], "a length")?;
    let k: usize = number(code_line[2], "a dimension")?;
    if n == 0 || n > 64 {
        return Err(parse_error(code_line[1].line, code_line[1].column, "length must be between 1 and 64"));
    }
    if k == 0 || k > n {
        return Err(parse_error(code_line[2].line, code_line[2].column, format!("dimension must be between 1 and {n}")));
    }
    let q = field.q();
    let mut data = Vec::with_capacity(n * k);
    let mut last = code_line[0].line;
    for r in 0..k {
        let row = lines
            .next()
            .ok_or_else(|| parse_error(last + 1, 1, format!("missing row {} of {k}", r + 1)))?;
        last = row[0].line;
        let entries: Vec<(u32, usize, usize)> = if row.len() == 1 && q <= 10 && n > 1 {
            let t = row[0];
            t.text
                .chars()
                .enumerate()
                .map(|(i, ch)| {
                    ch.to_digit(10)
                        .map(|v| (v, t.line, t.column + i))
                        .ok_or_else(|| parse_error(t.line, t.column + i, format!("expected a digit, found `{ch}`")))
                })
                .collect::<Result<_>>()?
        } else {
            row.iter()
                .map(|&t| number::<u32>(t, "a field element").map(|v| (v, t.line, t.column)))
                .collect::<Result<_>>()?
        };
        if entries.len() != n {
            let (l, c) = end_position(&row);
            return Err(parse_error(l, c, format!("row {} has {} entries, expected {n}", r + 1, entries.len())));
        }
        for (v, l, c) in entries {
            data.push(field.elem(v).map_err(|_| parse_error(l, c, format!("{v} is not an element of GF({q})")))?);
        }
    }
    if let Some(extra) = lines.next() {
        return Err(parse_error(extra[0].line, extra[0].column, format!("more than the declared {k} rows")));
    }
    LinearCode::new(Matrix::new(&field, k, n, data)?)
}

pub fn read_code(path: &Path) -> Result<LinearCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_code(&text)
}

/// Renders a code in the format accepted by [`parse_code`].
pub fn write_code(code: &LinearCode) -> String {
    let f = code.field();
    let mut out = if f.m() == 1 {
        format!("field {} 1\n", f.p())
    } else {
        format!("field {} {} {}\n", f.p(), f.m(), f.modulus())
    };
    out.push_str(&format!("code {} {}\n", code.n(), code.k()));
    for r in 0..code.k() {
        let row: Vec<String> = code.generator().row_values(r).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// How a matroid file describes its matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSource {
    Bases { n: usize, k: usize, bases: Vec<u64> },
    /// Path as written in the file, resolved against the file's directory.
    FromCode(PathBuf),
}

pub fn parse_matroid_source(text: &str) -> Result<MatroidSource> {
    let mut lines = tokenize(text).into_iter();
    let head = lines.next().ok_or_else(|| parse_error(1, 1, "empty matroid file"))?;
    match head[0].text {
        "from-code" => {
            arity(&head, 1, 1, "from-code <path>")?;
            if let Some(extra) = lines.next() {
                return Err(parse_error(extra[0].line, extra[0].column, "nothing may follow `from-code`"));
            }
            Ok(MatroidSource::FromCode(PathBuf::from(head[1].text)))
        }
        "matroid" => {
            arity(&head, 2, 2, "matroid <n> <k>")?;
            let n: usize = number(head[1], "a ground set size")?;
            let k: usize = number(head[2], "a rank")?;
            if n > crate::matroid::MATROID_LIMIT {
                return Err(parse_error(head[1].line, head[1].column, "ground set too large"));
            }
            let mut bases = Vec::new();
            for line in lines {
                arity(&line, 0, 0, "<basis bitmask>")?;
                let b: u64 = number(line[0], "a basis bitmask")?;
                if b >> n != 0 || b.count_ones() as usize != k {
                    return Err(parse_error(
                        line[0].line,
                        line[0].column,
                        format!("{b} is not a {k}-element subset of the ground set"),
                    ));
                }
                bases.push(b);
            }
            Ok(MatroidSource::Bases { n, k, bases })
        }
        other => Err(parse_error(
            head[0].line,
            head[0].column,
            format!("expected `matroid` or `from-code`, found `{other}`"),
        )),
    }
}

/// Reads a matroid file, following a `from-code` directive relative to the
/// file's own directory.
pub fn read_matroid(path: &Path) -> Result<Matroid> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    match parse_matroid_source(&text)? {
        MatroidSource::Bases { n, bases, .. } => Matroid::from_bases(n, &bases),
        MatroidSource::FromCode(p) => {
            let resolved = path.parent().map(|d| d.join(&p)).unwrap_or(p);
            Matroid::from_code(&read_code(&resolved)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn position(e: Error) -> (usize, usize) {
        match e {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("not a parse error: {other:?}"),
        }
    }

    #[test]
    fn digit_rows_and_comments() {
        let text = "# the [3,2,2] code\nfield 2 1\n\ncode 3 2  # even weight\n110\n0 1 1\n";
        assert_eq!(parse_code(text).unwrap(), catalog::even_weight_3_2());
    }

    #[test]
    fn extension_field() {
        let text = "field 2 2 7\ncode 3 1\n1 2 3\n";
        let c = parse_code(text).unwrap();
        assert_eq!(c.field().q(), 4);
        assert_eq!(parse_code(&write_code(&c)).unwrap(), c);
    }

    #[test]
    fn round_trip_catalog() {
        for c in [catalog::unstable_9_7(), catalog::simplex_7_3(), catalog::stable_5_2()] {
            assert_eq!(parse_code(&write_code(&c)).unwrap(), c);
        }
    }

    #[test]
    fn positional_errors() {
        assert_eq!(position(parse_code("").unwrap_err()), (1, 1));
        assert_eq!(position(parse_code("fild 2 1\n").unwrap_err()), (1, 1));
        assert_eq!(position(parse_code("field 2 1\ncode 3 x\n").unwrap_err()), (2, 8));
        assert_eq!(position(parse_code("field 2 1\ncode 3 1\n1 2 0\n").unwrap_err()), (3, 3));
        assert_eq!(position(parse_code("field 2 1\ncode 3 1\n1 1\n").unwrap_err()), (3, 4));
        assert_eq!(position(parse_code("field 2 1\ncode 3 1\n111\n111\n").unwrap_err()), (4, 1));
        assert_eq!(position(parse_code("field 2 1\ncode 3 2\n111\n").unwrap_err()), (4, 1));
        assert_eq!(position(parse_code("field 2 1\ncode 3 1\n1a1\n").unwrap_err()), (3, 2));
        assert_eq!(position(parse_code("field 2 2\ncode 3 1\n111\n").unwrap_err()), (1, 1));
        assert_eq!(position(parse_code("field 2 1 3 4\n").unwrap_err()), (1, 13));
    }

    #[test]
    fn dependent_rows_are_not_a_parse_error() {
        let e = parse_code("field 2 1\ncode 3 2\n110\n110\n").unwrap_err();
        assert!(matches!(e, Error::NotFullRank { rank: 1, rows: 2 }));
    }

    #[test]
    fn matroid_sources() {
        let s = parse_matroid_source("matroid 4 2\n3\n5\n6\n9\n10\n12\n").unwrap();
        match s {
            MatroidSource::Bases { n, bases, .. } => {
                assert_eq!(Matroid::from_bases(n, &bases).unwrap(), Matroid::uniform(2, 4).unwrap())
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_matroid_source("from-code a.code\n").unwrap(),
            MatroidSource::FromCode(PathBuf::from("a.code"))
        );
        assert_eq!(position(parse_matroid_source("matroid 4 2\n7\n").unwrap_err()), (2, 1));
        assert_eq!(position(parse_matroid_source("graph 4\n").unwrap_err()), (1, 1));
    }
}
