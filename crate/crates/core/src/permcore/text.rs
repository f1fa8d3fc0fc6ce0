//! Group text format:
//!
//! ```text
//! # comment
//! degree 5
//! gen (1 2 3 4 5)
//! gen (1 2)(3 4)
//! ```

use super::group::GroupHandle;
use super::perm::Permutation;
use crate::caps::Caps;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
pub fn parse_cycles(degree: usize, text: &str, line: usize) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| parse_err(line, format!("expected `(` at `{}`", rest)))?;
        let close = body.find(')').ok_or_else(|| parse_err(line, "unclosed cycle"))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(parse_err(line, "unclosed cycle"));
        }
        let points = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("bad point `{}`", t))))
            .collect::<Result<Vec<usize>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| parse_err(line, e.to_string()))
}

pub fn parse_group(text: &str) -> Result<GroupHandle> {
    parse_group_with_caps(text, Caps::default())
}

pub fn parse_group_with_caps(text: &str, caps: Caps) -> Result<GroupHandle> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "degree" => {
                if degree.is_some() {
                    return Err(parse_err(line_no, "degree given twice"));
                }
                let d: usize =
                    rest.trim().parse().map_err(|_| parse_err(line_no, format!("bad degree `{}`", rest.trim())))?;
                if d == 0 {
                    return Err(parse_err(line_no, "degree must be positive"));
                }
                degree = Some(d);
            }
            "gen" => {
                let d = degree.ok_or_else(|| parse_err(line_no, "`gen` before `degree`"))?;
                gens.push(parse_cycles(d, rest, line_no)?);
            }
            other => return Err(parse_err(line_no, format!("unknown keyword `{}`", other))),
        }
    }
    let degree = degree.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `degree` line"))?;
    GroupHandle::with_caps(degree, gens, caps)
}

pub fn load_group(path: impl AsRef<std::path::Path>) -> Result<GroupHandle> {
    parse_group(&std::fs::read_to_string(path)?)
}

/// Writes a group in the text format.
pub fn format_group(g: &GroupHandle) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for x in g.generators() {
        out.push_str(&format!("gen {}\n", x));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cyclic_group() {
        let g = parse_group("# C3\ndegree 3\n\ngen (1 2 3)\n").unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn reports_unclosed_cycle_line() {
        let err = parse_group("degree 3\ngen (1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn reports_bad_points_and_keywords() {
        assert!(matches!(parse_group("degree 3\ngen (1 4)"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_group("gen (1 2)"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_group("degree 3\nfoo"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_group("# nothing"), Err(Error::Parse { .. })));
    }

    #[test]
    fn format_round_trips() {
        let g = parse_group("degree 5\ngen (1 2 3 4 5)\ngen (1 2)(3 4)\ngen ()").unwrap();
        let h = parse_group(&format_group(&g)).unwrap();
        assert_eq!(g.generators(), h.generators());
    }
}
