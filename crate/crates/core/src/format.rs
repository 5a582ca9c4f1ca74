//! Plain-text graph and divisor formats.
//!
//! Graphs: a `mgf 1` header, the vertex count, then one `u v m` line per
//! adjacent pair. `#` starts a comment. Emitted files list pairs with
//! `u < v` in sorted order. Divisors: a single `div n: c_0 .. c_{n-1}` line.

use std::fmt::Write as _;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

/// Parses the graph format. Repeated pairs accumulate multiplicity.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, "mgf 1")) => {}
        Some((no, other)) => return parse_err(no, format!("expected header `mgf 1`, got {other:?}")),
        None => return parse_err(1, "missing header `mgf 1`"),
    }
    let (n_line, n_text) = match lines.next() {
        Some(x) => x,
        None => return parse_err(2, "missing vertex count"),
    };
    let n: usize = match n_text.parse() {
        Ok(n) => n,
        Err(_) => return parse_err(n_line, format!("bad vertex count {n_text:?}")),
    };

    let mut edges = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return parse_err(no, format!("expected `u v m`, got {line:?}"));
        }
        let (u, v, m) = match (
            fields[0].parse::<usize>(),
            fields[1].parse::<usize>(),
            fields[2].parse::<u32>(),
        ) {
            (Ok(u), Ok(v), Ok(m)) => (u, v, m),
            _ => return parse_err(no, format!("non-integer field in {line:?}")),
        };
        if u == v {
            return parse_err(no, format!("loop at vertex {u}"));
        }
        if u >= n || v >= n {
            return parse_err(no, format!("vertex out of range for n = {n}"));
        }
        if m == 0 {
            return parse_err(no, "multiplicity must be at least 1");
        }
        edges.push((u, v, m));
    }
    Multigraph::from_edges(n, &edges)
}

pub fn emit_graph(g: &Multigraph) -> String {
    let mut out = format!("mgf 1\n{}\n", g.vertex_count());
    for (u, v, m) in g.edges() {
        writeln!(out, "{u} {v} {m}").expect("writing to a String");
    }
    out
}

pub fn parse_divisor(text: &str) -> Result<Divisor> {
    let line = text.trim();
    let Some(rest) = line.strip_prefix("div ") else {
        return parse_err(1, format!("expected `div n: ...`, got {line:?}"));
    };
    let Some((n_text, coeffs)) = rest.split_once(':') else {
        return parse_err(1, "missing `:` after the length");
    };
    let n: usize = match n_text.trim().parse() {
        Ok(n) => n,
        Err(_) => return parse_err(1, format!("bad length {n_text:?}")),
    };
    let mut values = Vec::with_capacity(n);
    for tok in coeffs.split_whitespace() {
        match tok.parse::<i64>() {
            Ok(c) => values.push(c),
            Err(_) => return parse_err(1, format!("bad coefficient {tok:?}")),
        }
    }
    if values.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: values.len(),
        });
    }
    Ok(Divisor::new(values))
}

pub fn emit_divisor(d: &Divisor) -> String {
    d.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn multipath_example() {
        let g = parse_graph("mgf 1\n3\n0 1 2\n1 2 2\n").unwrap();
        assert_eq!(g, families::multipath(3, 2).unwrap());
    }

    #[test]
    fn emit_k3() {
        assert_eq!(
            emit_graph(&families::complete(3).unwrap()),
            "mgf 1\n3\n0 1 1\n0 2 1\n1 2 1\n"
        );
    }

    #[test]
    fn comments_blank_lines_and_reversed_pairs_canonicalize() {
        let text = "# a triangle\nmgf 1 # header\n\n3\n2 1 1\n0 2 1 # chord\n1 0 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(emit_graph(&g), "mgf 1\n3\n0 1 1\n0 2 1\n1 2 1\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = |t: &str| parse_graph(t).unwrap_err();
        assert!(matches!(bad("mgf 2\n3\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(bad("mgf 1\nthree\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(bad("mgf 1\n3\n0 1 1\n1 1 1\n"), Error::Parse { line: 4, .. }));
        assert!(matches!(bad("mgf 1\n3\n0 1\n"), Error::Parse { line: 3, .. }));
        assert!(matches!(bad("mgf 1\n3\n0 5 1\n"), Error::Parse { line: 3, .. }));
        assert!(matches!(bad("mgf 1\n3\n0 1 0\n"), Error::Parse { line: 3, .. }));
        match bad("mgf 1\n4\n0 1 1\n2 3 1\n") {
            Error::Disconnected { components } => {
                assert_eq!(components, vec![vec![0, 1], vec![2, 3]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn antiprism_round_trip() {
        let g = families::antiprism(11, false).unwrap();
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn divisor_round_trip_and_errors() {
        let d = Divisor::new(vec![3, -1, 0, 7]);
        assert_eq!(emit_divisor(&d), "div 4: 3 -1 0 7");
        assert_eq!(parse_divisor("div 4: 3 -1 0 7\n").unwrap(), d);
        assert_eq!(parse_divisor("div 0:").unwrap(), Divisor::new(vec![]));
        assert!(parse_divisor("div 3: 1 2").is_err());
        assert!(parse_divisor("3: 1 2 3").is_err());
        assert!(parse_divisor("div 3: 1 x 3").is_err());
    }
}
