//! `.rot` files:
//!
//! ```text
//! 4 6
//! 0: 1 3 2
//! 1: 2 3 0
//! 2: 0 3 1
//! 3: 0 1 2
//! outer: 0 1 2
//! ```
//!
//! Neighbors are listed clockwise; the roots follow the outer face
//! clockwise.

use crate::error::{Error, Result};
use crate::planar::{build_graph, EmbeddedPlanarGraph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(line, format!("expected a vertex id, found {t:?}")))
        })
        .collect()
}

pub fn read_rot(text: &str) -> Result<EmbeddedPlanarGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (no, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let [n, m] = numbers(no, header)?[..] else {
        return Err(parse_err(no, "header must be `n m`"));
    };
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(no + 1, format!("missing rotation of vertex {v}")))?;
        let (label, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(no, "expected `v: neighbors`"))?;
        if label.trim().parse::<usize>().ok() != Some(v) {
            return Err(parse_err(no, format!("expected vertex {v}, found {label:?}")));
        }
        rotation.push(numbers(no, rest)?);
    }
    let (no, line) = lines.next().ok_or_else(|| parse_err(n + 2, "missing `outer:` line"))?;
    let rest = line
        .strip_prefix("outer:")
        .ok_or_else(|| parse_err(no, "expected `outer: r1 r2 r3`"))?;
    let [r1, r2, r3] = numbers(no, rest)?[..] else {
        return Err(parse_err(no, "outer line needs three roots"));
    };
    if let Some((no, _)) = lines.next() {
        return Err(parse_err(no, "trailing content"));
    }
    let degree_sum: usize = rotation.iter().map(Vec::len).sum();
    if degree_sum != 2 * m {
        return Err(parse_err(
            1,
            format!("header says {m} edges but the lists hold {degree_sum} neighbors"),
        ));
    }
    if [r1, r2, r3].iter().any(|&r| r >= n) {
        return Err(parse_err(no, "root out of range"));
    }
    build_graph(n, &rotation, [r1, r2, r3])
}

pub fn write_rot(g: &EmbeddedPlanarGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for v in 0..g.n() {
        let nbrs: Vec<String> = g.neighbors(v).map(|u| u.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", nbrs.join(" ")));
    }
    let [a, b, c] = g.roots();
    out.push_str(&format!("outer: {a} {b} {c}\n"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const K4: &str = "4 6\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\nouter: 0 1 2\n";

    #[test]
    fn k4_sample() {
        let g = read_rot(K4).unwrap();
        assert_eq!((g.n(), g.m(), g.face_count()), (4, 6, 4));
        assert_eq!(g, corpus::k4());
        assert_eq!(write_rot(&g), K4);
    }

    #[test]
    fn round_trip_is_exact() {
        for (name, g) in corpus::base_corpus(2) {
            let text = write_rot(&g);
            let back = read_rot(&text).unwrap();
            assert_eq!(write_rot(&back), text, "{name}");
            assert_eq!(back, g, "{name}");
        }
    }

    #[test]
    fn errors_name_the_line() {
        let bad = K4.replace("2: 0 3 1", "2: 0 x 1");
        assert!(matches!(read_rot(&bad), Err(Error::Parse { line: 4, .. })));
        let short = "4 6\n0: 1 3 2\n";
        assert!(matches!(read_rot(short), Err(Error::Parse { .. })));
        let count = K4.replace("4 6", "4 7");
        assert!(matches!(read_rot(&count), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn counterclockwise_input_is_rejected() {
        let ccw = "4 6\n0: 2 3 1\n1: 0 3 2\n2: 1 3 0\n3: 2 1 0\nouter: 0 1 2\n";
        assert!(matches!(
            read_rot(ccw),
            Err(Error::RootsNotClockwise(_) | Error::RootsNotOnOuterFace(_))
        ));
    }
}
