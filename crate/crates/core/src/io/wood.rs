//! `.wood` files, one line per edge in edge-id order and one per root:
//!
//! ```text
//! u v uni_uv c      only u -> v is colored, with c
//! u v uni_vu c      only v -> u is colored, with c
//! u v bi a b        u -> v has color a, v -> u has color b
//! half r c          half-edge at root r has color c
//! ```
//!
//! Colors are `1` (red), `2` (green), `3` (blue). Lines may come in any
//! order when reading; `#` starts a comment.

use crate::color::Color;
use crate::error::{Error, Result};
use crate::planar::{Dart, Suspension};
use crate::schnyder::{EdgeKind, SchnyderWood};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn color(line: usize, t: &str) -> Result<Color> {
    t.parse::<u8>()
        .ok()
        .and_then(Color::from_number)
        .ok_or_else(|| parse_err(line, format!("expected a color 1..3, found {t:?}")))
}

fn vertex(line: usize, t: &str) -> Result<usize> {
    t.parse()
        .map_err(|_| parse_err(line, format!("expected a vertex id, found {t:?}")))
}

pub fn read_wood(gs: &Suspension, text: &str) -> Result<SchnyderWood> {
    let g = gs.base();
    let mut colors = vec![None; gs.dart_count()];
    let mut seen = vec![false; g.m()];
    let mut halves = [false; 3];
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let t: Vec<&str> = line.split_whitespace().collect();
        if t[0] == "half" {
            let [_, r, c] = t[..] else {
                return Err(parse_err(no, "expected `half r c`"));
            };
            let r = vertex(no, r)?;
            let i = gs
                .roots()
                .iter()
                .position(|&x| x == r)
                .ok_or_else(|| parse_err(no, format!("{r} is not a root")))?;
            if std::mem::replace(&mut halves[i], true) {
                return Err(parse_err(no, format!("half-edge at {r} given twice")));
            }
            colors[gs.half(i).0] = Some(color(no, c)?);
            continue;
        }
        if t.len() < 4 {
            return Err(parse_err(no, "expected `u v kind colors`"));
        }
        let (u, v) = (vertex(no, t[0])?, vertex(no, t[1])?);
        let d = g
            .dart_between(u, v)
            .ok_or_else(|| parse_err(no, format!("{u} {v} is not an edge")))?;
        if std::mem::replace(&mut seen[d.edge()], true) {
            return Err(parse_err(no, format!("edge {u} {v} given twice")));
        }
        match (t[2], &t[3..]) {
            ("uni_uv", [c]) => colors[d.0] = Some(color(no, c)?),
            ("uni_vu", [c]) => colors[d.rev().0] = Some(color(no, c)?),
            ("bi", [a, b]) => {
                colors[d.0] = Some(color(no, a)?);
                colors[d.rev().0] = Some(color(no, b)?);
            }
            (kind, _) => return Err(parse_err(no, format!("bad edge kind or color count for {kind:?}"))),
        }
    }
    if let Some(e) = seen.iter().position(|&s| !s) {
        let [u, v] = g.edge(e);
        return Err(parse_err(0, format!("edge {u} {v} missing")));
    }
    if let Some(i) = halves.iter().position(|&s| !s) {
        return Err(parse_err(0, format!("half-edge at root {} missing", gs.roots()[i])));
    }
    SchnyderWood::from_colors(gs.clone(), colors)
}

pub fn write_wood(s: &SchnyderWood) -> String {
    let gs = s.host();
    let g = gs.base();
    let num = |d: Dart| s.color(d).map_or(0, Color::number);
    let mut out = String::new();
    for e in 0..g.m() {
        let [u, v] = g.edge(e);
        let d = Dart(2 * e);
        let line = match s.kind(e) {
            EdgeKind::Bi => format!("{u} {v} bi {} {}", num(d), num(d.rev())),
            EdgeKind::Uni(x) if x == d => format!("{u} {v} uni_uv {}", num(d)),
            EdgeKind::Uni(x) => format!("{u} {v} uni_vu {}", num(x)),
            EdgeKind::Uncolored => format!("# {u} {v} uncolored"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    for i in 0..3 {
        out.push_str(&format!("half {} {}\n", gs.roots()[i], num(gs.half(i))));
    }
    out
}
