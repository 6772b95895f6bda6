//! plantri `planar_code`: the header `>>planar_code<<`, then per graph one
//! byte `n` followed by each vertex's clockwise neighbors (1-based), each
//! list closed by a zero byte. Only the one-byte variant is supported.
//!
//! The format has no outer face. Roots are vertex 0, its first neighbor
//! `a`, and the neighbor following 0 in `a`'s list, which lie in that order
//! on a common face.

use crate::error::{Error, Result};
use crate::planar::{build_graph, EmbeddedPlanarGraph};

const HEADER: &[u8] = b">>planar_code<<";

fn parse_err(offset: usize, msg: impl Into<String>) -> Error {
    // byte offsets stand in for line numbers in binary input
    Error::Parse {
        line: offset,
        msg: msg.into(),
    }
}

pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<EmbeddedPlanarGraph>> {
    let mut pos = if bytes.starts_with(HEADER) {
        HEADER.len()
    } else if bytes.starts_with(b">>planar_code") {
        return Err(parse_err(
            0,
            "only the default one-byte planar_code variant is supported",
        ));
    } else {
        0
    };
    let mut out = Vec::new();
    while pos < bytes.len() {
        let n = bytes[pos] as usize;
        if n == 0 {
            return Err(parse_err(pos, "two-byte planar_code entries are not supported"));
        }
        pos += 1;
        let mut rotation = vec![Vec::new(); n];
        for (v, list) in rotation.iter_mut().enumerate() {
            loop {
                let &b = bytes
                    .get(pos)
                    .ok_or_else(|| parse_err(pos, format!("input ends inside vertex {}", v + 1)))?;
                pos += 1;
                if b == 0 {
                    break;
                }
                let u = b as usize;
                if u > n {
                    return Err(parse_err(pos - 1, format!("neighbor {u} exceeds vertex count {n}")));
                }
                list.push(u - 1);
            }
        }
        let first = *rotation[0]
            .first()
            .ok_or_else(|| parse_err(pos, "vertex 1 has no neighbors"))?;
        let back = rotation[first]
            .iter()
            .position(|&u| u == 0)
            .ok_or_else(|| Error::EulerViolation(format!("vertex {first} does not list vertex 0")))?;
        let third = rotation[first][(back + 1) % rotation[first].len()];
        out.push(build_graph(n, &rotation, [0, first, third])?);
    }
    Ok(out)
}

pub fn write_planar_code(graphs: &[EmbeddedPlanarGraph]) -> Vec<u8> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        assert!(g.n() < 256, "one-byte planar_code holds at most 255 vertices");
        out.push(g.n() as u8);
        for v in 0..g.n() {
            out.extend(g.neighbors(v).map(|u| (u + 1) as u8));
            out.push(0);
        }
    }
    out
}
