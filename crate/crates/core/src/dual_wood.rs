//! Dual Schnyder woods on the suspended dual and the completion that
//! superimposes primal and dual.

use serde::Serialize;

use crate::color::Color;
use crate::error::{Error, Result};
use crate::planar::{Dart, SuspendedDual, Suspension};
use crate::report::{Location, ValidationReport};
use crate::schnyder::{validate_wood, EdgeKind, SchnyderWood};

/// Transfers a wood across the crossing map `cross`, which sends each dart
/// of the source to the target dart crossing it from left to right.
///
/// A unidirected `c`-colored direction along `d` becomes a bidirected edge
/// with `c+1` on the reverse of `cross(d)` and `c+2` on `cross(d)`, so `d`
/// points to the right of the `(c+1)` direction. A bidirected edge whose
/// dart `a` has color `i` and reverse `i+1` becomes a unidirected
/// `(i-1)`-colored direction along `cross(a)`, pointing to the right of `a`.
fn transfer(
    src: &SchnyderWood,
    target: &Suspension,
    cross: impl Fn(Dart) -> Option<Dart>,
) -> Result<Vec<Option<Color>>> {
    let host = src.host();
    let missing = |d: Dart| Error::InconsistentInputs(format!("dart {d} has no crossing partner"));
    let mut colors = vec![None; target.dart_count()];
    let unidirected = |d: Dart, c: Color, colors: &mut Vec<Option<Color>>| -> Result<()> {
        let q = cross(d).ok_or_else(|| missing(d))?;
        let back = target.rev(q).ok_or_else(|| missing(d))?;
        colors[back.0] = Some(c.next());
        colors[q.0] = Some(c.prev());
        Ok(())
    };
    for e in 0..host.m() {
        match src.kind(e) {
            EdgeKind::Uni(d) => unidirected(d, src.color(d).expect("colored"), &mut colors)?,
            EdgeKind::Bi => {
                let (x, y) = (Dart(2 * e), Dart(2 * e + 1));
                let cx = src.color(x).expect("colored");
                let a = if src.color(y) == Some(cx.next()) { x } else { y };
                let i = src.color(a).expect("colored");
                let q = cross(a).ok_or_else(|| missing(a))?;
                colors[q.0] = Some(i.prev());
            }
            EdgeKind::Uncolored => {
                return Err(Error::InconsistentInputs(format!("edge {e} is uncolored")));
            }
        }
    }
    for i in 0..3 {
        let h = host.half(i);
        if let (Some(c), Some(_)) = (src.color(h), cross(h)) {
            unidirected(h, c, &mut colors)?;
        }
    }
    for i in 0..3 {
        colors[target.half(i).0] = Some(Color::from_index(i));
    }
    Ok(colors)
}

/// The dual wood `S*` on the suspended dual, rooted at `b_1, b_2, b_3`.
pub fn dual_wood(s: &SchnyderWood, sd: &SuspendedDual) -> Result<SchnyderWood> {
    let report = validate_wood(s.host(), s);
    if !report.is_empty() {
        return Err(Error::InvalidWood(report));
    }
    if s.host().m() != sd.primal_m {
        return Err(Error::InconsistentInputs("suspended dual of a different graph".into()));
    }
    let colors = transfer(s, &sd.suspension, |d| Some(sd.dual_dart(d)))?;
    SchnyderWood::from_colors(sd.suspension.clone(), colors)
}

/// Applies the dual rule to a wood of the suspended dual, giving back a
/// wood of the primal suspension `primal`.
pub fn primal_wood(s_star: &SchnyderWood, sd: &SuspendedDual, primal: &Suspension) -> Result<SchnyderWood> {
    let colors = transfer(s_star, primal, |q| sd.primal_dart(q))?;
    SchnyderWood::from_colors(primal.clone(), colors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Node {
    Primal(usize),
    Dual(usize),
    Crossing(usize),
}

/// Segment endpoint; `Outer` is the open end of an outer half-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum End {
    Node(Node),
    Outer,
}

/// A directed, colored segment of the completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub from: End,
    pub to: End,
    pub color: Color,
    pub dual: bool,
}

/// The superposition of `G^σ` and `G^{σ*}` with one crossing vertex per
/// crossing pair. Crossing `k < m` subdivides primal edge `k` and dual edge
/// `k`; crossing `m + i` subdivides the half-edge at `r_i` and the triangle
/// edge `b_{i-1} b_{i+1}`. The part of that half-edge beyond its crossing
/// is kept as an outer stub.
#[derive(Debug, Clone, Serialize)]
pub struct Completion {
    pub primal_vertices: usize,
    pub dual_vertices: usize,
    pub segments: Vec<Segment>,
    /// Per crossing, its four segments in clockwise order: toward the head
    /// of the primal dart, the head of the dual dart, the primal tail, the
    /// dual tail.
    pub crossing_rotation: Vec<[usize; 4]>,
    /// Segment ids around primal vertices and dual vertices, clockwise.
    pub primal_rotation: Vec<Vec<usize>>,
    pub dual_rotation: Vec<Vec<usize>>,
    /// The six segments ending in the outer face, clockwise around the
    /// drawing.
    pub outer_ends: Vec<usize>,
}

impl Completion {
    pub fn crossing_count(&self) -> usize {
        self.crossing_rotation.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.primal_vertices + self.dual_vertices + self.crossing_count()
    }

    /// Euler characteristic of the completion with the outer ends joined at
    /// a vertex at infinity; 2 for a consistent plane superposition.
    pub fn euler_characteristic(&self) -> i64 {
        let np = self.primal_vertices;
        let nd = self.dual_vertices;
        let nc = self.crossing_count();
        let infinity = np + nd + nc;
        let id = |e: End| match e {
            End::Node(Node::Primal(v)) => v,
            End::Node(Node::Dual(x)) => np + x,
            End::Node(Node::Crossing(k)) => np + nd + k,
            End::Outer => infinity,
        };
        let tail = |d: usize| {
            let s = &self.segments[d / 2];
            if d.is_multiple_of(2) {
                id(s.from)
            } else {
                id(s.to)
            }
        };
        // rotation lists of darts (2s leaves `from`, 2s+1 leaves `to`)
        let dart_at = |s: usize, v: usize| if tail(2 * s) == v { 2 * s } else { 2 * s + 1 };
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); infinity + 1];
        for (v, segs) in self.primal_rotation.iter().enumerate() {
            rotation[v] = segs.iter().map(|&s| dart_at(s, v)).collect();
        }
        for (x, segs) in self.dual_rotation.iter().enumerate() {
            rotation[np + x] = segs.iter().map(|&s| dart_at(s, np + x)).collect();
        }
        for (k, segs) in self.crossing_rotation.iter().enumerate() {
            rotation[np + nd + k] = segs.iter().map(|&s| dart_at(s, np + nd + k)).collect();
        }
        // seen from infinity the outer order is reversed
        rotation[infinity] = self.outer_ends.iter().rev().map(|&s| dart_at(s, infinity)).collect();

        let darts = 2 * self.segments.len();
        let mut pos = vec![(0, 0); darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                pos[d] = (v, i);
            }
        }
        let face_next = |d: usize| {
            let r = d ^ 1;
            let (v, i) = pos[r];
            rotation[v][(i + 1) % rotation[v].len()]
        };
        let mut seen = vec![false; darts];
        let mut faces = 0i64;
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = face_next(d);
            }
        }
        (infinity + 1) as i64 - self.segments.len() as i64 + faces
    }
}

/// Builds the completion with the induced coloring: a colored direction
/// out of `v` gives a segment `v -> z` of that color; a unidirected edge
/// coming into `v` gives `z -> v`.
pub fn completion(s: &SchnyderWood, sd: &SuspendedDual, s_star: &SchnyderWood) -> Result<Completion> {
    let gs = s.host();
    let ds = s_star.host();
    let m = gs.m();
    let np = gs.n();
    let nd = ds.n();
    let mut segments = Vec::new();
    let oriented = |w: &SchnyderWood, d: Dart, at: End, z: End, dual: bool| -> Result<Segment> {
        if let Some(c) = w.color(d) {
            return Ok(Segment {
                from: at,
                to: z,
                color: c,
                dual,
            });
        }
        match w.incoming(d) {
            Some(c) => Ok(Segment {
                from: z,
                to: at,
                color: c,
                dual,
            }),
            None => Err(Error::InconsistentInputs(format!("dart {d} is uncolored both ways"))),
        }
    };
    let crossing_of = |edge: usize| End::Node(Node::Crossing(edge));

    let mut primal_seg = vec![usize::MAX; gs.dart_count()];
    for d in 0..gs.dart_count() {
        let d = Dart(d);
        let k = gs.half_index(d).map_or(d.edge(), |i| m + i);
        primal_seg[d.0] = segments.len();
        segments.push(oriented(
            s,
            d,
            End::Node(Node::Primal(gs.tail(d))),
            crossing_of(k),
            false,
        )?);
    }
    let mut stubs = [0; 3];
    for (i, stub) in stubs.iter_mut().enumerate() {
        *stub = segments.len();
        let c = s
            .color(gs.half(i))
            .ok_or_else(|| Error::InconsistentInputs("uncolored half-edge".into()))?;
        segments.push(Segment {
            from: crossing_of(m + i),
            to: End::Outer,
            color: c,
            dual: false,
        });
    }
    let mut dual_seg = vec![usize::MAX; ds.dart_count()];
    for q in 0..ds.dart_count() {
        let q = Dart(q);
        let at = End::Node(Node::Dual(ds.tail(q)));
        dual_seg[q.0] = segments.len();
        let seg = if ds.is_half(q) {
            let c = s_star
                .color(q)
                .ok_or_else(|| Error::InconsistentInputs("uncolored dual half-edge".into()))?;
            Segment {
                from: at,
                to: End::Outer,
                color: c,
                dual: true,
            }
        } else {
            oriented(s_star, q, at, crossing_of(q.edge()), true)?
        };
        segments.push(seg);
    }

    let mut crossing_rotation = Vec::with_capacity(m + 3);
    for k in 0..m + 3 {
        let (d, head_side) = if k < m {
            (Dart(2 * k), primal_seg[2 * k + 1])
        } else {
            (gs.half(k - m), stubs[k - m])
        };
        let q = sd.dual_dart(d);
        crossing_rotation.push([head_side, dual_seg[q.rev().0], primal_seg[d.0], dual_seg[q.0]]);
    }
    let primal_rotation = (0..np)
        .map(|v| gs.rotation(v).iter().map(|d| primal_seg[d.0]).collect())
        .collect();
    let dual_rotation = (0..nd)
        .map(|x| ds.rotation(x).iter().map(|q| dual_seg[q.0]).collect())
        .collect();
    // clockwise around the drawing: stub at r_1, half at b_3, stub at r_2, ...
    let outer_ends = (0..3)
        .flat_map(|i| [stubs[i], dual_seg[ds.half((i + 2) % 3).0]])
        .collect();
    Ok(Completion {
        primal_vertices: np,
        dual_vertices: nd,
        segments,
        crossing_rotation,
        primal_rotation,
        dual_rotation,
        outer_ends,
    })
}

/// Every crossing vertex has one outgoing segment and three incoming ones
/// colored red, green, blue in counterclockwise order.
pub fn check_crossing_vertices(c: &Completion) -> ValidationReport {
    let mut report = ValidationReport::new();
    for (k, rot) in c.crossing_rotation.iter().enumerate() {
        let here = End::Node(Node::Crossing(k));
        let outgoing = rot.iter().filter(|&&s| c.segments[s].from == here).count();
        let incoming: Vec<Color> = rot
            .iter()
            .rev()
            .filter(|&&s| c.segments[s].to == here)
            .map(|&s| c.segments[s].color)
            .collect();
        if outgoing != 1 || incoming.len() != 3 {
            report.push(
                "crossing.degree",
                Location::Crossing(k),
                format!("{outgoing} outgoing and {} incoming segments", incoming.len()),
            );
            continue;
        }
        let cyclic = (0..3).all(|j| incoming[(j + 1) % 3] == incoming[j].next());
        if !cyclic {
            report.push(
                "crossing.colors",
                Location::Crossing(k),
                format!("incoming colors {incoming:?} are not red, green, blue counterclockwise"),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::planar::{suspend, suspended_dual};
    use crate::schnyder::compute_wood;

    fn pipeline(g: &crate::planar::EmbeddedPlanarGraph) -> (SchnyderWood, SuspendedDual, SchnyderWood) {
        let gs = suspend(g).unwrap();
        let s = compute_wood(&gs).unwrap();
        let sd = suspended_dual(&gs).unwrap();
        let s_star = dual_wood(&s, &sd).unwrap();
        (s, sd, s_star)
    }

    #[test]
    fn k4_dual_wood_kinds() {
        let g = corpus::k4();
        let (s, _, s_star) = pipeline(&g);
        for e in 0..g.m() {
            assert_ne!(s.is_bidirected(e), s_star.is_bidirected(e), "edge {e}");
        }
        // duals of the outer edges carry the three different colors
        let mut outer: Vec<Color> = g.faces().faces[g.outer_face()]
            .iter()
            .map(|d| match s_star.kind(d.edge()) {
                EdgeKind::Uni(q) => s_star.color(q).unwrap(),
                _ => panic!("outer dual edge should be unidirected"),
            })
            .collect();
        outer.sort();
        assert_eq!(outer, Color::ALL.to_vec());
        // triangle edges are bidirected
        for i in 0..3 {
            assert!(s_star.is_bidirected(g.m() + i));
        }
    }

    #[test]
    fn dual_woods_are_woods_and_involutive() {
        for (name, g) in corpus::base_corpus(9) {
            let (s, sd, s_star) = pipeline(&g);
            let report = validate_wood(&sd.suspension, &s_star);
            assert!(report.is_empty(), "{name}: {report}");
            let back = primal_wood(&s_star, &sd, s.host()).unwrap();
            assert_eq!(back.colors(), s.colors(), "{name}");
        }
    }

    #[test]
    fn k4_completion() {
        let g = corpus::k4();
        let (s, sd, s_star) = pipeline(&g);
        let c = completion(&s, &sd, &s_star).unwrap();
        assert_eq!(c.crossing_count(), 9);
        assert_eq!(c.vertex_count(), 4 + 6 + 9);
        assert_eq!(c.euler_characteristic(), 2);
        assert!(check_crossing_vertices(&c).is_empty());
    }

    #[test]
    fn flipped_dual_segment_is_reported() {
        let (s, sd, s_star) = pipeline(&corpus::cube());
        let mut c = completion(&s, &sd, &s_star).unwrap();
        let seg = c.crossing_rotation[4][1];
        let sgm = &mut c.segments[seg];
        std::mem::swap(&mut sgm.from, &mut sgm.to);
        let report = check_crossing_vertices(&c);
        assert_eq!(report.len(), 1);
        assert_eq!(report.violations[0].location, Location::Crossing(4));
    }

    #[test]
    fn completions_satisfy_crossing_rule() {
        for (name, g) in corpus::base_corpus(2) {
            let (s, sd, s_star) = pipeline(&g);
            let c = completion(&s, &sd, &s_star).unwrap();
            assert_eq!(c.vertex_count(), g.n() + g.face_count() - 1 + 3 + g.m() + 3, "{name}");
            assert_eq!(c.euler_characteristic(), 2, "{name}");
            let report = check_crossing_vertices(&c);
            assert!(report.is_empty(), "{name}: {report}");
        }
    }
}
