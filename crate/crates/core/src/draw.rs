//! Straight-line drawings from face counts: vertex `v` gets the numbers of
//! inner faces in the three regions cut out by its color paths to the
//! roots.

use std::collections::VecDeque;
use std::fmt::Write;

use crate::color::Color;
use crate::planar::Dart;
use crate::schnyder::SchnyderWood;

/// Face counts `(v_1, v_2, v_3)` per vertex and the drawing's integer
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    pub counts: Vec<[usize; 3]>,
    pub points: Vec<(i64, i64)>,
    pub segments: Vec<[usize; 2]>,
}

/// Darts of the `c`-colored path from `v` to its root.
fn color_path(s: &SchnyderWood, v: usize, c: Color) -> Vec<Dart> {
    let g = s.graph();
    let mut path = Vec::new();
    let mut u = v;
    while let Some(d) = s.outgoing(u, c).filter(|d| d.0 < 2 * g.m()) {
        path.push(d);
        u = g.head(d);
        assert!(path.len() <= g.n(), "color {c} has a cycle");
    }
    path
}

/// Region label of every inner face for vertex `v`: `R_i` lies right of
/// the paths of color `i+1` and left of those of color `i-1`.
fn regions(s: &SchnyderWood, v: usize) -> [usize; 3] {
    let g = s.graph();
    let outer = g.outer_face();
    let mut label: Vec<Option<usize>> = vec![None; g.face_count()];
    let mut barrier = vec![false; g.m()];
    let mut queue = VecDeque::new();
    for c in Color::ALL {
        for d in color_path(s, v, c) {
            barrier[d.edge()] = true;
            for (f, region) in [(g.right_face(d), c.prev()), (g.left_face(d), c.next())] {
                if f != outer && label[f].is_none() {
                    label[f] = Some(region.index());
                    queue.push_back(f);
                }
            }
        }
    }
    let faces = &g.faces().faces;
    while let Some(f) = queue.pop_front() {
        for &d in &faces[f] {
            let h = g.right_face(d);
            if !barrier[d.edge()] && h != outer && label[h].is_none() {
                label[h] = label[f];
                queue.push_back(h);
            }
        }
    }
    let mut counts = [0; 3];
    for l in label.into_iter().flatten() {
        counts[l] += 1;
    }
    counts
}

pub fn face_counts(s: &SchnyderWood) -> Vec<[usize; 3]> {
    (0..s.graph().n()).map(|v| regions(s, v)).collect()
}

pub fn draw(s: &SchnyderWood) -> Drawing {
    let g = s.graph();
    let counts = face_counts(s);
    let points = counts.iter().map(|&[a, b, _]| ((2 * b + a) as i64, a as i64)).collect();
    Drawing {
        counts,
        points,
        segments: g.edges().to_vec(),
    }
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn on_segment(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Pairs of vertices drawn at the same point.
pub fn coincident_points(d: &Drawing) -> Vec<[usize; 2]> {
    let mut bad = Vec::new();
    for u in 0..d.points.len() {
        for v in u + 1..d.points.len() {
            if d.points[u] == d.points[v] {
                bad.push([u, v]);
            }
        }
    }
    bad
}

/// Pairs of segments that meet anywhere other than a shared endpoint.
pub fn crossings(d: &Drawing) -> Vec<[usize; 2]> {
    let mut bad = Vec::new();
    for (i, &[a, b]) in d.segments.iter().enumerate() {
        for (j, &[c, e]) in d.segments.iter().enumerate().skip(i + 1) {
            let (pa, pb, pc, pe) = (d.points[a], d.points[b], d.points[c], d.points[e]);
            let shared: Vec<usize> = [a, b].into_iter().filter(|x| *x == c || *x == e).collect();
            let hit = match shared.len() {
                0 => {
                    let (o1, o2) = (orient(pa, pb, pc), orient(pa, pb, pe));
                    let (o3, o4) = (orient(pc, pe, pa), orient(pc, pe, pb));
                    (o1 != o2 && o3 != o4)
                        || on_segment(pa, pb, pc)
                        || on_segment(pa, pb, pe)
                        || on_segment(pc, pe, pa)
                        || on_segment(pc, pe, pb)
                }
                // sharing one endpoint, they overlap only if collinear and pointing the same way
                1 => {
                    let x = shared[0];
                    let p = d.points[x];
                    let q1 = d.points[if a == x { b } else { a }];
                    let q2 = d.points[if c == x { e } else { c }];
                    orient(p, q1, q2) == 0 && (q1.0 - p.0) * (q2.0 - p.0) + (q1.1 - p.1) * (q2.1 - p.1) > 0
                }
                _ => true,
            };
            if hit {
                bad.push([i, j]);
            }
        }
    }
    bad
}

/// SVG with edges as lines colored by their wood colors and vertices as
/// labeled dots.
pub fn to_svg(s: &SchnyderWood, d: &Drawing) -> String {
    let scale = 40;
    let pad = 30;
    let max_x = d.points.iter().map(|p| p.0).max().unwrap_or(0);
    let max_y = d.points.iter().map(|p| p.1).max().unwrap_or(0);
    let at = |v: usize| {
        let (x, y) = d.points[v];
        (pad + x * scale, pad + (max_y - y) * scale)
    };
    let mut out = String::new();
    let (w, h) = (2 * pad + max_x * scale, 2 * pad + max_y * scale);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    for (e, &[u, v]) in d.segments.iter().enumerate() {
        let ((x1, y1), (x2, y2)) = (at(u), at(v));
        let fwd = s.color(Dart(2 * e));
        let back = s.color(Dart(2 * e + 1));
        let (mx, my) = ((x1 + x2) / 2, (y1 + y2) / 2);
        let name = |c: Option<Color>| c.map_or("gray", Color::name);
        // each half of the line carries the color of the direction leaving that end
        writeln!(
            out,
            r#"  <line x1="{x1}" y1="{y1}" x2="{mx}" y2="{my}" stroke="{}" stroke-width="2"/>"#,
            name(fwd.or(back))
        )
        .unwrap();
        writeln!(
            out,
            r#"  <line x1="{mx}" y1="{my}" x2="{x2}" y2="{y2}" stroke="{}" stroke-width="2"/>"#,
            name(back.or(fwd))
        )
        .unwrap();
    }
    for v in 0..d.points.len() {
        let (x, y) = at(v);
        writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="5" fill="black"/>"#).unwrap();
        writeln!(out, r#"  <text x="{}" y="{}" font-size="12">{v}</text>"#, x + 7, y - 7).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
