use super::{EdgeKind, SchnyderWood};
use crate::color::Color;
use crate::planar::{Dart, Suspension};
use crate::report::{Location, ValidationReport};

/// Checks the four wood conditions: every edge oriented with distinct
/// colors on bidirected edges, root half-edges, one outgoing edge per color
/// in clockwise order with incoming edges in their sectors, and no
/// monochromatic directed inner face.
///
/// Sectors are closed: an incoming `i`-colored direction may sit on the
/// outgoing `(i+1)` or `(i-1)` edge itself, which is what bidirected edges
/// need.
pub fn validate_wood(gs: &Suspension, s: &SchnyderWood) -> ValidationReport {
    let mut report = ValidationReport::new();
    if gs.dart_count() != s.colors().len() || gs.roots() != s.host().roots() {
        report.push("wood.host", Location::Graph, "wood belongs to a different suspension");
        return report;
    }
    let m = gs.m();

    for e in 0..m {
        match s.kind(e) {
            EdgeKind::Uncolored => report.push("wood.edge", Location::Edge(e), "edge has no colored direction"),
            EdgeKind::Bi if s.color(Dart(2 * e)) == s.color(Dart(2 * e + 1)) => {
                report.push("wood.edge", Location::Edge(e), "bidirected edge repeats a color")
            }
            _ => {}
        }
    }
    for i in 0..3 {
        let expected = Color::from_index(i);
        let got = s.color(gs.half(i));
        if got != Some(expected) {
            report.push(
                "wood.half",
                Location::HalfEdge(i),
                format!(
                    "half-edge at root {} should be outgoing {expected}, found {got:?}",
                    gs.roots()[i]
                ),
            );
        }
    }

    for v in 0..gs.n() {
        check_vertex(gs, s, v, &mut report);
    }

    let g = gs.base();
    for (f, cycle) in g.faces().faces.iter().enumerate() {
        if f == g.outer_face() {
            continue;
        }
        for reversed in [false, true] {
            let first = s.color(if reversed { cycle[0].rev() } else { cycle[0] });
            let Some(c) = first else { continue };
            let mono = cycle
                .iter()
                .all(|&d| s.color(if reversed { d.rev() } else { d }) == Some(c));
            if mono {
                report.push(
                    "wood.face",
                    Location::Face(f),
                    format!("face boundary is a directed {c} cycle"),
                );
            }
        }
    }
    report
}

fn check_vertex(gs: &Suspension, s: &SchnyderWood, v: usize, report: &mut ValidationReport) {
    let rot = gs.rotation(v);
    let k = rot.len();
    let mut out = [None; 3];
    for c in Color::ALL {
        let positions: Vec<usize> = (0..k).filter(|&p| s.color(rot[p]) == Some(c)).collect();
        if positions.len() != 1 {
            report.push(
                "wood.outgoing",
                Location::Vertex(v),
                format!("{} outgoing {c} edges", positions.len()),
            );
        } else {
            out[c.index()] = Some(positions[0]);
        }
    }
    let [Some(pr), Some(pg), Some(pb)] = out else { return };
    let offset = |from: usize, to: usize| (to + k - from) % k;
    if offset(pr, pg) > offset(pr, pb) {
        report.push(
            "wood.order",
            Location::Vertex(v),
            "outgoing edges are not red, green, blue clockwise",
        );
        return;
    }
    for (p, &d) in rot.iter().enumerate() {
        let Some(i) = s.incoming(d) else { continue };
        let lo = out[i.next().index()].expect("all outgoing present");
        let hi = out[i.prev().index()].expect("all outgoing present");
        if offset(lo, p) > offset(lo, hi) {
            report.push(
                "wood.sector",
                Location::Vertex(v),
                format!("incoming {i} edge {} lies outside its sector", d.edge()),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::planar::suspend;
    use crate::schnyder::compute_wood;

    #[test]
    fn computed_woods_are_valid() {
        for (name, g) in corpus::full_corpus(corpus::DEFAULT_SEED) {
            let gs = suspend(&g).unwrap();
            let s = compute_wood(&gs).unwrap();
            let report = validate_wood(&gs, &s);
            assert!(report.is_empty(), "{name}: {report}");
        }
    }

    #[test]
    fn recolored_red_edge_breaks_outgoing_count() {
        let g = corpus::k4();
        let gs = suspend(&g).unwrap();
        let mut s = compute_wood(&gs).unwrap();
        let d = g.dart_between(3, 0).unwrap();
        s.set_color(d, Some(Color::Green));
        let report = validate_wood(&gs, &s);
        assert!(report.has("wood.outgoing"));
        assert!(report
            .violations
            .iter()
            .all(|x| x.condition != "wood.outgoing" || x.location == Location::Vertex(3)));
        assert_eq!(
            report
                .violations
                .iter()
                .filter(|x| x.condition == "wood.outgoing")
                .count(),
            2
        );
    }

    #[test]
    fn monochromatic_face_is_reported() {
        let g = corpus::cube();
        let gs = suspend(&g).unwrap();
        let mut s = compute_wood(&gs).unwrap();
        let inner = (0..g.face_count()).find(|&f| f != g.outer_face()).unwrap();
        for &d in &g.faces().faces[inner] {
            s.set_color(d, Some(Color::Red));
            s.set_color(d.rev(), None);
        }
        let report = validate_wood(&gs, &s);
        assert!(report
            .violations
            .iter()
            .any(|x| x.condition == "wood.face" && x.location == Location::Face(inner)));
    }

    #[test]
    fn wrong_half_edge_color() {
        let gs = suspend(&corpus::k4()).unwrap();
        let mut s = compute_wood(&gs).unwrap();
        s.set_color(gs.half(1), Some(Color::Blue));
        assert!(validate_wood(&gs, &s).has("wood.half"));
    }
}
