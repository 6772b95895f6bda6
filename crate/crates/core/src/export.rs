//! Graphviz DOT output for graphs, woods, completions, candidate subgraphs
//! and tree pairs.

use std::fmt::Write;

use crate::candidate::CandidateSubgraph;
use crate::color::Color;
use crate::dual_wood::{Completion, End, Node};
use crate::extract::SpanningTreePair;
use crate::planar::{Dart, EmbeddedPlanarGraph};
use crate::schnyder::{EdgeKind, SchnyderWood};

fn header(kind: &str, name: &str) -> String {
    format!("{kind} {name} {{\n  node [shape=circle, fontsize=10];\n")
}

pub fn graph_dot(g: &EmbeddedPlanarGraph) -> String {
    let mut out = header("graph", "G");
    for (e, &[u, v]) in g.edges().iter().enumerate() {
        writeln!(out, "  {u} -- {v} [label=\"{e}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Unidirected edges are arrows in their color; bidirected edges are
/// double-headed arrows whose halves carry the two colors, the half at `u`
/// showing the direction `u -> v`.
pub fn wood_dot(s: &SchnyderWood) -> String {
    let g = s.graph();
    let mut out = header("digraph", "Wood");
    for e in 0..g.m() {
        let [u, v] = g.edge(e);
        let d = Dart(2 * e);
        let name = |c: Option<Color>| c.map_or("gray", Color::name);
        match s.kind(e) {
            EdgeKind::Bi => writeln!(
                out,
                "  {u} -> {v} [dir=both, color=\"{};0.5:{}\"];",
                name(s.color(d)),
                name(s.color(d.rev()))
            ),
            EdgeKind::Uni(x) => {
                let (a, b) = (g.tail(x), g.head(x));
                writeln!(out, "  {a} -> {b} [color={}];", name(s.color(x)))
            }
            EdgeKind::Uncolored => writeln!(out, "  {u} -> {v} [dir=none, color=gray, style=dotted];"),
        }
        .unwrap();
    }
    for (i, r) in s.host().roots().into_iter().enumerate() {
        let c = s.color(s.host().half(i)).map_or("gray", Color::name);
        writeln!(out, "  half{i} [shape=point, style=invis];").unwrap();
        writeln!(out, "  {r} -> half{i} [color={c}];").unwrap();
    }
    out.push_str("}\n");
    out
}

fn end_id(e: End, outer: usize) -> String {
    match e {
        End::Node(Node::Primal(v)) => format!("p{v}"),
        End::Node(Node::Dual(x)) => format!("d{x}"),
        End::Node(Node::Crossing(k)) => format!("c{k}"),
        End::Outer => format!("o{outer}"),
    }
}

/// Primal vertices are circles, dual vertices boxes and crossing vertices
/// small diamonds; dual segments are dashed.
pub fn completion_dot(c: &Completion) -> String {
    let mut out = header("digraph", "Completion");
    for v in 0..c.primal_vertices {
        writeln!(out, "  p{v} [label=\"{v}\"];").unwrap();
    }
    for x in 0..c.dual_vertices {
        writeln!(out, "  d{x} [shape=box, label=\"{x}*\"];").unwrap();
    }
    for k in 0..c.crossing_count() {
        writeln!(out, "  c{k} [shape=diamond, width=0.15, height=0.15, label=\"\"];").unwrap();
    }
    for (i, seg) in c.segments.iter().enumerate() {
        if seg.from == End::Outer || seg.to == End::Outer {
            writeln!(out, "  o{i} [shape=point, style=invis];").unwrap();
        }
        let style = if seg.dual { ", style=dashed" } else { "" };
        writeln!(
            out,
            "  {} -> {} [color={}{style}];",
            end_id(seg.from, i),
            end_id(seg.to, i),
            seg.color.name()
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Edges of `h` are bold and labeled with their rules; the rest are gray.
pub fn candidate_dot(g: &EmbeddedPlanarGraph, h: &CandidateSubgraph) -> String {
    let mut out = header("graph", "Candidate");
    for (e, &[u, v]) in g.edges().iter().enumerate() {
        match h.rules(e) {
            Some(r) => writeln!(out, "  {u} -- {v} [penwidth=2.5, label=\"{r}\"];"),
            None => writeln!(out, "  {u} -- {v} [color=gray, style=dotted];"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Tree edges solid, other primal edges gray, co-tree edges dashed between
/// dual vertices.
pub fn tree_pair_dot(g: &EmbeddedPlanarGraph, dual: &EmbeddedPlanarGraph, pair: &SpanningTreePair) -> String {
    let mut out = header("graph", "TreePair");
    for v in 0..g.n() {
        writeln!(out, "  p{v} [label=\"{v}\"];").unwrap();
    }
    for x in 0..dual.n() {
        writeln!(out, "  d{x} [shape=box, label=\"{x}*\"];").unwrap();
    }
    for (e, &[u, v]) in g.edges().iter().enumerate() {
        let style = if pair.tree.binary_search(&e).is_ok() {
            "penwidth=2.5"
        } else {
            "color=gray"
        };
        writeln!(out, "  p{u} -- p{v} [{style}];").unwrap();
    }
    for &e in &pair.co_tree {
        let [x, y] = dual.edge(e);
        writeln!(out, "  d{x} -- d{y} [style=dashed, color=blue];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::dual_wood::completion;
    use crate::extract::{certify, Pipeline};
    use dot_parser::ast;

    fn parses(text: &str) {
        if let Err(e) = ast::Graph::try_from(text) {
            panic!("invalid DOT: {e}\n{text}");
        }
    }

    #[test]
    fn k4_wood() {
        let p = Pipeline::new(&corpus::k4()).unwrap();
        let dot = wood_dot(&p.wood);
        parses(&dot);
        let edges: Vec<&str> = dot
            .lines()
            .filter(|l| l.contains("->") && !l.contains("half"))
            .collect();
        assert_eq!(edges.len(), 6);
        assert_eq!(edges.iter().filter(|l| l.contains(";0.5:")).count(), 3);
    }

    #[test]
    fn every_export_parses() {
        for g in [corpus::k4(), corpus::cube(), corpus::icosahedron()] {
            let p = Pipeline::new(&g).unwrap();
            parses(&graph_dot(&g));
            parses(&wood_dot(&p.wood));
            parses(&candidate_dot(&g, &p.h));
            let c = completion(&p.wood, &p.suspended_dual, &p.dual_wood).unwrap();
            parses(&completion_dot(&c));
            parses(&tree_pair_dot(&g, &p.dual, &certify(&p).unwrap()));
        }
    }

    #[test]
    fn completion_marks_crossings() {
        let p = Pipeline::new(&corpus::k4()).unwrap();
        let c = completion(&p.wood, &p.suspended_dual, &p.dual_wood).unwrap();
        let dot = completion_dot(&c);
        assert_eq!(dot.matches("shape=diamond").count(), c.crossing_count());
        let dashed = c.segments.iter().filter(|s| s.dual).count();
        assert_eq!(dot.matches("style=dashed").count(), dashed);
    }
}
