//! Ordered path partitions compatible with a Schnyder wood, their
//! validation, and parent paths/edges.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::color::Color;
use crate::error::{Error, Result};
use crate::planar::{Dart, EmbeddedPlanarGraph};
use crate::report::{Location, ValidationReport};
use crate::schnyder::{contour_walk, EdgeKind, SchnyderWood};

/// Paths `P_0 .. P_s` with base pair `(r_j, r_{j+1})`, where `j` is the
/// index of `base`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedPathPartition {
    pub base: Color,
    pub base_pair: (usize, usize),
    pub paths: Vec<Vec<usize>>,
    #[serde(skip)]
    pub index: Vec<usize>,
}

impl OrderedPathPartition {
    /// Builds the index map; vertices missing from every path get
    /// `usize::MAX`, which the validator reports.
    pub fn new(g: &EmbeddedPlanarGraph, base: Color, paths: Vec<Vec<usize>>) -> Self {
        let j = base.index();
        let roots = g.roots();
        let mut index = vec![usize::MAX; g.n()];
        for (i, p) in paths.iter().enumerate() {
            for &v in p {
                if v < index.len() && index[v] == usize::MAX {
                    index[v] = i;
                }
            }
        }
        Self {
            base,
            base_pair: (roots[j], roots[(j + 1) % 3]),
            paths,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

pub fn vertex_index(p: &OrderedPathPartition, v: usize) -> Result<usize> {
    match p.index.get(v) {
        Some(&t) if t != usize::MAX => Ok(t),
        _ => Err(Error::UnknownVertex(v)),
    }
}

/// The compatible partition for color `i`: paths are the maximal
/// `i`-`(i+1)`-colored paths, each listed from the end whose outgoing
/// `i`-edge leaves the path; they are ordered by a linear extension of
/// `T_i^-1 ∪ T_{i+1}^-1 ∪ T_{i+2}`, preferring the path with the smallest
/// vertex id whenever several are available.
pub fn compatible_opp(s: &SchnyderWood, i: Color) -> Result<OrderedPathPartition> {
    let g = s.graph();
    let n = g.n();
    let on_path = |e: usize| s.is_colored_pair(e, i, i.next());

    let mut path_of = vec![usize::MAX; n];
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if path_of[v] != usize::MAX {
            continue;
        }
        let leaves = match s.outgoing(v, i) {
            Some(d) => s.host().is_half(d) || !on_path(d.edge()),
            None => true,
        };
        if !leaves {
            continue;
        }
        let id = paths.len();
        let mut path = vec![v];
        path_of[v] = id;
        let mut cur = v;
        while let Some(d) = s.outgoing(cur, i.next()) {
            if s.host().is_half(d) || !on_path(d.edge()) {
                break;
            }
            cur = g.head(d);
            if path_of[cur] != usize::MAX {
                return Err(Error::CyclicConstraint);
            }
            path_of[cur] = id;
            path.push(cur);
        }
        paths.push(path);
    }
    if path_of.contains(&usize::MAX) {
        return Err(Error::CyclicConstraint);
    }

    // constraint arcs between paths: before -> after
    let k = paths.len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indegree = vec![0usize; k];
    for d in 0..2 * g.m() {
        let d = Dart(d);
        let Some(c) = s.color(d) else { continue };
        let (a, b) = (path_of[g.tail(d)], path_of[g.head(d)]);
        if a == b {
            continue;
        }
        let (before, after) = if c == i.prev() { (a, b) } else { (b, a) };
        succ[before].push(after);
        indegree[after] += 1;
    }
    let key: Vec<usize> = paths.iter().map(|p| *p.iter().min().expect("non-empty")).collect();
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..k)
        .filter(|&p| indegree[p] == 0)
        .map(|p| Reverse((key[p], p)))
        .collect();
    let mut order = Vec::with_capacity(k);
    while let Some(Reverse((_, p))) = heap.pop() {
        order.push(p);
        for &q in &succ[p] {
            indegree[q] -= 1;
            if indegree[q] == 0 {
                heap.push(Reverse((key[q], q)));
            }
        }
    }
    if order.len() != k {
        return Err(Error::CyclicConstraint);
    }
    let ordered = order.into_iter().map(|p| std::mem::take(&mut paths[p])).collect();
    Ok(OrderedPathPartition::new(g, i, ordered))
}

/// Contours `C_0 .. C_{s-1}` traced from scratch: the clockwise outer walk
/// of `G[V_i]` from `r_{j+1}` to `r_j`, or `None` where it is not a path.
pub fn contours(g: &EmbeddedPlanarGraph, p: &OrderedPathPartition) -> Vec<Option<Vec<usize>>> {
    let j = p.base.index();
    let p0 = g.outer_path(j, (j + 1) % 3);
    let mut alive = vec![false; g.n()];
    let mut out = Vec::new();
    for path in p.paths.iter().take(p.paths.len().saturating_sub(1)) {
        for &v in path {
            if v < alive.len() {
                alive[v] = true;
            }
        }
        out.push(contour_walk(g, &alive, &p0));
    }
    out
}

/// Next contour obtained by splicing `path` into `prev` between its
/// leftmost and rightmost neighbors.
fn splice_contour(g: &EmbeddedPlanarGraph, prev: &[usize], path: &[usize]) -> Option<Vec<usize>> {
    let touches = |v: usize| path.iter().any(|&z| g.edge_between(v, z).is_some());
    let a = prev.iter().position(|&v| touches(v))?;
    let b = prev.iter().rposition(|&v| touches(v))?;
    if a == b {
        return None;
    }
    let adjacent = |u: usize, v: usize| g.edge_between(u, v).is_some();
    let first = path[0];
    let last = path[path.len() - 1];
    let forward = adjacent(prev[a], first) && adjacent(last, prev[b]);
    let mut out = prev[..=a].to_vec();
    if forward {
        out.extend_from_slice(path);
    } else {
        out.extend(path.iter().rev());
    }
    out.extend_from_slice(&prev[b..]);
    Some(out)
}

/// Checks partition, induced paths and the four partition conditions, and
/// cross-checks each contour against an incremental splice of the previous
/// one.
pub fn validate_opp(g: &EmbeddedPlanarGraph, p: &OrderedPathPartition) -> ValidationReport {
    let mut report = ValidationReport::new();
    let n = g.n();
    let j = p.base.index();
    let roots = g.roots();

    let mut count = vec![0usize; n];
    for (t, path) in p.paths.iter().enumerate() {
        if path.is_empty() {
            report.push("opp.path", Location::Path(t), "empty path");
        }
        for &v in path {
            if v >= n {
                report.push("opp.partition", Location::Path(t), format!("unknown vertex {v}"));
            } else {
                count[v] += 1;
            }
        }
    }
    for (v, &c) in count.iter().enumerate() {
        if c != 1 {
            report.push(
                "opp.partition",
                Location::Vertex(v),
                format!("vertex appears in {c} paths"),
            );
        }
    }
    if !report.is_empty() {
        return report;
    }

    for (t, path) in p.paths.iter().enumerate() {
        let consecutive = path.windows(2).all(|w| g.edge_between(w[0], w[1]).is_some());
        let inside: usize = path
            .iter()
            .map(|&z| g.neighbors(z).filter(|w| path.contains(w)).count())
            .sum();
        if !consecutive || inside != 2 * (path.len() - 1) {
            report.push(
                "opp.path",
                Location::Path(t),
                "vertices do not induce a path in the listed order",
            );
        }
    }

    let p0 = g.outer_path(j, (j + 1) % 3);
    let first = &p.paths[0];
    let reversed: Vec<usize> = p0.iter().rev().copied().collect();
    if *first != p0 && *first != reversed {
        report.push(
            "opp.first",
            Location::Path(0),
            format!("expected outer path {p0:?}, found {first:?}"),
        );
    }
    let last = p.paths.last().expect("non-empty");
    if *last != [roots[(j + 2) % 3]] {
        report.push(
            "opp.last",
            Location::Path(p.paths.len() - 1),
            format!("last path must be {{{}}}", roots[(j + 2) % 3]),
        );
    }

    let s = p.paths.len() - 1;
    let mut in_prefix = vec![false; n];
    let traced = contours(g, p);
    let mut spliced: Option<Vec<usize>> = None;
    for (t, traced_t) in traced.iter().enumerate().take(s) {
        for &v in &p.paths[t] {
            in_prefix[v] = true;
        }
        for &v in &p.paths[t] {
            if g.neighbors(v).all(|w| in_prefix[w]) {
                report.push(
                    "opp.neighbor",
                    Location::Vertex(v),
                    format!("vertex of path {t} has no neighbor in a later path"),
                );
            }
        }
        let Some(contour) = traced_t else {
            report.push("opp.contour", Location::Path(t), "contour is not a path");
            spliced = None;
            continue;
        };
        spliced = match (t, spliced) {
            (0, _) => Some(contour.clone()),
            (_, Some(prev)) => splice_contour(g, &prev, &p.paths[t]),
            (_, None) => None,
        };
        if spliced.as_ref().is_some_and(|c| c != contour) {
            report.push(
                "opp.contour_update",
                Location::Path(t),
                "incremental contour differs from traced contour",
            );
        }
        spliced = Some(contour.clone());
        let next = &p.paths[t + 1];
        for &v in contour {
            let k = g.neighbors(v).filter(|w| next.contains(w)).count();
            if k > 1 {
                report.push(
                    "opp.attach",
                    Location::Vertex(v),
                    format!("contour vertex has {k} neighbors in path {}", t + 1),
                );
            }
        }
    }
    report
}

/// Index monotonicity along the wood: directions of color `i+2` increase
/// the index, unidirected `i`- and `(i+1)`-colored edges decrease it, and
/// `i`-`(i+1)`-colored edges keep it.
pub fn check_monotonicity(s: &SchnyderWood, p: &OrderedPathPartition) -> ValidationReport {
    let mut report = ValidationReport::new();
    let g = s.graph();
    let i = p.base;
    let idx = |v: usize| p.index[v];
    for e in 0..g.m() {
        if s.is_colored_pair(e, i, i.next()) {
            let [u, v] = g.edge(e);
            if idx(u) != idx(v) {
                report.push("opp.monotone", Location::Edge(e), "path edge joins different paths");
            }
            continue;
        }
        for d in [Dart(2 * e), Dart(2 * e + 1)] {
            let Some(c) = s.color(d) else { continue };
            let (u, w) = (g.tail(d), g.head(d));
            let ok = if c == i.prev() {
                idx(u) < idx(w)
            } else if matches!(s.kind(e), EdgeKind::Uni(_)) {
                idx(w) < idx(u)
            } else {
                true
            };
            if !ok {
                report.push(
                    "opp.monotone",
                    Location::Edge(e),
                    format!("{c} direction {u}->{w} goes from index {} to {}", idx(u), idx(w)),
                );
            }
        }
    }
    report
}

/// Parent path and parent edge of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Parent {
    pub path: usize,
    pub edge: usize,
    /// Endpoint of the edge in the child path.
    pub endpoint: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParentAssignment {
    /// `parents[i]` for path `P_i`; `None` for `P_0`.
    pub parents: Vec<Option<Parent>>,
}

impl ParentAssignment {
    pub fn is_parent_edge(&self, e: usize) -> bool {
        self.parents.iter().flatten().any(|p| p.edge == e)
    }
}

// parent choice order: larger path index first, then positions along
// the two paths, then edge id.
type ParentKey = (Reverse<usize>, usize, usize, usize);

/// For every path `P_i` (`i >= 1`) the latest earlier adjacent path and one
/// edge to it: the edge whose endpoint comes first along `P_i`, then whose
/// endpoint comes first along the parent path, then the smallest edge id.
/// Every chosen edge must be incoming `(i+2)`-colored, outgoing `i`-colored
/// or outgoing `(i+1)`-colored at its endpoint in `P_i`.
pub fn parent_edges(s: &SchnyderWood, p: &OrderedPathPartition) -> Result<ParentAssignment> {
    let g = s.graph();
    let i = p.base;
    let position: Vec<usize> = {
        let mut pos = vec![0; g.n()];
        for path in &p.paths {
            for (k, &v) in path.iter().enumerate() {
                pos[v] = k;
            }
        }
        pos
    };
    let mut parents = vec![None];
    for (t, path) in p.paths.iter().enumerate().skip(1) {
        let mut best: Option<(ParentKey, Parent, Dart)> = None;
        for &u in path {
            for &d in g.rotation(u) {
                let w = g.head(d);
                let j = p.index[w];
                if j >= t {
                    continue;
                }
                let key = (Reverse(j), position[u], position[w], d.edge());
                if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                    best = Some((
                        key,
                        Parent {
                            path: j,
                            edge: d.edge(),
                            endpoint: u,
                        },
                        d,
                    ));
                }
            }
        }
        let (_, parent, d) =
            best.ok_or_else(|| Error::InconsistentInputs(format!("path {t} has no earlier neighbor")))?;
        let fits = s.incoming(d) == Some(i.prev()) || s.color(d) == Some(i) || s.color(d) == Some(i.next());
        if !fits {
            return Err(Error::InconsistentInputs(format!(
                "parent edge {} of path {t} has an unexpected coloring",
                parent.edge
            )));
        }
        parents.push(Some(parent));
    }
    Ok(ParentAssignment { parents })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::planar::suspend;
    use crate::schnyder::compute_wood;

    fn k4_opp() -> (SchnyderWood, OrderedPathPartition) {
        let s = compute_wood(&suspend(&corpus::k4()).unwrap()).unwrap();
        let p = compatible_opp(&s, Color::Green).unwrap();
        (s, p)
    }

    #[test]
    fn k4_green_partition() {
        let (s, p) = k4_opp();
        assert_eq!(p.paths, vec![vec![1, 2], vec![3], vec![0]]);
        assert_eq!(p.base_pair, (1, 2));
        assert_eq!(vertex_index(&p, 3).unwrap(), 1);
        assert_eq!(vertex_index(&p, 1).unwrap(), 0);
        assert_eq!(vertex_index(&p, 0).unwrap(), 2);
        assert!(matches!(vertex_index(&p, 9), Err(Error::UnknownVertex(9))));
        assert!(validate_opp(s.graph(), &p).is_empty());
        assert!(check_monotonicity(&s, &p).is_empty());
    }

    #[test]
    fn k4_parents() {
        let (s, p) = k4_opp();
        let g = s.graph();
        let pa = parent_edges(&s, &p).unwrap();
        let p1 = pa.parents[1].unwrap();
        assert_eq!(p1.path, 0);
        assert_eq!(p1.edge, g.edge_between(3, 1).unwrap());
        let p2 = pa.parents[2].unwrap();
        assert_eq!(p2.path, 1);
        assert_eq!(p2.edge, g.edge_between(3, 0).unwrap());
        // incoming red at r_1
        let d = g.dart_between(3, 0).unwrap();
        assert_eq!(s.color(d), Some(Color::Red));
    }

    #[test]
    fn swapped_paths_break_last_condition() {
        let (s, p) = k4_opp();
        let swapped = OrderedPathPartition::new(s.graph(), Color::Green, vec![vec![1, 2], vec![0], vec![3]]);
        let _ = p;
        assert!(validate_opp(s.graph(), &swapped).has("opp.last"));
    }

    #[test]
    fn non_adjacent_pair_is_not_a_path() {
        let g = corpus::cube();
        let s = compute_wood(&suspend(&g).unwrap()).unwrap();
        let p = compatible_opp(&s, Color::Green).unwrap();
        // merge the last path with a vertex it does not touch
        let mut paths = p.paths.clone();
        let last = paths.pop().unwrap()[0];
        let far = (0..g.n())
            .find(|&v| v != last && g.edge_between(v, last).is_none())
            .unwrap();
        for path in paths.iter_mut() {
            path.retain(|&v| v != far);
        }
        paths.retain(|p| !p.is_empty());
        paths.push(vec![far, last]);
        let bad = OrderedPathPartition::new(&g, Color::Green, paths);
        assert!(validate_opp(&g, &bad).has("opp.path"));
    }

    #[test]
    fn compatible_partitions_on_corpus() {
        for (name, g) in corpus::full_corpus(corpus::DEFAULT_SEED) {
            let s = compute_wood(&suspend(&g).unwrap()).unwrap();
            for c in Color::ALL {
                let p = compatible_opp(&s, c).unwrap();
                let report = validate_opp(&g, &p);
                assert!(report.is_empty(), "{name} {c}: {report}");
                let mono = check_monotonicity(&s, &p);
                assert!(mono.is_empty(), "{name} {c}: {mono}");
                let maximal = (0..g.m()).filter(|&e| s.is_colored_pair(e, c, c.next())).count();
                assert_eq!(p.len(), g.n() - maximal, "{name}");
                parent_edges(&s, &p).unwrap();
            }
        }
    }
}
