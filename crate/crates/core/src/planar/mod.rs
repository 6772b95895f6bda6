//! Embedded planar graphs given by clockwise rotation systems.
//!
//! Every edge `e = [u, v]` owns two darts: `Dart(2e)` runs `u -> v` and
//! `Dart(2e + 1)` runs `v -> u`. Faces are traced with
//! `next(d) = cw_next(rev(d))`, which keeps each face on the left of its
//! darts: bounded faces come out counterclockwise, the outer face clockwise.

mod canon;
mod connectivity;
mod dual;
mod suspension;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::canonical_code;
pub use connectivity::{check_three_connected, is_connected_without};
pub use dual::{identify_roots, ordinary_dual, suspended_dual, DualCorrespondence, SuspendedDual};
pub use suspension::{suspend, Suspension};

/// A directed edge end. Darts `2e` and `2e + 1` belong to edge `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dart(pub usize);

impl Dart {
    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn rev(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn is_forward(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

/// Faces as dart cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceDecomposition {
    pub faces: Vec<Vec<Dart>>,
    pub outer_face: usize,
    pub dart_face: Vec<usize>,
}

impl FaceDecomposition {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// A simple, connected plane graph with three clockwise roots on its outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedPlanarGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    rotation: Vec<Vec<Dart>>,
    /// Position of each dart inside the rotation of its tail.
    pos: Vec<usize>,
    roots: [usize; 3],
    faces: FaceDecomposition,
}

/// Builds a validated graph from clockwise neighbor lists.
///
/// Edge ids are assigned in scan order: vertex `0` first, each list left to
/// right, an edge being numbered when its smaller endpoint is reached.
pub fn build_graph(n: usize, rotation: &[Vec<usize>], roots: [usize; 3]) -> Result<EmbeddedPlanarGraph> {
    if n < 4 {
        return Err(Error::TooFewVertices(n));
    }
    if rotation.len() != n {
        return Err(Error::EulerViolation(format!(
            "expected {n} rotation lists, got {}",
            rotation.len()
        )));
    }
    let mut multiplicity: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, list) in rotation.iter().enumerate() {
        for &u in list {
            if u >= n {
                return Err(Error::EulerViolation(format!("vertex {v} lists unknown neighbor {u}")));
            }
            if u == v {
                return Err(Error::NonSimple(format!("loop at vertex {v}")));
            }
            *multiplicity.entry((v, u)).or_default() += 1;
        }
    }
    let mut keys: Vec<_> = multiplicity.keys().copied().collect();
    keys.sort_unstable();
    for (v, u) in keys {
        let here = multiplicity[&(v, u)];
        let there = multiplicity.get(&(u, v)).copied().unwrap_or(0);
        if here != there {
            return Err(Error::EulerViolation(format!(
                "vertex {v} lists {u} {here} time(s) but {u} lists {v} {there} time(s)"
            )));
        }
        if here > 1 {
            return Err(Error::NonSimple(format!("parallel edges between {v} and {u}")));
        }
    }

    let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut darts = vec![Vec::new(); n];
    for (v, list) in rotation.iter().enumerate() {
        for &u in list {
            let key = (v.min(u), v.max(u));
            let e = *edge_id.entry(key).or_insert_with(|| {
                edges.push([key.0, key.1]);
                edges.len() - 1
            });
            darts[v].push(if v < u { Dart(2 * e) } else { Dart(2 * e + 1) });
        }
    }
    EmbeddedPlanarGraph::from_darts(n, edges, darts, roots)
}

impl EmbeddedPlanarGraph {
    /// Builds a graph from explicit edges and dart rotations, then traces
    /// faces and validates connectivity, Euler's formula and the roots.
    pub fn from_darts(n: usize, edges: Vec<[usize; 2]>, rotation: Vec<Vec<Dart>>, roots: [usize; 3]) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooFewVertices(n));
        }
        let m = edges.len();
        let mut seen = HashMap::new();
        for (e, &[u, v]) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::NonSimple(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::EulerViolation(format!("edge {e} has an unknown endpoint")));
            }
            if let Some(prev) = seen.insert((u.min(v), u.max(v)), e) {
                return Err(Error::NonSimple(format!("edges {prev} and {e} are parallel")));
            }
        }
        let mut pos = vec![usize::MAX; 2 * m];
        for (v, list) in rotation.iter().enumerate() {
            for (i, &d) in list.iter().enumerate() {
                if d.0 >= 2 * m {
                    return Err(Error::EulerViolation(format!("unknown dart {d} at vertex {v}")));
                }
                let tail = if d.is_forward() {
                    edges[d.edge()][0]
                } else {
                    edges[d.edge()][1]
                };
                if tail != v || pos[d.0] != usize::MAX {
                    return Err(Error::EulerViolation(format!("dart {d} misplaced at vertex {v}")));
                }
                pos[d.0] = i;
            }
        }
        if let Some(d) = pos.iter().position(|&p| p == usize::MAX) {
            return Err(Error::EulerViolation(format!("dart d{d} missing from rotation")));
        }

        let mut graph = EmbeddedPlanarGraph {
            n,
            edges,
            rotation,
            pos,
            roots,
            faces: FaceDecomposition {
                faces: Vec::new(),
                outer_face: 0,
                dart_face: Vec::new(),
            },
        };
        if !graph.is_connected() {
            return Err(Error::EulerViolation("graph is disconnected".into()));
        }
        let (faces, dart_face) = graph.trace_face_cycles();
        let f = faces.len();
        if n + f != m + 2 {
            return Err(Error::EulerViolation(format!("n - m + f = {n} - {m} + {f} != 2")));
        }
        graph.faces.faces = faces;
        graph.faces.dart_face = dart_face;
        graph.faces.outer_face = graph.locate_outer_face(roots)?;
        Ok(graph)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in &self.rotation[v] {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    fn trace_face_cycles(&self) -> (Vec<Vec<Dart>>, Vec<usize>) {
        let mut dart_face = vec![usize::MAX; 2 * self.m()];
        let mut faces = Vec::new();
        for start in 0..2 * self.m() {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = Dart(start);
            while dart_face[d.0] == usize::MAX {
                dart_face[d.0] = id;
                cycle.push(d);
                d = self.face_next(d);
            }
            faces.push(cycle);
        }
        (faces, dart_face)
    }

    fn locate_outer_face(&self, roots: [usize; 3]) -> Result<usize> {
        if roots.iter().any(|&r| r >= self.n) || roots[0] == roots[1] || roots[1] == roots[2] || roots[0] == roots[2] {
            return Err(Error::RootsNotOnOuterFace(roots));
        }
        let mut on_some_face = false;
        for (id, cycle) in self.faces.faces.iter().enumerate() {
            let tails: Vec<usize> = cycle.iter().map(|&d| self.tail(d)).collect();
            let find = |r: usize| tails.iter().position(|&t| t == r);
            if let (Some(a), Some(b), Some(c)) = (find(roots[0]), find(roots[1]), find(roots[2])) {
                on_some_face = true;
                let len = tails.len();
                if (b + len - a) % len < (c + len - a) % len {
                    return Ok(id);
                }
            }
        }
        if on_some_face {
            Err(Error::RootsNotClockwise(roots))
        } else {
            Err(Error::RootsNotOnOuterFace(roots))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn roots(&self) -> [usize; 3] {
        self.roots
    }

    pub fn tail(&self, d: Dart) -> usize {
        let [u, v] = self.edges[d.edge()];
        if d.is_forward() {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(d.rev())
    }

    /// Clockwise rotation of darts leaving `v`.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn position(&self, d: Dart) -> usize {
        self.pos[d.0]
    }

    /// Next dart clockwise around the tail of `d`.
    pub fn cw_next(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.pos[d.0] + 1) % rot.len()]
    }

    pub fn ccw_next(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.pos[d.0] + rot.len() - 1) % rot.len()]
    }

    /// Successor of `d` on the face to its left.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.cw_next(d.rev())
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().map(move |&d| self.head(d))
    }

    /// The dart `u -> v`, if the edge exists.
    pub fn dart_between(&self, u: usize, v: usize) -> Option<Dart> {
        self.rotation[u].iter().copied().find(|&d| self.head(d) == v)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_between(u, v).map(Dart::edge)
    }

    pub fn faces(&self) -> &FaceDecomposition {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.faces.len()
    }

    pub fn outer_face(&self) -> usize {
        self.faces.outer_face
    }

    /// Face on the left of `d`.
    pub fn left_face(&self, d: Dart) -> usize {
        self.faces.dart_face[d.0]
    }

    pub fn right_face(&self, d: Dart) -> usize {
        self.faces.dart_face[d.rev().0]
    }

    /// Darts of the outer face in clockwise order, starting with the dart
    /// leaving the first root.
    pub fn outer_walk(&self) -> Vec<Dart> {
        let cycle = &self.faces.faces[self.faces.outer_face];
        let start = cycle
            .iter()
            .position(|&d| self.tail(d) == self.roots[0])
            .expect("first root lies on the outer face");
        cycle[start..].iter().chain(&cycle[..start]).copied().collect()
    }

    /// Vertices of the clockwise outer path from root `from` to root `to`
    /// (root indices 0..3), both ends included.
    pub fn outer_path(&self, from: usize, to: usize) -> Vec<usize> {
        let walk = self.outer_walk();
        let start = walk
            .iter()
            .position(|&d| self.tail(d) == self.roots[from])
            .expect("root lies on the outer face");
        let mut path = Vec::new();
        for k in 0..walk.len() {
            let d = walk[(start + k) % walk.len()];
            path.push(self.tail(d));
            if self.head(d) == self.roots[to] {
                path.push(self.roots[to]);
                break;
            }
        }
        path
    }

    /// Same embedding with a different root triple.
    pub fn with_roots(&self, roots: [usize; 3]) -> Result<Self> {
        let mut g = self.clone();
        g.roots = roots;
        g.faces.outer_face = g.locate_outer_face(roots)?;
        Ok(g)
    }

    /// Clockwise neighbor lists, the inverse of [`build_graph`].
    pub fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }
}

/// Face decomposition of a valid graph (already computed at construction).
pub fn trace_faces(g: &EmbeddedPlanarGraph) -> FaceDecomposition {
    g.faces.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn k4() -> EmbeddedPlanarGraph {
        build_graph(
            4,
            &[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            [0, 1, 2],
        )
        .unwrap()
    }

    #[test]
    fn k4_counts() {
        let g = k4();
        assert_eq!((g.n(), g.m(), g.face_count()), (4, 6, 4));
        assert!(g.faces().faces.iter().all(|f| f.len() == 3));
        assert_eq!(g.outer_path(1, 2), vec![1, 2]);
        assert_eq!(g.outer_path(0, 1), vec![0, 1]);
    }

    #[test]
    fn outer_face_is_clockwise_root_walk() {
        let g = k4();
        let tails: Vec<usize> = g.outer_walk().iter().map(|&d| g.tail(d)).collect();
        assert_eq!(tails, vec![0, 1, 2]);
    }

    #[test]
    fn counterclockwise_roots_rejected() {
        let err = k4().with_roots([0, 2, 1]).unwrap_err();
        assert!(matches!(err, Error::RootsNotClockwise(_)), "{err}");
    }

    #[test]
    fn roots_off_any_common_face() {
        let cube = corpus::cube();
        // 0 and 6 are antipodal in the cube
        let err = cube.with_roots([0, 6, 1]).unwrap_err();
        assert!(matches!(err, Error::RootsNotOnOuterFace(_)), "{err}");
    }

    #[test]
    fn duplicated_dart_is_euler_violation() {
        let err = build_graph(
            4,
            &[vec![1, 3, 2, 1], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            [0, 1, 2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::EulerViolation(_)), "{err}");
    }

    #[test]
    fn loops_and_parallels_are_non_simple() {
        let err = build_graph(
            4,
            &[vec![0, 1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            [0, 1, 2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonSimple(_)));
        let err = build_graph(
            4,
            &[vec![1, 3, 2, 1], vec![2, 0, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            [0, 1, 2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonSimple(_)));
    }

    #[test]
    fn non_planar_rotation_fails_euler() {
        // K4 with one rotation flipped has genus 1
        let err = build_graph(
            4,
            &[vec![1, 2, 3], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            [0, 1, 2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::EulerViolation(_)), "{err}");
    }

    #[test]
    fn too_small() {
        assert!(matches!(
            build_graph(3, &[vec![1, 2], vec![2, 0], vec![0, 1]], [0, 1, 2]),
            Err(Error::TooFewVertices(3))
        ));
    }

    #[test]
    fn platonic_face_counts() {
        let cube = corpus::cube();
        assert_eq!((cube.n(), cube.m(), cube.face_count()), (8, 12, 6));
        let ico = corpus::icosahedron();
        assert_eq!(ico.face_count(), 20);
        assert!(ico.faces().faces.iter().all(|f| f.len() == 3));
        let w6 = corpus::wheel(6).unwrap();
        assert_eq!(w6.face_count(), 7);
        let mut sizes: Vec<usize> = w6.faces().faces.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 3, 3, 3, 3, 6]);
        assert_eq!(w6.faces().faces[w6.outer_face()].len(), 6);
    }

    #[test]
    fn every_dart_in_exactly_one_face() {
        for (_, g) in corpus::base_corpus(7) {
            let faces = trace_faces(&g);
            let mut count = vec![0; 2 * g.m()];
            for cycle in &faces.faces {
                for d in cycle {
                    count[d.0] += 1;
                }
            }
            assert!(count.iter().all(|&c| c == 1));
            assert_eq!(g.n() + faces.len(), g.m() + 2);
        }
    }

    #[test]
    fn neighbor_lists_round_trip() {
        let g = corpus::dodecahedron();
        let again = build_graph(g.n(), &g.neighbor_lists(), g.roots()).unwrap();
        assert_eq!(again, g);
    }
}
