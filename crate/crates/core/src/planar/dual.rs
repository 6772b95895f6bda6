//! Suspended dual `G^{σ*}` and the ordinary dual `G*`.
//!
//! Numbering: dual edge `e` (for `e < m`) crosses primal edge `e`, and dual
//! dart `2e + s` runs from the face on the left of primal dart `2e + s` to
//! the face on its right. Edge `m + i` is the triangle edge between the two
//! outer-face vertices adjacent to the ray through root `i`; its dart
//! `2(m + i)` crosses that ray from left to right.

use super::{suspend, Dart, EmbeddedPlanarGraph, Suspension};
use crate::error::{Error, Result};

/// Bijection between primal edge ids and dual edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCorrespondence {
    primal_to_dual: Vec<usize>,
    dual_to_primal: Vec<usize>,
}

impl DualCorrespondence {
    fn identity(m: usize) -> Self {
        Self {
            primal_to_dual: (0..m).collect(),
            dual_to_primal: (0..m).collect(),
        }
    }

    pub fn dual_edge(&self, e: usize) -> usize {
        self.primal_to_dual[e]
    }

    pub fn primal_edge(&self, e: usize) -> usize {
        self.dual_to_primal[e]
    }

    pub fn len(&self) -> usize {
        self.primal_to_dual.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primal_to_dual.is_empty()
    }
}

/// The suspended dual together with its relation to the primal suspension.
#[derive(Debug, Clone)]
pub struct SuspendedDual {
    /// `G^{σ*}`, suspended at `b_1, b_2, b_3`.
    pub suspension: Suspension,
    /// Dual vertex of each primal face; `None` for the outer face.
    pub face_vertex: Vec<Option<usize>>,
    /// Primal face of each dual vertex; `None` for the three `b` vertices.
    pub vertex_face: Vec<Option<usize>>,
    pub b: [usize; 3],
    /// Number of primal edges.
    pub primal_m: usize,
    pub correspondence: DualCorrespondence,
}

impl SuspendedDual {
    pub fn graph(&self) -> &EmbeddedPlanarGraph {
        self.suspension.base()
    }

    /// Dual dart crossing the primal dart `d` (half-edges included) from its
    /// left to its right.
    pub fn dual_dart(&self, d: Dart) -> Dart {
        let m = self.primal_m;
        if d.0 < 2 * m {
            d
        } else {
            Dart(2 * (m + (d.0 - 2 * m)))
        }
    }

    /// Primal dart crossing the dual dart `q` from its left to its right.
    /// `None` for the dual half-edges and for the inward direction of a
    /// primal half-edge, which does not exist.
    pub fn primal_dart(&self, q: Dart) -> Option<Dart> {
        let m = self.primal_m;
        if q.0 < 2 * m {
            Some(q.rev())
        } else if q.0 < 2 * (m + 3) {
            let i = q.edge() - m;
            (!q.is_forward()).then_some(Dart(2 * m + i))
        } else {
            None
        }
    }
}

/// Builds `G^{σ*}`: one vertex per bounded face, the outer-face vertex split
/// into `b_1, b_2, b_3` (with `b_i` not incident to `r_i`), and a half-edge at
/// each `b_i`.
pub fn suspended_dual(gs: &Suspension) -> Result<SuspendedDual> {
    let g = gs.base();
    let m = g.m();
    let faces = g.faces();
    let outer = faces.outer_face;
    let roots = g.roots();

    let mut face_vertex = vec![None; faces.len()];
    let mut vertex_face = Vec::new();
    for (f, slot) in face_vertex.iter_mut().enumerate() {
        if f != outer {
            *slot = Some(vertex_face.len());
            vertex_face.push(Some(f));
        }
    }
    let first_b = vertex_face.len();
    let b = [first_b, first_b + 1, first_b + 2];
    vertex_face.extend([None, None, None]);
    let n_dual = vertex_face.len();

    // outer darts of the arc from root j to root j+1 belong to b_{j+2}
    let walk = g.outer_walk();
    let mut arcs: [Vec<Dart>; 3] = Default::default();
    let mut arc = 0;
    for &d in &walk {
        let t = g.tail(d);
        if arc < 2 && t == roots[arc + 1] {
            arc += 1;
        }
        arcs[(arc + 2) % 3].push(d);
    }
    let mut outer_vertex = vec![usize::MAX; 2 * m];
    for (j, list) in arcs.iter().enumerate() {
        for d in list {
            outer_vertex[d.0] = b[j];
        }
    }
    let vertex_of = |d: Dart| -> usize {
        let f = g.left_face(d);
        face_vertex[f].unwrap_or(outer_vertex[d.0])
    };

    let mut edges = Vec::with_capacity(m + 3);
    for e in 0..m {
        edges.push([vertex_of(Dart(2 * e)), vertex_of(Dart(2 * e + 1))]);
    }
    for i in 0..3 {
        edges.push([b[(i + 1) % 3], b[(i + 2) % 3]]);
    }

    let mut rotation = vec![Vec::new(); n_dual];
    for (f, cycle) in faces.faces.iter().enumerate() {
        if let Some(x) = face_vertex[f] {
            rotation[x] = cycle.iter().rev().copied().collect();
        }
    }
    for j in 0..3 {
        let to_next = Dart(2 * (m + (j + 2) % 3));
        let to_after = Dart(2 * (m + (j + 1) % 3) + 1);
        let mut rot = vec![to_after, to_next];
        rot.extend(arcs[j].iter().rev());
        rotation[b[j]] = rot;
    }

    let graph = EmbeddedPlanarGraph::from_darts(n_dual, edges, rotation, b)?;
    let suspension = suspend(&graph)?;
    Ok(SuspendedDual {
        suspension,
        face_vertex,
        vertex_face,
        b,
        primal_m: m,
        correspondence: DualCorrespondence::identity(m),
    })
}

/// Merges `b_1, b_2, b_3` into one vertex `x`, dropping the triangle edges
/// and half-edges. The result is the ordinary dual `G*` with edge ids equal
/// to primal edge ids. Its roots are `x` followed by the next two vertices
/// on the face to the left of `x`'s first dart.
pub fn identify_roots(sd: &SuspendedDual) -> Result<(EmbeddedPlanarGraph, DualCorrespondence)> {
    let gd = sd.graph();
    let m = sd.primal_m;
    let x = sd.b[0];
    let n = gd.n() - 2;
    let remap = |v: usize| if sd.b.contains(&v) { x } else { v };

    let edges: Vec<[usize; 2]> = (0..m).map(|e| gd.edge(e).map(remap)).collect();
    let mut rotation: Vec<Vec<Dart>> = (0..n).map(|v| gd.rotation(v).to_vec()).collect();
    let mut merged = Vec::new();
    for j in [0, 2, 1] {
        let rot = gd.rotation(sd.b[j]);
        let to_next = Dart(2 * (m + (j + 2) % 3));
        let start = rot
            .iter()
            .position(|&d| d == to_next)
            .ok_or_else(|| Error::InconsistentInputs("suspended dual lacks its triangle".into()))?;
        for k in 1..=rot.len() {
            let d = rot[(start + k) % rot.len()];
            if d.0 < 2 * m {
                merged.push(d);
            }
        }
    }
    rotation[x] = merged;

    // roots: x and the next two vertices on the face left of x's first dart
    let first = rotation[x][0];
    let head = |d: Dart| edges[d.edge()][usize::from(d.is_forward())];
    let a = head(first);
    let p = rotation[a]
        .iter()
        .position(|&d| d == first.rev())
        .expect("reverse dart present");
    let after = rotation[a][(p + 1) % rotation[a].len()];
    let roots = [x, a, head(after)];
    let g = EmbeddedPlanarGraph::from_darts(n, edges, rotation, roots)?;
    Ok((g, sd.correspondence.clone()))
}

/// Ordinary dual of a rooted plane graph, via suspension, suspended dual and
/// root identification.
pub fn ordinary_dual(g: &EmbeddedPlanarGraph) -> Result<EmbeddedPlanarGraph> {
    let sd = suspended_dual(&suspend(g)?)?;
    Ok(identify_roots(&sd)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::planar::canonical_code;

    #[test]
    fn k4_suspended_dual_sizes() {
        let sd = suspended_dual(&suspend(&corpus::k4()).unwrap()).unwrap();
        let gd = sd.graph();
        assert_eq!((gd.n(), gd.m(), gd.face_count()), (6, 9, 5));
        // the triangle b1 b2 b3 bounds the outer face
        assert_eq!(gd.faces().faces[gd.outer_face()].len(), 3);
    }

    #[test]
    fn cube_suspended_dual_sizes() {
        let sd = suspended_dual(&suspend(&corpus::cube()).unwrap()).unwrap();
        assert_eq!(sd.graph().n(), 5 + 3);
        assert_eq!(sd.graph().m(), 12 + 3);
    }

    #[test]
    fn b_vertex_avoids_its_root() {
        for (_, g) in corpus::base_corpus(3) {
            let gs = suspend(&g).unwrap();
            let sd = suspended_dual(&gs).unwrap();
            let gd = sd.graph();
            for i in 0..3 {
                let r = g.roots()[i];
                // no primal edge at r_i is crossed by a dual edge at b_i
                for &d in g.rotation(r) {
                    let [p, q] = gd.edge(d.edge());
                    assert!(p != sd.b[i] && q != sd.b[i]);
                }
                // the ray at r_i crosses the triangle edge b_{i-1} b_{i+1}
                let [p, q] = gd.edge(g.m() + i);
                assert_eq!([p, q], [sd.b[(i + 1) % 3], sd.b[(i + 2) % 3]]);
            }
        }
    }

    #[test]
    fn dual_half_edges_sit_between_triangle_darts() {
        let sd = suspended_dual(&suspend(&corpus::dodecahedron()).unwrap()).unwrap();
        let s = &sd.suspension;
        let m = sd.primal_m;
        for j in 0..3 {
            let h = s.half(j);
            assert_eq!(s.ccw_next(h), Dart(2 * (m + (j + 1) % 3) + 1));
            assert_eq!(s.cw_next(h), Dart(2 * (m + (j + 2) % 3)));
        }
    }

    #[test]
    fn dart_crossing_is_consistent() {
        let sd = suspended_dual(&suspend(&corpus::cube()).unwrap()).unwrap();
        let g = corpus::cube();
        for d in 0..2 * g.m() {
            let d = Dart(d);
            let q = sd.dual_dart(d);
            assert_eq!(sd.primal_dart(q), Some(d.rev()));
            assert_eq!(sd.primal_dart(q.rev()), Some(d));
            // the dual dart leaves the left face of d
            let tail = sd.graph().tail(q);
            assert_eq!(
                sd.vertex_face[tail],
                Some(g.left_face(d)).filter(|&f| f != g.outer_face())
            );
        }
    }

    #[test]
    fn platonic_duals() {
        let cases = [
            (corpus::k4(), corpus::k4()),
            (corpus::cube(), corpus::octahedron()),
            (corpus::dodecahedron(), corpus::icosahedron()),
            (corpus::prism(), corpus::bipyramid()),
        ];
        for (g, expected) in cases {
            let d = ordinary_dual(&g).unwrap();
            assert_eq!(d.m(), g.m());
            assert_eq!(d.n(), g.face_count());
            assert_eq!(canonical_code(&d), canonical_code(&expected));
        }
    }

    #[test]
    fn double_dual_is_isomorphic() {
        for (_, g) in corpus::base_corpus(11) {
            let dd = ordinary_dual(&ordinary_dual(&g).unwrap()).unwrap();
            assert_eq!(canonical_code(&dd), canonical_code(&g));
        }
    }

    #[test]
    fn identified_dual_of_k4_is_k4() {
        let sd = suspended_dual(&suspend(&corpus::k4()).unwrap()).unwrap();
        let (d, corr) = identify_roots(&sd).unwrap();
        assert_eq!((d.n(), d.m()), (4, 6));
        for e in 0..6 {
            assert_eq!(corr.primal_edge(corr.dual_edge(e)), e);
        }
    }
}
