//! Generators for the test corpus: small polyhedra, wheels and seeded
//! stacked triangulations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::planar::{build_graph, check_three_connected, ordinary_dual, EmbeddedPlanarGraph};

pub const DEFAULT_SEED: u64 = 1;
pub const STACKED_COUNT: usize = 100;

/// Builds a plane graph from a straight-line drawing (y axis pointing up).
/// Rotations list neighbors by decreasing angle, i.e. clockwise.
pub fn from_coordinates(
    points: &[(f64, f64)],
    edges: &[(usize, usize)],
    roots: [usize; 3],
) -> Result<EmbeddedPlanarGraph> {
    let n = points.len();
    let mut lists = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::BadParams(format!("edge ({u}, {v}) out of range")));
        }
        lists[u].push(v);
        lists[v].push(u);
    }
    for (v, list) in lists.iter_mut().enumerate() {
        let (x, y) = points[v];
        let angle = |u: &usize| (points[*u].1 - y).atan2(points[*u].0 - x);
        list.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
    }
    build_graph(n, &lists, roots)
}

fn polar(r: f64, degrees: f64) -> (f64, f64) {
    let t = degrees.to_radians();
    (r * t.cos(), r * t.sin())
}

fn cycle(range: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let k = range.len();
    range
        .clone()
        .map(|i| (i, range.start + (i - range.start + 1) % k))
        .collect()
}

/// K4 as a triangle 0, 1, 2 around the center vertex 3; roots 0, 1, 2.
pub fn k4() -> EmbeddedPlanarGraph {
    build_graph(
        4,
        &[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        [0, 1, 2],
    )
    .expect("valid K4")
}

/// Wheel with `k` rim vertices `0..k` (clockwise) and hub `k`.
pub fn wheel(k: usize) -> Result<EmbeddedPlanarGraph> {
    if k < 3 {
        return Err(Error::BadParams(format!(
            "wheel needs at least 3 rim vertices, got {k}"
        )));
    }
    let mut points: Vec<(f64, f64)> = (0..k).map(|j| polar(2.0, 90.0 - 360.0 * j as f64 / k as f64)).collect();
    points.push((0.0, 0.0));
    let mut edges = cycle(0..k);
    edges.extend((0..k).map(|j| (j, k)));
    from_coordinates(&points, &edges, [0, k / 3, 2 * k / 3])
}

/// Triangular prism: outer triangle 0, 1, 2 and inner triangle 3, 4, 5.
pub fn prism() -> EmbeddedPlanarGraph {
    let angles = [90.0, -30.0, 210.0];
    let mut points: Vec<(f64, f64)> = angles.iter().map(|&a| polar(2.0, a)).collect();
    points.extend(angles.iter().map(|&a| polar(1.0, a)));
    let mut edges = cycle(0..3);
    edges.extend(cycle(3..6));
    edges.extend((0..3).map(|i| (i, i + 3)));
    from_coordinates(&points, &edges, [0, 1, 2]).expect("valid drawing")
}

/// Cube: outer square 0..4 clockwise from the top left, inner square 4..8.
pub fn cube() -> EmbeddedPlanarGraph {
    let angles = [135.0, 45.0, -45.0, -135.0];
    let mut points: Vec<(f64, f64)> = angles.iter().map(|&a| polar(2.0, a)).collect();
    points.extend(angles.iter().map(|&a| polar(1.0, a)));
    let mut edges = cycle(0..4);
    edges.extend(cycle(4..8));
    edges.extend((0..4).map(|i| (i, i + 4)));
    from_coordinates(&points, &edges, [0, 1, 2]).expect("valid drawing")
}

pub fn octahedron() -> EmbeddedPlanarGraph {
    let mut points: Vec<(f64, f64)> = [90.0, -30.0, 210.0].iter().map(|&a| polar(3.0, a)).collect();
    points.extend([30.0, 150.0, 270.0].iter().map(|&a| polar(1.0, a)));
    let mut edges = cycle(0..3);
    edges.extend(cycle(3..6));
    edges.extend([(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)]);
    from_coordinates(&points, &edges, [0, 1, 2]).expect("valid drawing")
}

/// Triangular bipyramid with poles 0 and 4 around the equator 1, 2, 3.
pub fn bipyramid() -> EmbeddedPlanarGraph {
    let points = [(0.0, 3.0), (2.6, -1.5), (-2.6, -1.5), (0.0, 1.0), (0.0, -0.5)];
    let edges = [(1, 2), (2, 3), (3, 1), (0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)];
    from_coordinates(&points, &edges, [0, 1, 2]).expect("valid drawing")
}

/// Dodecahedron: outer pentagon 0..5, middle ring 5..15, inner pentagon 15..20.
pub fn dodecahedron() -> EmbeddedPlanarGraph {
    let mut points: Vec<(f64, f64)> = (0..5).map(|k| polar(3.0, 90.0 - 72.0 * k as f64)).collect();
    points.extend((0..10).map(|j| polar(2.0, 90.0 - 36.0 * j as f64)));
    points.extend((0..5).map(|k| polar(1.0, 54.0 - 72.0 * k as f64)));
    let mut edges = cycle(0..5);
    edges.extend(cycle(5..15));
    edges.extend(cycle(15..20));
    edges.extend((0..5).map(|k| (k, 5 + 2 * k)));
    edges.extend((0..5).map(|k| (15 + k, 6 + 2 * k)));
    from_coordinates(&points, &edges, [0, 2, 3]).expect("valid drawing")
}

/// Icosahedron: outer triangle 0..3, hexagon 3..9, inner triangle 9..12.
pub fn icosahedron() -> EmbeddedPlanarGraph {
    let hex = |j: usize| 3 + j % 6;
    let mut points: Vec<(f64, f64)> = (0..3).map(|k| polar(5.0, 90.0 - 120.0 * k as f64)).collect();
    points.extend((0..6).map(|j| polar(2.0, 90.0 - 60.0 * j as f64)));
    points.extend((0..3).map(|k| polar(1.0, 30.0 - 120.0 * k as f64)));
    let mut edges = cycle(0..3);
    edges.extend(cycle(3..9));
    edges.extend(cycle(9..12));
    for k in 0..3 {
        edges.extend([(k, hex(2 * k + 5)), (k, hex(2 * k)), (k, hex(2 * k + 1))]);
        edges.extend([(9 + k, hex(2 * k)), (9 + k, hex(2 * k + 1)), (9 + k, hex(2 * k + 2))]);
    }
    from_coordinates(&points, &edges, [0, 1, 2]).expect("valid drawing")
}

/// Stacked triangulation on `n` vertices: starting from K4, each new vertex
/// goes into a uniformly chosen bounded face.
pub fn stacked(n: usize, seed: u64) -> Result<EmbeddedPlanarGraph> {
    if n < 4 {
        return Err(Error::BadParams(format!("stacked triangulation needs n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = k4();
    while g.n() < n {
        let inner: Vec<usize> = (0..g.face_count()).filter(|&f| f != g.outer_face()).collect();
        let face = &g.faces().faces[inner[rng.gen_range(0..inner.len())]];
        let [a, b, c] = [g.tail(face[0]), g.tail(face[1]), g.tail(face[2])];
        let w = g.n();
        let mut lists = g.neighbor_lists();
        for (at, after) in [(a, c), (b, a), (c, b)] {
            let p = lists[at].iter().position(|&u| u == after).expect("face edge");
            lists[at].insert(p + 1, w);
        }
        lists.push(vec![a, c, b]);
        g = build_graph(w + 1, &lists, g.roots())?;
    }
    Ok(g)
}

/// Two copies of K4 glued along the edge 0-1; the glued edge is a 2-cut.
pub fn two_k4_sharing_edge() -> EmbeddedPlanarGraph {
    let points = [
        (0.0, 2.0),
        (0.0, -2.0),
        (-3.0, 0.0),
        (-1.0, 0.0),
        (3.0, 0.0),
        (1.0, 0.0),
    ];
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (0, 5),
        (1, 4),
        (1, 5),
        (4, 5),
    ];
    from_coordinates(&points, &edges, [0, 4, 1]).expect("valid drawing")
}

/// Builds a generator by name, as used by the command line.
pub fn generate(kind: &str, n: Option<usize>, seed: u64) -> Result<EmbeddedPlanarGraph> {
    let need = |what: &str| n.ok_or_else(|| Error::BadParams(format!("{what} needs a size parameter")));
    match kind {
        "k4" => Ok(k4()),
        "wheel" => wheel(need("wheel")?),
        "prism" => Ok(prism()),
        "cube" => Ok(cube()),
        "octahedron" => Ok(octahedron()),
        "dodecahedron" => Ok(dodecahedron()),
        "icosahedron" => Ok(icosahedron()),
        "stacked" => stacked(need("stacked")?, seed),
        other => Err(Error::BadParams(format!("unknown graph kind {other:?}"))),
    }
}

/// The named base graphs: K4, wheels W4..W10, prism, cube, dodecahedron,
/// icosahedron and 100 stacked triangulations with 5..=50 vertices.
pub fn base_corpus(seed: u64) -> Vec<(String, EmbeddedPlanarGraph)> {
    let mut out = vec![("k4".to_string(), k4())];
    for k in 4..=10 {
        out.push((format!("wheel{k:02}"), wheel(k).expect("k >= 3")));
    }
    out.push(("prism".into(), prism()));
    out.push(("cube".into(), cube()));
    out.push(("dodecahedron".into(), dodecahedron()));
    out.push(("icosahedron".into(), icosahedron()));
    for k in 0..STACKED_COUNT {
        let n = 5 + k % 46;
        let g = stacked(n, seed.wrapping_add(k as u64)).expect("n >= 4");
        out.push((format!("stacked{k:03}"), g));
    }
    out
}

/// Base graphs followed by their duals (kept when simple and 3-connected).
pub fn full_corpus(seed: u64) -> Vec<(String, EmbeddedPlanarGraph)> {
    let base = base_corpus(seed);
    let mut duals = Vec::new();
    for (name, g) in &base {
        if let Ok(d) = ordinary_dual(g) {
            if check_three_connected(&d) {
                duals.push((format!("{name}-dual"), d));
            }
        }
    }
    let mut out = base;
    out.extend(duals);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_matches_reference_rotation() {
        assert_eq!(
            k4().neighbor_lists(),
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]
        );
    }

    #[test]
    fn sizes() {
        let w = wheel(6).unwrap();
        assert_eq!((w.n(), w.m()), (7, 12));
        assert!(matches!(wheel(2), Err(Error::BadParams(_))));
        assert_eq!((prism().n(), prism().m()), (6, 9));
        assert_eq!((octahedron().n(), octahedron().m()), (6, 12));
        assert_eq!((bipyramid().n(), bipyramid().m()), (5, 9));
        assert_eq!((dodecahedron().n(), dodecahedron().m()), (20, 30));
        assert_eq!((icosahedron().n(), icosahedron().m()), (12, 30));
        assert_eq!(icosahedron().max_degree(), 5);
    }

    #[test]
    fn stacked_is_triangulation_and_seeded() {
        let g = stacked(10, 1).unwrap();
        assert_eq!((g.n(), g.m()), (10, 24));
        assert!(check_three_connected(&g));
        assert_eq!(g, stacked(10, 1).unwrap());
        assert!(matches!(stacked(3, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn corpus_is_three_connected() {
        let corpus = full_corpus(DEFAULT_SEED);
        assert_eq!(corpus.len(), 2 * (12 + STACKED_COUNT));
        for (name, g) in &corpus {
            assert!(check_three_connected(g), "{name}");
        }
    }
}
