//! Schnyder woods of suspensions: construction, validation and color trees.

mod shelling;
mod validate;

use crate::color::Color;
use crate::error::{Error, Result};
use crate::planar::{check_three_connected, Dart, EmbeddedPlanarGraph, Suspension};

pub(crate) use shelling::contour_walk;
pub use shelling::{shelling_order, Shelling};
pub use validate::validate_wood;

/// Orientation of an edge in a wood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// One colored direction, along the given dart.
    Uni(Dart),
    Bi,
    /// Neither direction colored; never present in a valid wood.
    Uncolored,
}

/// Orientation and coloring of a suspension. Each dart (half-edges
/// included) carries the color of the direction it points in, or `None`
/// when the edge is not oriented that way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchnyderWood {
    host: Suspension,
    colors: Vec<Option<Color>>,
}

impl SchnyderWood {
    pub fn from_colors(host: Suspension, colors: Vec<Option<Color>>) -> Result<Self> {
        if colors.len() != host.dart_count() {
            return Err(Error::InconsistentInputs(format!(
                "{} dart colors for {} darts",
                colors.len(),
                host.dart_count()
            )));
        }
        Ok(Self { host, colors })
    }

    pub fn host(&self) -> &Suspension {
        &self.host
    }

    pub fn graph(&self) -> &EmbeddedPlanarGraph {
        self.host.base()
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Color of the direction along `d`.
    pub fn color(&self, d: Dart) -> Option<Color> {
        self.colors[d.0]
    }

    pub fn set_color(&mut self, d: Dart, c: Option<Color>) {
        self.colors[d.0] = c;
    }

    /// Color of the direction pointing into the tail of `d`.
    pub fn incoming(&self, d: Dart) -> Option<Color> {
        self.host.rev(d).and_then(|r| self.colors[r.0])
    }

    pub fn kind(&self, e: usize) -> EdgeKind {
        let (a, b) = (Dart(2 * e), Dart(2 * e + 1));
        match (self.color(a), self.color(b)) {
            (Some(_), Some(_)) => EdgeKind::Bi,
            (Some(_), None) => EdgeKind::Uni(a),
            (None, Some(_)) => EdgeKind::Uni(b),
            (None, None) => EdgeKind::Uncolored,
        }
    }

    pub fn is_bidirected(&self, e: usize) -> bool {
        self.kind(e) == EdgeKind::Bi
    }

    /// Whether `e` is bidirected with the two colors `a` and `b`.
    pub fn is_colored_pair(&self, e: usize, a: Color, b: Color) -> bool {
        match (self.color(Dart(2 * e)), self.color(Dart(2 * e + 1))) {
            (Some(x), Some(y)) => (x, y) == (a, b) || (x, y) == (b, a),
            _ => false,
        }
    }

    /// Whether some direction of `e` has color `c`.
    pub fn has_color(&self, e: usize, c: Color) -> bool {
        self.color(Dart(2 * e)) == Some(c) || self.color(Dart(2 * e + 1)) == Some(c)
    }

    /// The outgoing dart of color `c` at `v`, half-edges included.
    pub fn outgoing(&self, v: usize, c: Color) -> Option<Dart> {
        self.host
            .rotation(v)
            .iter()
            .copied()
            .find(|&d| self.colors[d.0] == Some(c))
    }
}

/// Computes a Schnyder wood from a shelling of the graph (see
/// [`shelling_order`]). The result is deterministic.
pub fn compute_wood(gs: &Suspension) -> Result<SchnyderWood> {
    let g = gs.base();
    if !check_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    let shelling = shelling_order(g)?;
    wood_from_shelling(gs, &shelling)
}

/// Colors a suspension from a shelling: paths are green-blue, each path end
/// points into the contour it was placed on (blue to the left, green to the
/// right), and every other direction up to the latest neighbor is red.
fn wood_from_shelling(gs: &Suspension, shelling: &Shelling) -> Result<SchnyderWood> {
    let g = gs.base();
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    for (i, p) in shelling.paths.iter().enumerate() {
        for &v in p {
            index[v] = i;
        }
    }
    let mut colors = vec![None; gs.dart_count()];
    let dart = |u: usize, v: usize| g.dart_between(u, v).expect("shelling edge exists");

    for w in shelling.paths[0].windows(2) {
        colors[dart(w[0], w[1]).0] = Some(Color::Blue);
        colors[dart(w[1], w[0]).0] = Some(Color::Green);
    }
    for (p, &(left, right)) in shelling.paths.iter().zip(&shelling.attachments).skip(1) {
        for w in p.windows(2) {
            colors[dart(w[0], w[1]).0] = Some(Color::Green);
            colors[dart(w[1], w[0]).0] = Some(Color::Blue);
        }
        colors[dart(p[0], left).0] = Some(Color::Blue);
        colors[dart(p[p.len() - 1], right).0] = Some(Color::Green);
    }
    let roots = g.roots();
    for v in (0..n).filter(|&v| v != roots[0]) {
        let up = g
            .rotation(v)
            .iter()
            .copied()
            .filter(|&d| index[g.head(d)] > index[v])
            .max_by_key(|&d| index[g.head(d)])
            .ok_or_else(|| Error::InconsistentInputs(format!("vertex {v} has no later neighbor")))?;
        colors[up.0] = Some(Color::Red);
    }
    for i in 0..3 {
        colors[gs.half(i).0] = Some(Color::from_index(i));
    }
    SchnyderWood::from_colors(gs.clone(), colors)
}

/// A color tree `T_i`: every vertex except the root points to the head of
/// its outgoing `i`-colored edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorTree {
    pub color: Color,
    pub root: usize,
    /// `(edge, head)` of each vertex's outgoing edge; `None` at the root.
    pub parent: Vec<Option<(usize, usize)>>,
}

impl ColorTree {
    pub fn edges(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.parent.iter().flatten().map(|&(e, _)| e).collect();
        out.sort_unstable();
        out
    }

    /// Vertices from `v` to the root, or `None` if the parent pointers
    /// loop or break off.
    pub fn path_to_root(&self, v: usize) -> Option<Vec<usize>> {
        let mut path = vec![v];
        let mut cur = v;
        while cur != self.root {
            let (_, next) = self.parent[cur]?;
            path.push(next);
            cur = next;
            if path.len() > self.parent.len() {
                return None;
            }
        }
        Some(path)
    }
}

pub fn color_tree(s: &SchnyderWood, c: Color) -> ColorTree {
    let gs = s.host();
    let root = gs.roots()[c.index()];
    let parent = (0..gs.n())
        .map(|v| {
            let d = s.outgoing(v, c)?;
            gs.head(d).map(|h| (d.edge(), h))
        })
        .collect();
    ColorTree { color: c, root, parent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::planar::suspend;

    fn k4_wood() -> SchnyderWood {
        compute_wood(&suspend(&corpus::k4()).unwrap()).unwrap()
    }

    #[test]
    fn k4_wood_matches_unique_wood() {
        // roots 0, 1, 2 and inner vertex 3
        let s = k4_wood();
        let g = s.graph();
        let col = |u: usize, v: usize| s.color(g.dart_between(u, v).unwrap());
        assert_eq!(col(2, 0), Some(Color::Red));
        assert_eq!(col(0, 2), Some(Color::Blue));
        assert_eq!(col(0, 1), Some(Color::Green));
        assert_eq!(col(1, 0), Some(Color::Red));
        assert_eq!(col(2, 1), Some(Color::Green));
        assert_eq!(col(1, 2), Some(Color::Blue));
        assert_eq!(col(3, 0), Some(Color::Red));
        assert_eq!(col(3, 1), Some(Color::Green));
        assert_eq!(col(3, 2), Some(Color::Blue));
        for r in 0..3 {
            assert_eq!(col(r, 3), None);
        }
    }

    #[test]
    fn k4_red_tree() {
        let t = color_tree(&k4_wood(), Color::Red);
        assert_eq!(t.root, 0);
        let heads: Vec<Option<usize>> = t.parent.iter().map(|p| p.map(|(_, h)| h)).collect();
        assert_eq!(heads, vec![None, Some(0), Some(0), Some(0)]);
    }

    #[test]
    fn cube_trees_span() {
        let s = compute_wood(&suspend(&corpus::cube()).unwrap()).unwrap();
        for c in Color::ALL {
            let t = color_tree(&s, c);
            assert_eq!(t.edges().len(), 7);
            for v in 0..8 {
                let path = t.path_to_root(v).unwrap();
                assert!(path.len() <= 8);
            }
        }
    }

    #[test]
    fn two_cut_rejected() {
        let err = compute_wood(&suspend(&corpus::two_k4_sharing_edge()).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotThreeConnected));
    }
}
