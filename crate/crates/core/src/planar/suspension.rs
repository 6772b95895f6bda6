use super::{Dart, EmbeddedPlanarGraph};
use crate::error::{Error, Result};

/// A plane graph with one outgoing half-edge at each root, pointing into the
/// outer face. The half-edge at root `i` is `Dart(2m + i)`; it has no head
/// and no reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suspension {
    base: EmbeddedPlanarGraph,
    rotation: Vec<Vec<Dart>>,
    pos: Vec<usize>,
}

/// Adds the three half-edges. Each is inserted into its root's rotation
/// inside the outer-face angle, i.e. right after the outer boundary dart
/// that arrives at the root (seen from the root).
pub fn suspend(g: &EmbeddedPlanarGraph) -> Result<Suspension> {
    let m = g.m();
    let mut rotation: Vec<Vec<Dart>> = g.rotations().to_vec();
    let walk = g.outer_walk();
    for (i, &r) in g.roots().iter().enumerate() {
        // the outer walk leaves r with `out`; the angle sits between the
        // reverse of the arriving dart and `out`
        let Some(k) = walk.iter().position(|&d| g.tail(d) == r) else {
            return Err(Error::RootsNotOnOuterFace(g.roots()));
        };
        let arriving = walk[(k + walk.len() - 1) % walk.len()];
        let back = arriving.rev();
        let at = g.position(back);
        rotation[r].insert(at + 1, Dart(2 * m + i));
    }
    let mut pos = vec![0; 2 * m + 3];
    for list in &rotation {
        for (i, d) in list.iter().enumerate() {
            pos[d.0] = i;
        }
    }
    Ok(Suspension {
        base: g.clone(),
        rotation,
        pos,
    })
}

impl Suspension {
    pub fn base(&self) -> &EmbeddedPlanarGraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn m(&self) -> usize {
        self.base.m()
    }

    pub fn roots(&self) -> [usize; 3] {
        self.base.roots()
    }

    /// Total number of darts: two per edge plus the three half-edges.
    pub fn dart_count(&self) -> usize {
        2 * self.m() + 3
    }

    pub fn half(&self, i: usize) -> Dart {
        Dart(2 * self.m() + i)
    }

    /// Root index of a half-edge dart.
    pub fn half_index(&self, d: Dart) -> Option<usize> {
        d.0.checked_sub(2 * self.m()).filter(|&i| i < 3)
    }

    pub fn is_half(&self, d: Dart) -> bool {
        d.0 >= 2 * self.m()
    }

    pub fn tail(&self, d: Dart) -> usize {
        match self.half_index(d) {
            Some(i) => self.roots()[i],
            None => self.base.tail(d),
        }
    }

    pub fn head(&self, d: Dart) -> Option<usize> {
        if self.is_half(d) {
            None
        } else {
            Some(self.base.head(d))
        }
    }

    pub fn rev(&self, d: Dart) -> Option<Dart> {
        if self.is_half(d) {
            None
        } else {
            Some(d.rev())
        }
    }

    /// Clockwise rotation at `v`, half-edges included.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn position(&self, d: Dart) -> usize {
        self.pos[d.0]
    }

    pub fn cw_next(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.pos[d.0] + 1) % rot.len()]
    }

    pub fn ccw_next(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.pos[d.0] + rot.len() - 1) % rot.len()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn dart_counts() {
        let s = suspend(&corpus::k4()).unwrap();
        assert_eq!(s.dart_count(), 15);
        let total: usize = (0..s.n()).map(|v| s.rotation(v).len()).sum();
        assert_eq!(total, 15);
        let s = suspend(&corpus::cube()).unwrap();
        assert_eq!(s.dart_count(), 27);
    }

    #[test]
    fn half_edges_sit_in_outer_angle() {
        let g = corpus::k4();
        let s = suspend(&g).unwrap();
        for i in 0..3 {
            let h = s.half(i);
            assert_eq!(s.tail(h), g.roots()[i]);
            assert_eq!(s.head(h), None);
            // the darts around the half-edge are consecutive on the outer face
            let before = s.ccw_next(h);
            let after = s.cw_next(h);
            assert_eq!(g.face_next(before.rev()), after);
            assert_eq!(g.left_face(after), g.outer_face());
        }
    }

    #[test]
    fn one_half_edge_per_root() {
        let s = suspend(&corpus::icosahedron()).unwrap();
        for v in 0..s.n() {
            let halves = s.rotation(v).iter().filter(|&&d| s.is_half(d)).count();
            let expected = usize::from(s.roots().contains(&v));
            assert_eq!(halves, expected);
        }
    }
}
