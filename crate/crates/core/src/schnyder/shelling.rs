//! Reverse shelling of a 3-connected plane graph into an ordered path
//! partition with base pair `(r_2, r_3)`.
//!
//! Starting from the whole graph, paths are peeled off the upper contour
//! (the clockwise outer walk from `r_3` to `r_2`) until only the outer path
//! from `r_2` to `r_3` remains. The first path removed is `{r_1}`.

use crate::error::{Error, Result};
use crate::planar::{Dart, EmbeddedPlanarGraph};

/// Search budget for backtracking; only pathological inputs come near it.
const MAX_STEPS: usize = 1_000_000;

/// Paths in partition order. `paths[0]` is the outer path `r_2 .. r_3`; every
/// later path is listed from its `r_3` side to its `r_2` side, and
/// `attachments[i]` holds its left and right contour neighbors at the time
/// it was placed (`attachments[0]` is unused).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shelling {
    pub paths: Vec<Vec<usize>>,
    pub attachments: Vec<(usize, usize)>,
}

struct State<'a> {
    g: &'a EmbeddedPlanarGraph,
    p0: Vec<usize>,
    in_p0: Vec<bool>,
    alive: Vec<bool>,
    alive_count: usize,
    removed: Vec<(Vec<usize>, (usize, usize))>,
    steps: usize,
}

/// Computes the shelling. Among removable contour segments the one with
/// the smallest vertex id wins, then the shorter one; dead ends are undone.
pub fn shelling_order(g: &EmbeddedPlanarGraph) -> Result<Shelling> {
    let p0 = g.outer_path(1, 2);
    let mut in_p0 = vec![false; g.n()];
    for &v in &p0 {
        in_p0[v] = true;
    }
    let mut st = State {
        g,
        p0,
        in_p0,
        alive: vec![true; g.n()],
        alive_count: g.n(),
        removed: Vec::new(),
        steps: 0,
    };
    let contour = st.contour().ok_or_else(|| Error::ShellingStuck { remaining: g.n() })?;
    if !st.search(contour) {
        return Err(Error::ShellingStuck {
            remaining: g.n() - st.removed.len(),
        });
    }
    let mut paths = vec![st.p0.clone()];
    let mut attachments = vec![(usize::MAX, usize::MAX)];
    for (p, att) in st.removed.into_iter().rev() {
        paths.push(p);
        attachments.push(att);
    }
    Ok(Shelling { paths, attachments })
}

impl State<'_> {
    fn search(&mut self, contour: Vec<usize>) -> bool {
        if self.alive_count == self.p0.len() {
            return true;
        }
        self.steps += 1;
        if self.steps > MAX_STEPS {
            return false;
        }
        for (a, b, next) in self.candidates(&contour) {
            let q = contour[a + 1..b].to_vec();
            for &z in &q {
                self.alive[z] = false;
            }
            self.alive_count -= q.len();
            self.removed.push((q.clone(), (contour[a], contour[b])));
            if self.search(next) {
                return true;
            }
            self.removed.pop();
            for &z in &q {
                self.alive[z] = true;
            }
            self.alive_count += q.len();
        }
        false
    }

    /// Removable segments `contour[a+1..b]` in preference order, each with
    /// the contour left behind.
    fn candidates(&mut self, contour: &[usize]) -> Vec<(usize, usize, Vec<usize>)> {
        let g = self.g;
        let first = self.removed.is_empty();
        let mut found = Vec::new();
        let len = contour.len();
        for a in 0..len - 2 {
            for b in a + 2..len {
                let q = &contour[a + 1..b];
                if q.iter().any(|&z| self.in_p0[z]) {
                    break;
                }
                if first && q != [g.roots()[0]] {
                    continue;
                }
                if !self.is_valid_segment(q, first) {
                    continue;
                }
                for &z in q {
                    self.alive[z] = false;
                }
                let next = self.contour();
                for &z in q {
                    self.alive[z] = true;
                }
                let Some(next) = next else { continue };
                let in_q = |v: usize| q.contains(&v);
                // the new contour keeps both sides and touches q at most once per vertex
                if next.len() < a + 1 + len - b {
                    continue;
                }
                if next[..=a] != contour[..=a] || next[next.len() - (len - b)..] != contour[b..] {
                    continue;
                }
                if next.iter().any(|&v| g.neighbors(v).filter(|&w| in_q(w)).count() > 1) {
                    continue;
                }
                let key = (*q.iter().min().expect("non-empty"), q.len(), a);
                found.push((key, a, b, next));
            }
        }
        found.sort_by_key(|x| x.0);
        found.into_iter().map(|(_, a, b, next)| (a, b, next)).collect()
    }

    /// The segment induces a path and, except for the very first removal,
    /// every vertex of it already has a removed neighbor.
    fn is_valid_segment(&self, q: &[usize], first: bool) -> bool {
        let g = self.g;
        let inside: usize = q
            .iter()
            .map(|&z| g.neighbors(z).filter(|w| q.contains(w)).count())
            .sum();
        if inside != 2 * (q.len() - 1) {
            return false;
        }
        first || q.iter().all(|&z| g.neighbors(z).any(|w| !self.alive[w]))
    }

    /// Clockwise outer walk of the alive subgraph from `r_3` to `r_2`; `None`
    /// unless it is a simple path ending in the outer path's first edge.
    fn contour(&self) -> Option<Vec<usize>> {
        contour_walk(self.g, &self.alive, &self.p0)
    }
}

/// First dart clockwise after `d` around its tail whose head is alive.
fn next_alive(g: &EmbeddedPlanarGraph, alive: &[bool], d: Dart) -> Dart {
    let mut e = g.cw_next(d);
    while !alive[g.head(e)] && e != d {
        e = g.cw_next(e);
    }
    e
}

/// Clockwise walk on the outer face of the subgraph induced by `alive`,
/// from the last vertex of `p0` to its first. `p0` is the clockwise outer
/// path between these two; the walk leaves `p0`'s last vertex right after
/// the path edge and must come back onto `p0` at its first vertex.
pub(crate) fn contour_walk(g: &EmbeddedPlanarGraph, alive: &[bool], p0: &[usize]) -> Option<Vec<usize>> {
    let k = p0.len();
    let (start, end) = (p0[k - 1], p0[0]);
    let along = g.dart_between(start, p0[k - 2])?;
    let onward = g.dart_between(end, p0[1])?;
    let mut seen = vec![false; g.n()];
    let mut path = vec![start];
    seen[start] = true;
    let mut d = next_alive(g, alive, along);
    for _ in 0..=2 * g.m() {
        let v = g.head(d);
        if v == end {
            path.push(end);
            return (next_alive(g, alive, d.rev()) == onward).then_some(path);
        }
        if seen[v] {
            return None;
        }
        seen[v] = true;
        path.push(v);
        d = next_alive(g, alive, d.rev());
    }
    None
}
