use std::collections::VecDeque;

use super::{Dart, EmbeddedPlanarGraph};

/// Embedding-level canonical form: two graphs get the same code iff their
/// rotation systems are isomorphic, allowing a mirror image. Roots are
/// ignored.
///
/// Every start dart and both rotation senses are tried; each attempt
/// numbers vertices in BFS order, scanning every rotation from the dart
/// through which the vertex was discovered. The smallest code wins.
pub fn canonical_code(g: &EmbeddedPlanarGraph) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for start in 0..2 * g.m() {
        for mirrored in [false, true] {
            let code = code_from(g, Dart(start), mirrored);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

fn code_from(g: &EmbeddedPlanarGraph, start: Dart, mirrored: bool) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n()];
    let mut entry = vec![start; g.n()];
    let mut queue = VecDeque::new();
    let first = g.tail(start);
    label[first] = 0;
    queue.push_back(first);
    let mut next_label = 1;
    let mut code = Vec::with_capacity(2 * g.m() + g.n());
    while let Some(v) = queue.pop_front() {
        let mut d = entry[v];
        for _ in 0..g.degree(v) {
            let w = g.head(d);
            if label[w] == usize::MAX {
                label[w] = next_label;
                next_label += 1;
                entry[w] = d.rev();
                queue.push_back(w);
            }
            code.push(label[w] + 1);
            d = if mirrored { g.ccw_next(d) } else { g.cw_next(d) };
        }
        code.push(0);
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::planar::build_graph;

    #[test]
    fn relabelling_keeps_code() {
        let g = corpus::cube();
        let perm = [3, 7, 1, 0, 6, 2, 5, 4];
        let mut lists = vec![Vec::new(); 8];
        for v in 0..8 {
            lists[perm[v]] = g.neighbors(v).map(|u| perm[u]).collect();
        }
        let roots = g.roots().map(|r| perm[r]);
        let h = build_graph(8, &lists, roots).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn mirror_image_keeps_code() {
        let g = corpus::wheel(5).unwrap();
        let lists: Vec<Vec<usize>> = g
            .neighbor_lists()
            .into_iter()
            .map(|l| l.into_iter().rev().collect())
            .collect();
        let [a, b, c] = g.roots();
        let h = build_graph(g.n(), &lists, [a, c, b]).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn different_graphs_differ() {
        assert_ne!(canonical_code(&corpus::cube()), canonical_code(&corpus::prism()));
        assert_ne!(
            canonical_code(&corpus::k4()),
            canonical_code(&corpus::wheel(4).unwrap())
        );
    }
}
