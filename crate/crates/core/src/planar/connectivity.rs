use super::EmbeddedPlanarGraph;

/// Whether the graph stays connected after deleting `removed`.
pub fn is_connected_without(g: &EmbeddedPlanarGraph, removed: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..g.n()).find(|&v| !seen[v]) else {
        return true;
    };
    let target = g.n() - removed.len();
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == target
}

/// 3-connectivity by trying every vertex pair as a separator.
pub fn check_three_connected(g: &EmbeddedPlanarGraph) -> bool {
    if g.n() < 4 {
        return false;
    }
    (0..g.n()).all(|a| (a + 1..g.n()).all(|b| is_connected_without(g, &[a, b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn platonic_solids_are_three_connected() {
        assert!(check_three_connected(&corpus::k4()));
        assert!(check_three_connected(&corpus::cube()));
        assert!(check_three_connected(&corpus::icosahedron()));
    }

    #[test]
    fn glued_k4s_have_a_two_cut() {
        let g = corpus::two_k4_sharing_edge();
        assert!(!check_three_connected(&g));
        assert!(is_connected_without(&g, &[0]));
    }
}
