//! Brute-force checks for small instances: spanning-tree counting and
//! enumeration, exhaustive wood enumeration, best degree pairs and vertex
//! connectivity by max-flow.

use std::collections::VecDeque;

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::color::Color;
use crate::error::{Error, Result};
use crate::planar::{Dart, EmbeddedPlanarGraph, Suspension};
use crate::schnyder::{validate_wood, SchnyderWood};

/// Largest host for which [`enumerate_woods`] runs.
pub const WOOD_EDGE_GUARD: usize = 12;

/// Number of spanning trees, by the matrix-tree theorem with fraction-free
/// elimination.
pub fn count_spanning_trees(n: usize, edges: &[[usize; 2]]) -> BigInt {
    if n <= 1 {
        return BigInt::from(1);
    }
    let k = n - 1;
    let mut a = vec![vec![BigInt::from(0); k]; k];
    for &[u, v] in edges {
        if u == v {
            continue;
        }
        for (x, y) in [(u, v), (v, u)] {
            if x < k {
                a[x][x] += 1;
                if y < k {
                    a[x][y] -= 1;
                }
            }
        }
    }
    bareiss_determinant(a)
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let k = a.len();
    let zero = BigInt::from(0);
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for p in 0..k {
        if a[p][p] == zero {
            let Some(r) = (p + 1..k).find(|&r| a[r][p] != zero) else {
                return zero;
            };
            a.swap(p, r);
            sign = -sign;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let v = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[p][p].clone();
    }
    sign * prev
}

pub fn count_graph_spanning_trees(g: &EmbeddedPlanarGraph) -> BigInt {
    count_spanning_trees(g.n(), g.edges())
}

/// Every spanning tree exactly once, as sorted edge ids, in lexicographic
/// order. Fails before enumerating if there are more than `cap`.
pub fn enumerate_spanning_trees(n: usize, edges: &[[usize; 2]], cap: usize) -> Result<Vec<Vec<usize>>> {
    if count_spanning_trees(n, edges) > BigInt::from(cap) {
        return Err(Error::CapExceeded { cap });
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut excluded = vec![false; edges.len()];
    enumerate_from(n, edges, 0, &mut chosen, &mut excluded, &mut out);
    Ok(out)
}

fn enumerate_from(
    n: usize,
    edges: &[[usize; 2]],
    next: usize,
    chosen: &mut Vec<usize>,
    excluded: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() + 1 == n || n <= 1 {
        out.push(chosen.clone());
        return;
    }
    if next == edges.len() {
        return;
    }
    let mut uf = UnionFind::<usize>::new(n);
    for &e in chosen.iter() {
        uf.union(edges[e][0], edges[e][1]);
    }
    let [u, v] = edges[next];
    if !uf.equiv(u, v) {
        chosen.push(next);
        enumerate_from(n, edges, next + 1, chosen, excluded, out);
        chosen.pop();
    }
    excluded[next] = true;
    if connected_without(n, edges, excluded) {
        enumerate_from(n, edges, next + 1, chosen, excluded, out);
    }
    excluded[next] = false;
}

fn connected_without(n: usize, edges: &[[usize; 2]], excluded: &[bool]) -> bool {
    let mut uf = UnionFind::<usize>::new(n);
    let mut parts = n;
    for (e, &[u, v]) in edges.iter().enumerate() {
        if !excluded[e] && uf.union(u, v) {
            parts -= 1;
        }
    }
    parts == 1
}

/// Whether `tree` is a spanning tree of the graph on `n` vertices.
pub fn is_spanning_tree(n: usize, edges: &[[usize; 2]], tree: &[usize]) -> bool {
    if tree.len() + 1 != n {
        return false;
    }
    let mut uf = UnionFind::<usize>::new(n);
    tree.iter().all(|&e| uf.union(edges[e][0], edges[e][1]))
}

/// Degree of the fullest vertex in the subgraph made of `tree`.
pub fn max_degree_of(n: usize, edges: &[[usize; 2]], tree: &[usize]) -> usize {
    let mut deg = vec![0; n];
    for &e in tree {
        deg[edges[e][0]] += 1;
        deg[edges[e][1]] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// Complement of `tree` in `0..m`.
pub fn complement(m: usize, tree: &[usize]) -> Vec<usize> {
    let mut keep = vec![true; m];
    for &e in tree {
        keep[e] = false;
    }
    (0..m).filter(|&e| keep[e]).collect()
}

/// Outcome of the exhaustive degree search over all spanning trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreePair {
    pub tree: usize,
    pub co_tree: usize,
    /// How many spanning trees were examined.
    pub trees: usize,
}

/// The pair `(Δ(T), Δ(¬T*))` minimizing the larger value, then the sum,
/// over all spanning trees `T`. `dual` must share edge ids with `g`.
pub fn best_degree_pair(g: &EmbeddedPlanarGraph, dual: &EmbeddedPlanarGraph, cap: usize) -> Result<DegreePair> {
    let trees = enumerate_spanning_trees(g.n(), g.edges(), cap)?;
    let mut best: Option<(usize, usize)> = None;
    for t in &trees {
        let co = complement(g.m(), t);
        let pair = (
            max_degree_of(g.n(), g.edges(), t),
            max_degree_of(dual.n(), dual.edges(), &co),
        );
        let key = |p: (usize, usize)| (p.0.max(p.1), p.0 + p.1, p);
        if best.is_none_or(|b| key(pair) < key(b)) {
            best = Some(pair);
        }
    }
    let (tree, co_tree) = best.ok_or_else(|| Error::NotATree("graph has no spanning tree".into()))?;
    Ok(DegreePair {
        tree,
        co_tree,
        trees: trees.len(),
    })
}

/// All Schnyder woods of a small suspension, each exactly once.
pub fn enumerate_woods(gs: &Suspension, cap: usize) -> Result<Vec<SchnyderWood>> {
    let m = gs.m();
    if m > WOOD_EDGE_GUARD {
        return Err(Error::BadParams(format!(
            "wood enumeration needs at most {WOOD_EDGE_GUARD} edges, got {m}"
        )));
    }
    let mut colors = vec![None; gs.dart_count()];
    let mut out_count = vec![[0u8; 3]; gs.n()];
    for i in 0..3 {
        let c = Color::from_index(i);
        colors[gs.half(i).0] = Some(c);
        out_count[gs.roots()[i]][i] += 1;
    }
    let mut pending = vec![0usize; gs.n()];
    for &[u, v] in gs.base().edges() {
        pending[u] += 1;
        pending[v] += 1;
    }
    let mut search = WoodSearch {
        gs,
        cap,
        colors,
        out_count,
        pending,
        found: Vec::new(),
    };
    search.run(0)?;
    Ok(search.found)
}

struct WoodSearch<'a> {
    gs: &'a Suspension,
    cap: usize,
    colors: Vec<Option<Color>>,
    out_count: Vec<[u8; 3]>,
    pending: Vec<usize>,
    found: Vec<SchnyderWood>,
}

impl WoodSearch<'_> {
    fn run(&mut self, e: usize) -> Result<()> {
        if e == self.gs.m() {
            let wood = SchnyderWood::from_colors(self.gs.clone(), self.colors.clone())?;
            if validate_wood(self.gs, &wood).is_empty() {
                if self.found.len() == self.cap {
                    return Err(Error::CapExceeded { cap: self.cap });
                }
                self.found.push(wood);
            }
            return Ok(());
        }
        let [u, v] = self.gs.base().edge(e);
        let options = [None, Some(Color::Red), Some(Color::Green), Some(Color::Blue)];
        self.pending[u] -= 1;
        self.pending[v] -= 1;
        for a in options {
            for b in options {
                if (a.is_none() && b.is_none()) || (a.is_some() && a == b) {
                    continue;
                }
                if self.assign(e, [u, v], [a, b]) {
                    let complete = |w: usize, s: &Self| s.pending[w] > 0 || s.out_count[w] == [1, 1, 1];
                    if complete(u, self) && complete(v, self) {
                        self.run(e + 1)?;
                    }
                }
                self.unassign(e, [u, v], [a, b]);
            }
        }
        self.pending[u] += 1;
        self.pending[v] += 1;
        Ok(())
    }

    /// Colors both darts of `e`; false if some vertex gets two outgoing
    /// edges of one color.
    fn assign(&mut self, e: usize, ends: [usize; 2], cs: [Option<Color>; 2]) -> bool {
        let mut ok = true;
        for s in 0..2 {
            self.colors[Dart(2 * e + s).0] = cs[s];
            if let Some(c) = cs[s] {
                let slot = &mut self.out_count[ends[s]][c.index()];
                *slot += 1;
                ok &= *slot == 1;
            }
        }
        ok
    }

    fn unassign(&mut self, e: usize, ends: [usize; 2], cs: [Option<Color>; 2]) {
        for s in 0..2 {
            self.colors[Dart(2 * e + s).0] = None;
            if let Some(c) = cs[s] {
                self.out_count[ends[s]][c.index()] -= 1;
            }
        }
    }
}

/// Vertex connectivity: the fewest vertices whose removal disconnects the
/// graph, computed as the minimum over non-adjacent pairs of the number of
/// internally disjoint paths (unit-capacity max-flow on the split graph).
/// Complete graphs give `n - 1`.
pub fn vertex_connectivity(n: usize, edges: &[[usize; 2]]) -> usize {
    let mut adjacent = vec![vec![false; n]; n];
    for &[u, v] in edges {
        adjacent[u][v] = true;
        adjacent[v][u] = true;
    }
    let mut best = n.saturating_sub(1);
    for (s, row) in adjacent.iter().enumerate() {
        for (t, &adj) in row.iter().enumerate().skip(s + 1) {
            if !adj {
                best = best.min(disjoint_paths(n, edges, s, t));
            }
        }
    }
    best
}

fn disjoint_paths(n: usize, edges: &[[usize; 2]], s: usize, t: usize) -> usize {
    // vertex v becomes v_in = 2v and v_out = 2v + 1
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
    }
    for &[u, v] in edges {
        cap[2 * u + 1][2 * v] = n as i32;
        cap[2 * v + 1][2 * u] = n as i32;
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}
