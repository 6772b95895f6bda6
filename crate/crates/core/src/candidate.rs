//! Candidate subgraphs `H(G)` and `H°(G*)` and the runtime checks on them:
//! degree bound, dual complement, forest `H_0`, cycle witnesses and
//! connectivity.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Serialize, Serializer};

use crate::color::Color;
use crate::error::{Error, Result};
use crate::opp::{OrderedPathPartition, ParentAssignment};
use crate::planar::{DualCorrespondence, EmbeddedPlanarGraph, SuspendedDual};
use crate::report::{Location, ValidationReport};
use crate::schnyder::SchnyderWood;

pub const DEGREE_BOUND: usize = 5;

/// Set of selection rules that admitted an edge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rules(u8);

impl Rules {
    /// Green-blue-colored edge.
    pub const H1: Rules = Rules(1);
    /// First incoming blue edge clockwise after the outgoing red edge.
    pub const H2: Rules = Rules(2);
    /// First incoming green edge counterclockwise before the outgoing red edge.
    pub const H3: Rules = Rules(4);
    /// Red-colored parent edge.
    pub const H4: Rules = Rules(8);

    pub fn contains(self, other: Rules) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn insert(&mut self, other: Rules) {
        self.0 |= other.0;
    }

    pub fn names(self) -> Vec<&'static str> {
        [(Self::H1, "H1"), (Self::H2, "H2"), (Self::H3, "H3"), (Self::H4, "H4")]
            .into_iter()
            .filter(|&(r, _)| self.contains(r))
            .map(|(_, name)| name)
            .collect()
    }
}

impl fmt::Display for Rules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join("+"))
    }
}

impl Serialize for Rules {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.names().serialize(s)
    }
}

/// A spanning subgraph given by edge ids of its host, with rule tags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateSubgraph {
    pub vertex_count: usize,
    /// Endpoints of every host edge, indexed by edge id.
    #[serde(skip)]
    pub endpoints: Vec<[usize; 2]>,
    pub members: BTreeMap<usize, Rules>,
}

impl CandidateSubgraph {
    pub fn new(host: &EmbeddedPlanarGraph) -> Self {
        Self {
            vertex_count: host.n(),
            endpoints: host.edges().to_vec(),
            members: BTreeMap::new(),
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.contains_key(&e)
    }

    pub fn rules(&self, e: usize) -> Option<Rules> {
        self.members.get(&e).copied()
    }

    pub fn edges(&self) -> Vec<usize> {
        self.members.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn add(&mut self, e: usize, rule: Rules) {
        self.members.entry(e).or_default().insert(rule);
    }

    pub fn remove(&mut self, e: usize) {
        self.members.remove(&e);
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &e in self.members.keys() {
            let [u, v] = self.endpoints[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
}

/// Applies the four selection rules to a wood, using the parent edges of
/// its green-blue partition.
pub fn build_h(s: &SchnyderWood, p: &OrderedPathPartition, parents: &ParentAssignment) -> Result<CandidateSubgraph> {
    let g = s.graph();
    if p.base != Color::Green || p.index.len() != g.n() || parents.parents.len() != p.paths.len() {
        return Err(Error::InconsistentInputs(
            "partition does not belong to this wood's green-blue paths".into(),
        ));
    }
    let host = s.host();
    let mut h = CandidateSubgraph::new(g);
    for e in 0..g.m() {
        if s.is_colored_pair(e, Color::Green, Color::Blue) {
            h.add(e, Rules::H1);
        }
    }
    for v in 0..g.n() {
        let red = s
            .outgoing(v, Color::Red)
            .ok_or_else(|| Error::InconsistentInputs(format!("vertex {v} has no outgoing red edge")))?;
        let rot = host.rotation(v);
        let k = rot.len();
        let at = host.position(red);
        let clockwise = (0..k).map(|s| rot[(at + s) % k]);
        if let Some(d) = clockwise.clone().find(|&d| s.incoming(d) == Some(Color::Blue)) {
            h.add(d.edge(), Rules::H2);
        }
        let counter = (0..k).map(|s| rot[(at + k - s) % k]);
        if let Some(d) = counter.into_iter().find(|&d| s.incoming(d) == Some(Color::Green)) {
            h.add(d.edge(), Rules::H3);
        }
    }
    for parent in parents.parents.iter().flatten() {
        if s.has_color(parent.edge, Color::Red) {
            h.add(parent.edge, Rules::H4);
        }
    }
    Ok(h)
}

/// `H°(G*)`: the rules applied to the dual wood on `G^{σ*}`, then
/// `b_1, b_2, b_3` identified into one vertex of `G*` (the triangle edges
/// disappear). Edge ids of the result are those of `G*`, i.e. primal ids.
pub fn build_h_dual(
    s_star: &SchnyderWood,
    p_star: &OrderedPathPartition,
    parents_star: &ParentAssignment,
    sd: &SuspendedDual,
    dual: &EmbeddedPlanarGraph,
) -> Result<CandidateSubgraph> {
    let raw = build_h(s_star, p_star, parents_star)?;
    if dual.m() != sd.primal_m {
        return Err(Error::InconsistentInputs(
            "dual graph does not match the suspended dual".into(),
        ));
    }
    let mut h = CandidateSubgraph::new(dual);
    for (&e, &rules) in &raw.members {
        if e < sd.primal_m {
            let id = sd.correspondence.dual_edge(e);
            h.members.entry(id).or_default().insert(rules);
        }
    }
    Ok(h)
}

/// Reports every vertex of degree above 5 with the tags of its edges.
pub fn check_max_degree(h: &CandidateSubgraph) -> ValidationReport {
    let mut report = ValidationReport::new();
    for (v, &d) in h.degrees().iter().enumerate() {
        if d > DEGREE_BOUND {
            let tags: Vec<String> = h
                .members
                .iter()
                .filter(|(&e, _)| h.endpoints[e].contains(&v))
                .map(|(e, r)| format!("{e}:{r}"))
                .collect();
            report.push(
                "max_degree",
                Location::Vertex(v),
                format!("degree {d} from edges {}", tags.join(", ")),
            );
        }
    }
    report
}

/// Every edge is in `H` or has its dual in `H°` (both directions).
pub fn check_dual_complement(
    h: &CandidateSubgraph,
    h_dual: &CandidateSubgraph,
    corr: &DualCorrespondence,
) -> ValidationReport {
    let mut report = ValidationReport::new();
    for e in 0..corr.len() {
        let d = corr.dual_edge(e);
        if !h.contains(e) && !h_dual.contains(d) {
            report.push(
                "dual_complement",
                Location::Edge(e),
                format!("edge {e} is not in H and its dual {d} is not in the dual candidate"),
            );
        }
    }
    report
}

/// Edges of `H` whose duals are missing from `H°`, checked to form a
/// forest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HZeroSet {
    pub edges: Vec<usize>,
}

pub fn h_zero(h: &CandidateSubgraph, h_dual: &CandidateSubgraph, corr: &DualCorrespondence) -> Result<HZeroSet> {
    let edges: Vec<usize> = h
        .edges()
        .into_iter()
        .filter(|&e| !h_dual.contains(corr.dual_edge(e)))
        .collect();
    if let Some(cycle) = find_cycle(h.vertex_count, &h.endpoints, &edges) {
        return Err(Error::CycleInHZero(cycle));
    }
    Ok(HZeroSet { edges })
}

/// Some cycle among `edges`, as edge ids, if there is one.
pub fn find_cycle(n: usize, endpoints: &[[usize; 2]], edges: &[usize]) -> Option<Vec<usize>> {
    let mut uf = UnionFind::<usize>::new(n);
    let mut forest: Vec<usize> = Vec::new();
    for &e in edges {
        let [u, v] = endpoints[e];
        if !uf.union(u, v) {
            let mut path = tree_path(n, endpoints, &forest, u, v).expect("endpoints already joined");
            path.push(e);
            return Some(path);
        }
        forest.push(e);
    }
    None
}

/// Edge ids of the path from `from` to `to` inside the forest `edges`.
fn tree_path(n: usize, endpoints: &[[usize; 2]], edges: &[usize], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &e in edges {
        let [u, v] = endpoints[e];
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut via = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &(w, e) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                via[w] = Some((u, e));
                queue.push_back(w);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some((prev, e)) = via[cur] {
        path.push(e);
        cur = prev;
    }
    path.reverse();
    Some(path)
}

/// An edge of `cycle` whose dual lies in `H°`.
pub fn cycle_witness(
    h: &CandidateSubgraph,
    h_dual: &CandidateSubgraph,
    corr: &DualCorrespondence,
    cycle: &[usize],
) -> Result<usize> {
    debug_assert!(cycle.iter().all(|&e| h.contains(e)));
    cycle
        .iter()
        .copied()
        .find(|&e| h_dual.contains(corr.dual_edge(e)))
        .ok_or_else(|| Error::NoWitness(cycle.to_vec()))
}

/// Fundamental cycles of `h` with respect to a BFS spanning forest.
pub fn fundamental_cycles(h: &CandidateSubgraph) -> Vec<Vec<usize>> {
    let n = h.vertex_count;
    let mut adj = vec![Vec::new(); n];
    for &e in h.members.keys() {
        let [u, v] = h.endpoints[e];
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut tree = Vec::new();
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    let in_tree: std::collections::HashSet<usize> = tree.iter().copied().collect();
    h.members
        .keys()
        .filter(|e| !in_tree.contains(e))
        .map(|&e| {
            let [u, v] = h.endpoints[e];
            let mut cycle = tree_path(n, &h.endpoints, &tree, u, v).expect("same component");
            cycle.push(e);
            cycle
        })
        .collect()
}

/// Whether `h` connects all vertices of its host.
pub fn check_connected(h: &CandidateSubgraph) -> bool {
    let mut uf = UnionFind::<usize>::new(h.vertex_count);
    let mut parts = h.vertex_count;
    for &e in h.members.keys() {
        let [u, v] = h.endpoints[e];
        if uf.union(u, v) {
            parts -= 1;
        }
    }
    parts <= 1
}
