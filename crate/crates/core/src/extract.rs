//! Spanning tree `T` with `H_0 ⊆ T ⊆ H` by a 0/1/2-weighted minimum
//! spanning tree, its co-tree in `G*`, and the full certified pipeline.

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::candidate::{
    build_h, build_h_dual, check_connected, check_dual_complement, check_max_degree, cycle_witness, fundamental_cycles,
    h_zero, CandidateSubgraph, HZeroSet,
};
use crate::color::Color;
use crate::dual_wood::{check_crossing_vertices, completion, dual_wood};
use crate::error::{Error, Result};
use crate::opp::{
    check_monotonicity, compatible_opp, parent_edges, validate_opp, OrderedPathPartition, ParentAssignment,
};
use crate::oracle::{is_spanning_tree, max_degree_of};
use crate::planar::{
    identify_roots, suspend, suspended_dual, DualCorrespondence, EmbeddedPlanarGraph, SuspendedDual, Suspension,
};
use crate::report::ValidationReport;
use crate::schnyder::{compute_wood, validate_wood, SchnyderWood};

/// Weight used for edges outside `H`; never selected when `H` is connected.
const OUTSIDE: u8 = 2;

fn weights(m: usize, h: &CandidateSubgraph, h0: &HZeroSet) -> Vec<u8> {
    let mut w = vec![OUTSIDE; m];
    for e in h.edges() {
        w[e] = 1;
    }
    for &e in &h0.edges {
        w[e] = 0;
    }
    w
}

/// Minimum spanning tree under weight 0 on `H_0`, 1 on the rest of `H` and
/// 2 elsewhere, ties broken by edge id. Sorted edge ids.
pub fn extract_tree(g: &EmbeddedPlanarGraph, h: &CandidateSubgraph, h0: &HZeroSet) -> Result<Vec<usize>> {
    if !check_connected(h) {
        return Err(Error::HNotConnected);
    }
    let w = weights(g.m(), h, h0);
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&e| (w[e], e));
    let mut uf = UnionFind::<usize>::new(g.n());
    let mut tree: Vec<usize> = order
        .into_iter()
        .filter(|&e| {
            let [u, v] = g.edge(e);
            uf.union(u, v)
        })
        .collect();
    assert!(
        tree.iter().all(|&e| w[e] < OUTSIDE),
        "edge outside H selected although H is connected"
    );
    if !h0.edges.iter().all(|e| tree.contains(e)) {
        return Err(Error::CycleInHZero(h0.edges.clone()));
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Total weight of a minimum spanning tree found by Prim's algorithm.
fn prim_weight(g: &EmbeddedPlanarGraph, w: &[u8]) -> usize {
    let mut in_tree = vec![false; g.n()];
    let mut best = vec![usize::MAX; g.n()];
    best[0] = 0;
    let mut total = 0;
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| !in_tree[v])
            .min_by_key(|&v| best[v])
            .expect("vertices left");
        in_tree[v] = true;
        total += best[v];
        for &d in g.rotation(v) {
            let u = g.head(d);
            if !in_tree[u] {
                best[u] = best[u].min(w[d.edge()] as usize);
            }
        }
    }
    total
}

/// Dual edges of the edges not in `tree`; they must form a spanning tree
/// of `dual`.
pub fn co_tree(
    g: &EmbeddedPlanarGraph,
    tree: &[usize],
    dual: &EmbeddedPlanarGraph,
    corr: &DualCorrespondence,
) -> Result<Vec<usize>> {
    if !is_spanning_tree(g.n(), g.edges(), tree) {
        return Err(Error::NotATree(
            "input edge set is not a spanning tree of the graph".into(),
        ));
    }
    let mut in_tree = vec![false; g.m()];
    for &e in tree {
        in_tree[e] = true;
    }
    let mut co: Vec<usize> = (0..g.m()).filter(|&e| !in_tree[e]).map(|e| corr.dual_edge(e)).collect();
    co.sort_unstable();
    if !is_spanning_tree(dual.n(), dual.edges(), &co) {
        return Err(Error::NotATree(
            "complementary dual edges do not form a spanning tree".into(),
        ));
    }
    Ok(co)
}

/// Every intermediate object of the construction.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub suspension: Suspension,
    pub wood: SchnyderWood,
    pub suspended_dual: SuspendedDual,
    pub dual_wood: SchnyderWood,
    pub dual: EmbeddedPlanarGraph,
    pub correspondence: DualCorrespondence,
    pub opp: OrderedPathPartition,
    pub parents: ParentAssignment,
    pub dual_opp: OrderedPathPartition,
    pub dual_parents: ParentAssignment,
    pub h: CandidateSubgraph,
    pub h_dual: CandidateSubgraph,
}

impl Pipeline {
    pub fn new(g: &EmbeddedPlanarGraph) -> Result<Self> {
        let suspension = suspend(g)?;
        let wood = compute_wood(&suspension)?;
        let sd = suspended_dual(&suspension)?;
        let dual_wood = dual_wood(&wood, &sd)?;
        let (dual, correspondence) = identify_roots(&sd)?;
        let opp = compatible_opp(&wood, Color::Green)?;
        let parents = parent_edges(&wood, &opp)?;
        let dual_opp = compatible_opp(&dual_wood, Color::Green)?;
        let dual_parents = parent_edges(&dual_wood, &dual_opp)?;
        let h = build_h(&wood, &opp, &parents)?;
        let h_dual = build_h_dual(&dual_wood, &dual_opp, &dual_parents, &sd, &dual)?;
        Ok(Self {
            suspension,
            wood,
            suspended_dual: sd,
            dual_wood,
            dual,
            correspondence,
            opp,
            parents,
            dual_opp,
            dual_parents,
            h,
            h_dual,
        })
    }

    pub fn graph(&self) -> &EmbeddedPlanarGraph {
        self.suspension.base()
    }

    /// Wood, dual wood, completion and partition checks, merged.
    pub fn structure_report(&self) -> Result<ValidationReport> {
        let mut report = validate_wood(&self.suspension, &self.wood);
        report.extend(validate_wood(&self.suspended_dual.suspension, &self.dual_wood));
        let c = completion(&self.wood, &self.suspended_dual, &self.dual_wood)?;
        report.extend(check_crossing_vertices(&c));
        for (s, p) in [(&self.wood, &self.opp), (&self.dual_wood, &self.dual_opp)] {
            report.extend(validate_opp(s.graph(), p));
            report.extend(check_monotonicity(s, p));
        }
        Ok(report)
    }

    pub fn h_zero(&self) -> Result<HZeroSet> {
        h_zero(&self.h, &self.h_dual, &self.correspondence)
    }
}

/// Certified tree and co-tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningTreePair {
    pub tree: Vec<usize>,
    pub co_tree: Vec<usize>,
    pub max_deg_tree: usize,
    pub max_deg_cotree: usize,
    pub h_zero: Vec<usize>,
    pub certificates: BTreeMap<&'static str, bool>,
}

impl SpanningTreePair {
    pub fn all_pass(&self) -> bool {
        self.certificates.values().all(|&ok| ok)
    }
}

/// Runs the whole construction on `g` and checks every intermediate claim.
/// Alarms that would break the construction are returned as errors; the
/// rest are recorded in the certificates.
pub fn verify_theorem(g: &EmbeddedPlanarGraph) -> Result<SpanningTreePair> {
    certify(&Pipeline::new(g)?)
}

pub fn certify(p: &Pipeline) -> Result<SpanningTreePair> {
    let g = p.graph();
    let mut certificates = BTreeMap::new();
    let structure = p.structure_report()?;
    certificates.insert("structure", structure.is_empty());

    let mut degree = check_max_degree(&p.h);
    degree.extend(check_max_degree(&p.h_dual));
    if !degree.is_empty() {
        return Err(Error::DegreeBound(degree));
    }
    certificates.insert("max_degree", true);
    certificates.insert("dual_root_degree", p.h_dual.degrees()[p.dual.roots()[0]] <= 3);

    let complement = check_dual_complement(&p.h, &p.h_dual, &p.correspondence);
    if !complement.is_empty() {
        return Err(Error::DualComplement(complement));
    }
    certificates.insert("dual_complement", true);

    let h0 = p.h_zero()?;
    certificates.insert("h_zero_forest", true);
    for cycle in fundamental_cycles(&p.h) {
        cycle_witness(&p.h, &p.h_dual, &p.correspondence, &cycle)?;
    }
    certificates.insert("cycle_witness", true);
    certificates.insert("connected", check_connected(&p.h));

    let tree = extract_tree(g, &p.h, &h0)?;
    let w = weights(g.m(), &p.h, &h0);
    let kruskal: usize = tree.iter().map(|&e| w[e] as usize).sum();
    certificates.insert("mst_cross_check", kruskal == prim_weight(g, &w));
    certificates.insert("tree_in_h", tree.iter().all(|&e| p.h.contains(e)));
    certificates.insert("h_zero_in_tree", h0.edges.iter().all(|e| tree.binary_search(e).is_ok()));

    let co = co_tree(g, &tree, &p.dual, &p.correspondence)?;
    certificates.insert("co_tree_in_h_dual", co.iter().all(|&e| p.h_dual.contains(e)));
    let max_deg_tree = max_degree_of(g.n(), g.edges(), &tree);
    let max_deg_cotree = max_degree_of(p.dual.n(), p.dual.edges(), &co);
    certificates.insert("tree_degree", max_deg_tree <= 5);
    certificates.insert("co_tree_degree", max_deg_cotree <= 5);
    Ok(SpanningTreePair {
        tree,
        co_tree: co,
        max_deg_tree,
        max_deg_cotree,
        h_zero: h0.edges,
        certificates,
    })
}
