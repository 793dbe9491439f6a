//! The inequality chain for `dim` and `pd`: every bound is evaluated, its
//! hypothesis recorded, and (within the solver caps) compared with the exact
//! value. Bounds that need a spanning tree are evaluated at each tree the
//! statement quantifies over.

use serde::Serialize;

use crate::constructions::{construct, CertifiedConstruction, ConstructionKind};
use crate::error::Result;
use crate::graph::{all_pairs_distances, Graph, SpanningTree, UnicyclicGraph, Vertex};
use crate::invariants::{epsilon, exterior_major_count, kappa_tau, pendant_vertices, xi_theta, GraphInvariants};
use crate::resolve::{metric_dimension_exact, partition_dimension_exact, SolverCaps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Dim,
    Pd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "=")]
    Equals,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
            Relation::Equals => "=",
        }
    }

    fn holds(&self, exact: usize, value: i64) -> bool {
        let exact = exact as i64;
        match self {
            Relation::AtMost => exact <= value,
            Relation::AtLeast => exact >= value,
            Relation::Equals => exact == value,
        }
    }
}

/// One evaluated bound: `target relation value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub name: &'static str,
    pub formula: &'static str,
    pub target: Target,
    pub relation: Relation,
    /// `None` when the bound is not applicable and its formula is undefined.
    pub value: Option<i64>,
    /// Deleted cycle edge of the spanning tree the bound was evaluated at.
    pub tree: Option<(Vertex, Vertex)>,
    pub applicable: bool,
    /// Only present when applicable and the exact value is known.
    pub satisfied: Option<bool>,
    /// Construction whose certificate backs the bound, if any.
    pub certificate: Option<ConstructionKind>,
}

/// Invariants of one spanning tree `G - e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeSummary {
    pub deleted_edge: (Vertex, Vertex),
    pub n1: usize,
    pub ex: usize,
    pub kappa: usize,
    pub tau: usize,
    pub xi: usize,
    pub theta: usize,
    /// `dim(T)` from the tree formula.
    pub dim: usize,
    /// Whether `n1(T) = ε(G)`.
    pub minimum_leaf: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Unicyclic,
    Tree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub id: String,
    pub kind: GraphKind,
    pub n: usize,
    pub edges: usize,
    pub cycle: Option<Vec<Vertex>>,
    pub invariants: GraphInvariants,
    pub trees: Vec<TreeSummary>,
    pub dim: Option<usize>,
    pub dim_witness: Option<Vec<Vertex>>,
    pub pd: Option<usize>,
    pub pd_witness: Option<Vec<Vec<Vertex>>>,
    pub bounds: Vec<BoundRecord>,
    pub constructions: Vec<CertifiedConstruction>,
    /// Names (with tree edge) of bounds whose exact comparison failed.
    pub violations: Vec<String>,
    /// Applicable constructions that failed their precondition or check.
    pub construction_failures: Vec<String>,
}

impl BoundsReport {
    /// No proven bound failed and every applicable construction verified.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.construction_failures.is_empty()
    }

    pub fn bound(&self, name: &str) -> impl Iterator<Item = &BoundRecord> {
        let name = name.to_string();
        self.bounds.iter().filter(move |b| b.name == name)
    }
}

/// `dim(T)` of a tree: 0 for `K_1`, 1 for a path, `n1 - ex` otherwise.
pub fn tree_dimension(t: &Graph) -> usize {
    if t.n() <= 1 {
        0
    } else if t.is_path() {
        1
    } else {
        pendant_vertices(t).len() - exterior_major_count(t)
    }
}

fn summarize(tree: &SpanningTree, eps: usize) -> TreeSummary {
    let t = &tree.graph;
    let n1 = pendant_vertices(t).len();
    let (kappa, tau) = kappa_tau(t);
    let (xi, theta) = xi_theta(t).expect("spanning tree");
    TreeSummary {
        deleted_edge: tree.deleted_edge,
        n1,
        ex: exterior_major_count(t),
        kappa,
        tau,
        xi,
        theta,
        dim: tree_dimension(t),
        minimum_leaf: n1 == eps,
    }
}

struct Chain {
    dim: Option<usize>,
    pd: Option<usize>,
    bounds: Vec<BoundRecord>,
}

impl Chain {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        name: &'static str,
        formula: &'static str,
        target: Target,
        relation: Relation,
        value: Option<i64>,
        tree: Option<(Vertex, Vertex)>,
        applicable: bool,
        certificate: Option<ConstructionKind>,
    ) {
        let exact = match target {
            Target::Dim => self.dim,
            Target::Pd => self.pd,
        };
        let satisfied = match (applicable, exact, value) {
            (true, Some(e), Some(v)) => Some(relation.holds(e, v)),
            _ => None,
        };
        self.bounds.push(BoundRecord {
            name,
            formula,
            target,
            relation,
            value,
            tree,
            applicable,
            satisfied,
            certificate,
        });
    }
}

fn i(x: usize) -> i64 {
    x as i64
}

/// Exact values with their witnesses; `None` above the solver caps.
struct Exact {
    dim: Option<(usize, Vec<Vertex>)>,
    pd: Option<(usize, Vec<Vec<Vertex>>)>,
}

impl Exact {
    fn solve(g: &Graph, caps: SolverCaps) -> Result<Self> {
        let dm = all_pairs_distances(g)?;
        let dim = if caps.dim_allows(g.n()) {
            Some(metric_dimension_exact(&dm, caps.dim)?)
        } else {
            None
        };
        let pd = if caps.pd_allows(g.n()) {
            let (p, part) = partition_dimension_exact(&dm, caps.pd)?;
            Some((p, part.parts().to_vec()))
        } else {
            None
        };
        Ok(Exact { dim, pd })
    }

    fn chain(&self) -> Chain {
        Chain {
            dim: self.dim.as_ref().map(|d| d.0),
            pd: self.pd.as_ref().map(|p| p.0),
            bounds: Vec::new(),
        }
    }
}

/// Everything except the bound records themselves.
struct Header {
    id: String,
    kind: GraphKind,
    cycle: Option<Vec<Vertex>>,
    invariants: GraphInvariants,
    trees: Vec<TreeSummary>,
    constructions: Vec<CertifiedConstruction>,
    construction_failures: Vec<String>,
}

fn finish(h: Header, g: &Graph, exact: Exact, chain: Chain) -> BoundsReport {
    let violations = chain
        .bounds
        .iter()
        .filter(|b| b.satisfied == Some(false))
        .map(|b| match b.tree {
            Some((u, v)) => format!("{} at T = G - {u}{v}", b.name),
            None => b.name.to_string(),
        })
        .collect();
    BoundsReport {
        id: h.id,
        kind: h.kind,
        n: g.n(),
        edges: g.edge_count(),
        cycle: h.cycle,
        invariants: h.invariants,
        trees: h.trees,
        dim: exact.dim.as_ref().map(|d| d.0),
        dim_witness: exact.dim.map(|d| d.1),
        pd: exact.pd.as_ref().map(|p| p.0),
        pd_witness: exact.pd.map(|p| p.1),
        bounds: chain.bounds,
        constructions: h.constructions,
        violations,
        construction_failures: h.construction_failures,
    }
}

/// Full bound chain for a unicyclic graph. Exact values (and with them the
/// `satisfied` flags) are omitted above the caps; bounds are always listed.
pub fn bounds_report(id: impl Into<String>, g: &UnicyclicGraph, caps: SolverCaps) -> Result<BoundsReport> {
    let graph = g.graph();
    let inv = GraphInvariants::of_unicyclic(g);
    let exact = Exact::solve(graph, caps)?;
    let mut chain = exact.chain();

    let (eps, eps_tree) = epsilon(g);
    let spanning = g.spanning_trees();
    let trees: Vec<TreeSummary> = spanning.iter().map(|t| summarize(t, eps)).collect();

    use Relation::*;
    use Target::*;

    for t in &trees {
        let e = Some(t.deleted_edge);
        chain.push("dim-tree-lower", "dim(T) - 2", Dim, AtLeast, Some(i(t.dim) - 2), e, true, None);
        chain.push("dim-tree-upper", "dim(T) + 1", Dim, AtMost, Some(i(t.dim) + 1), e, true, None);
        chain.push("dim-leaves-lower", "n1(T) - ex(T) - 2", Dim, AtLeast, Some(i(t.n1) - i(t.ex) - 2), e, true, None);
        chain.push("dim-leaves-upper", "n1(T) - ex(T) + 1", Dim, AtMost, Some(i(t.n1) - i(t.ex) + 1), e, true, None);
        chain.push("pd-leaves", "n1(T) - ex(T) + 2", Pd, AtMost, Some(i(t.n1) - i(t.ex) + 2), e, true, None);
    }
    chain.push("pd-dim", "dim(G) + 1", Pd, AtMost, chain.dim.map(|d| i(d) + 1), None, true, None);
    chain.push("pd-not-path", "3", Pd, AtLeast, Some(3), None, true, None);

    let cycle_degrees_ok = g.cycle().iter().all(|&c| graph.degree(c) >= 3);
    let pendant_value = Some(i(inv.n1) - i(inv.rho));
    chain.push("dim-pendant", "n1(G) - rho(G)", Dim, AtMost, pendant_value, None, cycle_degrees_ok, Some(ConstructionKind::PendantSet));
    chain.push("pd-pendant", "n1(G) - rho(G) + 1", Pd, AtMost, pendant_value.map(|v| v + 1), None, cycle_degrees_ok, None);

    let is_cycle = g.is_cycle_graph();
    chain.push("dim-cycle", "2", Dim, Equals, Some(2), None, is_cycle, None);
    // κ(G) counts exterior majors of terminal degree > 1, so κ = 0 means
    // every exterior major has terminal degree one
    let unit_terminal = inv.kappa == 0;
    let unit_cert = if is_cycle { ConstructionKind::Cycle } else { ConstructionKind::UnitTerminal };
    chain.push("pd-unit-terminal", "3", Pd, Equals, Some(3), None, unit_terminal, Some(unit_cert));
    chain.push(
        "pd-kappa-tau",
        "kappa(G) + tau(G) + 1",
        Pd,
        AtMost,
        Some(i(inv.kappa) + i(inv.tau) + 1),
        None,
        inv.kappa >= 1,
        Some(ConstructionKind::KappaTau),
    );

    for t in trees.iter().filter(|t| t.minimum_leaf) {
        let e = Some(t.deleted_edge);
        let canonical = t.deleted_edge == eps_tree.deleted_edge;
        chain.push(
            "pd-kappa-tau-tree",
            "kappa(T) + tau(T) + 1",
            Pd,
            AtMost,
            Some(i(t.kappa) + i(t.tau) + 1),
            e,
            t.kappa >= 1,
            None,
        );
        chain.push("pd-xi-theta-plus-one", "xi(T) + theta(T) + 1", Pd, AtMost, Some(i(t.xi) + i(t.theta) + 1), e, true, None);
        chain.push(
            "pd-xi-theta",
            "xi(T) + theta(T)",
            Pd,
            AtMost,
            Some(i(t.xi) + i(t.theta)),
            e,
            true,
            (canonical && !is_cycle).then_some(ConstructionKind::XiTheta),
        );
        chain.push("pd-theta-lower", "theta(T) - 1", Pd, AtLeast, Some(i(t.theta) - 1), e, true, None);
    }

    let pd_tree = if caps.pd_allows(g.n()) {
        Some(partition_dimension_exact(&all_pairs_distances(&eps_tree.graph)?, caps.pd)?.0)
    } else {
        None
    };
    chain.push(
        "pd-tree-plus-three",
        "pd(T) + 3",
        Pd,
        AtMost,
        pd_tree.map(|p| i(p) + 3),
        Some(eps_tree.deleted_edge),
        true,
        pd_tree.is_some().then_some(ConstructionKind::Lift),
    );

    let mut wanted: Vec<ConstructionKind> = Vec::new();
    if cycle_degrees_ok {
        wanted.push(ConstructionKind::PendantSet);
    }
    if unit_terminal {
        wanted.push(unit_cert);
    }
    if inv.kappa >= 1 {
        wanted.push(ConstructionKind::KappaTau);
    }
    if !is_cycle {
        wanted.push(ConstructionKind::XiTheta);
    }
    if pd_tree.is_some() {
        wanted.push(ConstructionKind::Lift);
    }
    let mut constructions = Vec::new();
    let mut failures = Vec::new();
    for kind in wanted {
        match construct(kind, g, caps.pd) {
            Ok(c) => {
                if !c.verified {
                    failures.push(format!("{kind}: constructed object of size {} did not verify against bound {}", c.size, c.claimed_bound));
                }
                constructions.push(c);
            }
            Err(e) => failures.push(format!("{kind}: {e}")),
        }
    }

    let header = Header {
        id: id.into(),
        kind: GraphKind::Unicyclic,
        cycle: Some(g.cycle().to_vec()),
        invariants: inv,
        trees,
        constructions,
        construction_failures: failures,
    };
    Ok(finish(header, graph, exact, chain))
}

/// Bound chain for a tree: the tree formula for `dim`, `pd = 2` exactly for
/// paths, and `pd <= dim + 1`. Unicyclic bounds are listed as inapplicable.
pub fn tree_bounds_report(id: impl Into<String>, t: &Graph, caps: SolverCaps) -> Result<BoundsReport> {
    if !t.is_tree() {
        return Err(crate::error::Error::NotATree {
            vertices: t.n(),
            edges: t.edge_count(),
        });
    }
    let inv = GraphInvariants::of_graph(t);
    let exact = Exact::solve(t, caps)?;
    let mut chain = exact.chain();
    use Relation::*;
    use Target::*;

    let path = t.is_path();
    chain.push("dim-tree-formula", "n1(T) - ex(T)", Dim, Equals, Some(i(inv.n1) - i(inv.ex)), None, !path && t.n() > 1, None);
    chain.push("dim-path", "1", Dim, Equals, Some(1), None, path && t.n() > 1, None);
    chain.push("pd-path", "2", Pd, Equals, Some(2), None, path && t.n() > 1, None);
    chain.push("pd-not-path", "3", Pd, AtLeast, Some(3), None, !path, None);
    chain.push("pd-dim", "dim(G) + 1", Pd, AtMost, chain.dim.map(|d| i(d) + 1), None, t.n() > 1, None);

    for (name, formula, target, relation) in [
        ("dim-tree-lower", "dim(T) - 2", Dim, AtLeast),
        ("dim-tree-upper", "dim(T) + 1", Dim, AtMost),
        ("dim-leaves-lower", "n1(T) - ex(T) - 2", Dim, AtLeast),
        ("dim-leaves-upper", "n1(T) - ex(T) + 1", Dim, AtMost),
        ("pd-leaves", "n1(T) - ex(T) + 2", Pd, AtMost),
        ("dim-pendant", "n1(G) - rho(G)", Dim, AtMost),
        ("pd-pendant", "n1(G) - rho(G) + 1", Pd, AtMost),
        ("dim-cycle", "2", Dim, Equals),
        ("pd-unit-terminal", "3", Pd, Equals),
        ("pd-kappa-tau", "kappa(G) + tau(G) + 1", Pd, AtMost),
        ("pd-kappa-tau-tree", "kappa(T) + tau(T) + 1", Pd, AtMost),
        ("pd-xi-theta-plus-one", "xi(T) + theta(T) + 1", Pd, AtMost),
        ("pd-xi-theta", "xi(T) + theta(T)", Pd, AtMost),
        ("pd-theta-lower", "theta(T) - 1", Pd, AtLeast),
        ("pd-tree-plus-three", "pd(T) + 3", Pd, AtMost),
    ] {
        chain.push(name, formula, target, relation, None, None, false, None);
    }

    let header = Header {
        id: id.into(),
        kind: GraphKind::Tree,
        cycle: None,
        invariants: inv,
        trees: Vec::new(),
        constructions: Vec::new(),
        construction_failures: Vec::new(),
    };
    Ok(finish(header, t, exact, chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{corona_cycle, cycle_graph, paper_c4k, paper_sun, path_graph, star_graph};

    fn value(r: &BoundsReport, name: &str) -> Option<i64> {
        r.bound(name).next().unwrap().value
    }

    #[test]
    fn c4k_example() {
        let r = bounds_report("c4k:2", &paper_c4k(2).unwrap(), SolverCaps::default()).unwrap();
        assert_eq!(r.dim, Some(3));
        assert!(r.is_clean(), "{:?} {:?}", r.violations, r.construction_failures);
        // removing u4u1 = {0, 3}: n1(T) = 3, ex(T) = 1, upper bound 3 is tight
        let at = |name: &str| {
            r.bound(name)
                .find(|b| b.tree == Some((0, 3)))
                .unwrap()
                .value
        };
        assert_eq!(at("dim-leaves-upper"), Some(3));
        assert_eq!(at("dim-leaves-lower"), Some(0));
        // removing u2u3 = {1, 2} leaves four pendants
        let far = r.bound("dim-leaves-upper").find(|b| b.tree == Some((1, 2))).unwrap();
        assert_eq!(far.value, Some(4));
        assert_eq!(r.trees.len(), 4);
    }

    #[test]
    fn corona_triangle_values() {
        let r = bounds_report("corona", &corona_cycle(3, 3).unwrap(), SolverCaps::default()).unwrap();
        assert_eq!(value(&r, "pd-kappa-tau"), Some(7));
        assert_eq!(value(&r, "pd-pendant"), Some(7));
        let eps = r.trees.iter().find(|t| t.minimum_leaf).unwrap().deleted_edge;
        assert_eq!(r.bound("pd-leaves").find(|b| b.tree == Some(eps)).unwrap().value, Some(8));
        assert!(r.is_clean());
        assert!(r.pd.unwrap() <= 7);
    }

    #[test]
    fn sun_above_caps_reports_bounds_only() {
        let r = bounds_report("sun:4", &paper_sun(4).unwrap(), SolverCaps::default()).unwrap();
        assert_eq!((r.dim, r.pd), (None, None));
        assert_eq!(value(&r, "pd-kappa-tau"), Some(9));
        assert_eq!(value(&r, "pd-pendant"), Some(13));
        assert!(r.bounds.iter().all(|b| b.satisfied.is_none()));
        assert!(r.is_clean(), "{:?}", r.construction_failures);
        assert!(r.constructions.iter().all(|c| c.verified));
    }

    #[test]
    fn cycle_report() {
        let r = bounds_report("C6", &cycle_graph(6).unwrap(), SolverCaps::default()).unwrap();
        assert_eq!(r.pd, Some(3));
        assert_eq!(r.dim, Some(2));
        assert_eq!(value(&r, "pd-dim"), Some(3));
        let unit = r.bound("pd-unit-terminal").next().unwrap();
        assert!(unit.applicable && unit.satisfied == Some(true));
        assert!(!r.bound("pd-kappa-tau").next().unwrap().applicable);
        assert!(!r.bound("dim-pendant").next().unwrap().applicable);
        assert!(r.is_clean());
    }

    #[test]
    fn tree_reports() {
        let r = tree_bounds_report("P6", &path_graph(6).unwrap(), SolverCaps::default()).unwrap();
        assert_eq!((r.dim, r.pd), (Some(1), Some(2)));
        assert!(r.is_clean());
        assert!(r.bound("pd-leaves").all(|b| !b.applicable));

        let r = tree_bounds_report("star", &star_graph(4).unwrap(), SolverCaps::default()).unwrap();
        let formula = r.bound("dim-tree-formula").next().unwrap();
        assert_eq!((formula.value, formula.satisfied), (Some(3), Some(true)));

        assert!(tree_bounds_report("C5", cycle_graph(5).unwrap().graph(), SolverCaps::default()).is_err());
    }

    #[test]
    fn tree_dimension_formula_matches_exact_solver() {
        for n in 2..=9 {
            for t in crate::generators::exhaustive_trees(n).unwrap() {
                let dm = all_pairs_distances(&t).unwrap();
                assert_eq!(tree_dimension(&t), metric_dimension_exact(&dm, 16).unwrap().0);
            }
        }
    }
}
