//! Explicit resolving sets and partitions for unicyclic graphs, each checked
//! against the resolvability oracle before it is handed back.
//!
//! All free choices (which exterior major comes first, cycle start and
//! direction, terminal and leaf order, the deleted edge) fall to the
//! smallest label so the output is reproducible.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, SpanningTree, UnicyclicGraph, Vertex};
use crate::invariants::{epsilon, pendant_vertices, rho, supports, terminal_profiles, xi_theta};
use crate::resolve::{
    check_resolving_partition, check_resolving_set, partition_dimension_exact, OrderedPartition,
    ResolutionWitness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    PendantSet,
    Cycle,
    UnitTerminal,
    KappaTau,
    XiTheta,
    Lift,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 6] = [
        ConstructionKind::PendantSet,
        ConstructionKind::Cycle,
        ConstructionKind::UnitTerminal,
        ConstructionKind::KappaTau,
        ConstructionKind::XiTheta,
        ConstructionKind::Lift,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ConstructionKind::PendantSet => "pendant-set",
            ConstructionKind::Cycle => "cycle",
            ConstructionKind::UnitTerminal => "unit-terminal",
            ConstructionKind::KappaTau => "kappa-tau",
            ConstructionKind::XiTheta => "xi-theta",
            ConstructionKind::Lift => "lift",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolvingObject {
    Set(Vec<Vertex>),
    Partition(OrderedPartition),
}

impl ResolvingObject {
    pub fn size(&self) -> usize {
        match self {
            ResolvingObject::Set(s) => s.len(),
            ResolvingObject::Partition(p) => p.len(),
        }
    }

    pub fn as_partition(&self) -> Option<&OrderedPartition> {
        match self {
            ResolvingObject::Partition(p) => Some(p),
            ResolvingObject::Set(_) => None,
        }
    }
}

/// A constructed set or partition with the bound it is meant to certify.
/// `verified` holds exactly when the checker accepts the object and its
/// size is within `claimed_bound`; otherwise `witness` carries the twin pair
/// (if the checker rejected it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedConstruction {
    pub name: ConstructionKind,
    pub object: ResolvingObject,
    pub size: usize,
    pub claimed_bound: usize,
    pub verified: bool,
    pub witness: Option<[Vertex; 2]>,
}

impl CertifiedConstruction {
    fn certify(name: ConstructionKind, object: ResolvingObject, claimed_bound: usize, dm: &DistanceMatrix) -> Result<Self> {
        let check = match &object {
            ResolvingObject::Set(s) => check_resolving_set(dm, s)?,
            ResolvingObject::Partition(p) => check_resolving_partition(dm, p)?,
        };
        let size = object.size();
        Ok(CertifiedConstruction {
            name,
            size,
            claimed_bound,
            verified: check.is_resolving() && size <= claimed_bound,
            witness: check.twin().map(|(u, v)| [u, v]),
            object,
        })
    }
}

fn precondition(construction: ConstructionKind, hypothesis: impl Into<String>) -> Error {
    Error::Precondition {
        construction: construction.name(),
        hypothesis: hypothesis.into(),
    }
}

/// Drops empty blocks and validates the rest as a partition of `0..n`.
fn assemble(blocks: Vec<Vec<Vertex>>, n: usize) -> Result<OrderedPartition> {
    OrderedPartition::new(blocks.into_iter().filter(|b| !b.is_empty()).collect(), n)
}

/// All pendants except, on every support carrying several of them, the
/// largest-labelled one. Needs every cycle vertex to have degree >= 3;
/// certifies `dim(G) <= n1 - rho`.
pub fn pendant_resolving_set(g: &UnicyclicGraph) -> Result<CertifiedConstruction> {
    let kind = ConstructionKind::PendantSet;
    let graph = g.graph();
    if let Some(&c) = g.cycle().iter().find(|&&c| graph.degree(c) < 3) {
        return Err(precondition(
            kind,
            format!("every vertex of the cycle has degree greater than two (cycle vertex {c} has degree {})", graph.degree(c)),
        ));
    }
    let mut drop: Vec<Vertex> = supports(graph)
        .into_iter()
        .filter(|(_, leaves)| leaves.len() > 1)
        .map(|(_, leaves)| *leaves.last().expect("nonempty"))
        .collect();
    drop.sort_unstable();
    let set: Vec<Vertex> = pendant_vertices(graph)
        .into_iter()
        .filter(|v| drop.binary_search(v).is_err())
        .collect();
    let claimed = pendant_vertices(graph).len() - rho(graph);
    CertifiedConstruction::certify(kind, ResolvingObject::Set(set), claimed, &g.distances())
}

/// `{c_0}, {c_1 .. c_{⌊n/2⌋}}, {rest}` on a bare cycle; falls back to the
/// exact solver's witness should the checker ever reject it.
pub fn cycle_partition(g: &UnicyclicGraph) -> Result<CertifiedConstruction> {
    let kind = ConstructionKind::Cycle;
    if !g.is_cycle_graph() {
        return Err(precondition(kind, "G is a cycle graph"));
    }
    let c = g.cycle();
    let half = c.len() / 2;
    let blocks = vec![vec![c[0]], c[1..=half].to_vec(), c[half + 1..].to_vec()];
    let dm = g.distances();
    let built = CertifiedConstruction::certify(kind, ResolvingObject::Partition(assemble(blocks, g.n())?), 3, &dm)?;
    if built.verified {
        return Ok(built);
    }
    let (_, exact) = partition_dimension_exact(&dm, g.n())?;
    CertifiedConstruction::certify(kind, ResolvingObject::Partition(exact), 3, &dm)
}

/// Three-part partition for graphs whose exterior majors all have terminal
/// degree one. The cycle is re-read from the smallest exterior major `c_0`
/// towards its smaller cycle neighbour, and `W_i` is the hanging path at
/// `c_i`:
///
/// * `k = 3`: `{W_0, W_1, W_2}`
/// * `k` even: `{W_0, W_{k/2} ∪ W_{k/2+1}, rest}`
/// * `k >= 5` odd: `{W_0 ∪ W_1, W_{⌊k/2⌋} ∪ W_{⌈k/2⌉}, rest}`
pub fn unit_terminal_partition(g: &UnicyclicGraph) -> Result<CertifiedConstruction> {
    let kind = ConstructionKind::UnitTerminal;
    let graph = g.graph();
    let exterior: Vec<_> = terminal_profiles(graph)
        .into_iter()
        .filter(|p| p.is_exterior())
        .collect();
    if exterior.is_empty() {
        return Err(precondition(kind, "G has an exterior major vertex"));
    }
    if let Some(p) = exterior.iter().find(|p| p.terminal_degree() != 1) {
        return Err(precondition(
            kind,
            format!(
                "every exterior major vertex has terminal degree one (vertex {} has {})",
                p.major,
                p.terminal_degree()
            ),
        ));
    }
    if let Some(p) = exterior
        .iter()
        .find(|p| !g.is_on_cycle(p.major) || graph.degree(p.major) != 3)
    {
        return Err(precondition(
            kind,
            format!("every exterior major vertex has degree three and lies on the cycle (vertex {})", p.major),
        ));
    }

    let c0 = exterior[0].major;
    let (toward, _) = g.cycle_neighbors(c0);
    let order = g.cycle_from(c0, toward);
    let k = order.len();
    let hanging = g.hanging_trees();
    let w = |i: usize| -> Vec<Vertex> {
        let pos = g.cycle().iter().position(|&c| c == order[i]).expect("on cycle");
        hanging[pos].clone()
    };
    let union = |a: Vec<Vertex>, b: Vec<Vertex>| -> Vec<Vertex> { a.into_iter().chain(b).collect() };
    let rest = |taken: &[Vec<Vertex>]| -> Vec<Vertex> {
        (0..g.n()).filter(|v| !taken.iter().any(|b| b.contains(v))).collect()
    };

    let mut blocks = if k == 3 {
        vec![w(0), w(1), w(2)]
    } else if k % 2 == 0 {
        vec![w(0), union(w(k / 2), w(k / 2 + 1))]
    } else {
        vec![union(w(0), w(1)), union(w(k / 2), w(k / 2 + 1))]
    };
    if k > 3 {
        let r = rest(&blocks);
        blocks.push(r);
    }
    let partition = assemble(blocks, g.n())?;
    CertifiedConstruction::certify(kind, ResolvingObject::Partition(partition), 3, &g.distances())
}

/// Partition `{A, B, A_1..A_κ, B_2..B_{τ-1}, R}` for graphs with an
/// exterior major of terminal degree > 1. With `s_l` the smallest such
/// major, `u` its nearest cycle vertex and `v` the smaller cycle neighbour
/// of `u`: `A = {v}`, `B` the rest of the cycle, `A_i` the shortest
/// terminal branch of `s_i`, `B_j` the union of the `j`-th branches, and `R`
/// whatever is left. Certifies `pd(G) <= κ + τ + 1`.
pub fn kappa_tau_partition(g: &UnicyclicGraph) -> Result<CertifiedConstruction> {
    let kind = ConstructionKind::KappaTau;
    let profiles: Vec<_> = terminal_profiles(g.graph())
        .into_iter()
        .filter(|p| p.terminal_degree() > 1)
        .collect();
    let Some(first) = profiles.first() else {
        return Err(precondition(
            kind,
            "G contains an exterior major vertex of terminal degree greater than one",
        ));
    };
    let kappa = profiles.len();
    let tau = profiles.iter().map(|p| p.terminal_degree()).max().unwrap_or(0);
    let dm = g.distances();

    let s_l = first.major;
    let u = *g
        .cycle()
        .iter()
        .min_by_key(|&&c| (dm.get(c, s_l), c))
        .expect("cycle nonempty");
    let (v, _) = g.cycle_neighbors(u);

    let mut blocks: Vec<Vec<Vertex>> = vec![vec![v], g.cycle().iter().copied().filter(|&c| c != v).collect()];
    for p in &profiles {
        blocks.push(p.paths[0].clone());
    }
    for j in 2..tau {
        blocks.push(
            profiles
                .iter()
                .filter_map(|p| p.paths.get(j - 1))
                .flatten()
                .copied()
                .collect(),
        );
    }
    let mut taken = vec![false; g.n()];
    for b in &blocks {
        for &x in b {
            taken[x] = true;
        }
    }
    blocks.push((0..g.n()).filter(|&x| !taken[x]).collect());

    let partition = assemble(blocks, g.n())?;
    CertifiedConstruction::certify(kind, ResolvingObject::Partition(partition), kappa + tau + 1, &dm)
}

/// Partition `{A, A_1..A_ξ, B_2..B_θ}` built on the minimum-leaf spanning
/// tree `T`: `A_i` holds the first leaf of the `i`-th support of `T`, `B_j`
/// the `j`-th leaves of all supports, `A` the remainder. Checked with
/// distances in `G`. Certifies `pd(G) <= ξ(T) + θ(T)`.
///
/// Supports and their leaves are taken in label order, except that an
/// endpoint of the deleted edge with degree two in `G` (a leaf of `T`) is
/// listed first among its support's leaves.
pub fn xi_theta_partition(g: &UnicyclicGraph) -> Result<CertifiedConstruction> {
    let kind = ConstructionKind::XiTheta;
    if g.is_cycle_graph() {
        return Err(precondition(kind, "G is not a cycle graph"));
    }
    let (_, tree) = epsilon(g);
    let (a, b) = tree.deleted_edge;
    let graph = g.graph();
    if graph.degree(a) < 3 && graph.degree(b) < 3 {
        return Err(precondition(
            kind,
            format!("an endpoint of the deleted edge {a}-{b} has degree at least three in G"),
        ));
    }
    let (xi, theta) = xi_theta(&tree.graph)?;
    let mut sups = supports(&tree.graph);
    for (_, leaves) in sups.iter_mut() {
        for end in [a, b] {
            if graph.degree(end) == 2 {
                if let Some(i) = leaves.iter().position(|&l| l == end) {
                    let l = leaves.remove(i);
                    leaves.insert(0, l);
                }
            }
        }
    }

    let mut leaf_blocks: Vec<Vec<Vertex>> = sups.iter().map(|(_, leaves)| vec![leaves[0]]).collect();
    for j in 2..=theta {
        leaf_blocks.push(sups.iter().filter_map(|(_, leaves)| leaves.get(j - 1).copied()).collect());
    }
    let mut taken = vec![false; g.n()];
    for x in leaf_blocks.iter().flatten() {
        taken[*x] = true;
    }
    let mut blocks = vec![(0..g.n()).filter(|&x| !taken[x]).collect::<Vec<_>>()];
    blocks.extend(leaf_blocks);

    let partition = assemble(blocks, g.n())?;
    CertifiedConstruction::certify(kind, ResolvingObject::Partition(partition), xi + theta, &g.distances())
}

/// Turns a resolving partition of the spanning tree `t` into one of `G`.
/// With the deleted edge read as `c_0 c_1` (`c_0` the smaller label) and the
/// cycle numbered onwards from `c_1`, every part loses
/// `D = {c_0, c_1, c_⌊k/2⌋}` and the members of `D` become singletons.
/// Certifies `pd(G) <= |pi_t| + 3`.
pub fn lift_tree_partition(
    g: &UnicyclicGraph,
    pi_t: &OrderedPartition,
    t: &SpanningTree,
) -> Result<CertifiedConstruction> {
    let kind = ConstructionKind::Lift;
    let (a, b) = t.deleted_edge;
    if !g.is_cycle_edge(a, b) {
        return Err(precondition(kind, format!("the deleted edge {a}-{b} is a cycle edge of G")));
    }
    if g.graph().without_edge(a, b)? != t.graph {
        return Err(precondition(kind, "T is G minus its deleted edge"));
    }
    let tree_dm = all_pairs_distances(&t.graph)?;
    if let ResolutionWitness::NotResolving { u, v } = check_resolving_partition(&tree_dm, pi_t)? {
        return Err(precondition(
            kind,
            format!("the tree partition is resolving in T (vertices {u} and {v} share a representation)"),
        ));
    }

    let (c0, c1) = (a.min(b), a.max(b));
    let order = g.cycle_from(c0, c1);
    let k = order.len();
    let mut special = vec![c0, c1];
    if !special.contains(&order[k / 2]) {
        special.push(order[k / 2]);
    }
    let mut blocks: Vec<Vec<Vertex>> = pi_t
        .parts()
        .iter()
        .map(|part| part.iter().copied().filter(|x| !special.contains(x)).collect())
        .collect();
    blocks.extend(special.iter().map(|&c| vec![c]));

    let partition = assemble(blocks, g.n())?;
    CertifiedConstruction::certify(kind, ResolvingObject::Partition(partition), pi_t.len() + 3, &g.distances())
}

/// The lift applied to an optimum partition of the minimum-leaf spanning tree.
pub fn lift_optimal_tree_partition(g: &UnicyclicGraph, tree: &SpanningTree, pd_cap: usize) -> Result<CertifiedConstruction> {
    let (_, pi_t) = partition_dimension_exact(&all_pairs_distances(&tree.graph)?, pd_cap)?;
    lift_tree_partition(g, &pi_t, tree)
}

/// Runs construction `kind` with its default inputs (the lift uses an
/// optimum partition of the minimum-leaf spanning tree).
pub fn construct(kind: ConstructionKind, g: &UnicyclicGraph, pd_cap: usize) -> Result<CertifiedConstruction> {
    match kind {
        ConstructionKind::PendantSet => pendant_resolving_set(g),
        ConstructionKind::Cycle => cycle_partition(g),
        ConstructionKind::UnitTerminal => unit_terminal_partition(g),
        ConstructionKind::KappaTau => kappa_tau_partition(g),
        ConstructionKind::XiTheta => xi_theta_partition(g),
        ConstructionKind::Lift => lift_optimal_tree_partition(g, &epsilon(g).1, pd_cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{corona_cycle, cycle_graph, paper_c4k, paper_sun};
    use crate::graph::{validate_unicyclic, Graph};

    fn unicyclic(n: usize, edges: &[(usize, usize)]) -> UnicyclicGraph {
        validate_unicyclic(Graph::from_edges(n, edges.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn pendant_set_examples() {
        let c = pendant_resolving_set(&corona_cycle(3, 3).unwrap()).unwrap();
        assert!(c.verified);
        assert_eq!((c.size, c.claimed_bound), (6, 6));
        assert_eq!(c.object, ResolvingObject::Set(vec![3, 4, 6, 7, 9, 10]));

        let c = pendant_resolving_set(&paper_sun(4).unwrap()).unwrap();
        assert!(c.verified);
        assert_eq!(c.size, 12);

        let err = pendant_resolving_set(&paper_c4k(2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Precondition { construction: "pendant-set", .. }));
    }

    #[test]
    fn cycle_partition_examples() {
        let c = cycle_partition(&cycle_graph(4).unwrap()).unwrap();
        assert!(c.verified);
        assert_eq!(
            c.object,
            ResolvingObject::Partition(OrderedPartition::new(vec![vec![0], vec![1, 2], vec![3]], 4).unwrap())
        );
        let c = cycle_partition(&cycle_graph(3).unwrap()).unwrap();
        assert_eq!(c.object.as_partition().unwrap().parts(), &[vec![0], vec![1], vec![2]]);
        for n in 3..=40 {
            let c = cycle_partition(&cycle_graph(n).unwrap()).unwrap();
            assert!(c.verified && c.size == 3, "C{n}");
        }
        assert!(cycle_partition(&paper_c4k(2).unwrap()).is_err());
    }

    #[test]
    fn unit_terminal_examples() {
        // C6 with a 2-vertex pendant path at 0 and at 3
        let g = unicyclic(10, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (3, 8), (8, 9)]);
        let c = unit_terminal_partition(&g).unwrap();
        assert!(c.verified);
        assert_eq!(c.size, 3);
        assert_eq!(
            c.object.as_partition().unwrap().parts(),
            &[vec![0, 6, 7], vec![3, 4, 8, 9], vec![1, 2, 5]]
        );

        let c = unit_terminal_partition(&corona_cycle(3, 1).unwrap()).unwrap();
        assert!(c.verified);
        assert_eq!(c.object.as_partition().unwrap().parts(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);

        assert!(matches!(
            unit_terminal_partition(&corona_cycle(3, 3).unwrap()),
            Err(Error::Precondition { .. })
        ));
        assert!(unit_terminal_partition(&paper_sun(4).unwrap()).is_err());
        assert!(unit_terminal_partition(&cycle_graph(5).unwrap()).is_err());
    }

    #[test]
    fn kappa_tau_examples() {
        let c = kappa_tau_partition(&corona_cycle(3, 3).unwrap()).unwrap();
        assert!(c.verified);
        assert!(c.size <= 7);
        assert_eq!(c.claimed_bound, 7);

        let c = kappa_tau_partition(&paper_c4k(2).unwrap()).unwrap();
        assert!(c.verified);
        assert_eq!(c.claimed_bound, 4);
        // u = u1 = 0, v = 1: A = {1}, B = {0,2,3}, A_1 = {4}, R = {5}
        assert_eq!(
            c.object.as_partition().unwrap().parts(),
            &[vec![1], vec![0, 2, 3], vec![4], vec![5]]
        );

        for k in 4..=6 {
            let c = kappa_tau_partition(&paper_sun(k).unwrap()).unwrap();
            assert!(c.verified);
            assert!(c.size <= 2 * k + 1);
        }
        assert!(kappa_tau_partition(&cycle_graph(6).unwrap()).is_err());
    }

    #[test]
    fn xi_theta_examples() {
        let c = xi_theta_partition(&paper_c4k(2).unwrap()).unwrap();
        assert!(c.verified);
        assert_eq!(c.claimed_bound, 4);

        // triangle with pendants on two adjacent vertices: the minimum-leaf
        // tree is a path, so the bound is 3 and it is attained
        let g = unicyclic(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]);
        let c = xi_theta_partition(&g).unwrap();
        assert!(c.verified);
        assert_eq!((c.claimed_bound, c.size), (3, 3));
        assert_eq!(partition_dimension_exact(&g.distances(), 12).unwrap().0, 3);

        let c = xi_theta_partition(&corona_cycle(3, 3).unwrap()).unwrap();
        assert!(c.verified);
        assert_eq!(c.claimed_bound, 6);

        assert!(xi_theta_partition(&cycle_graph(5).unwrap()).is_err());
    }

    #[test]
    fn lift_examples() {
        let g = cycle_graph(5).unwrap();
        let (_, t) = epsilon(&g);
        let c = lift_optimal_tree_partition(&g, &t, 12).unwrap();
        assert!(c.verified);
        assert!(c.size <= 5);
        assert_eq!(partition_dimension_exact(&g.distances(), 12).unwrap().0, 3);

        let g = paper_c4k(2).unwrap();
        for t in g.spanning_trees() {
            let (pd_t, pi) = partition_dimension_exact(&all_pairs_distances(&t.graph).unwrap(), 12).unwrap();
            let c = lift_tree_partition(&g, &pi, &t).unwrap();
            assert!(c.verified);
            assert!(c.size <= pd_t + 3);
        }

        let t = g.spanning_trees().remove(0);
        let c = lift_tree_partition(&g, &OrderedPartition::singletons(g.n()), &t).unwrap();
        assert!(c.verified);
        assert_eq!(c.object.as_partition().unwrap().len(), g.n());

        // a non-resolving tree partition is refused
        let bad = OrderedPartition::new(vec![(0..g.n()).collect()], g.n()).unwrap();
        assert!(matches!(lift_tree_partition(&g, &bad, &t), Err(Error::Precondition { .. })));

        // a tree from another graph is refused
        let other = paper_c4k(3).unwrap().spanning_trees().remove(0);
        assert!(lift_tree_partition(&g, &OrderedPartition::singletons(7), &other).is_err());
    }

    #[test]
    fn names_round_trip() {
        for k in ConstructionKind::ALL {
            assert_eq!(ConstructionKind::from_name(k.name()), Some(k));
        }
        assert_eq!(ConstructionKind::from_name("nope"), None);
    }
}
