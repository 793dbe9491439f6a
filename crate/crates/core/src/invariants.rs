//! Structural counts that the dimension bounds are stated in: pendants,
//! exterior major vertices and their terminals, supports, and the
//! minimum-leaf spanning tree of a unicyclic graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs, Graph, SpanningTree, UnicyclicGraph, Vertex, UNREACHABLE};

/// A major vertex (degree >= 3) together with its terminal vertices: the
/// pendants strictly closer to it than to any other major vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TerminalProfile {
    pub major: Vertex,
    /// Sorted by (distance to `major`, label).
    pub terminals: Vec<Vertex>,
    /// `paths[j]`: vertices of the `major`–`terminals[j]` path other than
    /// `major`, ordered from the major outwards.
    pub paths: Vec<Vec<Vertex>>,
}

impl TerminalProfile {
    pub fn terminal_degree(&self) -> usize {
        self.terminals.len()
    }

    pub fn is_exterior(&self) -> bool {
        !self.terminals.is_empty()
    }
}

pub fn pendant_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

pub fn major_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&v| g.degree(v) >= 3).collect()
}

/// Support vertices with their pendant neighbours (both sorted by label).
pub fn supports(g: &Graph) -> Vec<(Vertex, Vec<Vertex>)> {
    (0..g.n())
        .filter_map(|s| {
            let leaves: Vec<Vertex> = g
                .neighbors(s)
                .iter()
                .copied()
                .filter(|&w| g.degree(w) == 1)
                .collect();
            (!leaves.is_empty()).then_some((s, leaves))
        })
        .collect()
}

/// One profile per major vertex, ordered by major label. A pendant that is
/// equidistant from its two nearest majors belongs to no profile.
pub fn terminal_profiles(g: &Graph) -> Vec<TerminalProfile> {
    let majors = major_vertices(g);
    let dist: Vec<Vec<u32>> = majors.iter().map(|&m| bfs(g, m)).collect();
    let mut profiles: Vec<TerminalProfile> = majors
        .iter()
        .map(|&major| TerminalProfile {
            major,
            terminals: Vec::new(),
            paths: Vec::new(),
        })
        .collect();

    let mut owned: Vec<(usize, u32, Vertex)> = Vec::new();
    for p in pendant_vertices(g) {
        let mut best: Option<(u32, usize)> = None;
        let mut tied = false;
        for (i, d) in dist.iter().enumerate() {
            let dp = d[p];
            if dp == UNREACHABLE {
                continue;
            }
            match best {
                None => best = Some((dp, i)),
                Some((bd, _)) if dp < bd => {
                    best = Some((dp, i));
                    tied = false;
                }
                Some((bd, _)) if dp == bd => tied = true,
                _ => {}
            }
        }
        if let (Some((d, i)), false) = (best, tied) {
            owned.push((i, d, p));
        }
    }
    owned.sort_unstable();
    for (i, _, p) in owned {
        let major = majors[i];
        let to_major = &dist[i];
        let mut path = vec![p];
        let mut cur = p;
        while to_major[cur] > 1 {
            cur = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| to_major[w] + 1 == to_major[cur])
                .expect("BFS layers are adjacent");
            path.push(cur);
        }
        debug_assert!(g.has_edge(cur, major) || cur == major);
        path.reverse();
        profiles[i].terminals.push(p);
        profiles[i].paths.push(path);
    }
    profiles
}

pub fn exterior_major_count(g: &Graph) -> usize {
    terminal_profiles(g).iter().filter(|p| p.is_exterior()).count()
}

/// Number of support vertices adjacent to more than one pendant.
pub fn rho(g: &Graph) -> usize {
    supports(g).iter().filter(|(_, leaves)| leaves.len() > 1).count()
}

/// `(kappa, tau)`: how many exterior majors have terminal degree > 1, and the
/// largest such terminal degree (0 when there are none).
pub fn kappa_tau(g: &Graph) -> (usize, usize) {
    kappa_tau_of(&terminal_profiles(g))
}

fn kappa_tau_of(profiles: &[TerminalProfile]) -> (usize, usize) {
    profiles
        .iter()
        .map(TerminalProfile::terminal_degree)
        .filter(|&l| l > 1)
        .fold((0, 0), |(k, t), l| (k + 1, t.max(l)))
}

/// `(xi, theta)` of a tree: support count and the most pendants on one support.
pub fn xi_theta(t: &Graph) -> Result<(usize, usize)> {
    if !t.is_tree() {
        return Err(Error::NotATree {
            vertices: t.n(),
            edges: t.edge_count(),
        });
    }
    let s = supports(t);
    let theta = s.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    Ok((s.len(), theta))
}

/// Minimum leaf count over the spanning trees, with the first minimiser in
/// lexicographic order of the (sorted) deleted edge.
pub fn epsilon(g: &UnicyclicGraph) -> (usize, SpanningTree) {
    g.spanning_trees()
        .into_iter()
        .map(|t| (pendant_vertices(&t.graph).len(), t))
        .min_by_key(|(leaves, t)| (*leaves, t.deleted_edge))
        .expect("a cycle has at least three edges")
}

/// All counts at once. `epsilon` is set for unicyclic graphs, `xi`/`theta`
/// for trees; the others are defined for any graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub n1: usize,
    pub ex: usize,
    pub rho: usize,
    pub kappa: usize,
    pub tau: usize,
    pub epsilon: Option<usize>,
    pub xi: Option<usize>,
    pub theta: Option<usize>,
}

impl GraphInvariants {
    pub fn of_graph(g: &Graph) -> Self {
        let profiles = terminal_profiles(g);
        let (kappa, tau) = kappa_tau_of(&profiles);
        let (xi, theta) = match xi_theta(g) {
            Ok((x, t)) => (Some(x), Some(t)),
            Err(_) => (None, None),
        };
        GraphInvariants {
            n1: pendant_vertices(g).len(),
            ex: profiles.iter().filter(|p| p.is_exterior()).count(),
            rho: rho(g),
            kappa,
            tau,
            epsilon: None,
            xi,
            theta,
        }
    }

    pub fn of_unicyclic(g: &UnicyclicGraph) -> Self {
        GraphInvariants {
            epsilon: Some(epsilon(g).0),
            ..Self::of_graph(g.graph())
        }
    }
}
