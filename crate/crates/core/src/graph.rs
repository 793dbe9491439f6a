//! Simple undirected graphs over dense vertex ids, hop distances, and the
//! unicyclic wrapper with its canonical cycle and spanning trees.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple undirected graph. Vertex ids are exactly `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops and repeated edges are
    /// errors; isolated vertices are allowed here (the text parser is stricter).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, edges.into_iter().enumerate().map(|(i, e)| (i + 1, e)))
    }

    fn build<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, (Vertex, Vertex))>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (line, (u, v)) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge { line, u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        bfs(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// `P_n` for `n >= 1` (a single vertex counts as the trivial path).
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.adj.iter().all(|ns| ns.len() <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        self.n() >= 3
            && self.edge_count == self.n()
            && self.adj.iter().all(|ns| ns.len() == 2)
            && self.is_connected()
    }

    /// Copy of this graph with the edge `u v` removed.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidGenerator(format!("edge {u}-{v} not present")));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Graph {
            adj,
            edge_count: self.edge_count - 1,
        })
    }

    /// Copy of this graph with a new vertex `n` hanging off `v`.
    pub fn with_pendant(&self, v: Vertex) -> Graph {
        let mut adj = self.adj.clone();
        let new = adj.len();
        adj[v].push(new);
        adj.push(vec![v]);
        Graph {
            adj,
            edge_count: self.edge_count + 1,
        }
    }

    /// Edge-list text accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_edge_list(s)
    }
}

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// nonnegative integers, `#` comment lines, blank lines ignored. The vertex
/// count is `1 + max id` and every id below it must occur in some edge.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id: Option<Vertex> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || Error::Malformed {
            line: i + 1,
            content: line.to_string(),
        };
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(malformed());
        };
        let u: Vertex = a.parse().map_err(|_| malformed())?;
        let v: Vertex = b.parse().map_err(|_| malformed())?;
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((i + 1, (u, v)));
    }
    let n = max_id.map(|m| m + 1).ok_or(Error::EmptyGraph)?;
    let g = Graph::build(n, edges)?;
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::VertexGap { vertex, n });
    }
    Ok(g)
}

pub(crate) const UNREACHABLE: u32 = u32::MAX;

pub(crate) fn bfs(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Dense all-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Distance from `v` to the nearest member of `set`; `None` for an empty set.
    pub fn to_set(&self, v: Vertex, set: &[Vertex]) -> Option<u32> {
        set.iter().map(|&u| self.get(v, u)).min()
    }
}

/// BFS from every vertex. Fails on the first unreachable pair.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for u in 0..n {
        let row = bfs(g, u);
        if let Some(v) = row.iter().position(|&d| d == UNREACHABLE) {
            return Err(Error::Disconnected { u, v });
        }
        dist.extend(row);
    }
    Ok(DistanceMatrix { n, dist })
}

/// A connected graph with exactly one cycle, stored with its canonical
/// cycle ordering `c_0 .. c_{k-1}`: `c_0` is the smallest cycle label and
/// `c_1` the smaller of its two cycle neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnicyclicGraph {
    graph: Graph,
    cycle: Vec<Vertex>,
    #[serde(skip)]
    on_cycle: Vec<bool>,
}

impl UnicyclicGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        validate_unicyclic(graph)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn cycle(&self) -> &[Vertex] {
        &self.cycle
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_on_cycle(&self, v: Vertex) -> bool {
        self.on_cycle[v]
    }

    /// Whether the whole graph is the cycle `C_n`.
    pub fn is_cycle_graph(&self) -> bool {
        self.cycle.len() == self.n()
    }

    /// Cycle edges in cycle order: `c_0c_1, c_1c_2, …, c_{k-1}c_0`.
    pub fn cycle_edges(&self) -> Vec<(Vertex, Vertex)> {
        let k = self.cycle.len();
        (0..k)
            .map(|i| (self.cycle[i], self.cycle[(i + 1) % k]))
            .collect()
    }

    pub fn is_cycle_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n()
            && v < self.n()
            && self.on_cycle[u]
            && self.on_cycle[v]
            && self.graph.has_edge(u, v)
    }

    pub fn distances(&self) -> DistanceMatrix {
        all_pairs_distances(&self.graph).expect("unicyclic graphs are connected")
    }

    /// The cycle re-read starting at `start` and stepping first to `next`
    /// (which must be a cycle neighbour of `start`).
    pub fn cycle_from(&self, start: Vertex, next: Vertex) -> Vec<Vertex> {
        let k = self.cycle.len();
        let i = self
            .cycle
            .iter()
            .position(|&c| c == start)
            .expect("start on cycle");
        let forward = self.cycle[(i + 1) % k] == next;
        (0..k)
            .map(|j| {
                if forward {
                    self.cycle[(i + j) % k]
                } else {
                    self.cycle[(i + k - j) % k]
                }
            })
            .collect()
    }

    /// The two cycle neighbours of a cycle vertex, smaller label first.
    pub fn cycle_neighbors(&self, c: Vertex) -> (Vertex, Vertex) {
        let k = self.cycle.len();
        let i = self.cycle.iter().position(|&x| x == c).expect("on cycle");
        let a = self.cycle[(i + 1) % k];
        let b = self.cycle[(i + k - 1) % k];
        (a.min(b), a.max(b))
    }

    /// For each cycle position `i`, the vertices of the tree hanging at
    /// `c_i` (including `c_i` itself), sorted.
    pub fn hanging_trees(&self) -> Vec<Vec<Vertex>> {
        let mut owner = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for (i, &c) in self.cycle.iter().enumerate() {
            owner[c] = i;
            queue.push_back(c);
        }
        while let Some(u) = queue.pop_front() {
            for &w in self.graph.neighbors(u) {
                if owner[w] == usize::MAX {
                    owner[w] = owner[u];
                    queue.push_back(w);
                }
            }
        }
        let mut trees = vec![Vec::new(); self.cycle.len()];
        for (v, &i) in owner.iter().enumerate() {
            trees[i].push(v);
        }
        trees
    }

    /// One spanning tree per cycle edge, in cycle-edge order.
    pub fn spanning_trees(&self) -> Vec<SpanningTree> {
        self.cycle_edges()
            .into_iter()
            .map(|(u, v)| SpanningTree {
                graph: self.graph.without_edge(u, v).expect("cycle edge present"),
                deleted_edge: (u.min(v), u.max(v)),
            })
            .collect()
    }

    pub fn spanning_tree_without(&self, u: Vertex, v: Vertex) -> Result<SpanningTree> {
        if !self.is_cycle_edge(u, v) {
            return Err(Error::Precondition {
                construction: "spanning tree",
                hypothesis: format!("{u}-{v} is not a cycle edge"),
            });
        }
        Ok(SpanningTree {
            graph: self.graph.without_edge(u, v)?,
            deleted_edge: (u.min(v), u.max(v)),
        })
    }
}

/// Checks connectivity and `|E| = |V|`, peels pendant vertices until only
/// the cycle remains, and orders it canonically.
pub fn validate_unicyclic(graph: Graph) -> Result<UnicyclicGraph> {
    let n = graph.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let dist = bfs(&graph, 0);
    if let Some(v) = dist.iter().position(|&d| d == UNREACHABLE) {
        return Err(Error::Disconnected { u: 0, v });
    }
    if graph.edge_count() != n {
        return Err(Error::NotUnicyclic {
            vertices: n,
            edges: graph.edge_count(),
        });
    }

    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in graph.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let on_cycle: Vec<bool> = removed.iter().map(|r| !r).collect();

    let c0 = (0..n).find(|&v| on_cycle[v]).expect("a connected graph with n edges has a cycle");
    let c1 = *graph
        .neighbors(c0)
        .iter()
        .find(|&&w| on_cycle[w])
        .expect("cycle vertex has cycle neighbours");
    let mut cycle = vec![c0, c1];
    loop {
        let prev = cycle[cycle.len() - 2];
        let cur = cycle[cycle.len() - 1];
        let next = *graph
            .neighbors(cur)
            .iter()
            .find(|&&w| on_cycle[w] && w != prev)
            .expect("cycle vertices have two cycle neighbours");
        if next == c0 {
            break;
        }
        cycle.push(next);
    }
    Ok(UnicyclicGraph {
        graph,
        cycle,
        on_cycle,
    })
}

/// A spanning tree of a unicyclic graph: the graph minus one cycle edge.
/// `deleted_edge` is stored with the smaller endpoint first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningTree {
    pub graph: Graph,
    pub deleted_edge: (Vertex, Vertex),
}

pub fn spanning_trees(g: &UnicyclicGraph) -> Vec<SpanningTree> {
    g.spanning_trees()
}
