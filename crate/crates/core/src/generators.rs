//! Instance families: named graphs, the two worked examples, exhaustive
//! enumeration of small trees and unicyclic graphs, and seeded random
//! unicyclic graphs.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{tree_code, unicyclic_code};
use crate::error::{Error, Result};
use crate::graph::{validate_unicyclic, Graph, UnicyclicGraph, Vertex};

/// Recorded in scan output so seeds can be replayed.
pub const PRNG_ALGORITHM: &str = "ChaCha8Rng/rand_chacha-0.3 seed_from_u64+set_stream";

pub const EXHAUSTIVE_MAX_N: usize = 10;

fn invalid(msg: String) -> Error {
    Error::InvalidGenerator(msg)
}

pub fn cycle_graph(n: usize) -> Result<UnicyclicGraph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    validate_unicyclic(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,k}` with centre 0.
pub fn star_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("star needs k >= 1".into()));
    }
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// `C_4 = u1 u2 u3 u4` with pendants `v1..vk` on `u1`. Labels: `u_i = i - 1`,
/// `v_i = 3 + i`.
pub fn paper_c4k(k: usize) -> Result<UnicyclicGraph> {
    if k < 2 {
        return Err(invalid(format!("c4k needs k >= 2, got {k}")));
    }
    let edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
        .into_iter()
        .chain((0..k).map(|i| (0, 4 + i)));
    validate_unicyclic(Graph::from_edges(4 + k, edges)?)
}

/// `C_k` with `pendants` leaves on every cycle vertex. Cycle vertex `i` is
/// labelled `i`; its leaves are `k + i*pendants .. k + (i+1)*pendants`.
pub fn corona_cycle(k: usize, pendants: usize) -> Result<UnicyclicGraph> {
    if k < 3 {
        return Err(invalid(format!("cycle length must be >= 3, got {k}")));
    }
    let cycle = (0..k).map(|i| (i, (i + 1) % k));
    let leaves = (0..k).flat_map(|i| (0..pendants).map(move |j| (i, k + i * pendants + j)));
    validate_unicyclic(Graph::from_edges(k + k * pendants, cycle.chain(leaves))?)
}

/// `C_k`, `k >= 4`, with `k` pendants on each cycle vertex.
pub fn paper_sun(k: usize) -> Result<UnicyclicGraph> {
    if k < 4 {
        return Err(invalid(format!("sun needs k >= 4, got {k}")));
    }
    corona_cycle(k, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExhaustiveMode {
    /// Every labelled unicyclic graph on `0..n` exactly once.
    Labeled,
    /// One representative per isomorphism class.
    Isomorphism,
}

/// All unicyclic graphs on `n` vertices, `3 <= n <= 10`.
pub fn exhaustive_unicyclic(
    n: usize,
    mode: ExhaustiveMode,
) -> Result<Box<dyn Iterator<Item = UnicyclicGraph> + Send>> {
    if !(3..=EXHAUSTIVE_MAX_N).contains(&n) {
        return Err(invalid(format!(
            "exhaustive generation needs 3 <= n <= {EXHAUSTIVE_MAX_N}, got {n}"
        )));
    }
    Ok(match mode {
        ExhaustiveMode::Labeled => Box::new(labeled_unicyclic(n)),
        ExhaustiveMode::Isomorphism => Box::new(unicyclic_classes(n).into_iter()),
    })
}

/// Exhaustive unicyclic graphs for every order in `range`, in order.
pub fn exhaustive_unicyclic_range(
    lo: usize,
    hi: usize,
    mode: ExhaustiveMode,
) -> Result<Vec<UnicyclicGraph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(exhaustive_unicyclic(n, mode)?);
    }
    Ok(out)
}

fn labeled_unicyclic(n: usize) -> impl Iterator<Item = UnicyclicGraph> {
    (3..=n).flat_map(move |k| {
        (0..n).combinations(k).flat_map(move |subset| {
            cyclic_orders(&subset)
                .into_iter()
                .flat_map(move |order| RootedForests::new(n, order))
        })
    })
}

/// Distinct cyclic orderings of `subset` up to rotation and reflection.
fn cyclic_orders(subset: &[Vertex]) -> Vec<Vec<Vertex>> {
    let (&first, rest) = subset.split_first().expect("nonempty");
    rest.iter()
        .copied()
        .permutations(rest.len())
        .filter(|p| p[0] < p[p.len() - 1])
        .map(|p| std::iter::once(first).chain(p).collect())
        .collect()
}

/// Every assignment of a parent to each non-cycle vertex such that parent
/// chains end on the cycle, i.e. every labelled forest rooted at the cycle.
struct RootedForests {
    n: usize,
    cycle: Vec<Vertex>,
    on_cycle: Vec<bool>,
    free: Vec<Vertex>,
    choice: Vec<usize>,
    exhausted: bool,
}

impl RootedForests {
    fn new(n: usize, cycle: Vec<Vertex>) -> Self {
        let mut on_cycle = vec![false; n];
        for &c in &cycle {
            on_cycle[c] = true;
        }
        let free: Vec<Vertex> = (0..n).filter(|&v| !on_cycle[v]).collect();
        RootedForests {
            n,
            choice: vec![0; free.len()],
            cycle,
            on_cycle,
            free,
            exhausted: false,
        }
    }

    fn parent(&self, i: usize) -> Vertex {
        let v = self.free[i];
        let c = self.choice[i];
        if c >= v {
            c + 1
        } else {
            c
        }
    }

    fn advance(&mut self) {
        for c in self.choice.iter_mut() {
            *c += 1;
            if *c < self.n - 1 {
                return;
            }
            *c = 0;
        }
        self.exhausted = true;
    }

    fn current(&self) -> Option<Graph> {
        let mut parent = vec![usize::MAX; self.n];
        for i in 0..self.free.len() {
            parent[self.free[i]] = self.parent(i);
        }
        for &v in &self.free {
            let mut cur = v;
            let mut steps = 0;
            while !self.on_cycle[cur] {
                cur = parent[cur];
                steps += 1;
                if steps > self.free.len() {
                    return None;
                }
            }
        }
        let k = self.cycle.len();
        let edges = (0..k)
            .map(|i| (self.cycle[i], self.cycle[(i + 1) % k]))
            .chain(self.free.iter().map(|&v| (v, parent[v])));
        Some(Graph::from_edges(self.n, edges).expect("forest edges are simple"))
    }
}

impl Iterator for RootedForests {
    type Item = UnicyclicGraph;

    fn next(&mut self) -> Option<UnicyclicGraph> {
        while !self.exhausted {
            let g = self.current();
            self.advance();
            if self.free.is_empty() {
                self.exhausted = true;
            }
            if let Some(g) = g {
                return Some(validate_unicyclic(g).expect("cycle plus rooted forest is unicyclic"));
            }
        }
        None
    }
}

/// Isomorphism classes of unicyclic graphs on `n` vertices. Every such graph
/// other than `C_n` has a pendant whose removal leaves a unicyclic graph on
/// `n - 1` vertices, so growing by one leaf in every position reaches all
/// classes.
fn unicyclic_classes(n: usize) -> Vec<UnicyclicGraph> {
    let mut level = vec![cycle_graph(3).expect("C3")];
    for m in 4..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        let candidates = std::iter::once(cycle_graph(m).expect("cycle")).chain(
            level.iter().flat_map(|g| {
                (0..g.n()).map(move |v| {
                    validate_unicyclic(g.graph().with_pendant(v)).expect("leaf keeps one cycle")
                })
            }),
        );
        for g in candidates {
            if seen.insert(unicyclic_code(&g)) {
                next.push(g);
            }
        }
        level = next;
    }
    level
}

/// Isomorphism classes of trees on `n` vertices (`1 <= n <= 16`).
pub fn exhaustive_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=16).contains(&n) {
        return Err(invalid(format!("tree enumeration needs 1 <= n <= 16, got {n}")));
    }
    let mut level = vec![path_graph(1)?];
    for _ in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let grown = t.with_pendant(v);
                if seen.insert(tree_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// A random unicyclic graph on `n >= 3` vertices: cycle length uniform in
/// `3..=n` on a random vertex subset in random order, remaining vertices
/// attached by a uniform random forest rooted at the cycle (Wilson's
/// algorithm on `K_n` with the cycle as root set).
pub fn random_unicyclic(n: usize, seed: u64) -> Result<UnicyclicGraph> {
    random_unicyclic_stream(n, seed, 0)
}

/// As [`random_unicyclic`], drawing from ChaCha stream `stream` of `seed`, so
/// instance `i` of a batch is reproducible on its own.
pub fn random_unicyclic_stream(n: usize, seed: u64, stream: u64) -> Result<UnicyclicGraph> {
    if n < 3 {
        return Err(invalid(format!("random unicyclic needs n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let k = rng.gen_range(3..=n);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (order[i], order[(i + 1) % k])).collect();
    let mut in_tree = vec![false; n];
    for &c in &order[..k] {
        in_tree[c] = true;
    }
    let mut next = vec![usize::MAX; n];
    for &start in &order[k..] {
        let mut cur = start;
        while !in_tree[cur] {
            let r = rng.gen_range(0..n - 1);
            next[cur] = if r >= cur { r + 1 } else { r };
            cur = next[cur];
        }
        cur = start;
        while !in_tree[cur] {
            in_tree[cur] = true;
            edges.push((cur, next[cur]));
            cur = next[cur];
        }
    }
    validate_unicyclic(Graph::from_edges(n, edges)?)
}

/// Inline generator names understood by the CLI (`cycle:7`, `c4k:3`, ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    Path(usize),
    Star(usize),
    C4k(usize),
    Sun(usize),
    Corona { k: usize, pendants: usize },
    Random { n: usize, seed: u64 },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph> {
        Ok(match *self {
            GeneratorSpec::Cycle(n) => cycle_graph(n)?.into_graph(),
            GeneratorSpec::Path(n) => path_graph(n)?,
            GeneratorSpec::Star(k) => star_graph(k)?,
            GeneratorSpec::C4k(k) => paper_c4k(k)?.into_graph(),
            GeneratorSpec::Sun(k) => paper_sun(k)?.into_graph(),
            GeneratorSpec::Corona { k, pendants } => corona_cycle(k, pendants)?.into_graph(),
            GeneratorSpec::Random { n, seed } => random_unicyclic(n, seed)?.into_graph(),
        })
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid(format!("unrecognised generator `{s}`"));
        let mut parts = s.split(':');
        let name = parts.next().ok_or_else(bad)?;
        let args: Vec<u64> = parts
            .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let arg = |i: usize| args.get(i).map(|&a| a as usize).ok_or_else(bad);
        let spec = match (name, args.len()) {
            ("cycle", 1) => GeneratorSpec::Cycle(arg(0)?),
            ("path", 1) => GeneratorSpec::Path(arg(0)?),
            ("star", 1) => GeneratorSpec::Star(arg(0)?),
            ("c4k", 1) => GeneratorSpec::C4k(arg(0)?),
            ("sun", 1) => GeneratorSpec::Sun(arg(0)?),
            ("corona", 2) => GeneratorSpec::Corona {
                k: arg(0)?,
                pendants: arg(1)?,
            },
            ("random", 2) => GeneratorSpec::Random {
                n: arg(0)?,
                seed: args[1],
            },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Path(n) => write!(f, "path:{n}"),
            GeneratorSpec::Star(k) => write!(f, "star:{k}"),
            GeneratorSpec::C4k(k) => write!(f, "c4k:{k}"),
            GeneratorSpec::Sun(k) => write!(f, "sun:{k}"),
            GeneratorSpec::Corona { k, pendants } => write!(f, "corona:{k}:{pendants}"),
            GeneratorSpec::Random { n, seed } => write!(f, "random:{n}:{seed}"),
        }
    }
}
