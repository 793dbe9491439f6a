//! Reference implementations used to check the library from the outside.
//! Deliberately naive: Floyd–Warshall distances, spanning trees found by
//! deleting each edge and testing connectivity, invariants straight from
//! their definitions.

#![allow(dead_code, clippy::needless_range_loop)]

use udim_core::Graph;

pub const INF: u32 = u32::MAX / 4;

pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for &w in g.neighbors(v) {
            d[v][w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn connected(g: &Graph) -> bool {
    floyd(g).iter().all(|row| row.iter().all(|&x| x < INF))
}

/// `(deleted edge, tree)` for every edge whose removal leaves a tree.
pub fn spanning_trees(g: &Graph) -> Vec<((usize, usize), Graph)> {
    let all = edges(g);
    all.iter()
        .filter_map(|&e| {
            let rest: Vec<_> = all.iter().copied().filter(|&f| f != e).collect();
            let t = Graph::from_edges(g.n(), rest).unwrap();
            connected(&t).then_some((e, t))
        })
        .collect()
}

pub fn leaves(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.neighbors(v).len() == 1).collect()
}

pub fn is_path(g: &Graph) -> bool {
    g.n() >= 1
        && g.edge_count() + 1 == g.n()
        && connected(g)
        && (0..g.n()).all(|v| g.neighbors(v).len() <= 2)
}

/// Terminal degree of every major vertex.
pub fn terminal_degrees(g: &Graph) -> Vec<(usize, usize)> {
    let d = floyd(g);
    let majors: Vec<usize> = (0..g.n()).filter(|&v| g.neighbors(v).len() >= 3).collect();
    majors
        .iter()
        .map(|&m| {
            let count = leaves(g)
                .into_iter()
                .filter(|&p| majors.iter().all(|&w| w == m || d[p][m] < d[p][w]))
                .count();
            (m, count)
        })
        .collect()
}

pub fn ex(g: &Graph) -> usize {
    terminal_degrees(g).iter().filter(|&&(_, c)| c > 0).count()
}

pub fn kappa_tau(g: &Graph) -> (usize, usize) {
    let big: Vec<usize> = terminal_degrees(g)
        .into_iter()
        .map(|(_, c)| c)
        .filter(|&c| c > 1)
        .collect();
    (big.len(), big.iter().copied().max().unwrap_or(0))
}

/// Number of pendant neighbours of each support vertex.
pub fn support_loads(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .map(|s| g.neighbors(s).iter().filter(|&&w| g.neighbors(w).len() == 1).count())
        .filter(|&c| c > 0)
        .collect()
}

pub fn rho(g: &Graph) -> usize {
    support_loads(g).into_iter().filter(|&c| c > 1).count()
}

pub fn xi_theta(t: &Graph) -> (usize, usize) {
    let loads = support_loads(t);
    (loads.len(), loads.iter().copied().max().unwrap_or(0))
}

/// Spanning trees with the fewest leaves.
pub fn minimum_leaf_trees(g: &Graph) -> Vec<((usize, usize), Graph)> {
    let trees = spanning_trees(g);
    let eps = trees.iter().map(|(_, t)| leaves(t).len()).min().unwrap();
    trees.into_iter().filter(|(_, t)| leaves(t).len() == eps).collect()
}

/// Vertices on the cycle: those lying on no edge whose removal disconnects.
pub fn cycle_vertices(g: &Graph) -> Vec<usize> {
    let mut on = vec![false; g.n()];
    for ((u, v), _) in spanning_trees(g) {
        on[u] = true;
        on[v] = true;
    }
    (0..g.n()).filter(|&v| on[v]).collect()
}

pub fn resolves_set(d: &[Vec<u32>], s: &[usize]) -> bool {
    let n = d.len();
    let reps: Vec<Vec<u32>> = (0..n).map(|v| s.iter().map(|&w| d[v][w]).collect()).collect();
    (0..n).all(|a| (a + 1..n).all(|b| reps[a] != reps[b]))
}

pub fn resolves_partition(d: &[Vec<u32>], parts: &[Vec<usize>]) -> bool {
    let n = d.len();
    let mut covered = vec![0; n];
    for p in parts {
        for &v in p {
            covered[v] += 1;
        }
    }
    if covered.iter().any(|&c| c != 1) || parts.iter().any(|p| p.is_empty()) {
        return false;
    }
    let reps: Vec<Vec<u32>> = (0..n)
        .map(|v| parts.iter().map(|p| p.iter().map(|&w| d[v][w]).min().unwrap()).collect())
        .collect();
    (0..n).all(|a| (a + 1..n).all(|b| reps[a] != reps[b]))
}
