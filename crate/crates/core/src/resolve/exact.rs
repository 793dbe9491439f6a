use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Vertex};

use super::OrderedPartition;

/// Largest graphs the brute-force solvers accept. Larger inputs are an
/// error, never a silent sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverCaps {
    pub dim: usize,
    pub pd: usize,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps { dim: 16, pd: 12 }
    }
}

impl SolverCaps {
    pub fn dim_allows(&self, n: usize) -> bool {
        n <= self.dim
    }

    pub fn pd_allows(&self, n: usize) -> bool {
        n <= self.pd
    }
}

/// Smallest resolving set. Cardinalities are tried in increasing order and
/// subsets of each cardinality in lexicographic order; the first hit is
/// returned.
///
/// Branches are cut only when the vertices still sharing a representation
/// cannot be told apart by the remaining picks: one landmark splits a class
/// into at most `diam + 1` pieces.
pub fn metric_dimension_exact(dm: &DistanceMatrix, cap: usize) -> Result<(usize, Vec<Vertex>)> {
    let n = dm.n();
    if n > cap {
        return Err(Error::CapExceeded {
            solver: "metric dimension",
            n,
            cap,
        });
    }
    if n <= 1 {
        return Ok((0, Vec::new()));
    }
    let split = dm.diameter() as usize + 1;
    let mut search = DimSearch {
        dm,
        split,
        chosen: Vec::new(),
    };
    let classes = vec![0usize; n];
    for size in 1..=n {
        if search.extend(0, size, &classes) {
            return Ok((size, search.chosen));
        }
    }
    unreachable!("the full vertex set resolves")
}

struct DimSearch<'a> {
    dm: &'a DistanceMatrix,
    split: usize,
    chosen: Vec<Vertex>,
}

impl DimSearch<'_> {
    fn extend(&mut self, start: Vertex, size: usize, classes: &[usize]) -> bool {
        let n = self.dm.n();
        let remaining = size - self.chosen.len();
        let largest = largest_class(classes);
        if remaining == 0 {
            return largest == 1;
        }
        if largest > self.split.saturating_pow(remaining as u32) {
            return false;
        }
        for w in start..=(n - remaining) {
            let refined = refine(classes, |v| self.dm.get(v, w));
            self.chosen.push(w);
            if self.extend(w + 1, size, &refined) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

fn largest_class(classes: &[usize]) -> usize {
    let mut counts = vec![0usize; classes.len()];
    for &c in classes {
        counts[c] += 1;
    }
    counts.into_iter().max().unwrap_or(0)
}

/// Splits every class by `key`, renumbering classes densely.
fn refine(classes: &[usize], key: impl Fn(Vertex) -> u32) -> Vec<usize> {
    let mut seen: Vec<(usize, u32)> = Vec::new();
    classes
        .iter()
        .enumerate()
        .map(|(v, &c)| {
            let k = (c, key(v));
            match seen.iter().position(|&s| s == k) {
                Some(i) => i,
                None => {
                    seen.push(k);
                    seen.len() - 1
                }
            }
        })
        .collect()
}

/// Smallest resolving partition. For `t = 2, 3, …` every set partition with
/// exactly `t` blocks is visited as a restricted-growth string in
/// lexicographic order; resolvability does not depend on block order, so
/// unordered partitions suffice. Blocks of the result are ordered by their
/// smallest vertex.
///
/// Two vertices at equal distance from every other vertex can never share a
/// block of a resolving partition; such assignments are skipped.
pub fn partition_dimension_exact(dm: &DistanceMatrix, cap: usize) -> Result<(usize, OrderedPartition)> {
    let n = dm.n();
    if n > cap {
        return Err(Error::CapExceeded {
            solver: "partition dimension",
            n,
            cap,
        });
    }
    if n <= 1 {
        return Ok((n, OrderedPartition::singletons(n)));
    }
    let twins_before: Vec<Vec<Vertex>> = (0..n)
        .map(|v| {
            (0..v)
                .filter(|&u| (0..n).all(|w| w == u || w == v || dm.get(u, w) == dm.get(v, w)))
                .collect()
        })
        .collect();
    for t in 2..=n {
        let mut search = PdSearch {
            dm,
            n,
            t,
            twins_before: &twins_before,
            labels: vec![0; n],
            rep: vec![0; n * t],
        };
        if search.assign(1, 1) {
            return Ok((t, OrderedPartition::from_labels(&search.labels)));
        }
    }
    unreachable!("singletons resolve")
}

struct PdSearch<'a> {
    dm: &'a DistanceMatrix,
    n: usize,
    t: usize,
    twins_before: &'a [Vec<Vertex>],
    labels: Vec<usize>,
    rep: Vec<u32>,
}

impl PdSearch<'_> {
    /// Labels `0..pos` are fixed and use blocks `0..used`.
    fn assign(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.n {
            return used == self.t && self.resolves();
        }
        let top = (used + 1).min(self.t);
        for b in 0..top {
            let new_used = used.max(b + 1);
            if new_used + (self.n - pos - 1) < self.t {
                continue;
            }
            if self.twins_before[pos].iter().any(|&u| self.labels[u] == b) {
                continue;
            }
            self.labels[pos] = b;
            if self.assign(pos + 1, new_used) {
                return true;
            }
        }
        false
    }

    fn resolves(&mut self) -> bool {
        let (n, t) = (self.n, self.t);
        self.rep.fill(u32::MAX);
        for v in 0..n {
            let row = &mut self.rep[v * t..(v + 1) * t];
            for u in 0..n {
                let d = self.dm.get(v, u);
                let slot = &mut row[self.labels[u]];
                if d < *slot {
                    *slot = d;
                }
            }
        }
        // vertices in different blocks differ in where their zero is
        for v in 1..n {
            for u in 0..v {
                if self.labels[u] == self.labels[v]
                    && self.rep[u * t..(u + 1) * t] == self.rep[v * t..(v + 1) * t]
                {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_graph, paper_c4k, path_graph, star_graph};
    use crate::graph::all_pairs_distances;
    use crate::resolve::{check_resolving_partition, check_resolving_set};

    fn dm_of(g: &crate::graph::Graph) -> DistanceMatrix {
        all_pairs_distances(g).unwrap()
    }

    #[test]
    fn dim_small_families() {
        for n in 3..=10 {
            let (d, s) = metric_dimension_exact(&cycle_graph(n).unwrap().distances(), 16).unwrap();
            assert_eq!(d, 2, "C{n}");
            assert_eq!(s, vec![0, 1]);
        }
        for n in 2..=10 {
            let (d, s) = metric_dimension_exact(&dm_of(&path_graph(n).unwrap()), 16).unwrap();
            assert_eq!((d, s), (1, vec![0]));
        }
        let (d, s) = metric_dimension_exact(&paper_c4k(2).unwrap().distances(), 16).unwrap();
        assert_eq!(d, 3);
        assert!(check_resolving_set(&paper_c4k(2).unwrap().distances(), &s).unwrap().is_resolving());
        assert_eq!(metric_dimension_exact(&dm_of(&star_graph(5).unwrap()), 16).unwrap().0, 4);
    }

    #[test]
    fn pd_small_families() {
        for n in 2..=9 {
            let (p, part) = partition_dimension_exact(&dm_of(&path_graph(n).unwrap()), 12).unwrap();
            assert_eq!(p, 2, "P{n}");
            // first two-block labelling in lexicographic order: only the last vertex split off
            assert_eq!(part.parts()[1], vec![n - 1]);
        }
        for n in 3..=9 {
            let g = cycle_graph(n).unwrap();
            let (p, part) = partition_dimension_exact(&g.distances(), 12).unwrap();
            assert_eq!(p, 3, "C{n}");
            assert!(check_resolving_partition(&g.distances(), &part).unwrap().is_resolving());
        }
        let g = paper_c4k(2).unwrap();
        let (p, _) = partition_dimension_exact(&g.distances(), 12).unwrap();
        let (d, _) = metric_dimension_exact(&g.distances(), 16).unwrap();
        assert!(p <= d + 1);
        assert_eq!(partition_dimension_exact(&dm_of(&star_graph(5).unwrap()), 12).unwrap().0, 5);
    }

    #[test]
    fn caps_are_enforced() {
        let dm = dm_of(&path_graph(14).unwrap());
        assert!(matches!(
            partition_dimension_exact(&dm, 12),
            Err(Error::CapExceeded { n: 14, cap: 12, .. })
        ));
        assert!(metric_dimension_exact(&dm, 13).is_err());
        assert!(metric_dimension_exact(&dm, 14).is_ok());
    }

    #[test]
    fn trivial_graphs() {
        let k1 = dm_of(&path_graph(1).unwrap());
        assert_eq!(metric_dimension_exact(&k1, 16).unwrap().0, 0);
        assert_eq!(partition_dimension_exact(&k1, 12).unwrap().0, 1);
    }

    /// Plain enumeration of all subsets by size, no pruning.
    fn dim_brute(dm: &DistanceMatrix) -> usize {
        let n = dm.n();
        (0u32..(1 << n))
            .filter(|mask| {
                let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                check_resolving_set(dm, &s).unwrap().is_resolving()
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// Every labelling `0..n -> 0..t` (ordered, with empty blocks dropped), no pruning.
    fn pd_brute(dm: &DistanceMatrix) -> usize {
        let n = dm.n();
        for t in 1..=n {
            let total = t.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let labels: Vec<usize> = (0..n)
                    .map(|_| {
                        let l = c % t;
                        c /= t;
                        l
                    })
                    .collect();
                let p = OrderedPartition::from_labels(&labels);
                if p.len() == t && check_resolving_partition(dm, &p).unwrap().is_resolving() {
                    return t;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn solvers_agree_with_unpruned_enumeration() {
        let mut graphs: Vec<crate::graph::Graph> = Vec::new();
        for n in 3..=7 {
            graphs.extend(crate::generators::exhaustive_trees(n).unwrap());
        }
        for n in 3..=7 {
            graphs.extend(
                crate::generators::exhaustive_unicyclic(n, crate::generators::ExhaustiveMode::Isomorphism)
                    .unwrap()
                    .map(|g| g.into_graph()),
            );
        }
        for g in &graphs {
            let dm = dm_of(g);
            assert_eq!(metric_dimension_exact(&dm, 16).unwrap().0, dim_brute(&dm), "{g:?}");
            if g.n() <= 6 {
                assert_eq!(partition_dimension_exact(&dm, 12).unwrap().0, pd_brute(&dm), "{g:?}");
            }
        }
    }
}
