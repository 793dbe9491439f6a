//! Gap scan: for each unicyclic graph `G` and each of its spanning trees `T`,
//! compare `pd(G)` with `pd(T)`. A gap of 2 or more contradicts the open
//! conjecture `pd(G) <= pd(T) + 1` and is reported as a finding; a gap of 4
//! or more contradicts the proven `pd(G) <= pd(T) + 3` and means a bug.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::canon::tree_code;
use crate::error::{Error, Result};
use crate::exec::{try_map, Execution};
use crate::generators::{exhaustive_unicyclic, random_unicyclic_stream, ExhaustiveMode, PRNG_ALGORITHM};
use crate::graph::{all_pairs_distances, UnicyclicGraph, Vertex};
use crate::resolve::partition_dimension_exact;

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub label: String,
    pub graph: UnicyclicGraph,
}

/// Every graph from the exhaustive generator for `n` in `range`, with ids
/// `exh-nNN-IIIIII` in generation order.
pub fn exhaustive_instances(range: RangeInclusive<usize>, mode: ExhaustiveMode) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in range {
        for (i, graph) in exhaustive_unicyclic(n, mode)?.enumerate() {
            out.push(Instance {
                id: format!("exh-n{n:02}-{i:06}"),
                label: format!("exhaustive n={n} #{i}"),
                graph,
            });
        }
    }
    Ok(out)
}

/// `count` random graphs; instance `i` has `n = lo + i mod (hi - lo + 1)`
/// vertices and is drawn from PRNG stream `i` of `seed`.
pub fn random_instances(count: usize, n: RangeInclusive<usize>, seed: u64) -> Result<Vec<Instance>> {
    let (lo, hi) = (*n.start(), *n.end());
    if lo > hi {
        return Err(Error::InvalidGenerator(format!("empty vertex range {lo}..={hi}")));
    }
    let width = hi - lo + 1;
    (0..count)
        .map(|i| {
            let n = lo + i % width;
            Ok(Instance {
                id: format!("rnd-s{seed}-{i:06}"),
                label: format!("random:{n}:{seed} stream {i}"),
                graph: random_unicyclic_stream(n, seed, i as u64)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeGap {
    pub deleted_edge: (Vertex, Vertex),
    pub pd_tree: usize,
    pub gap: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceScan {
    pub id: String,
    pub label: String,
    pub n: usize,
    pub cycle_len: usize,
    pub pd_graph: usize,
    pub trees: Vec<TreeGap>,
    pub max_gap: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapViolation {
    pub id: String,
    pub deleted_edge: (Vertex, Vertex),
    pub pd_graph: usize,
    pub pd_tree: usize,
    pub gap: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapCount {
    pub gap: i64,
    pub trees: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanMetadata {
    pub prng: &'static str,
    pub pd_cap: usize,
    pub conjecture_gap: i64,
    pub proposition_gap: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub instance_count: usize,
    pub tree_count: usize,
    pub instances: Vec<InstanceScan>,
    /// Number of (graph, spanning tree) pairs per gap value.
    pub gap_histogram: Vec<GapCount>,
    pub conjecture_violations: Vec<GapViolation>,
    pub proposition_violations: Vec<GapViolation>,
    pub metadata: ScanMetadata,
}

pub const CONJECTURE_GAP: i64 = 2;
pub const PROPOSITION_GAP: i64 = 4;

fn scan_one(inst: &Instance, pd_cap: usize) -> Result<InstanceScan> {
    let g = &inst.graph;
    let (pd_graph, _) = partition_dimension_exact(&g.distances(), pd_cap)?;
    // isomorphic spanning trees share pd; trees of one cycle often repeat
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut trees = Vec::with_capacity(g.cycle_len());
    for t in g.spanning_trees() {
        let code = tree_code(&t.graph);
        let pd_tree = match seen.get(&code) {
            Some(&p) => p,
            None => {
                let p = partition_dimension_exact(&all_pairs_distances(&t.graph)?, pd_cap)?.0;
                seen.insert(code, p);
                p
            }
        };
        trees.push(TreeGap {
            deleted_edge: t.deleted_edge,
            pd_tree,
            gap: pd_graph as i64 - pd_tree as i64,
        });
    }
    let max_gap = trees.iter().map(|t| t.gap).max().expect("a cycle has edges");
    Ok(InstanceScan {
        id: inst.id.clone(),
        label: inst.label.clone(),
        n: g.n(),
        cycle_len: g.cycle_len(),
        pd_graph,
        trees,
        max_gap,
    })
}

/// Scans every instance and every spanning tree. The result depends only on
/// the instances, not on `exec`; instances are reported sorted by id. An
/// instance above `pd_cap` aborts the scan with its id attached.
pub fn conjecture_scan(instances: &[Instance], pd_cap: usize, exec: Execution) -> Result<ScanResult> {
    let mut scanned = try_map(exec, instances, |inst| {
        scan_one(inst, pd_cap).map_err(|e| e.at_instance(inst.id.clone()))
    })?;
    scanned.sort_by(|a, b| a.id.cmp(&b.id));

    let mut histogram: BTreeMap<i64, usize> = BTreeMap::new();
    let mut conjecture = Vec::new();
    let mut proposition = Vec::new();
    for s in &scanned {
        for t in &s.trees {
            *histogram.entry(t.gap).or_default() += 1;
            let v = || GapViolation {
                id: s.id.clone(),
                deleted_edge: t.deleted_edge,
                pd_graph: s.pd_graph,
                pd_tree: t.pd_tree,
                gap: t.gap,
            };
            if t.gap >= CONJECTURE_GAP {
                conjecture.push(v());
            }
            if t.gap >= PROPOSITION_GAP {
                proposition.push(v());
            }
        }
    }

    Ok(ScanResult {
        instance_count: scanned.len(),
        tree_count: scanned.iter().map(|s| s.trees.len()).sum(),
        instances: scanned,
        gap_histogram: histogram.into_iter().map(|(gap, trees)| GapCount { gap, trees }).collect(),
        conjecture_violations: conjecture,
        proposition_violations: proposition,
        metadata: ScanMetadata {
            prng: PRNG_ALGORITHM,
            pd_cap,
            conjecture_gap: CONJECTURE_GAP,
            proposition_gap: PROPOSITION_GAP,
        },
    })
}
