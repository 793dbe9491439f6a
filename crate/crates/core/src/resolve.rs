//! Metric and partition representations, resolving checks with twin-pair
//! witnesses, and exact brute-force solvers for `dim` and `pd`.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Vertex};

mod exact;

pub use exact::{metric_dimension_exact, partition_dimension_exact, SolverCaps};

/// Ordered partition `P_1 .. P_t` of `0..n`. Each part is kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderedPartition {
    parts: Vec<Vec<Vertex>>,
}

impl OrderedPartition {
    /// Validates that the parts are nonempty, disjoint and cover `0..n`.
    pub fn new(parts: Vec<Vec<Vertex>>, n: usize) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!("part {} is empty", i + 1)));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for {n} vertices"
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in parts {} and {}",
                        owner[v] + 1,
                        i + 1
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no part")));
        }
        Ok(OrderedPartition { parts })
    }

    pub fn singletons(n: usize) -> Self {
        OrderedPartition {
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Builds from block labels; blocks are ordered by their smallest vertex.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut parts: Vec<Vec<Vertex>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let i = *index.entry(l).or_insert_with(|| {
                parts.push(Vec::new());
                parts.len() - 1
            });
            parts[i].push(v);
        }
        OrderedPartition { parts }
    }

    /// Partition file: one part per line, space-separated ids; `#` comments.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut parts = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let part = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<Vertex>().map_err(|_| Error::Malformed {
                        line: i + 1,
                        content: line.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            parts.push(part);
        }
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        Self::new(parts, n)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for part in &self.parts {
            let line: Vec<String> = part.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Part index of each vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.vertex_count()];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                labels[v] = i;
            }
        }
        labels
    }

    /// Same partition with the parts reordered: part `i` of the result is
    /// part `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        OrderedPartition {
            parts: order.iter().map(|&i| self.parts[i].clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Representation(pub Vec<u32>);

/// Outcome of a resolving check. When not resolving, `(u, v)` with `u < v`
/// is the lexicographically smallest pair of vertices with equal
/// representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionWitness {
    Resolving,
    NotResolving { u: Vertex, v: Vertex },
}

impl ResolutionWitness {
    pub fn is_resolving(&self) -> bool {
        matches!(self, ResolutionWitness::Resolving)
    }

    pub fn twin(&self) -> Option<(Vertex, Vertex)> {
        match *self {
            ResolutionWitness::Resolving => None,
            ResolutionWitness::NotResolving { u, v } => Some((u, v)),
        }
    }
}

impl Serialize for ResolutionWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ResolutionWitness", 2)?;
        st.serialize_field("resolving", &self.is_resolving())?;
        st.serialize_field("twin", &self.twin().map(|(u, v)| [u, v]))?;
        st.end()
    }
}

fn check_size(what: &'static str, dm: &DistanceMatrix, found: usize) -> Result<()> {
    if dm.n() != found {
        return Err(Error::SizeMismatch {
            what,
            expected: dm.n(),
            found,
        });
    }
    Ok(())
}

/// `r(v|Π)`: distance from `v` to each part in order.
pub fn partition_representation(
    dm: &DistanceMatrix,
    p: &OrderedPartition,
    v: Vertex,
) -> Result<Representation> {
    check_size("partition", dm, p.vertex_count())?;
    if v >= dm.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: dm.n() });
    }
    Ok(Representation(
        p.parts()
            .iter()
            .map(|part| dm.to_set(v, part).expect("parts are nonempty"))
            .collect(),
    ))
}

/// `r(v|S)`: distance from `v` to each member of `s` in order.
pub fn set_representation(dm: &DistanceMatrix, s: &[Vertex], v: Vertex) -> Representation {
    Representation(s.iter().map(|&w| dm.get(v, w)).collect())
}

fn first_twin(reps: Vec<Representation>) -> ResolutionWitness {
    let mut first: HashMap<Representation, Vertex> = HashMap::with_capacity(reps.len());
    let mut best: Option<(Vertex, Vertex)> = None;
    for (v, r) in reps.into_iter().enumerate() {
        match first.get(&r) {
            // the first repeat of a class pairs with the class's smallest
            // member; later repeats of that class are never smaller
            Some(&u) => {
                if best.map_or(true, |b| (u, v) < b) {
                    best = Some((u, v));
                }
            }
            None => {
                first.insert(r, v);
            }
        }
    }
    match best {
        Some((u, v)) => ResolutionWitness::NotResolving { u, v },
        None => ResolutionWitness::Resolving,
    }
}

pub fn check_resolving_partition(dm: &DistanceMatrix, p: &OrderedPartition) -> Result<ResolutionWitness> {
    check_size("partition", dm, p.vertex_count())?;
    let reps = (0..dm.n())
        .map(|v| partition_representation(dm, p, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(first_twin(reps))
}

pub fn check_resolving_set(dm: &DistanceMatrix, s: &[Vertex]) -> Result<ResolutionWitness> {
    if let Some(&v) = s.iter().find(|&&v| v >= dm.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: dm.n() });
    }
    Ok(first_twin(
        (0..dm.n()).map(|v| set_representation(dm, s, v)).collect(),
    ))
}
