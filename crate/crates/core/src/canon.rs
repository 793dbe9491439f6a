//! Exact isomorphism certificates for trees and unicyclic graphs.
//!
//! Rooted trees get the usual parenthesis code (children's codes sorted).
//! A free tree is coded at its centre (the smaller code when bicentral). A
//! unicyclic graph is the cyclic sequence of the trees hanging off its cycle,
//! coded as the smallest concatenation over all rotations and reflections.
//! Parenthesis codes are prefix-free, so equal certificates imply
//! isomorphic graphs and no two classes are ever merged.

use crate::graph::{Graph, UnicyclicGraph, Vertex};

pub type Code = Vec<u8>;

/// Code of the tree containing `root` after deleting every vertex marked in
/// `blocked` (the root itself may be marked).
fn rooted_code(g: &Graph, root: Vertex, blocked: &[bool]) -> Code {
    fn go(g: &Graph, v: Vertex, parent: Option<Vertex>, blocked: &[bool]) -> Code {
        let mut children: Vec<Code> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| Some(w) != parent && !blocked[w])
            .map(|&w| go(g, w, Some(v), blocked))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend(c);
        }
        code.push(b')');
        code
    }
    go(g, root, None, blocked)
}

fn centers(t: &Graph) -> Vec<Vertex> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        for &v in &layer {
            degree[v] = 0;
        }
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Certificate of a tree up to isomorphism.
pub fn tree_code(t: &Graph) -> Code {
    let free = vec![false; t.n()];
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, &free))
        .min()
        .unwrap_or_default()
}

/// Certificate of a unicyclic graph up to isomorphism.
pub fn unicyclic_code(g: &UnicyclicGraph) -> Code {
    let cycle = g.cycle();
    let k = cycle.len();
    let mut blocked: Vec<bool> = (0..g.n()).map(|v| g.is_on_cycle(v)).collect();
    let parts: Vec<Code> = cycle
        .iter()
        .map(|&c| {
            blocked[c] = false;
            let code = rooted_code(g.graph(), c, &blocked);
            blocked[c] = true;
            code
        })
        .collect();
    let mut best: Option<Code> = None;
    for start in 0..k {
        for forward in [true, false] {
            let candidate: Code = (0..k)
                .flat_map(|j| {
                    let i = if forward { (start + j) % k } else { (start + k - j) % k };
                    parts[i].iter().copied()
                })
                .collect();
            if best.as_ref().map_or(true, |b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_graph, path_graph};
    use crate::graph::validate_unicyclic;

    #[test]
    fn relabelled_trees_share_a_code() {
        let a = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let b = Graph::from_edges(5, [(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        assert_eq!(tree_code(&a), tree_code(&b));
        assert_ne!(tree_code(&a), tree_code(&path_graph(5).unwrap()));
    }

    #[test]
    fn unicyclic_code_ignores_rotation_and_labels() {
        // C4 with a pendant on one vertex, two labelings
        let a = validate_unicyclic(Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)]).unwrap()).unwrap();
        let b = validate_unicyclic(Graph::from_edges(5, [(4, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()).unwrap();
        assert_eq!(unicyclic_code(&a), unicyclic_code(&b));
        assert_ne!(unicyclic_code(&a), unicyclic_code(&cycle_graph(5).unwrap()));
    }

    #[test]
    fn pendants_on_adjacent_vs_opposite_vertices_differ() {
        let adj = validate_unicyclic(
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]).unwrap(),
        )
        .unwrap();
        let opp = validate_unicyclic(
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap(),
        )
        .unwrap();
        assert_ne!(unicyclic_code(&adj), unicyclic_code(&opp));
    }
}
