//! Isomorph-free exhaustive generation of small graphs.
//!
//! Orderly augmentation: a labeled graph is *canonical* when its triangle
//! code is minimal over all relabelings, and the code order (columns of
//! the upper triangle) makes canonicity hereditary — deleting the last
//! vertex of a canonical graph leaves a canonical graph. So every
//! canonical graph on `n` vertices arises from exactly one canonical
//! parent on `n-1` vertices by attaching the new vertex to one neighbor
//! subset, and the generation tree needs no visited set at all: extend
//! each parent by every subset, keep the children that pass
//! [`is_canonical`].

use super::canon::{is_canonical, MAX_CENSUS_VERTICES};
use super::CensusError;
use crate::graph::Graph;
use crate::set::VertexSet;

/// `parent` plus one new vertex adjacent to `mask`.
pub(crate) fn extend(parent: &Graph, mask: u64) -> Graph {
    let n = parent.n();
    debug_assert!(mask < (1 << n));
    let mut adj: Vec<VertexSet> = (0..n).map(|v| parent.neighbors(v)).collect();
    adj.push(VertexSet::from_bits(mask));
    for v in VertexSet::from_bits(mask).iter() {
        adj[v].insert(n);
    }
    Graph::from_adjacency(adj)
}

/// Streams one representative per isomorphism class of graphs on `n`
/// vertices, in a fixed depth-first order. Every emitted graph is
/// canonically labeled.
pub fn generate_graphs(n: usize) -> Result<GraphGenerator, CensusError> {
    if n == 0 || n > MAX_CENSUS_VERTICES {
        return Err(CensusError::SizeOutOfRange {
            what: "graph order",
            value: n,
            max: MAX_CENSUS_VERTICES,
        });
    }
    let mut stack = Vec::with_capacity(n);
    let root = Graph::empty(1).expect("order 1");
    if n == 1 {
        // The recursion below only yields extensions; emit the root directly.
        return Ok(GraphGenerator {
            target: 1,
            stack,
            root: Some(root),
        });
    }
    stack.push(Frame {
        graph: root,
        next_mask: 0,
    });
    Ok(GraphGenerator {
        target: n,
        stack,
        root: None,
    })
}

struct Frame {
    graph: Graph,
    next_mask: u64,
}

/// Iterator produced by [`generate_graphs`].
pub struct GraphGenerator {
    target: usize,
    stack: Vec<Frame>,
    root: Option<Graph>,
}

impl Iterator for GraphGenerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(root) = self.root.take() {
            return Some(root);
        }
        loop {
            let frame = self.stack.last_mut()?;
            let order = frame.graph.n();
            if frame.next_mask >= 1 << order {
                self.stack.pop();
                continue;
            }
            let mask = frame.next_mask;
            frame.next_mask += 1;
            let child = extend(&frame.graph, mask);
            if !is_canonical(&child) {
                continue;
            }
            if child.n() == self.target {
                return Some(child);
            }
            self.stack.push(Frame {
                graph: child,
                next_mask: 0,
            });
        }
    }
}

/// Brute-force oracle for the generator: builds every one of the
/// `2^C(n,2)` labeled graphs and deduplicates by canonical code. Only
/// feasible for `n <= 7`.
pub fn generate_graphs_bruteforce(n: usize) -> Result<Vec<Graph>, CensusError> {
    if n == 0 || n > 7 {
        return Err(CensusError::SizeOutOfRange {
            what: "brute-force generation order",
            value: n,
            max: 7,
        });
    }
    use super::canon::{canonical_code, graph_from_code};
    use crate::hash::WordSet;
    let mut seen: WordSet<u64> = WordSet::default();
    let total_bits = n * (n - 1) / 2;
    for code in 0..1u64 << total_bits {
        seen.insert(canonical_code(&graph_from_code(n, code)));
    }
    let mut codes: Vec<u64> = seen.into_iter().collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| graph_from_code(n, c)).collect())
}
