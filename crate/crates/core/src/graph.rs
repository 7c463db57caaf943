//! Undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is kept as one [`VertexSet`] per vertex, so neighborhood and
//! component computations are a handful of word operations. Graphs are
//! immutable values once built; everything downstream shares them freely
//! across threads.

use crate::set::VertexSet;
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} out of range 1..=64")]
    OrderOutOfRange(usize),
    #[error("edge ({0},{1}) out of range for {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// An undirected simple graph on `1..=64` vertices.
///
/// Invariants, maintained by construction: the adjacency relation is
/// symmetric and irreflexive, and no adjacency bit at index `>= n` is set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Creates an edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Creates a graph on `n` vertices with the given edges. Duplicate
    /// edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows.
    ///
    /// # Panics
    /// Panics if the rows are not symmetric, irreflexive, and confined to
    /// the first `adj.len()` bits.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        assert!(n >= 1 && n <= MAX_VERTICES, "order {n} out of range");
        let full = VertexSet::full(n);
        for (i, row) in adj.iter().enumerate() {
            assert!(row.is_subset_of(full), "adjacency bit above n at row {i}");
            assert!(!row.contains(i), "self-loop at vertex {i}");
        }
        for i in 0..n {
            for j in adj[i].iter() {
                assert!(adj[j].contains(i), "asymmetric edge ({i},{j})");
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adds an edge in place. Only used while assembling a graph.
    ///
    /// # Panics
    /// Panics on self-loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Union of the neighborhoods of `x`, minus `x` itself: the vertices
    /// outside `x` with at least one neighbor in `x`.
    pub fn outer_neighborhood(&self, x: VertexSet) -> VertexSet {
        debug_assert!(x.is_subset_of(self.vertices()));
        let mut nb = VertexSet::EMPTY;
        for v in x.iter() {
            nb |= self.adj[v];
        }
        nb - x
    }

    /// The vertex set of the connected component of `start` in the graph
    /// induced on `V \ removed`. Always contains `start`.
    ///
    /// # Panics
    /// Panics if `start` is in `removed` or out of range.
    pub fn component_of(&self, start: usize, removed: VertexSet) -> VertexSet {
        assert!(start < self.n, "start vertex {start} out of range");
        assert!(
            !removed.contains(start),
            "start vertex {start} is in the removed set"
        );
        let alive = self.vertices() - removed;
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut nb = VertexSet::EMPTY;
            for v in frontier.iter() {
                nb |= self.adj[v];
            }
            frontier = (nb & alive) - comp;
            comp |= frontier;
        }
        comp
    }

    /// Partition of `V \ removed` into connected components, ordered by
    /// smallest contained vertex. Empty when `removed` covers everything.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices() - removed;
        while let Some(start) = left.min() {
            let comp = self.component_of(start, removed);
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, VertexSet::EMPTY) == self.vertices()
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    ///
    /// # Panics
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph::from_adjacency(adj)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        // u(0) - a(1) - v(2)
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn outer_neighborhood_single_edge() {
        let g = path3();
        assert_eq!(
            g.outer_neighborhood(VertexSet::singleton(0)),
            VertexSet::singleton(1)
        );
    }

    #[test]
    fn outer_neighborhood_empty_set() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g.outer_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
    }

    #[test]
    fn outer_neighborhood_five_cycle() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let x: VertexSet = [0, 1].into_iter().collect();
        let expected: VertexSet = [2, 4].into_iter().collect();
        assert_eq!(g.outer_neighborhood(x), expected);
    }

    #[test]
    fn outer_neighborhood_disjoint_from_input() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for bits in 0..32u64 {
            let x = VertexSet::from_bits(bits);
            assert!(g.outer_neighborhood(x).is_disjoint(x));
        }
    }

    #[test]
    fn component_of_isolated_after_cut() {
        let g = path3();
        assert_eq!(
            g.component_of(0, VertexSet::singleton(1)),
            VertexSet::singleton(0)
        );
    }

    #[test]
    fn component_of_connected() {
        let g = path3();
        assert_eq!(g.component_of(0, VertexSet::EMPTY), VertexSet::full(3));
    }

    #[test]
    fn component_of_two_parallel_paths() {
        // Two terminals 0,1 joined by two disjoint paths of length 4:
        // 0-2-3-4-1 and 0-5-6-7-1. Removing {3,6} leaves 0 with the first
        // vertex of each path.
        let g = Graph::from_edges(
            8,
            &[
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 1),
                (0, 5),
                (5, 6),
                (6, 7),
                (7, 1),
            ],
        )
        .unwrap();
        let removed: VertexSet = [3, 6].into_iter().collect();
        let expected: VertexSet = [0, 2, 5].into_iter().collect();
        assert_eq!(g.component_of(0, removed), expected);
    }

    #[test]
    #[should_panic(expected = "removed set")]
    fn component_of_rejects_removed_start() {
        let g = path3();
        g.component_of(1, VertexSet::singleton(1));
    }

    #[test]
    fn components_edgeless() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(
            g.components(VertexSet::EMPTY),
            vec![
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );
    }

    #[test]
    fn components_split_path() {
        let g = path3();
        assert_eq!(
            g.components(VertexSet::singleton(1)),
            vec![VertexSet::singleton(0), VertexSet::singleton(2)]
        );
    }

    #[test]
    fn components_path5_cut_middle() {
        // 0-2-3-4-1 with 3 removed: {0,2} and {4,1}.
        let g = Graph::from_edges(5, &[(0, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let comps = g.components(VertexSet::singleton(3));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], [0, 2].into_iter().collect());
        assert_eq!(comps[1], [1, 4].into_iter().collect());
    }

    #[test]
    fn components_cover_everything() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 6), (2, 0)]).unwrap();
        for bits in 0..128u64 {
            let removed = VertexSet::from_bits(bits);
            let comps = g.components(removed);
            let mut union = VertexSet::EMPTY;
            for (i, c) in comps.iter().enumerate() {
                assert!(union.is_disjoint(*c), "components overlap");
                union |= *c;
                // Each component only borders the removed set.
                assert!(g.outer_neighborhood(*c).is_subset_of(removed));
                if i > 0 {
                    assert!(comps[i - 1].min() < c.min(), "components out of order");
                }
            }
            assert_eq!(union, g.vertices() - removed);
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::empty(0).unwrap_err(), GraphError::OrderOutOfRange(0));
        assert_eq!(
            Graph::empty(65).unwrap_err(),
            GraphError::OrderOutOfRange(65)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]).unwrap_err(),
            GraphError::EdgeOutOfRange(0, 3, 3)
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn permuted_preserves_structure() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]);
        assert_eq!(h.edge_count(), 3);
        assert!(h.has_edge(3, 2) && h.has_edge(2, 1) && h.has_edge(1, 0));
    }
}
