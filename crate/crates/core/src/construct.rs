//! Generators for the extremal two-terminal constructions and small named
//! graphs.
//!
//! Vertex numbering is fixed and documented per constructor so that
//! graph6 output is reproducible byte for byte.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("path count {0} out of range 1..=20")]
    PathCountOutOfRange(usize),
    #[error("glued graph would have {0} vertices, more than {MAX_VERTICES}")]
    GlueTooLarge(usize),
    #[error("unknown named graph {0:?}")]
    UnknownName(String),
    #[error("order {n} invalid for named graph {name:?}")]
    BadOrder { name: String, n: usize },
}

/// A graph with two distinguished terminals `u != v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalGraph {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
}

impl TerminalGraph {
    /// # Panics
    /// Panics unless `u != v` and both are vertices of the graph.
    pub fn new(graph: Graph, u: usize, v: usize) -> Self {
        assert!(u < graph.n() && v < graph.n(), "terminal out of range");
        assert!(u != v, "terminals must be distinct");
        TerminalGraph { graph, u, v }
    }
}

/// Two terminals joined by `m` internally vertex-disjoint paths of length
/// four: `3m + 2` vertices carrying exactly `3^m` minimal u,v-separators
/// (one internal vertex per path).
///
/// Numbering: vertex 0 is `u`, vertex 1 is `v`, path `i` runs through
/// internal vertices `2+3i`, `3+3i`, `4+3i`.
pub fn seymour(m: usize) -> Result<TerminalGraph, ConstructError> {
    if m == 0 || m > 20 {
        return Err(ConstructError::PathCountOutOfRange(m));
    }
    let mut g = Graph::empty(3 * m + 2).expect("3m+2 <= 62");
    for i in 0..m {
        let (a, b, c) = (2 + 3 * i, 3 + 3 * i, 4 + 3 * i);
        g.add_edge(0, a);
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(c, 1);
    }
    Ok(TerminalGraph::new(g, 0, 1))
}

/// Glues two terminal graphs by identifying their `u` terminals and their
/// `v` terminals. The result has `a.n + b.n - 2` vertices and its minimal
/// separator count is the product of the inputs' counts.
///
/// Numbering: the merged `u` is 0 and the merged `v` is 1; the interior
/// vertices of `a` follow in increasing original order, then those of
/// `b`. A `uv` edge present in either input becomes the single `uv` edge
/// of the result (parallel edges collapse; the graph stays simple).
pub fn glue(a: &TerminalGraph, b: &TerminalGraph) -> Result<TerminalGraph, ConstructError> {
    let n = a.graph.n() + b.graph.n() - 2;
    if n > MAX_VERTICES {
        return Err(ConstructError::GlueTooLarge(n));
    }
    let mut g = Graph::empty(n).expect("within range");
    let mut next = 2;
    let mut map_part = |part: &TerminalGraph, g: &mut Graph| {
        let mut map = vec![usize::MAX; part.graph.n()];
        map[part.u] = 0;
        map[part.v] = 1;
        for w in 0..part.graph.n() {
            if w != part.u && w != part.v {
                map[w] = next;
                next += 1;
            }
        }
        for (x, y) in part.graph.edges() {
            g.add_edge(map[x], map[y]);
        }
    };
    map_part(a, &mut g);
    map_part(b, &mut g);
    Ok(TerminalGraph::new(g, 0, 1))
}

/// Standard test-fixture graphs with deterministic numbering:
///
/// * `path` — vertices in path order `0-1-...-(n-1)`, any `n >= 1`;
/// * `cycle` — `0-1-...-(n-1)-0`, `n >= 3`;
/// * `complete` — all pairs adjacent, `n >= 1`;
/// * `complete-bipartite` — parts `{0..ceil(n/2)-1}` and the rest,
///   `n >= 2`;
/// * `star` — center 0, leaves `1..n-1`, `n >= 1`.
pub fn named_graph(name: &str, n: usize) -> Result<Graph, ConstructError> {
    let bad_order = || ConstructError::BadOrder {
        name: name.to_owned(),
        n,
    };
    let order_ok = |min: usize| {
        if n < min || n > MAX_VERTICES {
            Err(bad_order())
        } else {
            Ok(())
        }
    };
    let mut edges = Vec::new();
    match name {
        "path" => {
            order_ok(1)?;
            edges.extend((1..n).map(|i| (i - 1, i)));
        }
        "cycle" => {
            order_ok(3)?;
            edges.extend((1..n).map(|i| (i - 1, i)));
            edges.push((n - 1, 0));
        }
        "complete" => {
            order_ok(1)?;
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
        }
        "complete-bipartite" => {
            order_ok(2)?;
            let split = n.div_ceil(2);
            for i in 0..split {
                for j in split..n {
                    edges.push((i, j));
                }
            }
        }
        "star" => {
            order_ok(1)?;
            edges.extend((1..n).map(|i| (0, i)));
        }
        _ => return Err(ConstructError::UnknownName(name.to_owned())),
    }
    Ok(Graph::from_edges(n, &edges).expect("valid by construction"))
}
