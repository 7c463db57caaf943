//! Canonical labeling for census-sized graphs (at most 11 vertices).
//!
//! The canonical form of a graph is the relabeling minimizing the upper
//! triangle of its adjacency matrix read column by column — the same bit
//! order graph6 uses, so the canonical form is also the graph with the
//! lexicographically smallest graph6 line in its isomorphism class, and
//! the whole code fits one `u64` (55 triangle bits at order 11).
//!
//! The search assigns positions one vertex at a time and prunes any
//! branch whose next column already exceeds the reference column. Ties
//! are where symmetric graphs explode, so candidates that are twins of an
//! unused earlier vertex are skipped: swapping twins is an automorphism,
//! hence cannot lead to a code the earlier sibling misses.

use crate::graph::Graph;
use crate::set::VertexSet;

/// Census machinery handles graphs up to this order.
pub const MAX_CENSUS_VERTICES: usize = 11;

fn check_order(g: &Graph) {
    assert!(
        g.n() <= MAX_CENSUS_VERTICES,
        "canonical labeling supports at most {MAX_CENSUS_VERTICES} vertices, got {}",
        g.n()
    );
}

/// The upper-triangle adjacency bits of `g` under its current labeling,
/// column by column, first pair in the most significant position.
pub fn triangle_code(g: &Graph) -> u64 {
    check_order(g);
    let mut code = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(i, j) as u64;
        }
    }
    code
}

/// Rebuilds the graph whose triangle code is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    assert!(n >= 1 && n <= MAX_CENSUS_VERTICES);
    let total = n * (n - 1) / 2;
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - idx) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            idx += 1;
        }
    }
    Graph::from_adjacency(adj)
}

struct Search {
    n: usize,
    adj: [u64; MAX_CENSUS_VERTICES],
    /// twin[w]: vertices x with `(adj[w] ^ adj[x])` zero outside `{w,x}`;
    /// swapping such a pair is an automorphism.
    twin: [u64; MAX_CENSUS_VERTICES],
    pos: [usize; MAX_CENSUS_VERTICES],
}

impl Search {
    fn new(g: &Graph) -> Search {
        let n = g.n();
        let mut adj = [0u64; MAX_CENSUS_VERTICES];
        for v in 0..n {
            adj[v] = g.neighbors(v).bits();
        }
        let mut twin = [0u64; MAX_CENSUS_VERTICES];
        for w in 0..n {
            for x in 0..n {
                if x != w && (adj[w] ^ adj[x]) & !(1 << w | 1 << x) == 0 {
                    twin[w] |= 1 << x;
                }
            }
        }
        Search {
            n,
            adj,
            twin,
            pos: [0; MAX_CENSUS_VERTICES],
        }
    }

    /// Column that vertex `w` would contribute at position `depth`, given
    /// the current prefix assignment.
    #[inline]
    fn column(&self, w: usize, depth: usize) -> u64 {
        let mut col = 0u64;
        for i in 0..depth {
            col = (col << 1) | (self.adj[w] >> self.pos[i]) & 1;
        }
        col
    }

    /// Skip `w` when a twin of it is still unused at a smaller index; the
    /// twin's branch reaches every code this branch could.
    #[inline]
    fn twin_skipped(&self, w: usize, used: u64) -> bool {
        self.twin[w] & !used & ((1 << w) - 1) != 0
    }

    /// Is there a labeling whose code is strictly below the reference
    /// columns (the identity labeling)?
    fn smaller_exists(&mut self, ref_cols: &[u64], used: u64, depth: usize) -> bool {
        if depth == self.n {
            return false;
        }
        let mut cands = !used & ((1u64 << self.n) - 1);
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.twin_skipped(w, used) {
                continue;
            }
            let col = self.column(w, depth);
            if col < ref_cols[depth] {
                return true;
            }
            if col == ref_cols[depth] {
                self.pos[depth] = w;
                if self.smaller_exists(ref_cols, used | 1 << w, depth + 1) {
                    return true;
                }
            }
        }
        false
    }

    /// Full minimization: explores every non-pruned labeling, keeping the
    /// best column vector seen so far.
    fn minimize(&mut self, best: &mut Vec<u64>, cur: &mut Vec<u64>, used: u64, depth: usize) {
        if depth == self.n {
            if cur.as_slice() < best.as_slice() {
                best.copy_from_slice(cur);
            }
            return;
        }
        let mut options: Vec<(u64, usize)> = Vec::with_capacity(self.n - depth);
        let mut cands = !used & ((1u64 << self.n) - 1);
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if !self.twin_skipped(w, used) {
                options.push((self.column(w, depth), w));
            }
        }
        options.sort_unstable();
        for (col, w) in options {
            cur[depth] = col;
            // `best` shrinks as leaves are found, so compare fresh here.
            if cur[..=depth] > best[..=depth] {
                continue;
            }
            self.pos[depth] = w;
            self.minimize(best, cur, used | 1 << w, depth + 1);
        }
    }
}

fn identity_columns(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut cols = vec![0u64; n];
    for (p, col) in cols.iter_mut().enumerate().skip(1) {
        for i in 0..p {
            *col = (*col << 1) | g.has_edge(i, p) as u64;
        }
    }
    cols
}

fn fold_columns(cols: &[u64]) -> u64 {
    let mut code = 0u64;
    for (p, col) in cols.iter().enumerate().skip(1) {
        code = (code << p) | col;
    }
    code
}

/// Does the current labeling already realize the canonical code? This is
/// the hot check of the generator: it exits as soon as any relabeling
/// beats the identity.
pub fn is_canonical(g: &Graph) -> bool {
    check_order(g);
    if g.n() <= 1 {
        return true;
    }
    let ref_cols = identity_columns(g);
    !Search::new(g).smaller_exists(&ref_cols, 0, 0)
}

/// The minimum triangle code over all relabelings of `g`.
pub fn canonical_code(g: &Graph) -> u64 {
    check_order(g);
    if g.n() <= 1 {
        return 0;
    }
    let mut best = identity_columns(g);
    let mut cur = vec![0u64; g.n()];
    Search::new(g).minimize(&mut best, &mut cur, 0, 0);
    fold_columns(&best)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::to_graph6;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn code_round_trip() {
        let g = graph(6, &[(0, 3), (1, 2), (4, 5), (0, 5)]);
        assert_eq!(graph_from_code(6, triangle_code(&g)), g);
    }

    #[test]
    fn canonical_code_is_isomorphism_invariant() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        let code = canonical_code(&g);
        // A few hand permutations.
        for perm in [
            [5usize, 4, 3, 2, 1, 0],
            [1, 2, 3, 4, 5, 0],
            [2, 0, 4, 1, 5, 3],
            [3, 5, 0, 4, 2, 1],
        ] {
            assert_eq!(canonical_code(&g.permuted(&perm)), code);
        }
    }

    #[test]
    fn canonical_form_is_a_fixpoint() {
        let samples = [
            graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            graph(7, &[(0, 1), (2, 3), (4, 5), (5, 6), (6, 4)]),
            graph(4, &[]),
            graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]),
        ];
        for g in &samples {
            let c = canonical_form(g);
            assert!(is_canonical(&c));
            assert_eq!(canonical_code(&c), canonical_code(g));
            assert_eq!(triangle_code(&c), canonical_code(g));
        }
    }

    #[test]
    fn canonical_code_is_minimal_over_all_permutations() {
        // Exhaustive check on 4-vertex graphs: the code really is the
        // minimum over all 24 permutations.
        let perms4: Vec<[usize; 4]> = {
            let mut out = Vec::new();
            let mut p = [0usize, 1, 2, 3];
            permute(&mut p, 0, &mut out);
            out
        };
        fn permute(p: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
            if k == 4 {
                out.push(*p);
                return;
            }
            for i in k..4 {
                p.swap(k, i);
                permute(p, k + 1, out);
                p.swap(k, i);
            }
        }
        for code in 0..64u64 {
            let g = graph_from_code(4, code);
            let min = perms4
                .iter()
                .map(|p| triangle_code(&g.permuted(p)))
                .min()
                .unwrap();
            assert_eq!(canonical_code(&g), min, "code {code}");
            assert_eq!(is_canonical(&g), triangle_code(&g) == min);
        }
    }

    #[test]
    fn highly_symmetric_graphs_stay_cheap() {
        // Twin skipping collapses these; mostly a regression guard that
        // they finish instantly.
        let empty = Graph::empty(11).unwrap();
        assert!(is_canonical(&empty));
        assert_eq!(canonical_code(&empty), 0);
        let mut edges = Vec::new();
        for i in 0..11 {
            for j in i + 1..11 {
                edges.push((i, j));
            }
        }
        let complete = graph(11, &edges);
        assert!(is_canonical(&complete));
        assert_eq!(canonical_code(&complete), (1u64 << 55) - 1);
    }

    #[test]
    fn canonical_graph6_is_lexicographic_minimum() {
        let g = graph(5, &[(0, 4), (4, 2), (2, 1), (1, 3), (3, 0)]);
        let c = canonical_form(&g);
        // C5 relabeled; the canonical line is fixed across labelings.
        let h = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(to_graph6(&c), to_graph6(&canonical_form(&h)));
    }
}
