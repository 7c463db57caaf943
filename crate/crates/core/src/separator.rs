//! Minimal u,v-separators and minimal vertex cuts.
//!
//! A set `T ⊆ V \ {u,v}` separates `u` and `v` when they end up in
//! different components of `G \ T`, and is a *minimal* separator when no
//! proper subset does. The structural fact driving everything here: `T`
//! is minimal exactly when both the component of `u` and the component of
//! `v` in `G \ T` have outer neighborhood equal to `T` (both sides are
//! "full"). Two deciders implement the two characterizations, a
//! brute-force enumerator serves as the oracle, and the fast enumerator
//! walks the family by expanding known separators past their vertices.
//!
//! Degenerate cases follow the literal definition: if `u` and `v` are
//! already in different components, the empty set is the unique minimal
//! separator (so the count is 1); if they are adjacent, no separator
//! exists (count 0). Keeping the literal reading makes the gluing product
//! law of [`crate::construct`] hold without special cases.

use crate::graph::Graph;
use crate::hash::WordSet;
use crate::set::VertexSet;
use std::collections::VecDeque;
use thiserror::Error;

/// Brute-force subset enumeration refuses instances above this order.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeparatorError {
    #[error("brute-force enumeration is limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {0}")]
    InstanceTooLarge(usize),
}

/// A graph with two distinguished distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorInstance {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
}

impl SeparatorInstance {
    /// # Panics
    /// Panics unless `u != v` and both are vertices of the graph.
    pub fn new(graph: Graph, u: usize, v: usize) -> Self {
        check_terminals(&graph, u, v);
        SeparatorInstance { graph, u, v }
    }
}

/// The deduplicated family of minimal separators found for one instance.
/// Members are sorted by mask value; the family is an antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorFamily {
    members: Vec<VertexSet>,
    instance: SeparatorInstance,
}

impl SeparatorFamily {
    fn from_members(instance: SeparatorInstance, mut members: Vec<VertexSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        SeparatorFamily { members, instance }
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn instance(&self) -> &SeparatorInstance {
        &self.instance
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: VertexSet) -> bool {
        self.members.binary_search(&t).is_ok()
    }

    /// True when no member contains another.
    pub fn is_antichain(&self) -> bool {
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                if a.is_subset_of(*b) || b.is_subset_of(*a) {
                    return false;
                }
            }
        }
        true
    }
}

fn check_terminals(g: &Graph, u: usize, v: usize) {
    assert!(u < g.n() && v < g.n(), "terminal out of range");
    assert!(u != v, "terminals must be distinct");
}

fn check_candidate(g: &Graph, u: usize, v: usize, t: VertexSet) {
    check_terminals(g, u, v);
    assert!(
        !t.contains(u) && !t.contains(v),
        "candidate separator contains a terminal"
    );
    assert!(
        t.is_subset_of(g.vertices()),
        "candidate separator out of range"
    );
}

/// Does removing `t` put `u` and `v` in different components?
///
/// # Panics
/// Panics if `u == v` or `t` touches a terminal.
pub fn is_separator(g: &Graph, u: usize, v: usize, t: VertexSet) -> bool {
    check_candidate(g, u, v, t);
    !g.component_of(u, t).contains(v)
}

/// Minimality via the full-component characterization: with `S_u`, `S_v`
/// the components of the terminals in `G \ t`, the set `t` is a minimal
/// separator iff `N(S_u) = t = N(S_v)`.
pub fn is_minimal_separator(g: &Graph, u: usize, v: usize, t: VertexSet) -> bool {
    check_candidate(g, u, v, t);
    let su = g.component_of(u, t);
    if su.contains(v) {
        return false;
    }
    if g.outer_neighborhood(su) != t {
        return false;
    }
    let sv = g.component_of(v, t);
    g.outer_neighborhood(sv) == t
}

/// Minimality by the definition: `t` separates and no single-vertex
/// deletion still does. Agrees with [`is_minimal_separator`] everywhere;
/// kept as the independent route.
pub fn is_minimal_separator_by_deletion(g: &Graph, u: usize, v: usize, t: VertexSet) -> bool {
    if !is_separator(g, u, v, t) {
        return false;
    }
    t.iter().all(|x| !is_separator(g, u, v, t.without(x)))
}

/// Enumerates every minimal u,v-separator by trying all `2^(n-2)` subsets
/// of `V \ {u,v}`. The verification oracle: complete, duplicate-free, and
/// deliberately independent of the fast enumerator.
pub fn enumerate_minimal_separators_bruteforce(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<SeparatorFamily, SeparatorError> {
    check_terminals(g, u, v);
    if g.n() > BRUTE_FORCE_MAX_VERTICES {
        return Err(SeparatorError::InstanceTooLarge(g.n()));
    }
    let candidates = (g.vertices().without(u)).without(v);
    let mut members = Vec::new();
    let mask = candidates.bits();
    let mut sub = mask;
    loop {
        let t = VertexSet::from_bits(sub);
        if is_minimal_separator_by_deletion(g, u, v, t) {
            members.push(t);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    Ok(SeparatorFamily::from_members(
        SeparatorInstance::new(g.clone(), u, v),
        members,
    ))
}

/// Streaming enumeration of all minimal u,v-separators, each exactly
/// once, in unspecified order.
///
/// Seeded with the unique minimal separator contained in `N(u)` (the
/// neighborhood of the component of `v` in `G \ N[u]`), then closed under
/// expansion: for a known separator `T` and `x ∈ T`, the neighborhood of
/// the component of `v` in `G \ (T ∪ N(x))` is again a minimal separator.
/// Every set produced this way is minimal by construction — both sides
/// are full — and the closure reaches the whole family.
pub fn enumerate_minimal_separators<'g>(g: &'g Graph, u: usize, v: usize) -> MinimalSeparators<'g> {
    check_terminals(g, u, v);
    let mut queue = VecDeque::new();
    let mut seen = WordSet::default();
    if !g.has_edge(u, v) {
        let closed_u = g.neighbors(u).with(u);
        let far = g.component_of(v, closed_u);
        let seed = g.outer_neighborhood(far);
        seen.insert(seed.bits());
        queue.push_back(seed);
    }
    MinimalSeparators { g, u, v, queue, seen }
}

/// Iterator produced by [`enumerate_minimal_separators`].
pub struct MinimalSeparators<'g> {
    g: &'g Graph,
    u: usize,
    v: usize,
    queue: VecDeque<VertexSet>,
    seen: WordSet<u64>,
}

impl Iterator for MinimalSeparators<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let t = self.queue.pop_front()?;
        debug_assert!(is_minimal_separator(self.g, self.u, self.v, t));
        for x in t.iter() {
            if self.g.neighbors(x).contains(self.v) {
                continue;
            }
            let removed = t | self.g.neighbors(x);
            let far = self.g.component_of(self.v, removed);
            let next = self.g.outer_neighborhood(far);
            if self.seen.insert(next.bits()) {
                self.queue.push_back(next);
            }
        }
        Some(t)
    }
}

/// `mc_{u,v}(G)`: the number of minimal u,v-separators, counted without
/// materializing the family.
pub fn count_minimal_separators(g: &Graph, u: usize, v: usize) -> u64 {
    enumerate_minimal_separators(g, u, v).count() as u64
}

/// The fast enumerator's output collected into a [`SeparatorFamily`].
pub fn minimal_separator_family(g: &Graph, u: usize, v: usize) -> SeparatorFamily {
    let members = enumerate_minimal_separators(g, u, v).collect();
    SeparatorFamily::from_members(SeparatorInstance::new(g.clone(), u, v), members)
}

/// All inclusion-minimal vertex cuts of `g`: sets `T` whose removal
/// leaves at least two components, minimal with that property. Computed
/// as the union over all vertex pairs of their minimal separator
/// families, filtered to the inclusion-minimal elements (a minimal
/// u,v-separator may still contain a smaller cut that separates some
/// other pair). Returns the sorted antichain; `[∅]` for a disconnected
/// graph, empty for a complete one.
pub fn enumerate_minimal_vertex_cuts(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut union: WordSet<u64> = WordSet::default();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            for t in enumerate_minimal_separators(g, u, v) {
                union.insert(t.bits());
            }
        }
    }
    let mut sets: Vec<VertexSet> = union.into_iter().map(VertexSet::from_bits).collect();
    sets.sort_unstable_by_key(|s| (s.len(), s.bits()));
    let mut minimal: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|m| m.is_subset_of(s)) {
            minimal.push(s);
        }
    }
    minimal.sort_unstable();
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// u(0) - a(1) - v(2)
    fn path3() -> Graph {
        graph(3, &[(0, 1), (1, 2)])
    }

    /// u(0) - a(1) - b(2) - c(3) - v(4)
    fn path5() -> Graph {
        graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])
    }

    /// C4: u(0) - a(1) - v(2) - b(3) - u(0)
    fn cycle4() -> Graph {
        graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        graph(n, &edges)
    }

    #[test]
    fn separator_on_path() {
        let g = path3();
        assert!(is_separator(&g, 0, 2, set(&[1])));
        assert!(!is_separator(&g, 0, 2, VertexSet::EMPTY));
    }

    #[test]
    fn adjacent_terminals_never_separated() {
        let g = complete(4);
        for bits in 0..16u64 {
            let t = VertexSet::from_bits(bits);
            if t.contains(0) || t.contains(1) {
                continue;
            }
            assert!(!is_separator(&g, 0, 1, t));
        }
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn rejects_equal_terminals() {
        is_separator(&path3(), 1, 1, VertexSet::EMPTY);
    }

    #[test]
    #[should_panic(expected = "terminal")]
    fn rejects_candidate_containing_terminal() {
        is_separator(&path3(), 0, 2, set(&[0, 1]));
    }

    #[test]
    fn minimality_on_path5() {
        let g = path5();
        assert!(is_minimal_separator(&g, 0, 4, set(&[1])));
        assert!(is_separator(&g, 0, 4, set(&[1, 2])));
        assert!(!is_minimal_separator(&g, 0, 4, set(&[1, 2])));
    }

    #[test]
    fn minimality_on_cycle4() {
        let g = cycle4();
        assert!(is_minimal_separator(&g, 0, 2, set(&[1, 3])));
        assert!(!is_minimal_separator(&g, 0, 2, set(&[1])));
    }

    #[test]
    fn minimality_single_internal_path_vertex() {
        // Terminals joined by one path of length 4; each internal vertex
        // alone is a minimal separator.
        let g = graph(5, &[(0, 2), (2, 3), (3, 4), (4, 1)]);
        for x in [2, 3, 4] {
            assert!(is_minimal_separator(&g, 0, 1, VertexSet::singleton(x)));
        }
    }

    #[test]
    fn characterizations_agree_on_small_graphs() {
        let graphs = [path3(), path5(), cycle4(), complete(5), graph(6, &[(0, 1), (2, 3)])];
        for g in &graphs {
            let n = g.n();
            for u in 0..n {
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    for bits in 0..(1u64 << n) {
                        let t = VertexSet::from_bits(bits);
                        if t.contains(u) || t.contains(v) {
                            continue;
                        }
                        assert_eq!(
                            is_minimal_separator(g, u, v, t),
                            is_minimal_separator_by_deletion(g, u, v, t),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_on_path5() {
        let fam = enumerate_minimal_separators_bruteforce(&path5(), 0, 4).unwrap();
        assert_eq!(fam.members(), &[set(&[1]), set(&[2]), set(&[3])]);
        assert!(fam.is_antichain());
    }

    #[test]
    fn brute_force_adjacent_terminals() {
        let g = graph(3, &[(0, 1)]);
        let fam = enumerate_minimal_separators_bruteforce(&g, 0, 1).unwrap();
        assert!(fam.is_empty());
    }

    #[test]
    fn brute_force_disconnected_terminals() {
        let g = Graph::empty(2).unwrap();
        let fam = enumerate_minimal_separators_bruteforce(&g, 0, 1).unwrap();
        assert_eq!(fam.members(), &[VertexSet::EMPTY]);
    }

    #[test]
    fn brute_force_guards_size() {
        let g = Graph::empty(25).unwrap();
        assert_eq!(
            enumerate_minimal_separators_bruteforce(&g, 0, 1).unwrap_err(),
            SeparatorError::InstanceTooLarge(25)
        );
    }

    #[test]
    fn fast_enumerator_on_complete_graph() {
        let g = complete(5);
        assert_eq!(enumerate_minimal_separators(&g, 0, 3).count(), 0);
    }

    #[test]
    fn fast_enumerator_counts_two_parallel_paths() {
        // Two internally disjoint u-v paths of length 4: one separator
        // choice per path, 3 * 3 = 9 in total.
        let g = graph(
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
        );
        let fam = minimal_separator_family(&g, 0, 1);
        assert_eq!(fam.len(), 9);
        let mut expected = Vec::new();
        for p in [2, 3, 4] {
            for q in [5, 6, 7] {
                expected.push(set(&[p, q]));
            }
        }
        expected.sort_unstable();
        assert_eq!(fam.members(), expected.as_slice());
    }

    #[test]
    fn fast_matches_brute_force_exhaustively() {
        // Every graph on 4 vertices (all 64 edge masks), every pair.
        for mask in 0..64u32 {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = graph(4, &edges);
            for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
                let brute = enumerate_minimal_separators_bruteforce(&g, u, v).unwrap();
                let fast = minimal_separator_family(&g, u, v);
                assert_eq!(brute.members(), fast.members(), "mask {mask} pair ({u},{v})");
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_minimal_separators(&cycle4(), 0, 2), 1);
        let edge = graph(2, &[(0, 1)]);
        assert_eq!(count_minimal_separators(&edge, 0, 1), 0);
        let split = Graph::empty(3).unwrap();
        assert_eq!(count_minimal_separators(&split, 0, 2), 1);
    }

    #[test]
    fn cuts_of_a_path() {
        let g = path3();
        assert_eq!(enumerate_minimal_vertex_cuts(&g), vec![set(&[1])]);
    }

    #[test]
    fn cuts_of_complete_graph() {
        assert!(enumerate_minimal_vertex_cuts(&complete(4)).is_empty());
    }

    #[test]
    fn cuts_of_disconnected_graph() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(enumerate_minimal_vertex_cuts(&g), vec![VertexSet::EMPTY]);
    }

    /// Brute-force cut oracle: all subsets whose removal leaves >= 2
    /// components, filtered to inclusion-minimal ones.
    fn brute_force_cuts(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut cuts = Vec::new();
        for bits in 0..(1u64 << n) {
            let t = VertexSet::from_bits(bits);
            if (g.vertices() - t).len() < 2 {
                continue;
            }
            if g.components(t).len() >= 2 {
                cuts.push(t);
            }
        }
        cuts.sort_unstable_by_key(|s| (s.len(), s.bits()));
        let mut minimal: Vec<VertexSet> = Vec::new();
        for s in cuts {
            if !minimal.iter().any(|m| m.is_subset_of(s)) {
                minimal.push(s);
            }
        }
        minimal.sort_unstable();
        minimal
    }

    #[test]
    fn cuts_match_brute_force_oracle() {
        let samples = [
            graph(5, &[(0, 2), (2, 3), (3, 4), (4, 1)]),
            cycle4(),
            graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
            graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
        ];
        for g in &samples {
            assert_eq!(enumerate_minimal_vertex_cuts(g), brute_force_cuts(g));
        }
    }

    #[test]
    fn every_cut_separates_a_pair_across_components() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        for t in enumerate_minimal_vertex_cuts(&g) {
            let comps = g.components(t);
            assert!(comps.len() >= 2);
            let u = comps[0].min().unwrap();
            let v = comps[1].min().unwrap();
            assert!(is_minimal_separator(&g, u, v, t));
        }
    }
}
