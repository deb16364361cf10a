//! Finite graphs on the vertex set `[n] = {1, ..., n}` together with the
//! structural predicates and counting functions the shifting operations rely on.
//!
//! Vertices are 1-indexed throughout and edges are stored as sorted pairs
//! `(i, j)` with `i < j`, so equal graphs compare equal structurally.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Result, ShiftError};
use crate::profile::MProfile;

/// Largest `n` accepted by [`Graph::betti_hochster`]; the oracle enumerates
/// all `C(n, i+2)` vertex subsets.
pub const BETTI_MAX_N: usize = 14;

/// An undirected graph on `[n]` without loops or multiple edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Wire format: `{"n": 5, "edges": [[1,2],[2,3]]}` with 1-indexed `i < j` pairs.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.into_iter().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = ShiftError;

    fn try_from(repr: GraphRepr) -> Result<Graph> {
        Graph::new(repr.n, repr.edges)
    }
}

impl Graph {
    /// Builds a graph on `[n]`, normalizing each pair to sorted order and
    /// dropping duplicates. Rejects loops, out-of-range endpoints and `n < 1`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n < 1 {
            return Err(ShiftError::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(ShiftError::LoopEdge(a));
            }
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(ShiftError::EndpointOutOfRange { endpoint: v, n });
                }
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    /// The graph on `[n]` with no edges.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph::new(n, edges)
    }

    /// The complete bipartite graph `K_{a,b}` on parts `{1..a}` and `{a+1..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a < 1 || b < 1 {
            return Err(ShiftError::EmptyVertexSet);
        }
        let mut edges = Vec::new();
        for i in 1..=a {
            for j in (a + 1)..=(a + b) {
                edges.push((i, j));
            }
        }
        Graph::new(a + b, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order as sorted pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.degree(v) == 0
    }

    /// Number of vertices with at least one edge.
    pub fn non_isolated_count(&self) -> usize {
        (1..=self.n).filter(|&v| !self.is_isolated(v)).count()
    }

    /// A graph is shifted when lowering either endpoint of any edge (keeping
    /// the endpoints distinct) again yields an edge. Single-step lowerings
    /// generate the full dominance order on sorted pairs, so only those are
    /// checked.
    pub fn is_shifted(&self) -> bool {
        self.edges.iter().all(|&(i, j)| {
            (i == 1 || self.edges.contains(&(i - 1, j)))
                && (j == i + 1 || self.edges.contains(&(i, j - 1)))
        })
    }

    /// Chordality via maximum cardinality search: the graph is chordal iff
    /// the MCS order is a perfect elimination order.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n <= 3 {
            return true;
        }
        let adj: Vec<BTreeSet<usize>> = (0..=n)
            .map(|v| self.neighbors(v).into_iter().collect())
            .collect();

        // MCS: repeatedly pick an unnumbered vertex with the most numbered
        // neighbors; ties broken by smallest label for determinism.
        let mut weight = vec![0usize; n + 1];
        let mut numbered = vec![false; n + 1];
        let mut order = vec![0usize; n]; // order[t] = vertex numbered at time t (t = n-1 down to 0)
        let mut position = vec![0usize; n + 1];
        for t in (0..n).rev() {
            let v = (1..=n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("some vertex is unnumbered");
            numbered[v] = true;
            order[t] = v;
            position[v] = t;
            for &u in &adj[v] {
                if !numbered[u] {
                    weight[u] += 1;
                }
            }
        }

        // Perfect elimination check: the later neighbors of each vertex must
        // form a clique, which reduces to containment in the earliest later
        // neighbor's neighborhood.
        for (t, &v) in order.iter().enumerate() {
            let later: Vec<usize> = adj[v]
                .iter()
                .copied()
                .filter(|&u| position[u] > t)
                .collect();
            if let Some(&parent) = later.iter().min_by_key(|&&u| position[u]) {
                for &u in &later {
                    if u != parent && !adj[parent].contains(&u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Partition of `[n]` into maximal connected vertex sets, ordered by
    /// smallest member; each part sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut parts = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut part = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                part.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// True when there is a path between `a` and `b`.
    pub fn has_path(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if u == b {
                    return true;
                }
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        false
    }

    /// Vertex k-connectivity by exhaustive deletion: `n > k` and the graph
    /// stays connected after removing any set of fewer than `k` vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        assert!(k >= 1, "k-connectivity requires k >= 1");
        if self.n <= k {
            return false;
        }
        for size in 0..k {
            let mut ok = true;
            for_each_combination(self.n, size, &mut |deleted| {
                if ok && !self.connected_after_deleting(deleted) {
                    ok = false;
                }
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn connected_after_deleting(&self, deleted: &[usize]) -> bool {
        let gone: BTreeSet<usize> = deleted.iter().copied().collect();
        let remaining: Vec<usize> = (1..=self.n).filter(|v| !gone.contains(v)).collect();
        let Some(&start) = remaining.first() else {
            return false;
        };
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] && !gone.contains(&u) {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == remaining.len()
    }

    /// Number of k-cliques (`t_count(g, 1) = n`, `t_count(g, 2) = |E|`).
    /// Returns 0 for `k > n`.
    pub fn t_count(&self, k: usize) -> u64 {
        assert!(k >= 1, "cliques are counted for k >= 1");
        if k > self.n {
            return 0;
        }
        if k == 1 {
            return self.n as u64;
        }
        let mut count = 0u64;
        let mut clique = Vec::with_capacity(k);
        self.count_cliques(k, 0, &mut clique, &mut count);
        count
    }

    fn count_cliques(&self, k: usize, min_next: usize, clique: &mut Vec<usize>, count: &mut u64) {
        if clique.len() == k {
            *count += 1;
            return;
        }
        for v in (min_next + 1)..=self.n {
            if self.n - v + 1 < k - clique.len() {
                break;
            }
            if clique.iter().all(|&u| self.has_edge(u, v)) {
                clique.push(v);
                self.count_cliques(k, v, clique, count);
                clique.pop();
            }
        }
    }

    /// Vertices adjacent to every non-isolated vertex other than themselves.
    /// On an edgeless graph the condition is vacuous and all of `[n]` qualifies.
    pub fn star_vertices(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&v| {
                (1..=self.n)
                    .filter(|&u| u != v && !self.is_isolated(u))
                    .all(|u| self.has_edge(u, v))
            })
            .collect()
    }

    /// Relabels the graph along a permutation given as `sigma[v-1]` = image of `v`.
    pub fn apply_permutation(&self, sigma: &[usize]) -> Result<Graph> {
        if sigma.len() != self.n {
            return Err(ShiftError::NotPermutation(self.n));
        }
        let mut seen = vec![false; self.n + 1];
        for &img in sigma {
            if img < 1 || img > self.n || seen[img] {
                return Err(ShiftError::NotPermutation(self.n));
            }
            seen[img] = true;
        }
        Graph::new(
            self.n,
            self.edges
                .iter()
                .map(|&(a, b)| (sigma[a - 1], sigma[b - 1])),
        )
    }

    /// Induced subgraph on `verts`, relabeled order-preservingly onto
    /// `[verts.len()]`. `verts` must be nonempty, strictly increasing, and
    /// within range.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph> {
        if verts.is_empty() {
            return Err(ShiftError::EmptyVertexSet);
        }
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ShiftError::NotPermutation(self.n));
        }
        for &v in verts {
            if v < 1 || v > self.n {
                return Err(ShiftError::EndpointOutOfRange {
                    endpoint: v,
                    n: self.n,
                });
            }
        }
        let index_of = |v: usize| verts.binary_search(&v).ok().map(|i| i + 1);
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            if let (Some(x), Some(y)) = (index_of(a), index_of(b)) {
                edges.push((x, y));
            }
        }
        Graph::new(verts.len(), edges)
    }

    /// The graph with vertex `v` removed, relabeled onto `[n-1]`.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        if v < 1 || v > self.n {
            return Err(ShiftError::EndpointOutOfRange {
                endpoint: v,
                n: self.n,
            });
        }
        if self.n == 1 {
            return Err(ShiftError::EmptyVertexSet);
        }
        let verts: Vec<usize> = (1..=self.n).filter(|&u| u != v).collect();
        self.induced(&verts)
    }

    /// Same edge set on a vertex set extended by `extra` isolated vertices.
    pub fn padded(&self, extra: usize) -> Graph {
        Graph {
            n: self.n + extra,
            edges: self.edges.clone(),
        }
    }

    /// The m-profile `(m_{<=1}, ..., m_{<=n-1})` of a shifted graph, where
    /// `m_{<=k}` counts edges whose smaller endpoint is at most `k`.
    pub fn m_profile(&self) -> Result<MProfile> {
        if !self.is_shifted() {
            return Err(ShiftError::NotShifted);
        }
        let mut cum = vec![0usize; self.n.saturating_sub(1)];
        for &(i, _) in &self.edges {
            for slot in cum.iter_mut().skip(i - 1) {
                *slot += 1;
            }
        }
        MProfile::new(self.n, cum)
    }

    /// Second linear-strand Betti number of the non-edge quadric ideal:
    /// the sum over all `(i+2)`-subsets `W` of (number of connected components
    /// of the induced subgraph on `W`) minus one. Independent of any shifting
    /// machinery, so it serves as the ground-truth oracle.
    pub fn betti_hochster(&self, i: usize) -> Result<u64> {
        if self.n > BETTI_MAX_N {
            return Err(ShiftError::SizeGuard {
                n: self.n,
                max: BETTI_MAX_N,
            });
        }
        if self.n < 2 || i > self.n - 2 {
            return Err(ShiftError::IndexOutOfRange {
                index: i,
                min: 0,
                max: self.n.saturating_sub(2),
            });
        }
        let mut total = 0u64;
        for_each_combination(self.n, i + 2, &mut |subset| {
            total += (self.component_count_within(subset) - 1) as u64;
        });
        Ok(total)
    }

    fn component_count_within(&self, verts: &[usize]) -> usize {
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for a in 0..verts.len() {
            for b in (a + 1)..verts.len() {
                if self.has_edge(verts[a], verts[b]) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        (0..verts.len())
            .filter(|&x| find(&mut parent, x) == x)
            .count()
    }
}

/// Calls `f` with every size-`k` subset of `{1, ..., n}` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    let mut current = Vec::with_capacity(k);
    fn recurse(
        n: usize,
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if current.len() == k {
            f(current);
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - current.len() {
                break;
            }
            current.push(v);
            recurse(n, k, v + 1, current, f);
            current.pop();
        }
    }
    recurse(n, k, 1, &mut current, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn new_normalizes_pairs() {
        let got = Graph::new(3, [(2, 1), (2, 3)]).unwrap();
        assert_eq!(got, g(3, &[(1, 2), (2, 3)]));
        assert_eq!(got.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn new_rejects_loops_and_range() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(ShiftError::LoopEdge(1)));
        assert_eq!(
            Graph::new(2, [(1, 3)]),
            Err(ShiftError::EndpointOutOfRange { endpoint: 3, n: 2 })
        );
        assert_eq!(Graph::new(0, []), Err(ShiftError::EmptyVertexSet));
    }

    #[test]
    fn new_dedupes() {
        let got = Graph::new(3, [(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(got.edge_count(), 1);
    }

    #[test]
    fn k33_is_valid_bipartite() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.n(), 6);
        assert_eq!(k33.edge_count(), 9);
        assert!(!k33.has_edge(1, 2));
        assert!(k33.has_edge(1, 4));
    }

    #[test]
    fn shifted_examples() {
        assert!(Graph::edgeless(3).unwrap().is_shifted());
        assert!(!g(3, &[(2, 3)]).is_shifted());
        assert!(g(3, &[(1, 2), (1, 3)]).is_shifted());
        assert!(!g(4, &[(1, 2), (1, 4)]).is_shifted());
    }

    #[test]
    fn shifted_k66_exterior_listing() {
        // 36 edges in six descending runs: 11, 9, 7, 5, 3, 1.
        let mut edges = Vec::new();
        for (i, top) in [(1, 12), (2, 11), (3, 10), (4, 9), (5, 8), (6, 7)] {
            for j in (i + 1)..=top {
                edges.push((i, j));
            }
        }
        let graph = g(12, &edges);
        assert_eq!(graph.edge_count(), 36);
        assert!(graph.is_shifted());
    }

    #[test]
    fn chordal_examples() {
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(!c4.is_chordal());
        let tree = g(5, &[(1, 2), (2, 3), (2, 4), (4, 5)]);
        assert!(tree.is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
        let c5 = g(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
        assert!(!c5.is_chordal());
        // 4-cycle plus one chord is chordal.
        let chorded = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]);
        assert!(chorded.is_chordal());
    }

    #[test]
    fn chordal_matches_cycle_definition_on_small_graphs() {
        // Brute force: chordal iff no induced cycle of length >= 4, i.e. no
        // vertex subset inducing a connected 2-regular subgraph of size >= 4.
        for n in 1..=6 {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| mask >> t & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let graph = g(n, &edges);
                let mut has_chordless_cycle = false;
                for size in 4..=n {
                    for_each_combination(n, size, &mut |subset| {
                        let sub = graph.induced(subset).unwrap();
                        if sub.is_connected() && (1..=size).all(|v| sub.degree(v) == 2) {
                            has_chordless_cycle = true;
                        }
                    });
                }
                assert_eq!(
                    graph.is_chordal(),
                    !has_chordless_cycle,
                    "disagreement on n={n} edges={edges:?}"
                );
            }
        }
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            Graph::edgeless(3).unwrap().connected_components(),
            vec![vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            g(4, &[(1, 2), (3, 4)]).connected_components(),
            vec![vec![1, 2], vec![3, 4]]
        );
        assert_eq!(
            g(3, &[(1, 2), (2, 3)]).connected_components(),
            vec![vec![1, 2, 3]]
        );
    }

    #[test]
    fn k_connectivity_examples() {
        assert!(Graph::complete(4).unwrap().is_k_connected(3));
        assert!(!g(3, &[(1, 2), (2, 3)]).is_k_connected(2));
        assert!(g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).is_k_connected(2));
        // n > k is required: K_4 is not 4-connected.
        assert!(!Graph::complete(4).unwrap().is_k_connected(4));
        // Disconnected graphs fail already at k = 1.
        assert!(!g(4, &[(1, 2), (3, 4)]).is_k_connected(1));
    }

    #[test]
    fn t_count_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.t_count(3), 1);
        assert_eq!(k3.t_count(2), 3);
        assert_eq!(k3.t_count(1), 3);
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(c4.t_count(3), 0);
    }

    #[test]
    fn t_count_exterior_shift_of_k33() {
        // Brute-force clique enumeration over the 9-edge shifted graph:
        // triangles are 123, 124, 125, 134, 234.
        let graph = g(
            6,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
            ],
        );
        let mut triangles = Vec::new();
        for_each_combination(6, 3, &mut |s| {
            if graph.has_edge(s[0], s[1])
                && graph.has_edge(s[0], s[2])
                && graph.has_edge(s[1], s[2])
            {
                triangles.push(s.to_vec());
            }
        });
        assert_eq!(
            triangles,
            vec![
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 2, 5],
                vec![1, 3, 4],
                vec![2, 3, 4]
            ]
        );
        assert_eq!(graph.t_count(3), 5);
    }

    #[test]
    fn star_vertices_examples() {
        // Vertex 2 has an edge to 1 but misses non-isolated 3, so only vertex
        // 1 qualifies.
        assert_eq!(g(3, &[(1, 2), (1, 3)]).star_vertices(), vec![1]);
        assert_eq!(Graph::complete(3).unwrap().star_vertices(), vec![1, 2, 3]);
        assert_eq!(Graph::edgeless(3).unwrap().star_vertices(), vec![1, 2, 3]);
        // An isolated vertex next to an actual edge is not a star vertex.
        assert_eq!(g(3, &[(1, 2)]).star_vertices(), vec![1, 2]);
    }

    #[test]
    fn permutation_examples() {
        let graph = g(3, &[(1, 2)]);
        assert_eq!(graph.apply_permutation(&[1, 2, 3]).unwrap(), graph);
        assert_eq!(
            graph.apply_permutation(&[3, 2, 1]).unwrap(),
            g(3, &[(2, 3)])
        );
        assert_eq!(
            graph.apply_permutation(&[1, 1, 3]),
            Err(ShiftError::NotPermutation(3))
        );
        let sigma = [2, 3, 1];
        let inverse = [3, 1, 2];
        let round = graph
            .apply_permutation(&sigma)
            .unwrap()
            .apply_permutation(&inverse)
            .unwrap();
        assert_eq!(round, graph);
    }

    #[test]
    fn betti_hochster_examples() {
        assert_eq!(Graph::edgeless(3).unwrap().betti_hochster(1).unwrap(), 2);
        assert_eq!(g(3, &[(1, 2), (1, 3)]).betti_hochster(1).unwrap(), 0);
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(c4.betti_hochster(0).unwrap(), 2);
    }

    #[test]
    fn betti_hochster_beta0_counts_non_edges() {
        for (n, edges) in [
            (4usize, vec![(1, 2), (2, 3)]),
            (5, vec![(1, 5), (2, 3), (2, 4)]),
            (3, vec![]),
        ] {
            let graph = g(n, &edges);
            let non_edges = n * (n - 1) / 2 - graph.edge_count();
            assert_eq!(graph.betti_hochster(0).unwrap(), non_edges as u64);
        }
    }

    #[test]
    fn betti_hochster_guards() {
        let graph = Graph::edgeless(15).unwrap();
        assert!(matches!(
            graph.betti_hochster(0),
            Err(ShiftError::SizeGuard { .. })
        ));
        let small = Graph::edgeless(3).unwrap();
        assert!(matches!(
            small.betti_hochster(2),
            Err(ShiftError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn induced_and_without_vertex() {
        let graph = g(4, &[(1, 2), (2, 4), (3, 4)]);
        assert_eq!(graph.induced(&[2, 3, 4]).unwrap(), g(3, &[(1, 3), (2, 3)]));
        assert_eq!(graph.without_vertex(3).unwrap(), g(3, &[(1, 2), (2, 3)]));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let graph = g(3, &[(1, 2), (2, 3)]);
        let json = serde_json::to_string(&graph).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, graph);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,5]]}"#).is_err());
    }
}
