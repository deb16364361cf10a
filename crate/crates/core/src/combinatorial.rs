//! Combinatorial shifting: the compression `Shift_ij`, shift sequences and
//! their traces, exhaustive enumeration of the reachable shifted graphs, and
//! the deterministic algorithm that computes the shifted graph of a chordal
//! graph by shift moves alone.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Result, ShiftError};
use crate::graph::Graph;

/// Largest `n` accepted by the enumeration-based operations.
pub const ENUMERATE_MAX_N: usize = 9;
/// Upper bound on distinct graphs visited during enumeration.
pub const ENUMERATE_STATE_LIMIT: usize = 1 << 20;

/// A compression step `Shift_ij` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct ShiftStep {
    i: usize,
    j: usize,
}

impl ShiftStep {
    pub fn new(i: usize, j: usize) -> Result<ShiftStep> {
        if i < 1 || i >= j {
            return Err(ShiftError::InvalidStep { i, j, n: 0 });
        }
        Ok(ShiftStep { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    fn check_bounds(&self, n: usize) -> Result<()> {
        if self.j > n {
            return Err(ShiftError::InvalidStep {
                i: self.i,
                j: self.j,
                n,
            });
        }
        Ok(())
    }
}

impl From<ShiftStep> for (usize, usize) {
    fn from(s: ShiftStep) -> (usize, usize) {
        (s.i, s.j)
    }
}

impl TryFrom<(usize, usize)> for ShiftStep {
    type Error = ShiftError;

    fn try_from((i, j): (usize, usize)) -> Result<ShiftStep> {
        ShiftStep::new(i, j)
    }
}

/// A shift sequence together with the graph it produces. Replaying `steps`
/// on the source graph reproduces `result`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftTrace {
    pub steps: Vec<ShiftStep>,
    pub result: Graph,
}

/// How a step relates to the graph it is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftClass {
    /// `{i,j}` is an edge.
    Edge,
    /// No path joins `i` and `j`.
    Disjoint,
    Other,
}

/// Applies `Shift_ij` by the compression rule: an edge containing `j` but not
/// `i` is rewritten to use `i` instead, unless that rewrite already is an edge
/// of the input. Edge count is always preserved.
pub fn shift_ij(g: &Graph, step: ShiftStep) -> Result<Graph> {
    step.check_bounds(g.n())?;
    let (i, j) = (step.i, step.j);
    let mut edges = BTreeSet::new();
    for (a, b) in g.edges() {
        let has_j = a == j || b == j;
        let has_i = a == i || b == i;
        let moved = if has_j && !has_i {
            let other = if a == j { b } else { a };
            if other != i && !g.has_edge(other, i) {
                (other.min(i), other.max(i))
            } else {
                (a, b)
            }
        } else {
            (a, b)
        };
        edges.insert(moved);
    }
    let out = Graph::new(g.n(), edges)?;
    debug_assert_eq!(out.edge_count(), g.edge_count(), "compression is injective");
    Ok(out)
}

/// `Shift_ij` via the closed form: keep edges equal to `{i,j}` or avoiding
/// both endpoints; attach to `i` every `t` seen from `i` or `j`; keep at `j`
/// every `t` seen from both. Must agree with [`shift_ij`] everywhere.
pub fn shift_ij_closed_form(g: &Graph, step: ShiftStep) -> Result<Graph> {
    step.check_bounds(g.n())?;
    let (i, j) = (step.i, step.j);
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        if (a, b) == (i, j) || (a != i && a != j && b != i && b != j) {
            edges.push((a, b));
        }
    }
    for t in 1..=g.n() {
        if t == i || t == j {
            continue;
        }
        if g.has_edge(i, t) || g.has_edge(j, t) {
            edges.push((i.min(t), i.max(t)));
        }
        if g.has_edge(i, t) && g.has_edge(j, t) {
            edges.push((j.min(t), j.max(t)));
        }
    }
    Graph::new(g.n(), edges)
}

/// Left-to-right composition of the given steps, all of them recorded.
pub fn apply_shift_sequence(g: &Graph, steps: &[ShiftStep]) -> Result<ShiftTrace> {
    let mut current = g.clone();
    for &step in steps {
        current = shift_ij(&current, step)?;
    }
    Ok(ShiftTrace {
        steps: steps.to_vec(),
        result: current,
    })
}

/// Sweeps `Shift_ij` over all pairs in lexicographic order until a full sweep
/// changes nothing; the fixed point of every `Shift_ij` is exactly a shifted
/// graph. Only effective steps are recorded. Terminates because every
/// effective step strictly lowers the sum of endpoint labels over all edges.
pub fn canonical_combinatorial_shift(g: &Graph) -> ShiftTrace {
    let mut current = g.clone();
    let mut steps = Vec::new();
    loop {
        let mut changed = false;
        for i in 1..g.n() {
            for j in (i + 1)..=g.n() {
                let step = ShiftStep::new(i, j).expect("i < j by construction");
                let next = shift_ij(&current, step).expect("step within bounds");
                if next != current {
                    steps.push(step);
                    current = next;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(current.is_shifted());
    ShiftTrace {
        steps,
        result: current,
    }
}

/// All combinatorial shifted graphs of `g`: the breadth-first closure of `g`
/// under every `Shift_ij`, filtered to the shifted fixed points. Guarded to
/// `n <= 9` and to [`ENUMERATE_STATE_LIMIT`] visited graphs.
pub fn enumerate_combinatorial_shifted_graphs(g: &Graph) -> Result<BTreeSet<Graph>> {
    if g.n() > ENUMERATE_MAX_N {
        return Err(ShiftError::SizeGuard {
            n: g.n(),
            max: ENUMERATE_MAX_N,
        });
    }
    let steps: Vec<ShiftStep> = (1..g.n())
        .flat_map(|i| ((i + 1)..=g.n()).map(move |j| ShiftStep { i, j }))
        .collect();
    let mut visited: HashSet<Graph> = HashSet::from([g.clone()]);
    let mut queue: VecDeque<Graph> = VecDeque::from([g.clone()]);
    let mut found = BTreeSet::new();
    while let Some(current) = queue.pop_front() {
        if current.is_shifted() {
            found.insert(current.clone());
            // A shifted graph is fixed by every step; no successors to explore.
            continue;
        }
        for &step in &steps {
            let next = shift_ij(&current, step)?;
            if visited.insert(next.clone()) {
                if visited.len() > ENUMERATE_STATE_LIMIT {
                    return Err(ShiftError::StateGuard {
                        limit: ENUMERATE_STATE_LIMIT,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(found)
}

/// True when `g` has exactly one combinatorial shifted graph.
pub fn delta_c_is_unique(g: &Graph) -> Result<bool> {
    Ok(enumerate_combinatorial_shifted_graphs(g)?.len() == 1)
}

/// Classifies a step: an edge shift when `{i,j}` is an edge, a disjoint shift
/// when no path joins `i` and `j`, otherwise neither.
pub fn classify_shift(g: &Graph, step: ShiftStep) -> Result<ShiftClass> {
    step.check_bounds(g.n())?;
    if g.has_edge(step.i, step.j) {
        Ok(ShiftClass::Edge)
    } else if !g.has_path(step.i, step.j) {
        Ok(ShiftClass::Disjoint)
    } else {
        Ok(ShiftClass::Other)
    }
}

/// Computes the shifted graph of a chordal graph by shift moves alone.
///
/// Vertices are processed in increasing order. For the current vertex `u`,
/// working inside the subgraph induced on `{u, ..., n}`:
///
/// 1. disjoint shifts `Shift_uj` pull every other component onto `u`;
/// 2. disjoint shifts `Shift_vw` relabel non-isolated vertices down onto the
///    smallest free labels, so the non-isolated vertices form the contiguous
///    block starting at `u`;
/// 3. edge shifts `Shift_uv` over the neighbors of `u` repeat until `u` is a
///    star vertex of the block.
///
/// Once `u` is a star vertex over a contiguous block its edges are
/// `{u,u+1},...,{u,u+deg(u)}` and no later step can move them, so advancing
/// `u` implicitly peels the star while the single running graph keeps the
/// full edge set. The recorded steps therefore replay to the result, which
/// is shifted, has the input's edge count, and matches the exterior shift.
pub fn chordal_shift_algorithm(g: &Graph) -> Result<ShiftTrace> {
    if !g.is_chordal() {
        return Err(ShiftError::NotChordal);
    }
    let n = g.n();
    let mut w = g.clone();
    let mut steps = Vec::new();

    let push = |w: &mut Graph, steps: &mut Vec<ShiftStep>, i: usize, j: usize| -> Result<()> {
        let step = ShiftStep::new(i, j)?;
        let next = shift_ij(w, step)?;
        if next != *w {
            steps.push(step);
            *w = next;
        }
        Ok(())
    };

    for u in 1..=n {
        // Merge every active component onto u.
        loop {
            let reach = active_reachable(&w, u);
            let target = (u..=n).find(|&v| !reach[v] && active_degree(&w, u, v) > 0);
            match target {
                Some(j) => push(&mut w, &mut steps, u, j)?,
                None => break,
            }
        }
        // Relabel non-isolated vertices onto the smallest labels >= u.
        loop {
            let mut gap = None;
            for v in u..=n {
                if active_degree(&w, u, v) == 0 {
                    if let Some(src) = ((v + 1)..=n).find(|&s| active_degree(&w, u, s) > 0) {
                        gap = Some((v, src));
                        break;
                    }
                }
            }
            match gap {
                Some((v, src)) => push(&mut w, &mut steps, v, src)?,
                None => break,
            }
        }
        // Edge shifts until u dominates the block.
        let mut sweeps = 0usize;
        while !is_active_star(&w, u) {
            let before = w.clone();
            for v in active_neighbors(&w, u, u) {
                push(&mut w, &mut steps, u, v)?;
            }
            sweeps += 1;
            assert!(
                w != before || is_active_star(&w, u),
                "edge-shift sweep stalled before vertex {u} became a star vertex"
            );
            assert!(sweeps <= n * n, "edge-shift sweeps exceeded bound");
        }
    }

    debug_assert!(w.is_shifted());
    debug_assert_eq!(w.edge_count(), g.edge_count());
    Ok(ShiftTrace { steps, result: w })
}

/// Degree of `v` within the subgraph induced on `{u, ..., n}`.
fn active_degree(w: &Graph, u: usize, v: usize) -> usize {
    w.neighbors(v).into_iter().filter(|&t| t >= u).count()
}

fn active_neighbors(w: &Graph, u: usize, v: usize) -> Vec<usize> {
    w.neighbors(v).into_iter().filter(|&t| t >= u).collect()
}

/// Vertices of `{u, ..., n}` reachable from `u` inside the active subgraph.
fn active_reachable(w: &Graph, u: usize) -> Vec<bool> {
    let mut seen = vec![false; w.n() + 1];
    seen[u] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(v) = queue.pop_front() {
        for t in active_neighbors(w, u, v) {
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    seen
}

/// True when `u` is adjacent to every non-isolated vertex of the active
/// subgraph on `{u, ..., n}`.
fn is_active_star(w: &Graph, u: usize) -> bool {
    ((u + 1)..=w.n())
        .filter(|&v| active_degree(w, u, v) > 0)
        .all(|v| w.has_edge(u, v))
}
