//! Budgeted exhaustive search, and the induced-subdivision finder built on it.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Three-way result of an exhaustive search with a node budget.
///
/// `NotFound` is a proof of absence; `BudgetExceeded` means the search stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound,
    BudgetExceeded,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_not_found(&self) -> bool {
        matches!(self, SearchOutcome::NotFound)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::BudgetExceeded => SearchOutcome::BudgetExceeded,
        }
    }
}

/// Counts search nodes against a limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
    spent: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, spent: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Charges one node; false once the limit is exhausted.
    pub fn tick(&mut self) -> bool {
        if self.spent >= self.limit {
            return false;
        }
        self.spent += 1;
        true
    }

    /// Charges `units` of work at once, saturating at the limit.
    pub fn charge(&mut self, units: u64) {
        self.spent = self.spent.saturating_add(units).min(self.limit);
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.spent >= self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(50_000_000)
    }
}

/// Branch vertices and branch paths of an induced subdivision of a pattern.
///
/// `paths[k]` realizes the `k`-th pattern edge `(u, v)` (sorted edge order),
/// running from `branch[u]` to `branch[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl SubdivisionWitness {
    /// All host vertices used by the witness, sorted.
    pub fn vertex_set(&self) -> crate::VertexSet {
        self.branch
            .iter()
            .copied()
            .chain(self.paths.iter().flatten().copied())
            .collect()
    }
}

/// Options for [`find_induced_subdivision_with`].
#[derive(Clone, Copy, Default)]
pub struct SubdivisionQuery<'a> {
    /// Every branch path has at least one internal vertex.
    pub proper: bool,
    /// Restricts which host vertices may serve as branch vertices.
    pub branch_filter: Option<&'a dyn Fn(usize) -> bool>,
}

/// Searches `g` for an induced subgraph isomorphic to a subdivision of `pattern`.
pub fn find_induced_subdivision(
    g: &Graph,
    pattern: &Graph,
    proper: bool,
    budget: &mut Budget,
) -> SearchOutcome<SubdivisionWitness> {
    find_induced_subdivision_with(
        g,
        pattern,
        SubdivisionQuery {
            proper,
            branch_filter: None,
        },
        budget,
    )
}

#[derive(Clone, Copy)]
enum Step {
    MapRoot(usize),
    Edge { index: usize, from: usize, to: usize },
}

struct Finder<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    pattern_edges: Vec<(usize, usize)>,
    query: SubdivisionQuery<'a>,
    schedule: Vec<Step>,
    image: Vec<Option<usize>>,
    preimage: Vec<Option<usize>>,
    used: Vec<bool>,
    processed: Vec<bool>,
    paths: Vec<Vec<usize>>,
}

enum Flow {
    Continue,
    Done,
    OutOfBudget,
}

/// Backtracking over branch-vertex images with path extension.
///
/// Pattern edges are processed in breadth-first order so that each edge has a
/// mapped end when reached. Every vertex entering the partial solution is
/// checked against all vertices already placed, so the final union induces
/// exactly the subdivision.
pub fn find_induced_subdivision_with(
    g: &Graph,
    pattern: &Graph,
    query: SubdivisionQuery<'_>,
    budget: &mut Budget,
) -> SearchOutcome<SubdivisionWitness> {
    let pattern_edges = pattern.edges();
    let mut edge_index = alloc::collections::BTreeMap::new();
    for (i, &e) in pattern_edges.iter().enumerate() {
        edge_index.insert(e, i);
    }
    let k = pattern.n();
    let mut schedule = Vec::new();
    let mut visited = vec![false; k];
    let mut scheduled = vec![false; pattern_edges.len()];
    for root in 0..k {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        schedule.push(Step::MapRoot(root));
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in pattern.neighbors(u) {
                let idx = edge_index[&(u.min(w), u.max(w))];
                if scheduled[idx] {
                    continue;
                }
                scheduled[idx] = true;
                schedule.push(Step::Edge {
                    index: idx,
                    from: u,
                    to: w,
                });
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut finder = Finder {
        g,
        pattern,
        query,
        schedule,
        image: vec![None; k],
        preimage: vec![None; g.n()],
        used: vec![false; g.n()],
        processed: vec![false; pattern_edges.len()],
        paths: vec![Vec::new(); pattern_edges.len()],
        pattern_edges,
    };
    if k > g.n() {
        return SearchOutcome::NotFound;
    }
    match finder.step(0, budget) {
        Flow::Done => {
            let branch = finder.image.iter().map(|x| x.unwrap()).collect();
            let paths = finder
                .pattern_edges
                .iter()
                .zip(&finder.paths)
                .map(|(&(u, _), p)| {
                    let mut p = p.clone();
                    if p.first() != finder.image[u].as_ref() {
                        p.reverse();
                    }
                    p
                })
                .collect();
            SearchOutcome::Found(SubdivisionWitness { branch, paths })
        }
        Flow::Continue => SearchOutcome::NotFound,
        Flow::OutOfBudget => SearchOutcome::BudgetExceeded,
    }
}

impl Finder<'_> {
    fn step(&mut self, i: usize, budget: &mut Budget) -> Flow {
        if i == self.schedule.len() {
            return Flow::Done;
        }
        match self.schedule[i] {
            Step::MapRoot(v) => {
                for y in 0..self.g.n() {
                    if !budget.tick() {
                        return Flow::OutOfBudget;
                    }
                    if !self.can_branch(v, y, None) {
                        continue;
                    }
                    self.assign(v, y);
                    match self.step(i + 1, budget) {
                        Flow::Continue => {}
                        other => return other,
                    }
                    self.unassign(v, y);
                }
                Flow::Continue
            }
            Step::Edge { index, from, to } => {
                self.processed[index] = true;
                let a = self.image[from].unwrap();
                let mut path = vec![a];
                let flow = self.extend(i, index, to, &mut path, false, budget);
                self.processed[index] = false;
                flow
            }
        }
    }

    fn assign(&mut self, v: usize, y: usize) {
        self.image[v] = Some(y);
        self.preimage[y] = Some(v);
        self.used[y] = true;
    }

    fn unassign(&mut self, v: usize, y: usize) {
        self.image[v] = None;
        self.preimage[y] = None;
        self.used[y] = false;
    }

    /// `y` may become the image of pattern vertex `v`. Its placed neighbors must be
    /// `extra` or branch images joined to `v` by a pattern edge that will later be
    /// realized as a direct edge.
    fn can_branch(&self, v: usize, y: usize, extra: Option<usize>) -> bool {
        if self.used[y] {
            return false;
        }
        if let Some(f) = self.query.branch_filter {
            if !f(y) {
                return false;
            }
        }
        self.g.neighbors(y).iter().all(|&z| {
            if !self.used[z] || Some(z) == extra {
                return true;
            }
            if self.query.proper {
                return false;
            }
            match self.preimage[z] {
                Some(w) => {
                    let e = (v.min(w), v.max(w));
                    self.pattern.has_edge(v, w) && {
                        let idx = self.pattern_edges.binary_search(&e).unwrap();
                        !self.processed[idx]
                    }
                }
                None => false,
            }
        })
    }

    fn extend(
        &mut self,
        i: usize,
        index: usize,
        to: usize,
        path: &mut Vec<usize>,
        must_close: bool,
        budget: &mut Budget,
    ) -> Flow {
        if !budget.tick() {
            return Flow::OutOfBudget;
        }
        let last = *path.last().unwrap();
        let has_interior = path.len() >= 2;
        let direct_ok = has_interior || !self.query.proper;
        let g = self.g;

        match self.image[to] {
            Some(b) => {
                if g.has_edge(last, b) {
                    // any other continuation would leave the chord last-b inside the union
                    if !direct_ok {
                        return Flow::Continue;
                    }
                    path.push(b);
                    self.paths[index] = path.clone();
                    let flow = self.step(i + 1, budget);
                    path.pop();
                    return flow;
                }
                if must_close {
                    return Flow::Continue;
                }
            }
            None => {
                if direct_ok {
                    for &y in g.neighbors(last) {
                        if !self.can_branch(to, y, Some(last)) {
                            continue;
                        }
                        self.assign(to, y);
                        path.push(y);
                        self.paths[index] = path.clone();
                        let flow = self.step(i + 1, budget);
                        path.pop();
                        match flow {
                            Flow::Continue => self.unassign(to, y),
                            other => return other,
                        }
                    }
                }
            }
        }

        let target = self.image[to];
        for &y in g.neighbors(last) {
            if self.used[y] {
                continue;
            }
            let ok = g
                .neighbors(y)
                .iter()
                .all(|&z| !self.used[z] || z == last || Some(z) == target);
            if !ok {
                continue;
            }
            let close_next = target.is_some_and(|b| g.has_edge(y, b));
            self.used[y] = true;
            path.push(y);
            let flow = self.extend(i, index, to, path, close_next, budget);
            path.pop();
            self.used[y] = false;
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn edge_pattern_finds_an_edge() {
        let g = cycle(5);
        let w = find_induced_subdivision(&g, &complete(2), false, &mut Budget::unlimited())
            .found()
            .unwrap();
        assert_eq!(w.paths, vec![vec![0, 1]]);
    }

    #[test]
    fn triangle_in_hexagon_is_proper() {
        let g = cycle(6);
        let w = find_induced_subdivision(&g, &complete(3), true, &mut Budget::unlimited())
            .found()
            .unwrap();
        assert_eq!(w.vertex_set().len(), 6);
        for p in &w.paths {
            assert!(p.len() >= 3);
            assert!(g.is_induced_path(p));
        }
    }

    #[test]
    fn no_triangle_in_tree() {
        let tree = complete_bipartite(1, 5);
        let out = find_induced_subdivision(&tree, &complete(3), false, &mut Budget::unlimited());
        assert_eq!(out, SearchOutcome::NotFound);
    }

    #[test]
    fn triangle_itself_is_not_proper() {
        let out = find_induced_subdivision(&complete(3), &complete(3), true, &mut Budget::unlimited());
        assert_eq!(out, SearchOutcome::NotFound);
        let out = find_induced_subdivision(&complete(3), &complete(3), false, &mut Budget::unlimited());
        assert!(out.is_found());
    }

    #[test]
    fn chords_are_rejected() {
        // C_6 plus one long chord has no induced C_6
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::from_edges(6, edges).unwrap();
        let out = find_induced_subdivision(&g, &complete(3), true, &mut Budget::unlimited());
        assert_eq!(out, SearchOutcome::NotFound);
        let w = find_induced_subdivision(&g, &complete(3), false, &mut Budget::unlimited())
            .found()
            .unwrap();
        assert_eq!(w.vertex_set().len(), 4);
        let (h, _) = g.induced_subgraph(&w.vertex_set()).unwrap();
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn budget_is_reported() {
        let g = cycle(12);
        let out = find_induced_subdivision(&g, &complete(3), true, &mut Budget::new(3));
        assert_eq!(out, SearchOutcome::BudgetExceeded);
    }
}
