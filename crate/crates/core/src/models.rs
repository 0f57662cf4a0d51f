//! Induced `(s, t)`-models: connected branch sets `A_1..A_s` and `B_1..B_t`,
//! each side pairwise anticomplete, every `A_i` touching every `B_j`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::constellation::{is_ample, Constellation, ConstellationError};
use crate::graph::{Graph, VertexSet};
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::search::{Budget, SearchOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Which sides a per-side property is asked of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sides {
    A,
    B,
    Both,
}

impl Sides {
    fn covers(self, side: Side) -> bool {
        matches!(
            (self, side),
            (Sides::Both, _) | (Sides::A, Side::A) | (Sides::B, Side::B)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelViolation {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0:?}-set {1} is empty")]
    Empty(Side, usize),
    #[error("{first:?}-set {i} and {second:?}-set {j} share a vertex")]
    Overlap {
        first: Side,
        i: usize,
        second: Side,
        j: usize,
    },
    #[error("{0:?}-set {1} is not connected")]
    Disconnected(Side, usize),
    #[error("{0:?}-sets {1} and {2} are joined by an edge")]
    SameSideEdge(Side, usize, usize),
    #[error("A-set {0} and B-set {1} are anticomplete")]
    MissingCrossEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("model is not linear on the required side")]
    NotLinear,
    #[error("model is not {0}-ample on both sides")]
    NotAmple(usize),
    #[error("graph has {n} vertices, search handles at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("index out of range")]
    IndexOutOfRange,
    #[error(transparent)]
    Constellation(#[from] ConstellationError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A verified induced model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedModel {
    host: Graph,
    a_sets: Vec<VertexSet>,
    b_sets: Vec<VertexSet>,
}

impl InducedModel {
    /// Checks all three defining clauses, collecting every violation.
    pub fn verify(
        host: Graph,
        a_sets: Vec<VertexSet>,
        b_sets: Vec<VertexSet>,
    ) -> Result<InducedModel, Vec<ModelViolation>> {
        let n = host.n();
        let mut errors = Vec::new();
        for v in a_sets.iter().chain(&b_sets).flat_map(|s| s.iter()) {
            if v >= n {
                errors.push(ModelViolation::VertexOutOfRange(v));
            }
        }
        if !errors.is_empty() {
            return Err(errors);
        }
        let all: Vec<(Side, usize, &VertexSet)> = a_sets
            .iter()
            .enumerate()
            .map(|(i, s)| (Side::A, i, s))
            .chain(b_sets.iter().enumerate().map(|(j, s)| (Side::B, j, s)))
            .collect();
        for &(side, i, set) in &all {
            if set.is_empty() {
                errors.push(ModelViolation::Empty(side, i));
            } else if !host.is_connected_set(set) {
                errors.push(ModelViolation::Disconnected(side, i));
            }
        }
        for (k, &(s1, i, x)) in all.iter().enumerate() {
            for &(s2, j, y) in &all[k + 1..] {
                if !x.is_disjoint(y) {
                    errors.push(ModelViolation::Overlap {
                        first: s1,
                        i,
                        second: s2,
                        j,
                    });
                } else if s1 == s2 && !host.is_anticomplete(x, y) {
                    errors.push(ModelViolation::SameSideEdge(s1, i, j));
                }
            }
        }
        for (i, a) in a_sets.iter().enumerate() {
            for (j, b) in b_sets.iter().enumerate() {
                if a.is_disjoint(b) && host.is_anticomplete(a, b) {
                    errors.push(ModelViolation::MissingCrossEdge(i, j));
                }
            }
        }
        if errors.is_empty() {
            Ok(InducedModel { host, a_sets, b_sets })
        } else {
            Err(errors)
        }
    }

    /// Apex singletons on the A side, the paths on the B side.
    pub fn from_constellation(c: &Constellation) -> InducedModel {
        InducedModel {
            host: c.host().clone(),
            a_sets: c.apex().iter().map(VertexSet::singleton).collect(),
            b_sets: c.paths().iter().map(|p| p.iter().copied().collect()).collect(),
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn a_sets(&self) -> &[VertexSet] {
        &self.a_sets
    }

    pub fn b_sets(&self) -> &[VertexSet] {
        &self.b_sets
    }

    pub fn s(&self) -> usize {
        self.a_sets.len()
    }

    pub fn t(&self) -> usize {
        self.b_sets.len()
    }

    fn side(&self, side: Side) -> &[VertexSet] {
        match side {
            Side::A => &self.a_sets,
            Side::B => &self.b_sets,
        }
    }

    pub fn is_linear(&self, sides: Sides) -> bool {
        [Side::A, Side::B]
            .into_iter()
            .filter(|&s| sides.covers(s))
            .all(|s| self.side(s).iter().all(|set| self.host.path_order(set).is_some()))
    }

    pub fn transpose(&self) -> InducedModel {
        InducedModel {
            host: self.host.clone(),
            a_sets: self.b_sets.clone(),
            b_sets: self.a_sets.clone(),
        }
    }

    /// Contracts each `A_i` to a vertex and keeps `G[B(M)]`.
    ///
    /// Contracted vertices are `0..s` in A-set order; path vertices follow,
    /// B-set by B-set, each in path order from its smaller end.
    pub fn a_contraction(&self) -> Result<Constellation, ModelError> {
        if !self.is_linear(Sides::Both) {
            return Err(ModelError::NotLinear);
        }
        let s = self.s();
        let mut id = vec![usize::MAX; self.host.n()];
        let mut paths = Vec::with_capacity(self.t());
        let mut next = s;
        for b in &self.b_sets {
            let order = self.host.path_order(b).ok_or(ModelError::NotLinear)?;
            let mut p = Vec::with_capacity(order.len());
            for v in order {
                id[v] = next;
                p.push(next);
                next += 1;
            }
            paths.push(p);
        }
        let mut edges = Vec::new();
        for b in &self.b_sets {
            for u in b.iter() {
                for &w in self.host.neighbors(u) {
                    if u < w && id[w] != usize::MAX {
                        edges.push((id[u], id[w]));
                    }
                }
            }
        }
        for (i, a) in self.a_sets.iter().enumerate() {
            let mut seen = VertexSet::new();
            for u in a.iter() {
                for &w in self.host.neighbors(u) {
                    if id[w] != usize::MAX && !seen.contains(w) {
                        seen = seen.union(&VertexSet::singleton(w));
                        edges.push((i, id[w]));
                    }
                }
            }
        }
        let g = Graph::from_edges(next, edges).map_err(|_| ModelError::IndexOutOfRange)?;
        Constellation::validate(g, VertexSet::range(s), paths)
            .map_err(|mut e| ModelError::Constellation(e.swap_remove(0)))
    }

    /// The A-contraction of the transpose.
    pub fn b_contraction(&self) -> Result<Constellation, ModelError> {
        self.transpose().a_contraction()
    }

    /// `d`-ampleness of the requested contractions.
    pub fn is_ample(&self, d: usize, sides: Sides) -> Result<bool, ModelError> {
        if sides.covers(Side::A) && !is_ample(&self.a_contraction()?, d) {
            return Ok(false);
        }
        if sides.covers(Side::B) && !is_ample(&self.b_contraction()?, d) {
            return Ok(false);
        }
        Ok(true)
    }
}

/// `(s, t)` model where every branch set is a path, `A_i` and `B_j` are joined
/// by a single edge, and consecutive attachments on each path are `gap` apart.
///
/// Routes in either contraction have length at least `gap + 2`, so the model
/// is `d`-ample exactly when `gap >= d` (for `s, t >= 2`).
pub fn spaced_model(s: usize, t: usize, gap: usize) -> InducedModel {
    let gap = gap.max(1);
    let a_len = gap * (t.max(1) - 1) + 1;
    let b_len = gap * (s.max(1) - 1) + 1;
    let a_base = |i: usize| i * a_len;
    let b_base = |j: usize| s * a_len + j * b_len;
    let n = s * a_len + t * b_len;
    let mut edges = Vec::new();
    for i in 0..s {
        for k in 1..a_len {
            edges.push((a_base(i) + k - 1, a_base(i) + k));
        }
    }
    for j in 0..t {
        for k in 1..b_len {
            edges.push((b_base(j) + k - 1, b_base(j) + k));
        }
    }
    for i in 0..s {
        for j in 0..t {
            edges.push((a_base(i) + gap * j, b_base(j) + gap * i));
        }
    }
    let host = Graph::from_edges_unchecked(n, edges);
    let a_sets = (0..s).map(|i| (a_base(i)..a_base(i) + a_len).collect()).collect();
    let b_sets = (0..t).map(|j| (b_base(j)..b_base(j) + b_len).collect()).collect();
    InducedModel { host, a_sets, b_sets }
}

pub const MODEL_SEARCH_LIMIT: usize = 24;

/// Exhaustive search for an induced `(s, t)`-model.
///
/// Candidate branch sets are the connected vertex sets ordered by size and
/// then by bitmask; A-sets are chosen with increasing candidate index, then
/// B-sets likewise, so each model is met once up to reordering within a side.
pub fn find_bipartite_model(
    g: &Graph,
    s: usize,
    t: usize,
    budget: &mut Budget,
) -> Result<SearchOutcome<InducedModel>, ModelError> {
    let n = g.n();
    if n > MODEL_SEARCH_LIMIT {
        return Err(ModelError::TooLarge {
            n,
            limit: MODEL_SEARCH_LIMIT,
        });
    }
    if s == 0 || t == 0 {
        let model = InducedModel {
            host: g.clone(),
            a_sets: Vec::new(),
            b_sets: Vec::new(),
        };
        return Ok(SearchOutcome::Found(model));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let sets = match connected_sets(&adj, budget) {
        Some(s) => s,
        None => return Ok(SearchOutcome::BudgetExceeded),
    };
    // open neighborhood of each candidate
    let nbr: Vec<u32> = sets
        .iter()
        .map(|&m| bits(m).fold(0u32, |acc, v| acc | adj[v]) & !m)
        .collect();

    let mut a: Vec<usize> = Vec::new();
    let found = pick_a(&sets, &nbr, s, t, 0, &mut a, budget);
    Ok(match found {
        Pick::Found(b) => {
            let to_set = |m: u32| bits(m).collect::<VertexSet>();
            SearchOutcome::Found(InducedModel {
                host: g.clone(),
                a_sets: a.iter().map(|&k| to_set(sets[k])).collect(),
                b_sets: b.iter().map(|&k| to_set(sets[k])).collect(),
            })
        }
        Pick::None => SearchOutcome::NotFound,
        Pick::Budget => SearchOutcome::BudgetExceeded,
    })
}

enum Pick {
    Found(Vec<usize>),
    None,
    Budget,
}

fn bits(m: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| m >> v & 1 == 1)
}

fn connected_sets(adj: &[u32], budget: &mut Budget) -> Option<Vec<u32>> {
    // grow each set only from vertices larger than its minimum
    let n = adj.len();
    let mut out = Vec::new();
    let mut seen = hashbrown::HashSet::new();
    for root in 0..n {
        let allowed: u32 = if n == 32 { !0 } else { (1u32 << n) - 1 } & !((1u32 << root) - 1);
        let mut queue = VecDeque::from([1u32 << root]);
        seen.insert(1u32 << root);
        while let Some(m) = queue.pop_front() {
            if !budget.tick() {
                return None;
            }
            out.push(m);
            let frontier = bits(m).fold(0u32, |acc, v| acc | adj[v]) & allowed & !m;
            for v in bits(frontier) {
                let next = m | 1 << v;
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    out.sort_by_key(|&m| (m.count_ones(), m));
    Some(out)
}

fn pick_a(sets: &[u32], nbr: &[u32], s: usize, t: usize, from: usize, a: &mut Vec<usize>, budget: &mut Budget) -> Pick {
    if a.len() == s {
        let used = a.iter().fold(0u32, |m, &k| m | sets[k]);
        let candidates: Vec<usize> = (0..sets.len())
            .filter(|&k| sets[k] & used == 0 && a.iter().all(|&i| nbr[i] & sets[k] != 0))
            .collect();
        let mut b = Vec::new();
        return pick_b(sets, nbr, t, &candidates, 0, &mut b, budget);
    }
    for k in from..sets.len() {
        if !budget.tick() {
            return Pick::Budget;
        }
        // disjoint from and anticomplete to earlier A-sets
        if a.iter().any(|&i| (sets[i] | nbr[i]) & sets[k] != 0) {
            continue;
        }
        a.push(k);
        match pick_a(sets, nbr, s, t, k + 1, a, budget) {
            Pick::None => {}
            other => return other,
        }
        a.pop();
    }
    Pick::None
}

fn pick_b(
    sets: &[u32],
    nbr: &[u32],
    t: usize,
    candidates: &[usize],
    from: usize,
    b: &mut Vec<usize>,
    budget: &mut Budget,
) -> Pick {
    if b.len() == t {
        return Pick::Found(b.clone());
    }
    for idx in from..candidates.len() {
        if !budget.tick() {
            return Pick::Budget;
        }
        let k = candidates[idx];
        if b.iter().any(|&i| (sets[i] | nbr[i]) & sets[k] != 0) {
            continue;
        }
        b.push(k);
        match pick_b(sets, nbr, t, candidates, idx + 1, b, budget) {
            Pick::None => {}
            other => return other,
        }
        b.pop();
    }
    Pick::None
}

/// A component of `G_M - Z` with the A- and B-indices it meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossComponent {
    pub vertices: VertexSet,
    pub a_indices: Vec<usize>,
    pub b_indices: Vec<usize>,
}

impl CrossComponent {
    pub fn is_simple(&self) -> bool {
        self.a_indices.len() == 1 && self.b_indices.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Edges between `A(M)` and `B(M)`.
    pub cross_edges: Vec<(usize, usize)>,
    /// Vertices of `G_M` on no cross edge.
    pub isolated: VertexSet,
    pub components: Vec<CrossComponent>,
    /// Indices into `components` meeting two A-sets or two B-sets.
    pub violations: Vec<usize>,
}

impl ComponentReport {
    pub fn claim_holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Splits `G_M` by the cross edges and checks that, for a 2-ample linear
/// model, every component of `G_M - Z` meets exactly one A-set and one B-set.
pub fn route_component_analysis(m: &InducedModel) -> Result<ComponentReport, ModelError> {
    if !m.is_linear(Sides::Both) {
        return Err(ModelError::NotLinear);
    }
    if !m.is_ample(2, Sides::Both)? {
        return Err(ModelError::NotAmple(2));
    }
    Ok(component_report(m))
}

/// The analysis without the preconditions.
pub fn component_report(m: &InducedModel) -> ComponentReport {
    let g = &m.host;
    let mut owner: Vec<Option<(Side, usize)>> = vec![None; g.n()];
    for side in [Side::A, Side::B] {
        for (i, set) in m.side(side).iter().enumerate() {
            for v in set.iter() {
                owner[v] = Some((side, i));
            }
        }
    }
    let mut cross_edges = Vec::new();
    let mut touched = vec![false; g.n()];
    for (u, v) in g.edges() {
        if let (Some((su, _)), Some((sv, _))) = (owner[u], owner[v]) {
            if su == sv.flip() {
                cross_edges.push((u, v));
                touched[u] = true;
                touched[v] = true;
            }
        }
    }
    let model_vertices: VertexSet = (0..g.n()).filter(|&v| owner[v].is_some()).collect();
    let isolated: VertexSet = model_vertices.iter().filter(|&v| !touched[v]).collect();
    let rest = model_vertices.difference(&isolated);
    let mut components = Vec::new();
    let mut violations = Vec::new();
    for comp in g.components_within(&rest) {
        let mut a_indices = Vec::new();
        let mut b_indices = Vec::new();
        for v in comp.iter() {
            match owner[v] {
                Some((Side::A, i)) => a_indices.push(i),
                Some((Side::B, j)) => b_indices.push(j),
                None => {}
            }
        }
        for list in [&mut a_indices, &mut b_indices] {
            list.sort_unstable();
            list.dedup();
        }
        let c = CrossComponent {
            vertices: comp,
            a_indices,
            b_indices,
        };
        if !c.is_simple() {
            violations.push(components.len());
        }
        components.push(c);
    }
    ComponentReport {
        cross_edges,
        isolated,
        components,
        violations,
    }
}

/// For B-sets `i < j` and the A-set `k` picked for them: a shortest path in
/// `A_k` from a neighbor of `B_i` to a neighbor of `B_j`, and the B-indices it
/// touches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPath {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub path: Vec<usize>,
    pub touched: Vec<usize>,
}

/// The hypergraph on B-index pairs used to reduce to A-linear models: vertex
/// `v_ij` for each pair `i < j` (lexicographic), and edge `e_l` holding the
/// pairs whose path touches `B_l`. Any two edges share `v_ij`, so `nu = 1`.
pub fn pair_hypergraph(
    m: &InducedModel,
    pick: &dyn Fn(usize, usize) -> usize,
) -> Result<(Hypergraph, Vec<PairPath>), ModelError> {
    let t = m.t();
    let mut pairs = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let k = pick(i, j);
            if k >= m.s() {
                return Err(ModelError::IndexOutOfRange);
            }
            let path = shortest_linking_path(&m.host, &m.a_sets[k], &m.b_sets[i], &m.b_sets[j]);
            let vs: VertexSet = path.iter().copied().collect();
            let touched = (0..t).filter(|&l| !m.host.is_anticomplete(&vs, &m.b_sets[l])).collect();
            pairs.push(PairPath { i, j, k, path, touched });
        }
    }
    let mut edges = vec![Vec::new(); t];
    for (idx, p) in pairs.iter().enumerate() {
        for &l in &p.touched {
            edges[l].push(idx);
        }
    }
    Ok((Hypergraph::new(pairs.len(), edges)?, pairs))
}

fn shortest_linking_path(g: &Graph, within: &VertexSet, x: &VertexSet, y: &VertexSet) -> Vec<usize> {
    let sees = |v: usize, set: &VertexSet| g.neighbors(v).iter().any(|&w| set.contains(w));
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in within.iter().filter(|&v| sees(v, x)) {
        prev[v] = v;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        if sees(v, y) {
            let mut path = vec![v];
            let mut cur = v;
            while prev[cur] != cur {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for &w in g.neighbors(v) {
            if within.contains(w) && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, occultation_ample, wall, zigzag_graph};
    use crate::width::treewidth_exact;

    fn singletons(range: core::ops::Range<usize>) -> Vec<VertexSet> {
        range.map(VertexSet::singleton).collect()
    }

    #[test]
    fn complete_bipartite_is_a_model() {
        let g = complete_bipartite(2, 3);
        let m = InducedModel::verify(g.clone(), singletons(0..2), singletons(2..5)).unwrap();
        assert!(m.is_linear(Sides::Both));
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!((m.transpose().s(), m.transpose().t()), (3, 2));
        // drop the edge 0-2
        let edges: Vec<_> = g.edges().into_iter().filter(|&e| e != (0, 2)).collect();
        let h = Graph::from_edges(5, edges).unwrap();
        let err = InducedModel::verify(h, singletons(0..2), singletons(2..5)).unwrap_err();
        assert_eq!(err, vec![ModelViolation::MissingCrossEdge(0, 0)]);
    }

    #[test]
    fn violations_are_named() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let a = vec![VertexSet::from([0]), VertexSet::from([1])];
        let err = InducedModel::verify(g.clone(), a, singletons(2..4)).unwrap_err();
        assert!(err.contains(&ModelViolation::SameSideEdge(Side::A, 0, 1)));
        let err = InducedModel::verify(g.clone(), vec![VertexSet::from([0, 3])], singletons(1..3)).unwrap_err();
        assert!(err.contains(&ModelViolation::Disconnected(Side::A, 0)));
        let err = InducedModel::verify(g, vec![VertexSet::from([0])], vec![VertexSet::from([0, 1])]).unwrap_err();
        assert!(err.contains(&ModelViolation::Overlap {
            first: Side::A,
            i: 0,
            second: Side::B,
            j: 0
        }));
    }

    #[test]
    fn star_branch_set_not_linear() {
        // A_0 = star on 0..4 centered at 0; B_0 = {4} touching leaf 1
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
        let m = InducedModel::verify(g, vec![VertexSet::from([0, 1, 2, 3])], vec![VertexSet::from([4])]).unwrap();
        assert!(!m.is_linear(Sides::A));
        assert!(m.is_linear(Sides::B));
        assert_eq!(m.a_contraction(), Err(ModelError::NotLinear));
    }

    #[test]
    fn constellation_round_trip() {
        for c in [zigzag_graph(4, 2), occultation_ample(3, 1).0] {
            let m = InducedModel::from_constellation(&c);
            assert!(InducedModel::verify(m.host().clone(), m.a_sets().to_vec(), m.b_sets().to_vec()).is_ok());
            assert!(m.is_linear(Sides::B));
            let back = m.a_contraction().unwrap();
            assert_eq!((back.s(), back.l()), (c.s(), c.l()));
            assert_eq!(back.host().edge_count(), c.host().edge_count());
        }
    }

    #[test]
    fn ampleness() {
        let m = InducedModel::verify(complete_bipartite(2, 2), singletons(0..2), singletons(2..4)).unwrap();
        assert!(!m.is_ample(1, Sides::A).unwrap());
        for gap in 1..4 {
            let m = spaced_model(3, 3, gap);
            assert!(InducedModel::verify(m.host.clone(), m.a_sets.clone(), m.b_sets.clone()).is_ok());
            for d in 1..5 {
                assert_eq!(m.is_ample(d, Sides::Both).unwrap(), gap >= d, "gap {gap} d {d}");
            }
        }
    }

    #[test]
    fn components_of_ample_model() {
        let m = spaced_model(3, 4, 4);
        let report = route_component_analysis(&m).unwrap();
        assert!(report.claim_holds());
        assert_eq!(report.components.len(), 12);
        assert_eq!(report.cross_edges.len(), 12);
        // position 1 on A_0 has no cross edge
        assert!(report.isolated.contains(1));
        assert_eq!(
            route_component_analysis(&spaced_model(3, 3, 1)),
            Err(ModelError::NotAmple(2))
        );
        // without the precondition the whole model is one component
        let loose = component_report(&spaced_model(3, 3, 1));
        assert_eq!(loose.components.len(), 1);
        assert!(!loose.claim_holds());
    }

    #[test]
    fn search() {
        let found = find_bipartite_model(&complete_bipartite(2, 3), 2, 3, &mut Budget::default()).unwrap();
        assert!(found.is_found());
        let path = Graph::from_edges(6, (0..5).map(|i| (i, i + 1))).unwrap();
        let none = find_bipartite_model(&path, 2, 2, &mut Budget::default()).unwrap();
        assert!(none.is_not_found());
        let w = wall(2);
        let m = find_bipartite_model(&w, 2, 2, &mut Budget::default())
            .unwrap()
            .found()
            .unwrap();
        assert!(InducedModel::verify(w.clone(), m.a_sets().to_vec(), m.b_sets().to_vec()).is_ok());
        assert!(treewidth_exact(&w, 20).unwrap().value >= 2);
        assert!(matches!(
            find_bipartite_model(&Graph::empty(30), 1, 1, &mut Budget::default()),
            Err(ModelError::TooLarge { .. })
        ));
    }

    #[test]
    fn pair_hypergraph_is_intersecting() {
        let m = spaced_model(6, 4, 2);
        let (h, pairs) = pair_hypergraph(&m, &|i, j| i + j).unwrap();
        assert_eq!(pairs.len(), 6);
        for p in &pairs {
            assert!(p.touched.contains(&p.i) && p.touched.contains(&p.j));
            assert!(m.host().is_induced_path(&p.path));
        }
        assert_eq!(h.nu(&mut Budget::default()).unwrap().size, 1);
    }
}
