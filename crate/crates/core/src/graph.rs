//! Simple undirected graphs over dense vertex ids `0..n`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("no subdivision length given for edge {0}-{1}")]
    MissingLength(usize, usize),
    #[error("vertices {0} and {1} are at distance at most 2")]
    DistanceViolation(usize, usize),
}

/// An immutable simple graph. Neighbor lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

/// An ordered vertex sequence that is expected to be an induced path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathWitness { vertices }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        g.is_induced_path(&self.vertices)
    }
}

/// A graph derived by contraction, with `vertex_map[old] = new`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contracted {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
}

impl Contracted {
    /// Vertices of the original graph merged into each new vertex.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![Vec::new(); self.graph.n()];
        for (old, &new) in self.vertex_map.iter().enumerate() {
            classes[new].push(old);
        }
        classes.into_iter().map(VertexSet).collect()
    }
}

/// Result of replacing edges by paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    /// For each edge of the original graph (in sorted order), the path that replaced it.
    pub edge_paths: Vec<Vec<usize>>,
    /// Every edge received at least one new vertex.
    pub proper: bool,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, merging duplicate edges. Loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(n, edges).expect("internally generated edge list is valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n())
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<(), GraphError> {
        match x.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    /// `G[x]`, relabeled so that new vertex `i` is `x[i]`. The map is returned alongside.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(x)?;
        let map: Vec<usize> = x.as_slice().to_vec();
        let mut index = BTreeMap::new();
        for (i, &v) in map.iter().enumerate() {
            index.insert(v, i);
        }
        let mut edges = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for w in self.neighbors(v) {
                if let Some(&j) = index.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        Ok((Graph::from_edges_unchecked(map.len(), edges), map))
    }

    /// `x` and `y` are disjoint and no edge joins them.
    pub fn is_anticomplete(&self, x: &VertexSet, y: &VertexSet) -> bool {
        if !x.is_disjoint(y) {
            return false;
        }
        x.iter()
            .filter(|&v| v < self.n())
            .all(|v| self.neighbors(v).iter().all(|&w| !y.contains(w)))
    }

    /// Connected components ordered by their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    /// Components of `G[x]`, as sets of original ids, ordered by minimum vertex.
    pub fn components_within(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut seen = BTreeMap::new();
        let mut out = Vec::new();
        for s in x.iter() {
            if seen.contains_key(&s) {
                continue;
            }
            seen.insert(s, ());
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if x.contains(w) && !seen.contains_key(&w) {
                        seen.insert(w, ());
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `G[x]` is connected and non-empty.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        !x.is_empty() && self.components_within(x).len() == 1
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Consecutive vertices adjacent, non-consecutive ones not, no repeats.
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        if seq.iter().any(|&v| v >= self.n()) {
            return false;
        }
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] == seq[j] {
                    return false;
                }
                if self.has_edge(seq[i], seq[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// If `G[x]` is a path, its vertices in order starting from the smaller end.
    pub fn path_order(&self, x: &VertexSet) -> Option<Vec<usize>> {
        if x.is_empty() || !self.is_connected_set(x) {
            return None;
        }
        if x.len() == 1 {
            return Some(x.as_slice().to_vec());
        }
        let inner_degree = |v: usize| self.neighbors(v).iter().filter(|&&w| x.contains(w)).count();
        let mut ends = Vec::new();
        for v in x.iter() {
            match inner_degree(v) {
                1 => ends.push(v),
                2 => {}
                _ => return None,
            }
        }
        if ends.len() != 2 {
            return None;
        }
        let mut order = vec![ends[0]];
        let mut prev = usize::MAX;
        let mut cur = ends[0];
        while order.len() < x.len() {
            let next = self
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| x.contains(w) && w != prev)?;
            prev = cur;
            cur = next;
            order.push(cur);
        }
        Some(order)
    }

    /// One vertex per edge (edges in sorted order); two are adjacent iff the edges share an end.
    pub fn line_graph(&self) -> (Graph, Vec<(usize, usize)>) {
        let edges = self.edges();
        let mut index = BTreeMap::new();
        for (i, &e) in edges.iter().enumerate() {
            index.insert(e, i);
        }
        let mut out = Vec::new();
        for v in 0..self.n() {
            let inc: Vec<usize> = self
                .neighbors(v)
                .iter()
                .map(|&w| index[&(v.min(w), v.max(w))])
                .collect();
            for a in 0..inc.len() {
                for b in a + 1..inc.len() {
                    out.push((inc[a], inc[b]));
                }
            }
        }
        (Graph::from_edges_unchecked(edges.len(), out), edges)
    }

    /// Replaces each edge `e` with a path carrying `lengths[e]` new internal vertices.
    ///
    /// Keys are `(u, v)` with `u < v`. New vertices are numbered from `n` upward,
    /// edge by edge in sorted edge order.
    pub fn subdivide(&self, lengths: &BTreeMap<(usize, usize), usize>) -> Result<Subdivision, GraphError> {
        let edges = self.edges();
        let mut counts = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            match lengths.get(&(u, v)) {
                Some(&d) => counts.push(d),
                None => return Err(GraphError::MissingLength(u, v)),
            }
        }
        Ok(self.subdivide_with(&counts))
    }

    /// Every edge replaced by a path of length exactly `d + 1`.
    pub fn subdivide_uniform(&self, d: usize) -> Subdivision {
        self.subdivide_with(&vec![d; self.edge_count()])
    }

    fn subdivide_with(&self, counts: &[usize]) -> Subdivision {
        let edges = self.edges();
        let mut next = self.n();
        let mut new_edges = Vec::new();
        let mut edge_paths = Vec::with_capacity(edges.len());
        for (&(u, v), &d) in edges.iter().zip(counts) {
            let mut path = vec![u];
            path.extend(next..next + d);
            next += d;
            path.push(v);
            for w in path.windows(2) {
                new_edges.push((w[0], w[1]));
            }
            edge_paths.push(path);
        }
        Subdivision {
            graph: Graph::from_edges_unchecked(next, new_edges),
            edge_paths,
            proper: counts.iter().all(|&d| d >= 1),
        }
    }

    /// Contracts every edge with at least one end in `x`, dropping loops and parallels.
    ///
    /// New ids follow the minimum original vertex of each merge class.
    pub fn x_contraction(&self, x: &VertexSet) -> Contracted {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for v in x.iter().filter(|&v| v < n) {
            for &w in self.neighbors(v) {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut root_id = BTreeMap::new();
        let mut vertex_map = vec![0; n];
        for (v, slot) in vertex_map.iter_mut().enumerate() {
            let r = find(&mut parent, v);
            let next = root_id.len();
            *slot = *root_id.entry(r).or_insert(next);
        }
        let edges = self
            .edges()
            .into_iter()
            .map(|(u, v)| (vertex_map[u], vertex_map[v]))
            .filter(|(a, b)| a != b);
        Contracted {
            graph: Graph::from_edges_unchecked(root_id.len(), edges),
            vertex_map,
        }
    }

    /// `x_contraction` restricted to sets whose members are pairwise at distance at least 3.
    pub fn star_contraction(&self, x: &VertexSet) -> Result<Contracted, GraphError> {
        self.check_set(x)?;
        for u in x.iter() {
            let dist = self.distances_from(u);
            for v in x.iter().filter(|&v| v > u) {
                if matches!(dist[v], Some(d) if d <= 2) {
                    return Err(GraphError::DistanceViolation(u, v));
                }
            }
        }
        Ok(self.x_contraction(x))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges_unchecked(shift + other.n(), edges)
    }

    /// No induced cycle on four or more vertices (checked with a maximum
    /// cardinality search and a perfect elimination ordering test).
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        // order[i] = vertex numbered i-th by the search; PEO is its reverse
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
                .unwrap();
            numbered[v] = true;
            order.push(v);
            for &w in self.neighbors(v) {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // each vertex's earlier-numbered neighbors must form a clique; it suffices
        // that they are all adjacent to the latest of them
        for &v in &order {
            let earlier: Vec<usize> = self.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect();
            if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
                for &w in &earlier {
                    if w != parent && !self.has_edge(w, parent) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n() {
            let mut dist = vec![usize::MAX; self.n()];
            let mut parent = vec![usize::MAX; self.n()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Vertex sets of the blocks (maximal 2-connected pieces and bridges);
    /// isolated vertices are left out.
    pub fn blocks(&self) -> Vec<VertexSet> {
        struct State<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            out: Vec<VertexSet>,
        }
        fn visit(st: &mut State<'_>, v: usize, parent: usize) {
            st.time += 1;
            st.disc[v] = st.time;
            st.low[v] = st.time;
            for &w in st.g.neighbors(v) {
                if st.disc[w] == 0 {
                    st.stack.push((v, w));
                    visit(st, w, v);
                    st.low[v] = st.low[v].min(st.low[w]);
                    if st.low[w] >= st.disc[v] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = st.stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (v, w) {
                                break;
                            }
                        }
                        st.out.push(block.into_iter().collect());
                    }
                } else if w != parent && st.disc[w] < st.disc[v] {
                    st.stack.push((v, w));
                    st.low[v] = st.low[v].min(st.disc[w]);
                }
            }
        }
        let n = self.n();
        let mut st = State {
            g: self,
            disc: vec![0; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..n {
            if st.disc[v] == 0 {
                visit(&mut st, v, usize::MAX);
            }
        }
        st.out
    }

    /// Some cycle (not necessarily induced) has at least four vertices.
    ///
    /// A 2-connected block on four or more vertices always carries one, and
    /// a block on three vertices is a triangle.
    pub fn has_long_cycle(&self) -> bool {
        self.blocks().iter().any(|b| b.len() >= 4)
    }

    /// An explicit bijection `map[v_self] = v_other` preserves adjacency both ways.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        if self.n() != other.n() || map.len() != self.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut hit = vec![false; other.n()];
        for &m in map {
            if m >= other.n() || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        self.edges().into_iter().all(|(u, v)| other.has_edge(map[u], map[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k2, map) = complete(3).induced_subgraph(&[0, 1].into()).unwrap();
        assert_eq!(k2, complete(2));
        assert_eq!(map, vec![0, 1]);

        let (e, _) = cycle(5).induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(e.n(), 0);

        let (p3, _) = cycle(5).induced_subgraph(&[0, 1, 2].into()).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        assert!(cycle(5).induced_subgraph(&[7].into()).is_err());
    }

    #[test]
    fn anticomplete_examples() {
        let empty = Graph::empty(2);
        assert!(empty.is_anticomplete(&[0].into(), &[1].into()));
        assert!(!complete(2).is_anticomplete(&[0].into(), &[1].into()));
        assert!(!empty.is_anticomplete(&[0, 1].into(), &[1].into()));
    }

    #[test]
    fn components_examples() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(g.components(), vec![VertexSet::from([0, 1]), VertexSet::from([2])]);
        assert_eq!(cycle(4).components().len(), 1);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(path(3).line_graph().0, complete(2));
        assert_eq!(complete(3).line_graph().0, complete(3));
        assert_eq!(complete_bipartite(1, 3).line_graph().0, complete(3));
    }

    #[test]
    fn subdivision_examples() {
        let s = complete(2).subdivide_uniform(1);
        assert_eq!(s.graph.edges(), vec![(0, 2), (1, 2)]);
        assert!(s.proper);

        let c6 = complete(3).subdivide_uniform(1);
        assert_eq!(c6.graph.n(), 6);
        assert_eq!(c6.graph.edge_count(), 6);
        assert_eq!(c6.graph.girth(), Some(6));

        let id = complete(4).subdivide_uniform(0);
        assert_eq!(id.graph, complete(4));
        assert!(!id.proper);

        let mut lengths = BTreeMap::new();
        lengths.insert((0, 1), 2);
        assert_eq!(complete(3).subdivide(&lengths), Err(GraphError::MissingLength(0, 2)));
    }

    #[test]
    fn contraction_examples() {
        let g = path(5);
        assert_eq!(g.x_contraction(&VertexSet::new()).graph, g);
        assert_eq!(path(3).x_contraction(&[1].into()).graph.n(), 1);
        let c = g.x_contraction(&[2].into());
        assert_eq!(c.graph, path(3));
        assert_eq!(c.vertex_map, vec![0, 1, 1, 1, 2]);
        assert_eq!(c.classes()[1], VertexSet::from([1, 2, 3]));
    }

    #[test]
    fn star_contraction_distance() {
        assert!(path(5).star_contraction(&[0, 4].into()).is_ok());
        assert_eq!(
            path(3).star_contraction(&[0, 2].into()),
            Err(GraphError::DistanceViolation(0, 2))
        );
        assert!(complete(4).star_contraction(&[2].into()).is_ok());
    }

    #[test]
    fn path_helpers() {
        let g = cycle(6);
        assert!(g.is_induced_path(&[0, 1, 2, 3]));
        assert!(!g.is_induced_path(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(g.path_order(&[3, 2, 4].into()), Some(vec![2, 3, 4]));
        assert_eq!(g.path_order(&[0, 2].into()), None);
        assert!(PathWitness::new(vec![5, 0, 1]).is_valid_in(&g));
        assert_eq!(PathWitness::new(vec![5, 0, 1]).length(), 2);
    }

    #[test]
    fn chordality() {
        assert!(complete(5).is_chordal());
        assert!(path(6).is_chordal());
        assert!(!cycle(4).is_chordal());
        assert!(!cycle(7).is_chordal());
        // diamond
        let d = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(d.is_chordal());
    }

    #[test]
    fn blocks_and_long_cycles() {
        // two triangles sharing vertex 2, plus a pendant edge
        let bowtie = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let mut b = bowtie.blocks();
        b.sort();
        assert_eq!(
            b,
            vec![
                VertexSet::from([0, 1, 2]),
                VertexSet::from([2, 3, 4]),
                VertexSet::from([4, 5])
            ]
        );
        assert!(!bowtie.has_long_cycle());
        assert!(cycle(4).has_long_cycle());
        let d = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(d.has_long_cycle());
        assert!(!path(5).has_long_cycle());
    }
}
