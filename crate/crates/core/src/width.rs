//! Exact treewidth and pathwidth for small graphs, with re-checkable
//! certificates.
//!
//! Treewidth is decided for increasing `k` by a search over sets of already
//! eliminated vertices; pathwidth likewise over layout prefixes (vertex
//! separation). Failed sets are memoized, so each search touches every set at
//! most once.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::graph::Graph;

pub const TREEWIDTH_LIMIT: usize = 18;
pub const PATHWIDTH_LIMIT: usize = 16;
/// Vertex sets are `u64` masks; larger graphs are refused even with a raised limit.
pub const HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WidthError {
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("certificate is not a permutation of the vertex set")]
    MalformedCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Eliminating in this order never creates a neighborhood larger than the width.
    EliminationOrder(Vec<usize>),
    /// A layout whose vertex separation equals the width.
    Layout(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthResult {
    pub value: usize,
    pub certificate: Certificate,
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_size(g: &Graph, limit: usize) -> Result<(), WidthError> {
    let limit = limit.min(HARD_LIMIT);
    if g.n() > limit {
        return Err(WidthError::TooLarge { n: g.n(), limit });
    }
    Ok(())
}

/// Neighbors of `v` in the graph obtained by eliminating `s`: vertices outside
/// `s` reachable from `v` through `s`.
fn q_set(adj: &[u64], s: u64, v: usize) -> u64 {
    let mut reach = 0u64;
    let mut frontier = adj[v];
    let mut inside = 0u64;
    while frontier != 0 {
        reach |= frontier & !s;
        let new_inside = frontier & s & !inside;
        inside |= new_inside;
        frontier = 0;
        let mut m = new_inside;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            frontier |= adj[u];
        }
        frontier &= !inside & !reach;
        frontier &= !(1 << v);
    }
    reach & !(1 << v)
}

/// Minor-min-width lower bound: contract a minimum-degree vertex into its
/// minimum-degree neighbor, tracking the largest minimum degree seen.
fn minor_min_width(adj: &[u64]) -> usize {
    let mut adj = adj.to_vec();
    let mut alive = full(adj.len());
    let mut lb = 0;
    while alive.count_ones() > 1 {
        let v = bit_iter(alive).min_by_key(|&v| (adj[v] & alive).count_ones()).unwrap();
        let dv = (adj[v] & alive).count_ones() as usize;
        lb = lb.max(dv);
        let nbrs = adj[v] & alive;
        if nbrs == 0 {
            alive &= !(1 << v);
            continue;
        }
        let u = bit_iter(nbrs).min_by_key(|&u| (adj[u] & alive).count_ones()).unwrap();
        // contract v into u
        let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
        adj[u] = merged;
        for w in bit_iter(merged) {
            adj[w] = (adj[w] & !(1 << v)) | 1 << u;
        }
        alive &= !(1 << v);
    }
    lb
}

fn bit_iter(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Greedy min-fill elimination order.
fn min_fill_order(adj: &[u64]) -> Vec<usize> {
    let mut adj = adj.to_vec();
    let n = adj.len();
    let mut alive = full(n);
    let mut order = Vec::with_capacity(n);
    while alive != 0 {
        let v = bit_iter(alive)
            .min_by_key(|&v| {
                let nb = adj[v] & alive;
                let fill: u32 = bit_iter(nb).map(|u| (nb & !adj[u] & !(1 << u)).count_ones()).sum();
                (fill, nb.count_ones(), v)
            })
            .unwrap();
        let nb = adj[v] & alive;
        for u in bit_iter(nb) {
            adj[u] |= nb & !(1 << u);
        }
        alive &= !(1 << v);
        order.push(v);
    }
    order
}

fn elimination_width_masks(adj: &[u64], order: &[usize]) -> usize {
    let mut s = 0u64;
    let mut w = 0;
    for &v in order {
        w = w.max(q_set(adj, s, v).count_ones() as usize);
        s |= 1 << v;
    }
    w
}

fn is_clique(adj: &[u64], s: u64, set: u64, cache: &mut [Option<u64>]) -> bool {
    for u in bit_iter(set) {
        let nu = *cache[u].get_or_insert_with(|| q_set(adj, s, u));
        if set & !(1 << u) & !nu != 0 {
            return false;
        }
    }
    true
}

struct TwSearch<'a> {
    adj: &'a [u64],
    all: u64,
    k: usize,
    failed: HashSet<u64>,
    order: Vec<usize>,
}

impl TwSearch<'_> {
    fn run(&mut self, s: u64) -> bool {
        let rest = self.all & !s;
        if rest.count_ones() as usize <= self.k + 1 {
            self.order.extend(bit_iter(rest));
            return true;
        }
        if self.failed.contains(&s) {
            return false;
        }
        let mut cache = alloc::vec![None; self.adj.len()];
        let mut candidates = Vec::new();
        let mut forced = None;
        for v in bit_iter(rest) {
            let q = q_set(self.adj, s, v);
            cache[v] = Some(q);
            if q.count_ones() as usize > self.k {
                continue;
            }
            // simplicial, or simplicial after dropping one neighbor: eliminating
            // it first is safe when its degree is within k
            let simplicial = is_clique(self.adj, s, q, &mut cache)
                || bit_iter(q).any(|w| is_clique(self.adj, s, q & !(1 << w), &mut cache));
            if simplicial {
                forced = Some(v);
                break;
            }
            candidates.push(v);
        }
        if let Some(v) = forced {
            candidates = alloc::vec![v];
        }
        for v in candidates {
            self.order.push(v);
            if self.run(s | 1 << v) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(s);
        false
    }
}

/// Exact treewidth, refusing graphs with more than `limit` vertices.
pub fn treewidth_exact(g: &Graph, limit: usize) -> Result<WidthResult, WidthError> {
    check_size(g, limit)?;
    let adj = masks(g);
    let n = g.n();
    if n == 0 {
        return Ok(WidthResult {
            value: 0,
            certificate: Certificate::EliminationOrder(Vec::new()),
        });
    }
    let greedy = min_fill_order(&adj);
    let ub = elimination_width_masks(&adj, &greedy);
    let lb = minor_min_width(&adj);
    for k in lb..ub {
        let mut search = TwSearch {
            adj: &adj,
            all: full(n),
            k,
            failed: HashSet::new(),
            order: Vec::with_capacity(n),
        };
        if search.run(0) {
            let value = elimination_width_masks(&adj, &search.order);
            debug_assert!(value <= k);
            return Ok(WidthResult {
                value,
                certificate: Certificate::EliminationOrder(search.order),
            });
        }
    }
    Ok(WidthResult {
        value: ub,
        certificate: Certificate::EliminationOrder(greedy),
    })
}

fn boundary(adj: &[u64], s: u64) -> u64 {
    bit_iter(s).filter(|&v| adj[v] & !s != 0).fold(0, |m, v| m | 1 << v)
}

struct PwSearch<'a> {
    adj: &'a [u64],
    all: u64,
    k: usize,
    failed: HashSet<u64>,
    layout: Vec<usize>,
}

impl PwSearch<'_> {
    fn run(&mut self, s: u64) -> bool {
        if s == self.all {
            return true;
        }
        if self.failed.contains(&s) {
            return false;
        }
        let here = boundary(self.adj, s);
        let rest = self.all & !s;
        // a vertex whose neighbors are all placed never hurts to place now
        if let Some(v) = bit_iter(rest).find(|&v| self.adj[v] & !s == 0) {
            debug_assert!(boundary(self.adj, s | 1 << v) & !here == 0);
            self.layout.push(v);
            if self.run(s | 1 << v) {
                return true;
            }
            self.layout.pop();
            self.failed.insert(s);
            return false;
        }
        for v in bit_iter(rest) {
            let next = s | 1 << v;
            if boundary(self.adj, next).count_ones() as usize > self.k {
                continue;
            }
            self.layout.push(v);
            if self.run(next) {
                return true;
            }
            self.layout.pop();
        }
        self.failed.insert(s);
        false
    }
}

fn layout_width_masks(adj: &[u64], layout: &[usize]) -> usize {
    let mut s = 0u64;
    let mut w = 0;
    for &v in layout {
        s |= 1 << v;
        w = w.max(boundary(adj, s).count_ones() as usize);
    }
    w
}

/// Exact pathwidth (as vertex separation number), refusing graphs with more
/// than `limit` vertices.
pub fn pathwidth_exact(g: &Graph, limit: usize) -> Result<WidthResult, WidthError> {
    check_size(g, limit)?;
    let adj = masks(g);
    let n = g.n();
    let all = full(n);
    // greedy: smallest resulting boundary first
    let mut greedy = Vec::with_capacity(n);
    let mut s = 0u64;
    while s != all {
        let v = bit_iter(all & !s)
            .min_by_key(|&v| (boundary(&adj, s | 1 << v).count_ones(), v))
            .unwrap();
        greedy.push(v);
        s |= 1 << v;
    }
    let ub = layout_width_masks(&adj, &greedy);
    let lb = minor_min_width(&adj);
    for k in lb..ub {
        let mut search = PwSearch {
            adj: &adj,
            all,
            k,
            failed: HashSet::new(),
            layout: Vec::with_capacity(n),
        };
        if search.run(0) {
            return Ok(WidthResult {
                value: layout_width_masks(&adj, &search.layout),
                certificate: Certificate::Layout(search.layout),
            });
        }
    }
    Ok(WidthResult {
        value: ub,
        certificate: Certificate::Layout(greedy),
    })
}

fn is_permutation(seq: &[usize], n: usize) -> bool {
    let mut seen = alloc::vec![false; n];
    seq.len() == n && seq.iter().all(|&v| v < n && !core::mem::replace(&mut seen[v], true))
}

/// Width of an elimination order, replayed with explicit fill-in.
pub fn elimination_width(g: &Graph, order: &[usize]) -> Result<usize, WidthError> {
    let n = g.n();
    if !is_permutation(order, n) {
        return Err(WidthError::MalformedCertificate);
    }
    let mut adj: Vec<Vec<bool>> = alloc::vec![alloc::vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut gone = alloc::vec![false; n];
    let mut width = 0;
    for &v in order {
        let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
        width = width.max(nb.len());
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        gone[v] = true;
    }
    Ok(width)
}

/// Width of the path decomposition built from a layout: bag `i` holds `v_i`
/// and every earlier vertex with a neighbor at or after position `i`. The
/// decomposition is checked for validity before its width is returned.
pub fn layout_width(g: &Graph, layout: &[usize]) -> Result<usize, WidthError> {
    let n = g.n();
    if !is_permutation(layout, n) {
        return Err(WidthError::MalformedCertificate);
    }
    let mut pos = alloc::vec![0; n];
    for (i, &v) in layout.iter().enumerate() {
        pos[v] = i;
    }
    // last position at which each vertex still has a later neighbor
    let last: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| pos[w]).fold(pos[v], usize::max))
        .collect();
    let bags: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut bag: Vec<usize> = layout[..i].iter().copied().filter(|&u| last[u] >= i).collect();
            bag.push(layout[i]);
            bag
        })
        .collect();
    // every edge inside some bag, and every vertex in a contiguous run of bags
    for (u, v) in g.edges() {
        if !bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            return Err(WidthError::MalformedCertificate);
        }
    }
    for v in 0..n {
        let hits: Vec<usize> = (0..n).filter(|&i| bags[i].contains(&v)).collect();
        if hits.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(WidthError::MalformedCertificate);
        }
    }
    Ok(bags.iter().map(|b| b.len() - 1).max().unwrap_or(0))
}

/// Replays a certificate and confirms it achieves the claimed width.
pub fn certify(g: &Graph, result: &WidthResult) -> Result<bool, WidthError> {
    let w = match &result.certificate {
        Certificate::EliminationOrder(o) => elimination_width(g, o)?,
        Certificate::Layout(l) => layout_width(g, l)?,
    };
    Ok(w == result.value)
}
