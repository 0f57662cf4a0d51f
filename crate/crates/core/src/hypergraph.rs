//! Exact packing, covering and private-pair numbers of small hypergraphs.
//!
//! Vertex and edge sets are handled as `u64` masks, so both are capped at 64.

use alloc::vec::Vec;

use crate::search::{Budget, SearchOutcome};

pub const MAX_SIZE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypergraphError {
    #[error("hypergraph needs at least one vertex")]
    NoVertices,
    #[error("hypergraph needs at least one hyperedge")]
    NoEdges,
    #[error("hyperedge {0} is empty")]
    EmptyEdge(usize),
    #[error("hyperedge {edge} contains vertex {vertex}, but n = {n}")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("at most {MAX_SIZE} vertices and hyperedges are supported")]
    TooLarge,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("hypothesis fails: nu = {nu} (a = {a}), lambda = {lambda} (a' = {a_prime})")]
    Hypothesis {
        nu: usize,
        a: usize,
        lambda: usize,
        a_prime: usize,
    },
    #[error("need 1 <= m <= n <= u, got m = {m}, n = {n}, u = {u}")]
    BadRamseyParameters { u: usize, m: usize, n: usize },
    #[error("coloring returned {got}, expected a color below {colors}")]
    ColorOutOfRange { got: usize, colors: usize },
}

/// A hypergraph on `0..n`. Hyperedges form a list, so repeats are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<u64>,
    // incidence[v]: mask of edges containing v
    incidence: Vec<u64>,
}

/// Packing number with a maximum family of disjoint hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub size: usize,
    pub edges: Vec<usize>,
}

/// Covering number with a minimum hitting set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSet {
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// Lambda with a witnessing family and a private vertex for each pair of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrivatePairs {
    pub size: usize,
    pub family: Vec<usize>,
    /// `((e, e'), v)`: `v` lies in `e` and `e'` and in no other member.
    pub private: Vec<((usize, usize), usize)>,
}

/// Both sides of the Ding-Seymour-Winkler inequality `tau <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DswCheck {
    pub holds: bool,
    pub tau: usize,
    pub rhs: u128,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph, HypergraphError> {
        if n == 0 {
            return Err(HypergraphError::NoVertices);
        }
        if edges.is_empty() {
            return Err(HypergraphError::NoEdges);
        }
        if n > MAX_SIZE || edges.len() > MAX_SIZE {
            return Err(HypergraphError::TooLarge);
        }
        let mut clean = Vec::with_capacity(edges.len());
        let mut masks = Vec::with_capacity(edges.len());
        let mut incidence = alloc::vec![0u64; n];
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge(i));
            }
            e.sort_unstable();
            e.dedup();
            let mut m = 0u64;
            for &v in &e {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { edge: i, vertex: v, n });
                }
                m |= 1 << v;
                incidence[v] |= 1 << i;
            }
            masks.push(m);
            clean.push(e);
        }
        Ok(Hypergraph {
            n,
            edges: clean,
            masks,
            incidence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let mut seen = 0u64;
        for &m in &self.masks {
            if seen & m != 0 {
                return false;
            }
            seen |= m;
        }
        true
    }

    /// Maximum number of pairwise disjoint hyperedges.
    pub fn nu(&self, budget: &mut Budget) -> Result<Packing, HypergraphError> {
        let mut best = 0u64;
        let mut ok = true;
        self.pack(0, 0, 0, &mut best, budget, &mut ok);
        if !ok {
            return Err(HypergraphError::BudgetExceeded);
        }
        Ok(Packing {
            size: best.count_ones() as usize,
            edges: bits(best).collect(),
        })
    }

    fn pack(&self, i: usize, chosen: u64, covered: u64, best: &mut u64, budget: &mut Budget, ok: &mut bool) {
        if !*ok || !budget.tick() {
            *ok = false;
            return;
        }
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        let remaining = (self.masks.len() - i) as u32;
        if i == self.masks.len() || chosen.count_ones() + remaining <= best.count_ones() {
            return;
        }
        if self.masks[i] & covered == 0 {
            self.pack(i + 1, chosen | 1 << i, covered | self.masks[i], best, budget, ok);
        }
        self.pack(i + 1, chosen, covered, best, budget, ok);
    }

    /// Minimum size of a vertex set meeting every hyperedge.
    pub fn tau(&self, budget: &mut Budget) -> Result<HittingSet, HypergraphError> {
        // greedy upper bound: repeatedly take the vertex in most unhit edges
        let all = if self.masks.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.masks.len()) - 1
        };
        let mut unhit = all;
        let mut greedy = 0u64;
        while unhit != 0 {
            let v = (0..self.n)
                .max_by_key(|&v| ((self.incidence[v] & unhit).count_ones(), core::cmp::Reverse(v)))
                .unwrap();
            greedy |= 1 << v;
            unhit &= !self.incidence[v];
        }
        let mut best = greedy;
        let mut ok = true;
        self.hit(all, 0, &mut best, budget, &mut ok);
        if !ok {
            return Err(HypergraphError::BudgetExceeded);
        }
        Ok(HittingSet {
            size: best.count_ones() as usize,
            vertices: bits(best).collect(),
        })
    }

    fn hit(&self, unhit: u64, chosen: u64, best: &mut u64, budget: &mut Budget, ok: &mut bool) {
        if !*ok || !budget.tick() {
            *ok = false;
            return;
        }
        if unhit == 0 {
            if chosen.count_ones() < best.count_ones() {
                *best = chosen;
            }
            return;
        }
        // disjoint unhit edges each need their own vertex
        let mut lower = 0;
        let mut used = 0u64;
        for e in bits(unhit) {
            if self.masks[e] & used == 0 {
                used |= self.masks[e];
                lower += 1;
            }
        }
        if chosen.count_ones() + lower >= best.count_ones() {
            return;
        }
        let e = unhit.trailing_zeros() as usize;
        for v in bits(self.masks[e]) {
            self.hit(unhit & !self.incidence[v], chosen | 1 << v, best, budget, ok);
        }
    }

    fn private_vertex(&self, family: u64, e: usize, f: usize) -> Option<usize> {
        let want = (1u64 << e) | (1u64 << f);
        (0..self.n).find(|&v| self.incidence[v] & family == want)
    }

    fn has_private_pairs(&self, family: u64) -> bool {
        let members: Vec<usize> = bits(family).collect();
        members.iter().enumerate().all(|(k, &e)| {
            members[k + 1..]
                .iter()
                .all(|&f| self.private_vertex(family, e, f).is_some())
        })
    }

    /// Largest family in which every pair of members has a vertex lying in
    /// exactly those two members. The property passes to subfamilies, so the
    /// search abandons a family as soon as it fails.
    pub fn lambda(&self, budget: &mut Budget) -> Result<PrivatePairs, HypergraphError> {
        let mut best = 1u64;
        let mut ok = true;
        self.grow(0, 0, &mut best, budget, &mut ok);
        if !ok {
            return Err(HypergraphError::BudgetExceeded);
        }
        let family: Vec<usize> = bits(best).collect();
        let mut private = Vec::new();
        for (k, &e) in family.iter().enumerate() {
            for &f in &family[k + 1..] {
                private.push(((e, f), self.private_vertex(best, e, f).unwrap()));
            }
        }
        Ok(PrivatePairs {
            size: family.len(),
            family,
            private,
        })
    }

    fn grow(&self, i: usize, family: u64, best: &mut u64, budget: &mut Budget, ok: &mut bool) {
        if !*ok || !budget.tick() {
            *ok = false;
            return;
        }
        if family.count_ones() > best.count_ones() {
            *best = family;
        }
        for e in i..self.masks.len() {
            if family.count_ones() + (self.masks.len() - e) as u32 <= best.count_ones() {
                return;
            }
            let next = family | 1 << e;
            if self.has_private_pairs(next) {
                self.grow(e + 1, next, best, budget, ok);
            }
        }
    }
}

/// `11 a^2 (a + a' + 3) C(a + a', a')^2`
pub fn dsw_rhs(a: usize, a_prime: usize) -> u128 {
    let (a, ap) = (a as u128, a_prime as u128);
    let mut binom = 1u128;
    for i in 0..ap {
        binom = binom * (a + ap - i) / (i + 1);
    }
    11 * a * a * (a + ap + 3) * binom * binom
}

/// Checks `tau(H) <= 11 a^2 (a + a' + 3) C(a + a', a')^2` after confirming
/// `nu(H) <= a` and `lambda(H) <= a'`.
pub fn dsw_bound_check(
    h: &Hypergraph,
    a: usize,
    a_prime: usize,
    budget: &mut Budget,
) -> Result<DswCheck, HypergraphError> {
    let nu = h.nu(budget)?.size;
    let lambda = h.lambda(budget)?.size;
    if nu > a || lambda > a_prime {
        return Err(HypergraphError::Hypothesis { nu, a, lambda, a_prime });
    }
    let tau = h.tau(budget)?.size;
    let rhs = dsw_rhs(a, a_prime);
    Ok(DswCheck {
        holds: (tau as u128) <= rhs,
        tau,
        rhs,
    })
}

/// Finds an `n`-subset `Z` of `0..u` on which `phi` is constant over all
/// `m`-subsets (given ascending). Subsets are tried in lexicographic order.
pub fn ramsey_search(
    u: usize,
    m: usize,
    colors: usize,
    phi: &dyn Fn(&[usize]) -> usize,
    n: usize,
    budget: &mut Budget,
) -> Result<SearchOutcome<Vec<usize>>, HypergraphError> {
    if m == 0 || m > n || n > u {
        return Err(HypergraphError::BadRamseyParameters { u, m, n });
    }
    let mut z: Vec<usize> = (0..n).collect();
    loop {
        if !budget.tick() {
            return Ok(SearchOutcome::BudgetExceeded);
        }
        let mut pick: Vec<usize> = (0..m).collect();
        let mut color = None;
        let mut mono = true;
        loop {
            let tuple: Vec<usize> = pick.iter().map(|&i| z[i]).collect();
            let c = phi(&tuple);
            if c >= colors {
                return Err(HypergraphError::ColorOutOfRange { got: c, colors });
            }
            if *color.get_or_insert(c) != c {
                mono = false;
                break;
            }
            if !next_combination(&mut pick, n) {
                break;
            }
        }
        if mono {
            return Ok(SearchOutcome::Found(z));
        }
        if !next_combination(&mut z, u) {
            return Ok(SearchOutcome::NotFound);
        }
    }
}

/// Advances an ascending `k`-subset of `0..n` lexicographically.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut p = k;
    loop {
        if p == 0 {
            return false;
        }
        p -= 1;
        if idx[p] < n - k + p {
            break;
        }
    }
    idx[p] += 1;
    for q in p + 1..k {
        idx[q] = idx[q - 1] + 1;
    }
    true
}

/// The hypergraph on the pairs of `0..m` whose hyperedges are, for each
/// `i`, the pairs containing `i`. Any two hyperedges share exactly one pair,
/// which is private to them.
pub fn pair_witness_hypergraph(m: usize) -> Result<Hypergraph, HypergraphError> {
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            pairs.push((i, j));
        }
    }
    let edges = (0..m)
        .map(|i| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == i || b == i)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    Hypergraph::new(pairs.len(), edges)
}
