#![allow(dead_code)]

use std::collections::BTreeSet;

use constel_core::constellation::Constellation;
use constel_core::{ApexOrder, Graph, VertexSet};
use proptest::prelude::*;

/// Apex count plus, per path, the apex bitmask seen by each position.
pub type RawConstellation = (usize, Vec<Vec<u8>>);

pub fn raw_constellation(max_s: usize, max_l: usize, max_len: usize) -> impl Strategy<Value = RawConstellation> {
    (2..=max_s).prop_flat_map(move |s| {
        let path = prop::collection::vec(0u8..(1 << s), 1..=max_len);
        (Just(s), prop::collection::vec(path, 1..=max_l))
    })
}

/// Apexes are `0..s`; paths follow in order. Any apex missing from a path is
/// attached to one position of it so the result is always a constellation.
pub fn build(raw: &RawConstellation) -> Constellation {
    let (s, paths) = raw;
    let s = *s;
    let mut edges = Vec::new();
    let mut next = s;
    let mut vertex_paths = Vec::new();
    for masks in paths {
        let mut masks = masks.clone();
        for x in 0..s {
            if masks.iter().all(|m| m >> x & 1 == 0) {
                let pos = (x * 7 + 3) % masks.len();
                masks[pos] |= 1 << x;
            }
        }
        let ids: Vec<usize> = (next..next + masks.len()).collect();
        next += masks.len();
        for w in ids.windows(2) {
            edges.push((w[0], w[1]));
        }
        for (pos, m) in masks.iter().enumerate() {
            for x in 0..s {
                if m >> x & 1 == 1 {
                    edges.push((x, ids[pos]));
                }
            }
        }
        vertex_paths.push(ids);
    }
    let g = Graph::from_edges(next, edges).unwrap();
    Constellation::validate(g, VertexSet::range(s), vertex_paths).unwrap()
}

pub fn is_induced_path_oracle(g: &Graph, seq: &[usize]) -> bool {
    let distinct: BTreeSet<usize> = seq.iter().copied().collect();
    if distinct.len() != seq.len() {
        return false;
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if g.has_edge(seq[i], seq[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// `(path, start, end)` of every route from `x` to `y`: any path segment that,
/// with `x` before it and `y` after it, forms an induced path.
pub fn brute_routes(c: &Constellation, x: usize, y: usize) -> BTreeSet<(usize, usize, usize)> {
    let mut out = BTreeSet::new();
    for (p, path) in c.paths().iter().enumerate() {
        for lo in 0..path.len() {
            for hi in lo..path.len() {
                for (start, end) in [(lo, hi), (hi, lo)] {
                    let mut seq = vec![x];
                    if start <= end {
                        seq.extend(&path[start..=end]);
                    } else {
                        seq.extend(path[end..=start].iter().rev());
                    }
                    seq.push(y);
                    if is_induced_path_oracle(c.host(), &seq) {
                        out.insert((p, start, end));
                    }
                }
            }
        }
    }
    out
}

pub fn route_vertices(c: &Constellation, x: usize, y: usize, r: (usize, usize, usize)) -> Vec<usize> {
    let (p, a, b) = r;
    let (lo, hi) = (a.min(b), a.max(b));
    let mut v = vec![x, y];
    v.extend(&c.paths()[p][lo..=hi]);
    v
}

pub fn hits(c: &Constellation, z: usize, vertices: &[usize]) -> bool {
    vertices.iter().any(|&v| c.host().has_edge(z, v))
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mut rest in subsets_of_size(&items[1..], k - 1) {
        rest.insert(0, items[0]);
        out.push(rest);
    }
    out.extend(subsets_of_size(&items[1..], k));
    out
}

/// Straight from the definition of `(q-, q, q+)`-mixed under a fixed order,
/// enumerating the sets `Q-`, `Q`, `Q+` explicitly.
pub fn mixed_oracle(c: &Constellation, qm: usize, q: usize, qp: usize, order: &[usize]) -> bool {
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            let (x, y) = (order[a], order[b]);
            for r in brute_routes(c, x, y) {
                let rv = route_vertices(c, x, y, r);
                for lo in subsets_of_size(&order[..a], qm) {
                    for mid in subsets_of_size(&order[a + 1..b], q) {
                        for hi in subsets_of_size(&order[b + 1..], qp) {
                            if !lo.iter().chain(&mid).chain(&hi).any(|&z| hits(c, z, &rv)) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

pub fn interrupted_oracle(c: &Constellation, order: &[usize]) -> bool {
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            for r in brute_routes(c, order[a], order[b]) {
                let rv = route_vertices(c, order[a], order[b], r);
                if order[b + 1..].iter().any(|&z| !hits(c, z, &rv)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn natural(c: &Constellation) -> ApexOrder {
    ApexOrder::natural(c.apex())
}

/// Elimination width of an order by explicit fill-in.
pub fn elimination_width_oracle(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut gone = vec![false; n];
    let mut width = 0;
    for &v in order {
        let nb: Vec<usize> = adj[v].iter().copied().filter(|&w| !gone[w]).collect();
        width = width.max(nb.len());
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        gone[v] = true;
    }
    width
}

/// Vertex separation number of a layout, which equals its path-decomposition width.
pub fn vertex_separation_oracle(g: &Graph, layout: &[usize]) -> usize {
    let mut pos = vec![0; g.n()];
    for (i, &v) in layout.iter().enumerate() {
        pos[v] = i;
    }
    (0..layout.len())
        .map(|i| {
            layout[..=i]
                .iter()
                .filter(|&&u| g.neighbors(u).iter().any(|&w| pos[w] > i))
                .count()
        })
        .max()
        .unwrap_or(0)
}

pub fn treewidth_oracle(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    permutations(&all)
        .iter()
        .map(|p| elimination_width_oracle(g, p))
        .min()
        .unwrap_or(0)
}

pub fn pathwidth_oracle(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    permutations(&all)
        .iter()
        .map(|p| vertex_separation_oracle(g, p))
        .min()
        .unwrap_or(0)
}

pub fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}
