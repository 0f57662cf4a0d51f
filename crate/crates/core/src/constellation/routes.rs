use alloc::vec::Vec;

use super::{Constellation, ConstellationError};

/// A route between two apexes. Its interior is the run of positions
/// `start..=end` (in either direction) on path `path`, traversed from the
/// `from` side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Route {
    pub from: usize,
    pub to: usize,
    pub path: usize,
    pub start: usize,
    pub end: usize,
}

impl Route {
    /// Edge count: interior size plus one.
    pub fn length(&self) -> usize {
        self.start.abs_diff(self.end) + 2
    }

    /// Smallest and largest interior position.
    pub fn span(&self) -> (usize, usize) {
        (self.start.min(self.end), self.start.max(self.end))
    }

    pub fn reversed(&self) -> Route {
        Route {
            from: self.to,
            to: self.from,
            path: self.path,
            start: self.end,
            end: self.start,
        }
    }

    pub fn interior(&self, c: &Constellation) -> Vec<usize> {
        let p = &c.paths()[self.path];
        if self.start <= self.end {
            p[self.start..=self.end].to_vec()
        } else {
            p[self.end..=self.start].iter().rev().copied().collect()
        }
    }

    /// `from`, the interior, then `to`.
    pub fn vertices(&self, c: &Constellation) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length() + 1);
        out.push(self.from);
        out.extend(self.interior(c));
        out.push(self.to);
        out
    }
}

/// Routes on one path between apexes with attachment positions `px` and `py`
/// (both ascending), as `(start, end)` pairs.
pub(crate) fn routes_on_path(px: &[usize], py: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (ia, &a) in px.iter().enumerate() {
        let next_x = px.get(ia + 1).copied();
        let prev_x = if ia > 0 { Some(px[ia - 1]) } else { None };
        let k = py.partition_point(|&b| b < a);
        // towards higher positions, y-end at or after a
        if let Some(&b) = py.get(k) {
            if next_x.is_none_or(|nx| nx > b) {
                out.push((a, b));
            }
        }
        // towards lower positions; a itself must not see y
        if py.get(k) != Some(&a) && k > 0 {
            let b = py[k - 1];
            if prev_x.is_none_or(|px| px < b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// All routes from `x` to `y`, by path index then by the position of the
/// `x`-end, upward routes before downward ones.
pub fn enumerate_routes(c: &Constellation, x: usize, y: usize) -> Result<Vec<Route>, ConstellationError> {
    for v in [x, y] {
        if !c.is_apex(v) {
            return Err(ConstellationError::NotApex(v));
        }
    }
    if x == y {
        return Err(ConstellationError::SameEndpoints(x));
    }
    let mut out = Vec::new();
    for path in 0..c.l() {
        let px = c.attachments(x, path);
        let py = c.attachments(y, path);
        for (start, end) in routes_on_path(&px, &py) {
            out.push(Route {
                from: x,
                to: y,
                path,
                start,
                end,
            });
        }
    }
    Ok(out)
}

/// Every route, each listed once from its smaller-id end.
pub fn all_routes(c: &Constellation) -> Vec<Route> {
    let apex: Vec<usize> = c.apex().iter().collect();
    let mut out = Vec::new();
    for (i, &x) in apex.iter().enumerate() {
        for &y in &apex[i + 1..] {
            out.extend(enumerate_routes(c, x, y).unwrap());
        }
    }
    out
}

/// Routes of a constellation grouped by apex pair, with a precomputed record
/// of which apexes have a neighbor on each route.
#[derive(Debug, Clone)]
pub struct RouteTable {
    apex: Vec<usize>,
    words: usize,
    // routes[i * s + j] for i < j (apex indices), oriented from apex[i]
    routes: Vec<Vec<Route>>,
    // hit bitsets, parallel to routes
    hits: Vec<Vec<u64>>,
}

impl RouteTable {
    pub fn new(c: &Constellation) -> RouteTable {
        let apex: Vec<usize> = c.apex().iter().collect();
        let s = apex.len();
        let words = s.div_ceil(64).max(1);
        let attach: Vec<Vec<Vec<usize>>> = apex
            .iter()
            .map(|&x| (0..c.l()).map(|p| c.attachments(x, p)).collect())
            .collect();
        let mut routes = alloc::vec![Vec::new(); s * s];
        let mut hits = alloc::vec![Vec::new(); s * s];
        for i in 0..s {
            for j in i + 1..s {
                let mut rs = Vec::new();
                let mut hs = Vec::new();
                for path in 0..c.l() {
                    for (start, end) in routes_on_path(&attach[i][path], &attach[j][path]) {
                        let (lo, hi) = (start.min(end), start.max(end));
                        let mut bits = alloc::vec![0u64; words];
                        for (z, att) in attach.iter().enumerate() {
                            let k = att[path].partition_point(|&p| p < lo);
                            if att[path].get(k).is_some_and(|&p| p <= hi) {
                                bits[z / 64] |= 1 << (z % 64);
                            }
                        }
                        hs.extend(bits);
                        rs.push(Route {
                            from: apex[i],
                            to: apex[j],
                            path,
                            start,
                            end,
                        });
                    }
                }
                routes[i * s + j] = rs;
                hits[i * s + j] = hs;
            }
        }
        RouteTable {
            apex,
            words,
            routes,
            hits,
        }
    }

    /// Sorted apex vertices; table indices refer to positions here.
    pub fn apex(&self) -> &[usize] {
        &self.apex
    }

    pub fn s(&self) -> usize {
        self.apex.len()
    }

    /// Routes between apex indices `i < j`, oriented from `apex[i]`.
    pub fn routes(&self, i: usize, j: usize) -> &[Route] {
        debug_assert!(i < j);
        &self.routes[i * self.s() + j]
    }

    /// Whether apex index `z` has a neighbor on the `k`-th route of pair `(i, j)`.
    pub fn hits(&self, i: usize, j: usize, k: usize, z: usize) -> bool {
        let bits = &self.hits[i * self.s() + j][k * self.words..(k + 1) * self.words];
        bits[z / 64] >> (z % 64) & 1 == 1
    }

    pub fn route_count(&self) -> usize {
        self.routes.iter().map(Vec::len).sum()
    }
}
