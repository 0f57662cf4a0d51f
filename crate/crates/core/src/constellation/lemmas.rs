//! Route-level checks behind the two "necessary outcome" results: anticomplete
//! route pairs, the split of a zigzagged constellation into two anticomplete
//! constellations, and the star-subdivision obstruction.

use alloc::vec::Vec;

use super::properties::{is_ample, is_zigzagged, Selection};
use super::routes::{enumerate_routes, routes_on_path};
use super::{Constellation, ConstellationError, Route};
use crate::generators::complete_bipartite;
use crate::graph::{Graph, VertexSet};
use crate::order::{ApexOrder, OrderMode};
use crate::search::{find_induced_subdivision_with, Budget, SearchOutcome, SubdivisionQuery, SubdivisionWitness};

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(alloc::vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn meets(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}

/// First pair of routes (in enumeration order) that are anticomplete: disjoint
/// and with no edge between them.
///
/// A connected set meeting the apex set twice contains a route (a shortest
/// apex-to-apex path inside it), so this is exactly the failure of "for any two
/// anticomplete sets, one has every component meeting the apex set at most once".
pub fn has_two_anticomplete_routes(c: &Constellation) -> Option<(Route, Route)> {
    anticomplete_route_pair(c.host(), c.apex(), c.paths())
}

/// [`has_two_anticomplete_routes`] on raw parts, where apexes need not see
/// every path (for example a disjoint union of two constellations).
pub fn anticomplete_route_pair(host: &Graph, apex: &VertexSet, paths: &[Vec<usize>]) -> Option<(Route, Route)> {
    let n = host.n();
    let mut location = alloc::vec![None; n];
    for (i, p) in paths.iter().enumerate() {
        for (pos, &v) in p.iter().enumerate() {
            location[v] = Some((i, pos));
        }
    }
    let attach = |x: usize, path: usize| -> Vec<usize> {
        let mut a: Vec<usize> = host
            .neighbors(x)
            .iter()
            .filter_map(|&w| match location[w] {
                Some((p, pos)) if p == path => Some(pos),
                _ => None,
            })
            .collect();
        a.sort_unstable();
        a
    };
    let apex: Vec<usize> = apex.iter().collect();
    let mut routes = Vec::new();
    for (i, &x) in apex.iter().enumerate() {
        for &y in &apex[i + 1..] {
            for path in 0..paths.len() {
                for (start, end) in routes_on_path(&attach(x, path), &attach(y, path)) {
                    routes.push(Route {
                        from: x,
                        to: y,
                        path,
                        start,
                        end,
                    });
                }
            }
        }
    }
    let mut body = Vec::with_capacity(routes.len());
    let mut closed = Vec::with_capacity(routes.len());
    for r in &routes {
        let (lo, hi) = r.span();
        let mut b = Bits::new(n);
        let mut nb = Bits::new(n);
        for &v in [r.from, r.to].iter().chain(&paths[r.path][lo..=hi]) {
            b.set(v);
            nb.set(v);
            for &w in host.neighbors(v) {
                nb.set(w);
            }
        }
        body.push(b);
        closed.push(nb);
    }
    for i in 0..routes.len() {
        for j in i + 1..routes.len() {
            if !closed[i].meets(&body[j]) {
                return Some((routes[i].clone(), routes[j].clone()));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error(transparent)]
    Constellation(#[from] ConstellationError),
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("no split found")]
    Infeasible,
}

/// Two anticomplete sub-constellations, each with `c` apexes and `c` paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub x: Selection,
    pub y: Selection,
}

impl SplitWitness {
    pub fn x_vertices(&self) -> VertexSet {
        selection_vertices(&self.x)
    }

    pub fn y_vertices(&self) -> VertexSet {
        selection_vertices(&self.y)
    }
}

fn selection_vertices(s: &Selection) -> VertexSet {
    s.apex.iter().chain(s.paths.iter().flatten().copied()).collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Splits an ample `q`-zigzagged constellation into two anticomplete
/// `(c, c)`-constellations.
///
/// Apexes are taken in order as `x1, S1, Q, S2, x2` with `|S_i| = c + q - 1`
/// and `|Q| = q`. On each path, `R_i` is a shortest route from `x_i` to `Q`;
/// the first `c` apexes of `S_i` meeting its interior form `S'_i`, and the
/// paths are pigeonholed on that choice. Both halves of the path set have
/// `c * C(c + q - 1, c)` paths, enough for `c` paths to agree.
pub fn split_zigzagged(con: &Constellation, c: usize, q: usize, order: &ApexOrder) -> Result<SplitWitness, SplitError> {
    if c == 0 || q == 0 {
        return Err(SplitError::Precondition("c and q must be positive"));
    }
    let need_apex = 2 * c + 3 * q;
    let half = c * binomial(c + q - 1, c);
    if con.s() < need_apex {
        return Err(SplitError::Precondition("too few apex vertices"));
    }
    if con.l() < 2 * half {
        return Err(SplitError::Precondition("too few paths"));
    }
    if !is_ample(con, 1) {
        return Err(SplitError::Precondition("constellation is not ample"));
    }
    if !is_zigzagged(con, q, &OrderMode::Given(order.clone()))?.holds() {
        return Err(SplitError::Precondition(
            "constellation is not q-zigzagged under the order",
        ));
    }

    let seq = order.as_slice();
    let x1 = seq[0];
    let s1 = &seq[1..c + q];
    let qs = &seq[c + q..c + 2 * q];
    let s2 = &seq[c + 2 * q..2 * c + 3 * q - 1];
    let x2 = seq[2 * c + 3 * q - 1];

    let side = |x: usize, s: &[usize], paths: core::ops::Range<usize>| -> Result<Selection, SplitError> {
        // (path, shortest route to Q, first c hitters)
        let mut chosen: Vec<(usize, Route, Vec<usize>)> = Vec::new();
        for path in paths {
            let mut best: Option<Route> = None;
            for &y in qs {
                for r in enumerate_routes(con, x, y)? {
                    if r.path == path && best.as_ref().is_none_or(|b| r.length() < b.length()) {
                        best = Some(r);
                    }
                }
            }
            let route = best.ok_or(SplitError::Infeasible)?;
            let interior = route.interior(con);
            let hitters: Vec<usize> = s
                .iter()
                .copied()
                .filter(|&z| interior.iter().any(|&v| con.host().has_edge(z, v)))
                .take(c)
                .collect();
            if hitters.len() < c {
                return Err(SplitError::Infeasible);
            }
            chosen.push((path, route, hitters));
        }
        for (_, _, key) in &chosen {
            let group: Vec<&(usize, Route, Vec<usize>)> = chosen.iter().filter(|(_, _, k)| k == key).take(c).collect();
            if group.len() == c {
                return Ok(Selection {
                    apex: key.iter().copied().collect(),
                    paths: group.iter().map(|(_, r, _)| r.interior(con)).collect(),
                });
            }
        }
        Err(SplitError::Infeasible)
    };

    let x = side(x1, s1, 0..half)?;
    let y = side(x2, s2, half..2 * half)?;
    let witness = SplitWitness { x, y };
    if !con.host().is_anticomplete(&witness.x_vertices(), &witness.y_vertices()) {
        return Err(SplitError::Infeasible);
    }
    for sel in [&witness.x, &witness.y] {
        if con.restrict(sel).is_err() {
            return Err(SplitError::Infeasible);
        }
    }
    Ok(witness)
}

/// An induced proper subdivision of `K_{1,2q+1}` whose center and leaves all
/// have degree at least 4. `branch[0]` is the center.
pub type StarObstruction = SubdivisionWitness;

/// Searches for a [`StarObstruction`].
pub fn star_subdivision_obstruction(
    con: &Constellation,
    q: usize,
    budget: &mut Budget,
) -> SearchOutcome<StarObstruction> {
    let g = con.host();
    let heavy = |v: usize| g.degree(v) >= 4;
    let leaves = 2 * q + 1;
    if (0..g.n()).filter(|&v| heavy(v)).count() < leaves + 1 {
        return SearchOutcome::NotFound;
    }
    let pattern = complete_bipartite(1, leaves);
    find_induced_subdivision_with(
        g,
        &pattern,
        SubdivisionQuery {
            proper: true,
            branch_filter: Some(&heavy),
        },
        budget,
    )
}
