//! Order-dependent and order-free predicates on constellations.
//!
//! A vertex `z` "has a neighbor in" a route when it is adjacent to any route
//! vertex. Apexes are pairwise non-adjacent, so for apex `z` this only ever
//! concerns the interior.

use alloc::vec::Vec;

use super::routes::{all_routes, RouteTable};
use super::{Constellation, ConstellationError, Route};
use crate::graph::VertexSet;
use crate::order::{next_permutation, ApexOrder, OrderMode, SEARCH_LIMIT};
use crate::sequences::IndexSequence;

/// Outcome of an order-dependent check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderVerdict<V> {
    /// The property holds under this order (the given one, or the first found).
    Holds(ApexOrder),
    /// The given order fails; the first violation in scan order.
    Violated(V),
    /// Search mode: no order works.
    NoOrder,
}

impl<V> OrderVerdict<V> {
    pub fn holds(&self) -> bool {
        matches!(self, OrderVerdict::Holds(_))
    }

    pub fn order(&self) -> Option<&ApexOrder> {
        match self {
            OrderVerdict::Holds(o) => Some(o),
            _ => None,
        }
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            OrderVerdict::Violated(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterruptViolation {
    pub x: usize,
    pub y: usize,
    /// Later than `y` and anticomplete to the route.
    pub z: usize,
    pub route: Route,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagViolation {
    pub x: usize,
    pub y: usize,
    pub route: Route,
    /// Every apex strictly between `x` and `y` missing the route, in order.
    pub avoiding: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedViolation {
    pub x: usize,
    pub y: usize,
    pub route: Route,
    /// Route-avoiding sets of exactly the requested sizes.
    pub before: Vec<usize>,
    pub between: Vec<usize>,
    pub after: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignViolation {
    /// First path traversing the apex neighborhoods out of order in both directions.
    pub path: usize,
}

/// Runs `check` under the given order, or under every order when searching.
/// `check` receives the rank of each apex index and returns the first violation.
fn with_order<V>(
    apex: &[usize],
    mode: &OrderMode,
    mut check: impl FnMut(&[usize], &[usize]) -> Option<V>,
) -> Result<OrderVerdict<V>, ConstellationError> {
    match mode {
        OrderMode::Given(order) => {
            let rank = order.ranks(apex)?;
            let by_rank = order_by_rank(&rank);
            Ok(match check(&rank, &by_rank) {
                Some(v) => OrderVerdict::Violated(v),
                None => OrderVerdict::Holds(order.clone()),
            })
        }
        OrderMode::Search => {
            if apex.len() > SEARCH_LIMIT {
                return Err(ConstellationError::SearchTooLarge {
                    got: apex.len(),
                    max: SEARCH_LIMIT,
                });
            }
            // perm lists apex indices from least to greatest
            let mut perm: Vec<usize> = (0..apex.len()).collect();
            let mut rank = alloc::vec![0; apex.len()];
            loop {
                for (r, &i) in perm.iter().enumerate() {
                    rank[i] = r;
                }
                if check(&rank, &perm).is_none() {
                    return Ok(OrderVerdict::Holds(ApexOrder::new(
                        perm.iter().map(|&i| apex[i]).collect(),
                    )));
                }
                if !next_permutation(&mut perm) {
                    return Ok(OrderVerdict::NoOrder);
                }
            }
        }
    }
}

fn order_by_rank(rank: &[usize]) -> Vec<usize> {
    let mut by_rank = alloc::vec![0; rank.len()];
    for (i, &r) in rank.iter().enumerate() {
        by_rank[r] = i;
    }
    by_rank
}

/// Scans ordered pairs `x < y` by rank and their routes, handing each to `f`
/// with apex indices and the route oriented from `x`.
fn scan_routes<V>(
    table: &RouteTable,
    by_rank: &[usize],
    mut f: impl FnMut(usize, usize, &dyn Fn(usize) -> bool, &Route) -> Option<V>,
) -> Option<V> {
    let s = table.s();
    for rx in 0..s {
        for ry in rx + 1..s {
            let (x, y) = (by_rank[rx], by_rank[ry]);
            let (i, j) = (x.min(y), x.max(y));
            for (k, route) in table.routes(i, j).iter().enumerate() {
                let hit = |z: usize| table.hits(i, j, k, z);
                let oriented = if x < y { route.clone() } else { route.reversed() };
                if let Some(v) = f(x, y, &hit, &oriented) {
                    return Some(v);
                }
            }
        }
    }
    None
}

/// First route of length at most `d + 1`, if any.
pub fn ample_violation(c: &Constellation, d: usize) -> Option<Route> {
    all_routes(c).into_iter().find(|r| r.length() <= d + 1)
}

/// No route has length at most `d + 1`.
pub fn is_ample(c: &Constellation, d: usize) -> bool {
    ample_violation(c, d).is_none()
}

/// For all `x < y < z` and every route from `x` to `y`, `z` has a neighbor on it.
pub fn is_interrupted(
    c: &Constellation,
    mode: &OrderMode,
) -> Result<OrderVerdict<InterruptViolation>, ConstellationError> {
    let table = RouteTable::new(c);
    let apex = table.apex().to_vec();
    with_order(&apex, mode, |rank, by_rank| {
        scan_routes(&table, by_rank, |x, y, hit, route| {
            let ry = rank[y];
            by_rank[ry + 1..]
                .iter()
                .find(|&&z| !hit(z))
                .map(|&z| InterruptViolation {
                    x: apex[x],
                    y: apex[y],
                    z: apex[z],
                    route: route.clone(),
                })
        })
    })
}

/// For all `x < y` and every route between them, fewer than `q` apexes
/// strictly between `x` and `y` miss the route.
pub fn is_zigzagged(
    c: &Constellation,
    q: usize,
    mode: &OrderMode,
) -> Result<OrderVerdict<ZigzagViolation>, ConstellationError> {
    let table = RouteTable::new(c);
    let apex = table.apex().to_vec();
    with_order(&apex, mode, |rank, by_rank| {
        scan_routes(&table, by_rank, |x, y, hit, route| {
            let avoiding: Vec<usize> = by_rank[rank[x] + 1..rank[y]]
                .iter()
                .filter(|&&z| !hit(z))
                .map(|&z| apex[z])
                .collect();
            (avoiding.len() >= q).then(|| ZigzagViolation {
                x: apex[x],
                y: apex[y],
                route: route.clone(),
                avoiding,
            })
        })
    })
}

/// Fails exactly when some route from `x < y` is missed by at least `q_minus`
/// apexes before `x`, `q` strictly between, and `q_plus` after `y`.
pub fn is_mixed(
    c: &Constellation,
    q_minus: usize,
    q: usize,
    q_plus: usize,
    mode: &OrderMode,
) -> Result<OrderVerdict<MixedViolation>, ConstellationError> {
    let table = RouteTable::new(c);
    let apex = table.apex().to_vec();
    with_order(&apex, mode, |rank, by_rank| {
        scan_routes(&table, by_rank, |x, y, hit, route| {
            let pick = |range: &[usize], want: usize| -> Option<Vec<usize>> {
                let got: Vec<usize> = range
                    .iter()
                    .filter(|&&z| !hit(z))
                    .take(want)
                    .map(|&z| apex[z])
                    .collect();
                (got.len() == want).then_some(got)
            };
            let before = pick(&by_rank[..rank[x]], q_minus)?;
            let between = pick(&by_rank[rank[x] + 1..rank[y]], q)?;
            let after = pick(&by_rank[rank[y] + 1..], q_plus)?;
            Some(MixedViolation {
                x: apex[x],
                y: apex[y],
                route: route.clone(),
                before,
                between,
                after,
            })
        })
    })
}

/// Every path can be traversed so that, for `s < s'`, all neighbors of `s`
/// come strictly before all neighbors of `s'`.
pub fn is_aligned(c: &Constellation, mode: &OrderMode) -> Result<OrderVerdict<AlignViolation>, ConstellationError> {
    let apex: Vec<usize> = c.apex().iter().collect();
    // (min, max) attachment position per apex index and path
    let spans: Vec<Vec<(usize, usize)>> = apex
        .iter()
        .map(|&x| {
            (0..c.l())
                .map(|p| {
                    let a = c.attachments(x, p);
                    (a[0], a[a.len() - 1])
                })
                .collect()
        })
        .collect();
    with_order(&apex, mode, |_, by_rank| {
        (0..c.l()).find_map(|p| {
            let forward = by_rank.windows(2).all(|w| spans[w[0]][p].1 < spans[w[1]][p].0);
            let backward = by_rank.windows(2).all(|w| spans[w[0]][p].0 > spans[w[1]][p].1);
            (!forward && !backward).then_some(AlignViolation { path: p })
        })
    })
}

/// The traversal sequence `A_L` of path `path` under `order`: each path vertex
/// contributes the 1-based ranks of its apex neighbors in ascending order. Of
/// the two traversal directions the lexicographically smaller is returned.
pub fn extract_sequence(
    c: &Constellation,
    path: usize,
    order: &ApexOrder,
) -> Result<IndexSequence, ConstellationError> {
    if path >= c.l() {
        return Err(ConstellationError::NoSuchPath(path));
    }
    let apex: Vec<usize> = c.apex().iter().collect();
    let rank = order.ranks(&apex)?;
    let per_vertex: Vec<Vec<usize>> = (0..c.paths()[path].len())
        .map(|pos| {
            let mut r: Vec<usize> = c
                .apex_neighbors(path, pos)
                .iter()
                .map(|v| rank[apex.binary_search(v).unwrap()] + 1)
                .collect();
            r.sort_unstable();
            r
        })
        .collect();
    let forward: Vec<usize> = per_vertex.iter().flatten().copied().collect();
    let backward: Vec<usize> = per_vertex.iter().rev().flatten().copied().collect();
    let best = if backward < forward { backward } else { forward };
    Ok(IndexSequence::new(best).expect("valid constellation paths have apex neighbors"))
}

/// A candidate sub-constellation given by ids of the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub apex: VertexSet,
    pub paths: Vec<Vec<usize>>,
}

impl Selection {
    /// The whole of `c`.
    pub fn of(c: &Constellation) -> Selection {
        Selection {
            apex: c.apex().clone(),
            paths: c.paths().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SitsInViolation {
    NotAConstellation(Vec<ConstellationError>),
    ApexNotContained(usize),
    /// This selected path lies in no single path of the parent.
    PathNotContained(usize),
    /// Two selected paths lie in the same parent path.
    SharedHostPath {
        host_path: usize,
        paths: (usize, usize),
    },
}

/// Whether the selection is a constellation sitting in `c`.
pub fn sits_in(b: &Selection, c: &Constellation) -> Result<(), SitsInViolation> {
    for v in b.apex.iter() {
        if !c.is_apex(v) {
            return Err(SitsInViolation::ApexNotContained(v));
        }
    }
    let mut owner: Vec<Option<usize>> = alloc::vec![None; c.l()];
    for (i, p) in b.paths.iter().enumerate() {
        let host = p.first().and_then(|&v| c.location(v)).map(|(h, _)| h);
        let host = match host {
            Some(h) if p.iter().all(|&v| c.location(v).map(|(k, _)| k) == Some(h)) => h,
            _ => return Err(SitsInViolation::PathNotContained(i)),
        };
        if let Some(j) = owner[host] {
            return Err(SitsInViolation::SharedHostPath {
                host_path: host,
                paths: (j, i),
            });
        }
        owner[host] = Some(i);
    }
    c.restrict(b).map(|_| ()).map_err(SitsInViolation::NotAConstellation)
}
