//! Constellations: a stable apex set `S` whose removal leaves induced paths,
//! every apex seeing every path.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

mod lemmas;
mod properties;
mod routes;

pub use lemmas::{
    anticomplete_route_pair, has_two_anticomplete_routes, split_zigzagged, star_subdivision_obstruction, SplitError,
    SplitWitness, StarObstruction,
};
pub use properties::{
    ample_violation, extract_sequence, is_aligned, is_ample, is_interrupted, is_mixed, is_zigzagged, sits_in,
    AlignViolation, InterruptViolation, MixedViolation, OrderVerdict, Selection, SitsInViolation, ZigzagViolation,
};
pub use routes::{all_routes, enumerate_routes, Route, RouteTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstellationError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("apex vertices {0} and {1} are adjacent")]
    ApexNotStable(usize, usize),
    #[error("path {0} is not an induced path in the listed order")]
    ComponentNotPath(usize),
    #[error("apex {apex} has no neighbor in path {path}")]
    MissingNeighbor { apex: usize, path: usize },
    #[error("path {0} is not a whole component of the graph minus the apex set")]
    PathNotComponent(usize),
    #[error("vertex {0} is neither an apex nor on exactly one path")]
    UncoveredVertex(usize),
    #[error("vertex {0} is listed more than once")]
    RepeatedVertex(usize),
    #[error("vertex {0} is not an apex")]
    NotApex(usize),
    #[error("route endpoints must differ, got {0} twice")]
    SameEndpoints(usize),
    #[error("path index {0} out of range")]
    NoSuchPath(usize),
    #[error("order is not a permutation of the apex set")]
    InvalidOrder,
    #[error("order search needs at most {max} apex vertices, got {got}")]
    SearchTooLarge { got: usize, max: usize },
}

/// A validated constellation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constellation {
    host: Graph,
    apex: VertexSet,
    paths: Vec<Vec<usize>>,
    // (path index, position) for every non-apex vertex
    location: Vec<Option<(usize, usize)>>,
}

impl Constellation {
    /// Checks every defining clause and reports all violations found.
    pub fn validate(
        host: Graph,
        apex: VertexSet,
        paths: Vec<Vec<usize>>,
    ) -> Result<Constellation, Vec<ConstellationError>> {
        let n = host.n();
        let mut errors = Vec::new();
        for v in apex.iter().chain(paths.iter().flatten().copied()) {
            if v >= n {
                errors.push(ConstellationError::VertexOutOfRange(v));
            }
        }
        if !errors.is_empty() {
            return Err(errors);
        }

        for u in apex.iter() {
            for &v in host.neighbors(u) {
                if u < v && apex.contains(v) {
                    errors.push(ConstellationError::ApexNotStable(u, v));
                }
            }
        }

        let mut location = vec![None; n];
        let mut repeated = false;
        for (i, path) in paths.iter().enumerate() {
            for (pos, &v) in path.iter().enumerate() {
                if apex.contains(v) || location[v].is_some() {
                    errors.push(ConstellationError::RepeatedVertex(v));
                    repeated = true;
                } else {
                    location[v] = Some((i, pos));
                }
            }
        }
        for (v, loc) in location.iter().enumerate() {
            if !apex.contains(v) && loc.is_none() && !repeated {
                errors.push(ConstellationError::UncoveredVertex(v));
            }
        }

        for (i, path) in paths.iter().enumerate() {
            if path.is_empty() || !host.is_induced_path(path) {
                errors.push(ConstellationError::ComponentNotPath(i));
            }
            let leaks = path.iter().any(|&v| {
                host.neighbors(v)
                    .iter()
                    .any(|&w| !apex.contains(w) && !matches!(location[w], Some((j, _)) if j == i))
            });
            if leaks {
                errors.push(ConstellationError::PathNotComponent(i));
            }
        }

        for x in apex.iter() {
            for (i, path) in paths.iter().enumerate() {
                if !path.iter().any(|&v| host.has_edge(x, v)) {
                    errors.push(ConstellationError::MissingNeighbor { apex: x, path: i });
                }
            }
        }

        if errors.is_empty() {
            Ok(Constellation {
                host,
                apex,
                paths,
                location,
            })
        } else {
            Err(errors)
        }
    }

    /// Discovers the path side from the apex set alone: paths are the components
    /// of `host - apex`, each traversed from its smaller end.
    pub fn from_apex(host: Graph, apex: VertexSet) -> Result<Constellation, Vec<ConstellationError>> {
        let rest = host.vertices().difference(&apex);
        let mut paths = Vec::new();
        for (i, comp) in host.components_within(&rest).into_iter().enumerate() {
            match host.path_order(&comp) {
                Some(p) => paths.push(p),
                None => return Err(vec![ConstellationError::ComponentNotPath(i)]),
            }
        }
        Constellation::validate(host, apex, paths)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn apex(&self) -> &VertexSet {
        &self.apex
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    /// `|S|`
    pub fn s(&self) -> usize {
        self.apex.len()
    }

    /// `|L|`
    pub fn l(&self) -> usize {
        self.paths.len()
    }

    pub fn is_apex(&self, v: usize) -> bool {
        self.apex.contains(v)
    }

    /// Path index and position of a non-apex vertex.
    pub fn location(&self, v: usize) -> Option<(usize, usize)> {
        self.location.get(v).copied().flatten()
    }

    /// Positions on path `path` adjacent to apex `x`, ascending.
    pub fn attachments(&self, x: usize, path: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .host
            .neighbors(x)
            .iter()
            .filter_map(|&w| match self.location(w) {
                Some((p, pos)) if p == path => Some(pos),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Apex vertices adjacent to the vertex at `pos` on `path`, ascending.
    pub fn apex_neighbors(&self, path: usize, pos: usize) -> Vec<usize> {
        let v = self.paths[path][pos];
        self.host
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.apex.contains(w))
            .collect()
    }

    /// Disjoint union; the second constellation's ids are shifted by `self.host().n()`.
    ///
    /// Not a constellation in general (apexes miss the other side's paths); returned
    /// as host plus the combined apex set for route-level analysis.
    pub fn disjoint_union_parts(&self, other: &Constellation) -> (Graph, VertexSet, Vec<Vec<usize>>) {
        let shift = self.host.n();
        let host = self.host.disjoint_union(&other.host);
        let apex = self.apex.union(&other.apex.iter().map(|v| v + shift).collect());
        let mut paths = self.paths.clone();
        paths.extend(
            other
                .paths
                .iter()
                .map(|p| p.iter().map(|v| v + shift).collect::<Vec<_>>()),
        );
        (host, apex, paths)
    }

    /// Builds the sub-constellation induced by a selection of apexes and (sub)paths.
    ///
    /// Returns the relabeled constellation and the map `new id -> old id`.
    pub fn restrict(&self, sel: &Selection) -> Result<(Constellation, Vec<usize>), Vec<ConstellationError>> {
        let vertices: VertexSet = sel.apex.iter().chain(sel.paths.iter().flatten().copied()).collect();
        let (host, map) = self.host.induced_subgraph(&vertices).map_err(|_| {
            vec![ConstellationError::VertexOutOfRange(
                vertices.as_slice().last().copied().unwrap_or(0),
            )]
        })?;
        let index = |v: usize| map.binary_search(&v).unwrap();
        let apex = sel.apex.iter().map(index).collect();
        let paths = sel
            .paths
            .iter()
            .map(|p| p.iter().map(|&v| index(v)).collect())
            .collect();
        Ok((Constellation::validate(host, apex, paths)?, map))
    }

    pub(crate) fn from_parts_unchecked(host: Graph, apex: VertexSet, paths: Vec<Vec<usize>>) -> Constellation {
        match Constellation::validate(host, apex, paths) {
            Ok(c) => c,
            Err(e) => panic!("generator produced an invalid constellation: {e:?}"),
        }
    }
}
