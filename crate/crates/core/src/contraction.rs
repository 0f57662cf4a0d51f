//! From a constellation to a width bound: the auxiliary graph on the apexes of
//! an induced subgraph, the apex contraction of that subgraph and its shape,
//! and the gap of the auxiliary edges under an apex order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::constellation::{enumerate_routes, is_ample, Constellation, ConstellationError, Route};
use crate::generators::{binary_tree, leaf_extension, wall};
use crate::graph::{Contracted, Graph, GraphError, VertexSet};
use crate::order::ApexOrder;
use crate::search::{find_induced_subdivision, Budget, SearchOutcome, SubdivisionWitness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContractionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Constellation(#[from] ConstellationError),
    #[error("the selection has a cycle on four or more vertices")]
    LongCycle,
    #[error("a component of the selection contains no apex")]
    ApexFreeComponent,
    #[error("the constellation is not ample")]
    NotAmple,
    #[error("structure check failed: {0}")]
    Falsified(&'static str),
}

/// Graph on the apexes inside `h`: `x x'` is an edge when some route from
/// `x` to `x'` lies in `h` and no other apex of `h` has a neighbor on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    /// Host ids of the apexes in `h`, ascending; vertex `i` of `graph` is `apex[i]`.
    pub apex: Vec<usize>,
    pub graph: Graph,
    /// One witnessing route per edge, in `graph.edges()` order.
    pub routes: Vec<Route>,
}

pub fn aux_graph(c: &Constellation, h: &VertexSet) -> Result<AuxGraph, ContractionError> {
    c.host().check_set(h)?;
    let apex: Vec<usize> = h.iter().filter(|&v| c.is_apex(v)).collect();
    let mut edges = Vec::new();
    let mut routes = Vec::new();
    for i in 0..apex.len() {
        for j in i + 1..apex.len() {
            let (x, y) = (apex[i], apex[j]);
            let witness = enumerate_routes(c, x, y)?.into_iter().find(|r| {
                let interior = r.interior(c);
                interior.iter().all(|&v| h.contains(v))
                    && apex
                        .iter()
                        .filter(|&&z| z != x && z != y)
                        .all(|&z| interior.iter().all(|&v| !c.host().has_edge(z, v)))
            });
            if let Some(r) = witness {
                edges.push((i, j));
                routes.push(r);
            }
        }
    }
    Ok(AuxGraph {
        graph: Graph::from_edges(apex.len(), edges)?,
        apex,
        routes,
    })
}

/// Witness that the apex contraction `J` of `H` is a subdivision of a
/// leaf-extension of the auxiliary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStructure {
    /// `H` on local ids; `h_map[local] = host id`.
    pub h: Graph,
    pub h_map: Vec<usize>,
    /// The contraction of every edge of `H` meeting an apex.
    pub j: Contracted,
    pub aux: AuxGraph,
    /// For each auxiliary vertex, the vertex of `J` it became.
    pub apex_images: Vec<usize>,
    /// Auxiliary graph plus one pendant leaf per hanging path of `J`.
    pub extension: Graph,
    /// The subdivision of `extension` that `J` matches.
    pub subdivided: Graph,
    /// `iso[v]` is the vertex of `subdivided` matching vertex `v` of `J`.
    pub iso: Vec<usize>,
}

/// Contracts the apexes of `H = c[h]` into their neighborhoods and decomposes
/// the result.
///
/// Requires `c` ample, every component of `H` to contain an apex, and `H` to
/// have no cycle on four or more vertices. Any failure of the star-contraction
/// distance condition or of the decomposition is returned as `Falsified`.
pub fn apex_contraction_structure(c: &Constellation, h: &VertexSet) -> Result<ContractionStructure, ContractionError> {
    let (hg, h_map) = c.host().induced_subgraph(h)?;
    if hg.has_long_cycle() {
        return Err(ContractionError::LongCycle);
    }
    if !is_ample(c, 1) {
        return Err(ContractionError::NotAmple);
    }
    let local_apex: VertexSet = (0..hg.n()).filter(|&v| c.is_apex(h_map[v])).collect();
    if hg.components().iter().any(|comp| comp.is_disjoint(&local_apex)) {
        return Err(ContractionError::ApexFreeComponent);
    }
    if hg.star_contraction(&local_apex).is_err() {
        return Err(ContractionError::Falsified(
            "apexes of H are not pairwise at distance at least 3",
        ));
    }
    let j = hg.x_contraction(&local_apex);
    let aux = aux_graph(c, h)?;
    let k = aux.apex.len();
    let apex_images: Vec<usize> = local_apex.iter().map(|v| j.vertex_map[v]).collect();
    let mut image_index = vec![None; j.graph.n()];
    for (i, &img) in apex_images.iter().enumerate() {
        image_index[img] = Some(i);
    }

    // J minus the apex images splits into paths hanging off the images
    let rest: VertexSet = (0..j.graph.n()).filter(|&v| image_index[v].is_none()).collect();
    let mut links: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut hanging: Vec<(usize, Vec<usize>)> = Vec::new();
    for (a, b) in j.graph.edges() {
        if let (Some(x), Some(y)) = (image_index[a], image_index[b]) {
            links.insert((x.min(y), x.max(y)), Vec::new());
        }
    }
    for comp in j.graph.components_within(&rest) {
        let order = j
            .graph
            .path_order(&comp)
            .ok_or(ContractionError::Falsified("a piece of J off the apexes is not a path"))?;
        let touching =
            |v: usize| -> Vec<usize> { j.graph.neighbors(v).iter().filter_map(|&w| image_index[w]).collect() };
        let last = order.len() - 1;
        if order[1..last.max(1)].iter().any(|&v| !touching(v).is_empty()) && order.len() > 2 {
            return Err(ContractionError::Falsified("an apex touches the middle of a path of J"));
        }
        let (first_end, last_end) = if order.len() == 1 {
            let t = touching(order[0]);
            if t.len() > 2 {
                return Err(ContractionError::Falsified("a vertex of J sees three apexes"));
            }
            (t.first().copied(), t.get(1).copied())
        } else {
            let (t0, t1) = (touching(order[0]), touching(order[last]));
            if t0.len() > 1 || t1.len() > 1 {
                return Err(ContractionError::Falsified("a path end of J sees two apexes"));
            }
            (t0.first().copied(), t1.first().copied())
        };
        match (first_end, last_end) {
            (Some(x), Some(y)) if x == y => {
                return Err(ContractionError::Falsified("a path of J returns to the same apex"));
            }
            (Some(x), Some(y)) => {
                let mut p = order;
                if x > y {
                    p.reverse();
                }
                if links.insert((x.min(y), x.max(y)), p).is_some() {
                    return Err(ContractionError::Falsified("two apexes of J are linked twice"));
                }
            }
            (Some(x), None) => hanging.push((x, order)),
            (None, Some(y)) => {
                let mut p = order;
                p.reverse();
                hanging.push((y, p));
            }
            (None, None) => return Err(ContractionError::Falsified("a path of J touches no apex")),
        }
    }
    if links.keys().copied().collect::<Vec<_>>() != aux.graph.edges() {
        return Err(ContractionError::Falsified(
            "links in J differ from the auxiliary graph",
        ));
    }

    let attachments: Vec<(usize, usize)> = hanging.iter().enumerate().map(|(i, (x, _))| (k + i, *x)).collect();
    let extension =
        leaf_extension(&aux.graph, &attachments).map_err(|_| ContractionError::Falsified("leaf extension"))?;
    let mut lengths = BTreeMap::new();
    for (&e, p) in &links {
        lengths.insert(e, p.len());
    }
    for (i, (x, p)) in hanging.iter().enumerate() {
        lengths.insert((*x, k + i), p.len() - 1);
    }
    let sub = extension.subdivide(&lengths)?;
    let mut iso = vec![usize::MAX; j.graph.n()];
    for (i, &img) in apex_images.iter().enumerate() {
        iso[img] = i;
    }
    for (idx, (u, v)) in extension.edges().into_iter().enumerate() {
        let target = &sub.edge_paths[idx];
        let source: &[usize] = if v < k { &links[&(u, v)] } else { &hanging[v - k].1 };
        // leaf paths map onto the new vertices and then the leaf itself
        for (s, &t) in source.iter().zip(&target[1..]) {
            iso[*s] = t;
        }
    }
    if iso.contains(&usize::MAX) || !j.graph.is_isomorphism(&sub.graph, &iso) {
        return Err(ContractionError::Falsified(
            "J is not isomorphic to the subdivided leaf-extension",
        ));
    }
    Ok(ContractionStructure {
        h: hg,
        h_map,
        j,
        aux,
        apex_images,
        extension,
        subdivided: sub.graph,
        iso,
    })
}

/// Largest rank gap `j - i` over auxiliary edges `x_i x_j`, ranking the apexes
/// of `h` by `order`. Zero when the auxiliary graph has no edges.
pub fn order_bandwidth_bound(c: &Constellation, h: &VertexSet, order: &ApexOrder) -> Result<usize, ContractionError> {
    let aux = aux_graph(c, h)?;
    order.ranks(c.apex().as_slice())?;
    let keep: VertexSet = aux.apex.iter().copied().collect();
    let rank = order.restricted(&keep).ranks(&aux.apex)?;
    Ok(aux
        .graph
        .edges()
        .into_iter()
        .map(|(a, b)| rank[a].abs_diff(rank[b]))
        .max()
        .unwrap_or(0))
}

/// Looks for an induced proper subdivision of the binary tree of radius `r`
/// inside the wall of side `2^r`.
pub fn tree_in_wall(r: usize, budget: &mut Budget) -> SearchOutcome<SubdivisionWitness> {
    find_induced_subdivision(&wall(1 << r), &binary_tree(r), true, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::star_subdivision_obstruction;
    use crate::generators::{nested_constellation, zigzag_graph};
    use crate::width::pathwidth_exact;

    #[test]
    fn single_route() {
        let c = zigzag_graph(2, 1);
        let aux = aux_graph(&c, &c.host().vertices()).unwrap();
        assert_eq!(aux.graph.edges(), vec![(0, 1)]);
        let bare = aux_graph(&c, &VertexSet::from([0, 1])).unwrap();
        assert_eq!(bare.graph.edge_count(), 0);
        let s = apex_contraction_structure(&c, &c.host().vertices()).unwrap();
        assert_eq!(s.j.graph.n(), 2);
        assert_eq!(s.j.graph.edge_count(), 1);
    }

    #[test]
    fn dominating_middle_apex() {
        // apex 1 sees every vertex of the path 3..8, apexes 0 and 2 sit at the ends
        let mut edges = vec![(0, 3), (2, 7)];
        edges.extend((3..8).map(|v| (1, v)));
        edges.extend((3..7).map(|v| (v, v + 1)));
        let g = Graph::from_edges(8, edges).unwrap();
        let c = Constellation::validate(g, VertexSet::from([0, 1, 2]), vec![(3..8).collect()]).unwrap();
        let all = aux_graph(&c, &c.host().vertices()).unwrap();
        assert_eq!(all.graph.edges(), vec![(0, 1), (1, 2)]);
        let without = aux_graph(&c, &c.host().vertices().difference(&VertexSet::from([1]))).unwrap();
        assert_eq!(without.graph.edges(), vec![(0, 1)]);
    }

    #[test]
    fn long_cycle_rejected() {
        let c = zigzag_graph(2, 2);
        assert_eq!(
            apex_contraction_structure(&c, &c.host().vertices()),
            Err(ContractionError::LongCycle)
        );
    }

    #[test]
    fn subdivided_star() {
        let (c, _) = nested_constellation(8, 1);
        let w = star_subdivision_obstruction(&c, 1, &mut Budget::default())
            .found()
            .unwrap();
        let h = w.vertex_set();
        let s = apex_contraction_structure(&c, &h).unwrap();
        assert!(s.j.graph.is_isomorphism(&s.subdivided, &s.iso));
        assert!(s.extension.n() >= s.aux.graph.n());
    }

    #[test]
    fn zigzag_bandwidth() {
        for n in 2..=8 {
            let c = zigzag_graph(n, 1);
            let all = c.host().vertices();
            let order = ApexOrder::natural(c.apex());
            assert!(order_bandwidth_bound(&c, &all, &order).unwrap() <= 1);
            let aux = aux_graph(&c, &all).unwrap();
            assert!(pathwidth_exact(&aux.graph, 16).unwrap().value <= 1);
            assert_eq!(aux.graph.edge_count(), n - 1);
            // an apex met twice along the path closes a cycle through it
            if n >= 4 {
                assert_eq!(apex_contraction_structure(&c, &all), Err(ContractionError::LongCycle));
            } else {
                assert!(apex_contraction_structure(&c, &all).is_ok());
            }
        }
        let c = zigzag_graph(6, 1);
        let all = c.host().vertices();
        assert_eq!(
            order_bandwidth_bound(&c, &VertexSet::from([0]), &ApexOrder::natural(c.apex())).unwrap(),
            0
        );
        let shuffled = ApexOrder::new(vec![0, 3, 1, 4, 2, 5]);
        assert!(order_bandwidth_bound(&c, &all, &shuffled).unwrap() > 1);
    }

    #[test]
    fn small_tree_in_wall() {
        assert!(tree_in_wall(1, &mut Budget::default()).is_found());
    }
}
