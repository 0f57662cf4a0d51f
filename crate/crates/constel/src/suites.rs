//! Verification suites. Each one runs a family of checks and condenses them
//! into an [`Outcome`]; the first failure is reported with its witness.

use constel_core::constellation::{
    anticomplete_route_pair, extract_sequence, has_two_anticomplete_routes, is_ample, is_interrupted, is_zigzagged,
    split_zigzagged, star_subdivision_obstruction,
};
use constel_core::contraction::{aux_graph, order_bandwidth_bound};
use constel_core::generators::{
    binary_tree, complete, complete_bipartite, nested_constellation, occultation, occultation_ample, replicate_paths,
    zigzag_graph,
};
use constel_core::hypergraph::{dsw_bound_check, HypergraphError};
use constel_core::search::{find_induced_subdivision_with, SubdivisionQuery};
use constel_core::sequences::{complement_symmetry_check, is_alignment, max_alignment, zigzag_sequence};
use constel_core::width::{certify, pathwidth_exact, treewidth_exact, PATHWIDTH_LIMIT, TREEWIDTH_LIMIT};
use constel_core::{
    ApexOrder, Budget, Constellation, Graph, Hypergraph, InducedModel, OrderMode, SearchOutcome, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::corpus::{corpus, Instance};
use crate::report::Outcome;

fn natural(c: &Constellation) -> ApexOrder {
    ApexOrder::natural(c.apex())
}

fn joined(v: &[usize], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Z_4 and Z_5 against their published displays, then smoothness, value
/// sets and complement symmetry up to `max_n`.
pub fn sequence_fidelity(max_n: usize) -> Outcome {
    let displays = [(4, "1, 2, 3, 2, 3, 4"), (5, "1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 3, 4, 5")];
    for (n, want) in displays {
        let got = joined(zigzag_sequence(n).expect("n >= 2").as_slice(), ", ");
        if got != want {
            return Outcome::fail(format!("Z_{n} reads {got}")).witness("n", n);
        }
    }
    for n in 2..=max_n {
        let z = zigzag_sequence(n).expect("n >= 2");
        if !z.is_smooth() {
            return Outcome::fail(format!("Z_{n} is not smooth")).witness("n", n);
        }
        if z.values() != (1..=n).collect::<Vec<_>>() {
            return Outcome::fail(format!("Z_{n} has value set {:?}", z.values())).witness("n", n);
        }
        if !complement_symmetry_check(n).expect("n >= 2") {
            return Outcome::fail(format!("Z_{n} breaks complement symmetry")).witness("n", n);
        }
    }
    Outcome::pass(format!("Z_4 and Z_5 match; Z_2..Z_{max_n} smooth and symmetric"))
}

/// No `k`-alignment in `Z_n` for `n` in range, and a 3-alignment in `Z_4`.
pub fn lemma_align(min_n: usize, max_n: usize, k: usize, budget: u64) -> Outcome {
    let mut b = Budget::new(budget);
    let z4 = zigzag_sequence(4).expect("n >= 2");
    let control = match max_alignment(&z4, 3, &mut b) {
        SearchOutcome::Found(w) if is_alignment(&z4, &w.values, w.i, w.j).unwrap_or(false) => w,
        SearchOutcome::BudgetExceeded => {
            return Outcome::inconclusive("budget exhausted on the control").spent(b.spent());
        }
        _ => return Outcome::fail("no 3-alignment found in Z_4").spent(b.spent()),
    };
    let mut checked = Vec::new();
    for n in min_n.max(2)..=max_n {
        let z = zigzag_sequence(n).expect("n >= 2");
        match max_alignment(&z, k, &mut b) {
            SearchOutcome::NotFound => checked.push(n),
            SearchOutcome::Found(w) => {
                return Outcome::fail(format!("Z_{n} has a {k}-alignment"))
                    .witness("n", n)
                    .witness("alignment", json!({"values": w.values, "i": w.i, "j": w.j}))
                    .spent(b.spent());
            }
            SearchOutcome::BudgetExceeded => {
                return Outcome::inconclusive(format!("budget exhausted at n = {n}"))
                    .witness("checked", &checked)
                    .spent(b.spent());
            }
        }
    }
    Outcome::pass(format!("no {k}-alignment in Z_n for n in {min_n}..={max_n}"))
        .witness("checked", &checked)
        .witness(
            "control",
            json!({"values": control.values, "i": control.i, "j": control.j}),
        )
        .spent(b.spent())
}

/// `zigzag_graph(n, 1)` is a valid 1-zigzagged constellation whose path reads back `Z_n`.
pub fn zigzag_family(max_n: usize) -> Outcome {
    for n in 2..=max_n {
        let c = zigzag_graph(n, 1);
        let fail = |why: &str| Outcome::fail(format!("zigzag_graph({n},1): {why}")).witness("n", n);
        if Constellation::validate(c.host().clone(), c.apex().clone(), c.paths().to_vec()).is_err() {
            return fail("does not validate");
        }
        if (c.s(), c.l()) != (n, 1) {
            return fail("wrong shape");
        }
        let order = OrderMode::Given(natural(&c));
        if !is_zigzagged(&c, 1, &order).map(|v| v.holds()).unwrap_or(false) {
            return fail("not 1-zigzagged under the natural order");
        }
        match extract_sequence(&c, 0, &natural(&c)) {
            Ok(a) if a == zigzag_sequence(n).expect("n >= 2") => {}
            _ => return fail("path does not read back Z_n"),
        }
    }
    Outcome::pass(format!("zigzag_graph(n,1) checked for n in 2..={max_n}"))
}

fn routes_anticomplete(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter()
        .all(|&u| !b.contains(&u) && b.iter().all(|&w| !g.has_edge(u, w)))
}

/// Occultations are interrupted, and no ample interrupted corpus instance
/// has two anticomplete routes, while a disjoint union does.
pub fn deathstar(max_s: usize, c: usize) -> Outcome {
    for s in 1..=max_s {
        let (con, order) = occultation(s, c);
        if Constellation::validate(con.host().clone(), con.apex().clone(), con.paths().to_vec()).is_err() {
            return Outcome::fail(format!("occultation({s},{c}) does not validate"));
        }
        if !is_interrupted(&con, &OrderMode::Given(order))
            .map(|v| v.holds())
            .unwrap_or(false)
        {
            return Outcome::fail(format!("occultation({s},{c}) is not interrupted"));
        }
    }
    let mut checked = Vec::new();
    for inst in corpus() {
        let interrupted = is_interrupted(&inst.con, &OrderMode::Given(inst.order.clone()))
            .map(|v| v.holds())
            .unwrap_or(false);
        if !interrupted || !is_ample(&inst.con, 1) {
            continue;
        }
        if let Some((r1, r2)) = has_two_anticomplete_routes(&inst.con) {
            return Outcome::fail(format!("{} has two anticomplete routes", inst.name))
                .witness("instance", &inst.name)
                .witness("routes", [r1.vertices(&inst.con), r2.vertices(&inst.con)]);
        }
        checked.push(inst.name);
    }
    if checked.is_empty() {
        return Outcome::fail("no ample interrupted instance in the corpus");
    }
    let (a, _) = occultation_ample(3, c.max(1));
    let (host, apex, paths) = a.disjoint_union_parts(&a);
    match anticomplete_route_pair(&host, &apex, &paths) {
        Some((r1, r2)) => {
            let route = |r: &constel_core::Route| {
                let (lo, hi) = r.span();
                let mut v = vec![r.from, r.to];
                v.extend(&paths[r.path][lo..=hi]);
                v
            };
            if !routes_anticomplete(&host, &route(&r1), &route(&r2)) {
                return Outcome::fail("control pair is not anticomplete");
            }
        }
        None => return Outcome::fail("disjoint-union control has no anticomplete routes"),
    }
    Outcome::pass(format!(
        "occultations interrupted for s <= {max_s}; {} ample interrupted instances clean; control found",
        checked.len()
    ))
    .witness("instances", &checked)
}

fn masks(h: &Hypergraph) -> Vec<u64> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

/// Maximum number of pairwise disjoint edges, over all edge subsets.
pub fn nu_oracle(h: &Hypergraph) -> usize {
    let m = masks(h);
    (0u64..1 << m.len())
        .filter(|&f| {
            let mut seen = 0u64;
            (0..m.len()).filter(|&i| f >> i & 1 == 1).all(|i| {
                let ok = seen & m[i] == 0;
                seen |= m[i];
                ok
            })
        })
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest vertex set meeting every edge, over all vertex subsets.
pub fn tau_oracle(h: &Hypergraph) -> usize {
    let m = masks(h);
    (0u64..1 << h.n())
        .filter(|&s| m.iter().all(|&e| e & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Largest edge family in which every two members share a vertex lying in no other member.
pub fn lambda_oracle(h: &Hypergraph) -> usize {
    let m = masks(h);
    (1u64..1 << m.len())
        .filter(|&f| {
            let idx: Vec<usize> = (0..m.len()).filter(|&i| f >> i & 1 == 1).collect();
            idx.iter().enumerate().all(|(a, &i)| {
                idx[a + 1..].iter().all(|&j| {
                    let others = idx
                        .iter()
                        .filter(|&&k| k != i && k != j)
                        .fold(0u64, |acc, &k| acc | m[k]);
                    m[i] & m[j] & !others != 0
                })
            })
        })
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A hypergraph with `1..=8` vertices and `1..=8` nonempty edges.
pub fn random_hypergraph(rng: &mut ChaCha8Rng) -> Hypergraph {
    let n = rng.gen_range(1..=8usize);
    let m = rng.gen_range(1..=8usize);
    let edges = (0..m)
        .map(|_| {
            let mask: u32 = rng.gen_range(1..1u32 << n);
            (0..n).filter(|&v| mask >> v & 1 == 1).collect()
        })
        .collect();
    Hypergraph::new(n, edges).expect("edges are in range and nonempty")
}

/// On `count` seeded random hypergraphs: exact nu, tau and lambda agree with
/// the subset oracles, lambda is 1 exactly for pairwise disjoint edges, and
/// the Ding-Seymour-Winkler bound holds with `a = nu`, `a' = lambda`.
pub fn dsw_random(count: usize, seed: u64, budget: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Budget::new(budget);
    let mut max_tau = 0;
    for case in 0..count {
        let h = random_hypergraph(&mut rng);
        let edges = crate::io::hypergraph_to_json(&h);
        let fail = |why: String, b: &Budget| {
            Outcome::fail(format!("case {case}: {why}"))
                .witness("hypergraph", &edges)
                .spent(b.spent())
        };
        let inconclusive =
            |b: &Budget| Outcome::inconclusive(format!("budget exhausted at case {case}")).spent(b.spent());
        let params = h.nu(&mut b).and_then(|nu| Ok((nu, h.tau(&mut b)?, h.lambda(&mut b)?)));
        let (nu, tau, lambda) = match params {
            Ok(p) => p,
            Err(HypergraphError::BudgetExceeded) => return inconclusive(&b),
            Err(e) => return fail(e.to_string(), &b),
        };
        let want = (nu_oracle(&h), tau_oracle(&h), lambda_oracle(&h));
        if (nu.size, tau.size, lambda.size) != want {
            return fail(
                format!(
                    "(nu, tau, lambda) = {:?}, oracle {want:?}",
                    (nu.size, tau.size, lambda.size)
                ),
                &b,
            );
        }
        if (lambda.size == 1) != h.pairwise_disjoint() {
            return fail("lambda = 1 disagrees with pairwise disjointness".into(), &b);
        }
        match dsw_bound_check(&h, nu.size, lambda.size, &mut b) {
            Ok(check) if check.holds => max_tau = max_tau.max(tau.size),
            Ok(check) => return fail(format!("tau = {} exceeds {}", check.tau, check.rhs), &b),
            Err(HypergraphError::BudgetExceeded) => return inconclusive(&b),
            Err(e) => return fail(e.to_string(), &b),
        }
    }
    Outcome::pass(format!(
        "{count} random hypergraphs (seed {seed}) agree with oracles and satisfy the bound"
    ))
    .witness("max_tau", max_tau)
    .spent(b.spent())
}

fn tw_checked(g: &Graph) -> Result<usize, String> {
    let r = treewidth_exact(g, TREEWIDTH_LIMIT).map_err(|e| e.to_string())?;
    if !certify(g, &r).unwrap_or(false) {
        return Err("certificate does not re-certify".into());
    }
    Ok(r.value)
}

/// Generated `(s, l)`-constellations with at most `max_vertices` vertices,
/// for `s <= max_s` and `l <= max_l`.
pub fn width_family(max_s: usize, max_l: usize, max_vertices: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for s in 1..=max_s {
        for l in 1..=max_l {
            let mut cands = vec![
                (
                    format!("aligned({s},{l},1)"),
                    constel_core::generators::aligned_constellation(s, l, 1),
                ),
                (
                    format!("aligned({s},{l},2)"),
                    constel_core::generators::aligned_constellation(s, l, 2),
                ),
                (
                    format!("occultation-ample({s},1)x{l}"),
                    replicate_paths(&occultation_ample(s, 1).0, l),
                ),
                (
                    format!("occultation({s},1)x{l}"),
                    replicate_paths(&occultation(s, 1).0, l),
                ),
            ];
            if s >= 2 {
                cands.push((format!("zigzag-graph({s},{l})"), zigzag_graph(s, l)));
            }
            if s >= 3 {
                cands.push((
                    format!("nested({s},1)x{l}"),
                    replicate_paths(&nested_constellation(s, 1).0, l),
                ));
            }
            for (name, con) in cands {
                if con.host().n() <= max_vertices {
                    let order = natural(&con);
                    out.push(Instance { name, con, order });
                }
            }
        }
    }
    out
}

/// Exact treewidth on named graphs, then `tw >= min(s, l)` on generated constellations.
pub fn widths(max_s: usize, max_l: usize) -> Outcome {
    let mut named: Vec<(String, Graph, usize)> = (1..=8).map(|n| (format!("K_{n}"), complete(n), n - 1)).collect();
    named.push(("binary tree of depth 3".into(), binary_tree(3), 1));
    named.push(("K_3,3".into(), complete_bipartite(3, 3), 3));
    for (name, g, want) in &named {
        match tw_checked(g) {
            Ok(tw) if tw == *want => {}
            Ok(tw) => return Outcome::fail(format!("tw({name}) = {tw}, expected {want}")),
            Err(e) => return Outcome::fail(format!("tw({name}): {e}")),
        }
    }
    let family = width_family(max_s, max_l, 16);
    let mut seen = Vec::new();
    for inst in &family {
        let (s, l) = (inst.con.s(), inst.con.l());
        match tw_checked(inst.con.host()) {
            Ok(tw) if tw >= s.min(l) => seen.push(json!({"instance": inst.name, "tw": tw})),
            Ok(tw) => {
                return Outcome::fail(format!("{} has tw {tw} < min({s},{l})", inst.name))
                    .witness("instance", &inst.name)
            }
            Err(e) => return Outcome::fail(format!("{}: {e}", inst.name)),
        }
    }
    if family.is_empty() {
        return Outcome::fail("no constellation fits the size limit");
    }
    Outcome::pass(format!(
        "named graphs exact; {} constellations with tw >= min(s,l)",
        family.len()
    ))
    .witness("constellations", seen)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The constellation `split` runs on: a 1-zigzagged zigzag graph with just
/// enough apexes and paths.
pub fn split_instance(c: usize, q: usize) -> Constellation {
    let half = c * binomial(c + q - 1, c);
    zigzag_graph(2 * c + 3 * q, 2 * half)
}

/// Splits an ample `q`-zigzagged constellation into two anticomplete parts
/// and checks, independently of the split code, that both have treewidth at least `c`.
pub fn split(c: usize, q: usize) -> Outcome {
    if c == 0 || q == 0 {
        return Outcome::fail("c and q must be positive");
    }
    let con = split_instance(c, q);
    let order = natural(&con);
    if !is_ample(&con, 1)
        || !is_zigzagged(&con, q, &OrderMode::Given(order.clone()))
            .map(|v| v.holds())
            .unwrap_or(false)
    {
        return Outcome::fail("generated instance is not ample and q-zigzagged");
    }
    let w = match split_zigzagged(&con, c, q, &order) {
        Ok(w) => w,
        Err(e) => return Outcome::fail(format!("split failed: {e}")),
    };
    let side = |sel: &constel_core::constellation::Selection| -> Vec<usize> {
        let mut v: Vec<usize> = sel.apex.iter().chain(sel.paths.iter().flatten().copied()).collect();
        v.sort_unstable();
        v
    };
    let (x, y) = (side(&w.x), side(&w.y));
    let g = con.host();
    if !routes_anticomplete(g, &x, &y) {
        return Outcome::fail("the two sides touch").witness("x", &x).witness("y", &y);
    }
    let mut tws = Vec::new();
    for set in [&x, &y] {
        let (sub, _) = g
            .induced_subgraph(&set.iter().copied().collect::<VertexSet>())
            .expect("ids in range");
        match tw_checked(&sub) {
            Ok(tw) if tw >= c => tws.push(tw),
            Ok(tw) => return Outcome::fail(format!("a side has tw {tw} < {c}")).witness("side", set),
            Err(e) => return Outcome::fail(e),
        }
    }
    Outcome::pass(format!(
        "({},{})-constellation split into anticomplete parts with tw {} and {}",
        con.s(),
        con.l(),
        tws[0],
        tws[1]
    ))
    .witness("x", json!({"apex": w.x.apex.as_slice(), "paths": w.x.paths}))
    .witness("y", json!({"apex": w.y.apex.as_slice(), "paths": w.y.paths}))
    .witness("tw", tws)
}

/// Instances where the star obstruction must be absent, for `q = 1`.
pub fn star_absence_instances() -> Vec<Instance> {
    ["zigzag-graph(2,4)", "aligned(2,6,1)", "zigzag-graph(3,3)"]
        .iter()
        .map(|n| crate::corpus::find(n).expect("corpus entry"))
        .collect()
}

/// The interrupted instance the obstruction must be found in: eight apexes,
/// each path copied four times so every apex has degree at least 4.
pub fn star_presence_instance() -> Instance {
    crate::corpus::find("nested(8,1)x4").expect("corpus entry")
}

pub fn star_obstruction(q: usize, budget: u64) -> Outcome {
    let mut b = Budget::new(budget);
    let leaves = 2 * q + 1;
    let star = complete_bipartite(1, leaves);
    let mut absent = Vec::new();
    for inst in star_absence_instances() {
        let c = &inst.con;
        let zig = is_zigzagged(c, q, &OrderMode::Given(inst.order.clone()))
            .map(|v| v.holds())
            .unwrap_or(false);
        if !is_ample(c, 1) || !zig || c.host().n() > 14 {
            return Outcome::fail(format!("{} is not a small ample {q}-zigzagged instance", inst.name));
        }
        match star_subdivision_obstruction(c, q, &mut b) {
            SearchOutcome::NotFound => {}
            SearchOutcome::Found(w) => {
                return Outcome::fail(format!("obstruction in {}", inst.name))
                    .witness("branch", w.branch)
                    .spent(b.spent())
            }
            SearchOutcome::BudgetExceeded => {
                return Outcome::inconclusive(format!("budget exhausted on {}", inst.name)).spent(b.spent())
            }
        }
        // the same search without the vertex-counting shortcut
        let g = c.host();
        let heavy = |v: usize| g.degree(v) >= 4;
        let query = SubdivisionQuery {
            proper: true,
            branch_filter: Some(&heavy),
        };
        match find_induced_subdivision_with(g, &star, query, &mut b) {
            SearchOutcome::NotFound => absent.push(inst.name.clone()),
            SearchOutcome::Found(_) => return Outcome::fail(format!("full search disagrees on {}", inst.name)),
            SearchOutcome::BudgetExceeded => {
                return Outcome::inconclusive(format!("budget exhausted on {}", inst.name)).spent(b.spent())
            }
        }
    }
    let inst = star_presence_instance();
    let c = &inst.con;
    let heavy_apexes = c.apex().iter().filter(|&x| c.host().degree(x) >= 4).count();
    if heavy_apexes < 2 * q + 6 {
        return Outcome::fail(format!("{} has only {heavy_apexes} apexes of degree >= 4", inst.name));
    }
    if !is_interrupted(c, &OrderMode::Given(inst.order.clone()))
        .map(|v| v.holds())
        .unwrap_or(false)
    {
        return Outcome::fail(format!("{} is not interrupted", inst.name));
    }
    let w = match star_subdivision_obstruction(c, q, &mut b) {
        SearchOutcome::Found(w) => w,
        SearchOutcome::NotFound => return Outcome::fail(format!("no obstruction in {}", inst.name)).spent(b.spent()),
        SearchOutcome::BudgetExceeded => {
            return Outcome::inconclusive(format!("budget exhausted on {}", inst.name)).spent(b.spent())
        }
    };
    // independent check: induced, a proper subdivided star, heavy branch vertices
    let used = w.vertex_set();
    let (sub, map) = c.host().induced_subgraph(&used).expect("ids in range");
    let centre = map.iter().position(|&v| v == w.branch[0]).expect("center used");
    let degrees: Vec<usize> = (0..sub.n()).map(|v| sub.degree(v)).collect();
    let is_star = sub.is_connected()
        && sub.edge_count() + 1 == sub.n()
        && degrees[centre] == leaves
        && degrees.iter().filter(|&&d| d == 1).count() == leaves
        && degrees.iter().enumerate().all(|(v, &d)| v == centre || d <= 2)
        && w.paths.iter().all(|p| p.len() >= 3)
        && w.branch.iter().all(|&v| c.host().degree(v) >= 4);
    if !is_star {
        return Outcome::fail("witness is not an induced proper subdivided star").witness("branch", w.branch);
    }
    Outcome::pass(format!(
        "absent in {}; found in {} ({heavy_apexes} apexes of degree >= 4)",
        absent.join(", "),
        inst.name
    ))
    .witness("absent", absent)
    .witness("branch", w.branch)
    .witness("paths", w.paths)
    .spent(b.spent())
}

/// On `zigzag_graph(n, 1)` with the natural order, auxiliary-graph edges join
/// consecutive apexes only and the auxiliary graph has pathwidth at most 1.
pub fn bandwidth(max_n: usize) -> Outcome {
    for n in 2..=max_n {
        let c = zigzag_graph(n, 1);
        let h = c.host().vertices();
        let aux = match aux_graph(&c, &h) {
            Ok(a) => a,
            Err(e) => return Outcome::fail(format!("n = {n}: {e}")),
        };
        // apexes are 0..n in natural order, so ids are ranks
        let gap = aux
            .graph
            .edges()
            .iter()
            .map(|&(i, j)| aux.apex[i].abs_diff(aux.apex[j]))
            .max()
            .unwrap_or(0);
        if order_bandwidth_bound(&c, &h, &natural(&c)).ok() != Some(gap) {
            return Outcome::fail(format!("n = {n}: bandwidth bound disagrees with the edge scan"));
        }
        let pw = match pathwidth_exact(&aux.graph, PATHWIDTH_LIMIT) {
            Ok(r) => r.value,
            Err(e) => return Outcome::fail(format!("n = {n}: {e}")),
        };
        if gap > 1 || pw > 1 {
            return Outcome::fail(format!("n = {n}: gap {gap}, pathwidth {pw}"))
                .witness("aux_edges", aux.graph.edges());
        }
    }
    Outcome::pass(format!("aux gap <= 1 and pw <= 1 for n in 2..={max_n}"))
}

/// Maps each vertex of `c` to the vertex it becomes in the A-contraction of
/// its singleton and path model: apexes keep their order, and each path is
/// renumbered from its smaller end.
fn expected_iso(c: &Constellation, back: &Constellation) -> Vec<usize> {
    let mut iso = vec![0; c.host().n()];
    for (i, x) in c.apex().iter().enumerate() {
        iso[x] = i;
    }
    for (p, q) in c.paths().iter().zip(back.paths()) {
        let forward = p.first() <= p.last();
        for (k, &u) in p.iter().enumerate() {
            iso[u] = q[if forward { k } else { p.len() - 1 - k }];
        }
    }
    iso
}

/// constellation, then model, then A-contraction gives the constellation back.
pub fn model_round_trip(max_vertices: usize) -> Outcome {
    let mut count = 0;
    for inst in corpus() {
        if inst.vertices() > max_vertices {
            continue;
        }
        let c = &inst.con;
        let m = InducedModel::from_constellation(c);
        if InducedModel::verify(m.host().clone(), m.a_sets().to_vec(), m.b_sets().to_vec()).is_err() {
            return Outcome::fail(format!("{}: model does not verify", inst.name));
        }
        let back = match m.a_contraction() {
            Ok(b) => b,
            Err(e) => return Outcome::fail(format!("{}: {e}", inst.name)),
        };
        if (back.s(), back.l(), back.host().n()) != (c.s(), c.l(), c.host().n()) {
            return Outcome::fail(format!("{}: contraction has the wrong shape", inst.name));
        }
        let iso = expected_iso(c, &back);
        let mut mapped: Vec<(usize, usize)> = c
            .host()
            .edges()
            .iter()
            .map(|&(u, v)| (iso[u].min(iso[v]), iso[u].max(iso[v])))
            .collect();
        mapped.sort_unstable();
        let apexes_match = c.apex().iter().all(|x| back.is_apex(iso[x]));
        if mapped != back.host().edges() || !apexes_match {
            return Outcome::fail(format!("{}: contraction is not isomorphic", inst.name));
        }
        count += 1;
    }
    Outcome::decide(count > 0, format!("{count} corpus constellations round-trip"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_on_fixed_hypergraphs() {
        let fano = Hypergraph::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!((nu_oracle(&fano), tau_oracle(&fano)), (1, 3));
        let disjoint = Hypergraph::new(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        assert_eq!(
            (nu_oracle(&disjoint), tau_oracle(&disjoint), lambda_oracle(&disjoint)),
            (3, 3, 1)
        );
    }

    #[test]
    fn seeded_hypergraphs_repeat() {
        let a: Vec<_> = {
            let mut r = ChaCha8Rng::seed_from_u64(3);
            (0..5).map(|_| random_hypergraph(&mut r)).collect()
        };
        let mut r = ChaCha8Rng::seed_from_u64(3);
        for h in a {
            assert_eq!(random_hypergraph(&mut r), h);
        }
    }

    #[test]
    fn small_suites_pass() {
        assert!(sequence_fidelity(8).passed());
        assert!(lemma_align(2, 7, 4, 10_000_000).passed());
        assert!(zigzag_family(6).passed());
        assert!(bandwidth(5).passed());
        assert!(dsw_random(20, 1, 10_000_000).passed());
        assert!(split(1, 1).passed());
    }

    #[test]
    fn budgets_make_runs_inconclusive() {
        let r = lemma_align(2, 12, 4, 10);
        assert_eq!(r.verdict, crate::report::Verdict::Inconclusive);
    }

    #[test]
    fn width_family_respects_limits() {
        let fam = width_family(3, 3, 16);
        assert!(fam.len() >= 10);
        assert!(fam
            .iter()
            .all(|i| i.vertices() <= 16 && i.con.s() <= 3 && i.con.l() <= 3));
    }
}
