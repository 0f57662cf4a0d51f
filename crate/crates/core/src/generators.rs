//! Deterministic constructors for the graph families used throughout.

use alloc::vec::Vec;

use crate::constellation::Constellation;
use crate::graph::{Graph, VertexSet};
use crate::order::ApexOrder;
use crate::sequences::zigzag_sequence;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("leaf {leaf} must be a new vertex attached to exactly one base vertex")]
    InvalidAttachment { leaf: usize },
}

/// `K_n`
pub fn complete(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{s,t}` with sides `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    Graph::from_edges_unchecked(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

/// Full binary tree of radius `r`, rooted at 0 with children `2i+1`, `2i+2`.
pub fn binary_tree(r: usize) -> Graph {
    let n = (1usize << (r + 1)) - 1;
    Graph::from_edges_unchecked(n, (1..n).map(|v| ((v - 1) / 2, v)))
}

/// The `r`-by-`r` wall.
///
/// Built from the `(r+1) x (2r+2)` grid, keeping all row edges and the rung
/// between rows `i` and `i+1` at column `j` only when `i + j` is even, then
/// dropping the two pendant corners. For `r = 2`:
///
/// ```text
///   o-o-o-o-o
///   |   |   |
///   o-o-o-o-o-o
///     |   |   |
///     o-o-o-o-o
/// ```
pub fn wall(r: usize) -> Graph {
    let rows = r + 1;
    let cols = 2 * r + 2;
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows && (i + j) % 2 == 0 {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let grid = Graph::from_edges_unchecked(rows * cols, edges);
    let keep: VertexSet = grid.vertices().iter().filter(|&v| grid.degree(v) != 1).collect();
    grid.induced_subgraph(&keep).expect("subset of grid").0
}

/// Joins `paths` (each given as a list of apex indices per path position,
/// possibly empty) to `s` apexes. Apexes get ids `0..s`; path vertices follow
/// in path order.
fn from_attachment_lists(s: usize, paths: &[Vec<Vec<usize>>]) -> Constellation {
    let mut edges = Vec::new();
    let mut next = s;
    let mut vertex_paths = Vec::with_capacity(paths.len());
    for path in paths {
        let ids: Vec<usize> = (next..next + path.len()).collect();
        next += path.len();
        for w in ids.windows(2) {
            edges.push((w[0], w[1]));
        }
        for (pos, apexes) in path.iter().enumerate() {
            for &x in apexes {
                edges.push((x, ids[pos]));
            }
        }
        vertex_paths.push(ids);
    }
    Constellation::from_parts_unchecked(
        Graph::from_edges_unchecked(next, edges),
        VertexSet::range(s),
        vertex_paths,
    )
}

/// The zigzag graph with `l` copies of its path. Apex `x_i` has id `i - 1`;
/// vertex `p_j` of copy `c` has id `n + c * l_n + j - 1`.
pub fn zigzag_graph(n: usize, l: usize) -> Constellation {
    let z = zigzag_sequence(n).expect("n >= 2");
    let path: Vec<Vec<usize>> = z.as_slice().iter().map(|&a| alloc::vec![a - 1]).collect();
    from_attachment_lists(n, &alloc::vec![path; l])
}

/// Each path is `s` consecutive blocks of `reps` vertices, block `i` attached to apex `i`.
pub fn aligned_constellation(s: usize, l: usize, reps: usize) -> Constellation {
    let path: Vec<Vec<usize>> = (0..s * reps).map(|k| alloc::vec![k / reps]).collect();
    from_attachment_lists(s, &alloc::vec![path; l])
}

/// A single path of `c * 2^s` vertices; position `c * k` is attached to `x_j`
/// whenever `2^(s-j)` divides `k`. Interrupted under the natural order, which
/// is returned, but never ample (position 0 sees every apex).
pub fn occultation(s: usize, c: usize) -> (Constellation, ApexOrder) {
    let len = c << s;
    let mut path = alloc::vec![Vec::new(); len];
    for k in 0..1usize << s {
        for j in 1..=s {
            if k % (1 << (s - j)) == 0 {
                path[c * k].push(j - 1);
            }
        }
    }
    let con = from_attachment_lists(s, &[path]);
    let order = ApexOrder::natural(con.apex());
    (con, order)
}

/// Like [`occultation`] but each attachment position goes to its coarsest
/// apex only: `x_1` takes multiples of `2^(s-1)`, and `x_j` (`j >= 2`) takes
/// odd multiples of `2^(s-j)`. Attachments are `c` apart, so the result is
/// `d`-ample exactly when `c >= d`, and it stays interrupted.
pub fn occultation_ample(s: usize, c: usize) -> (Constellation, ApexOrder) {
    let len = c << s;
    let mut path = alloc::vec![Vec::new(); len];
    for k in 0..1usize << s {
        let j = if k % (1 << (s - 1)) == 0 {
            1
        } else {
            s - k.trailing_zeros() as usize
        };
        path[c * k].push(j - 1);
    }
    let con = from_attachment_lists(s, &[path]);
    let order = ApexOrder::natural(con.apex());
    (con, order)
}

/// A one-path interrupted constellation built by insertion: start from the
/// index sequence `1, 2` and, for `k = 3..=s`, insert `k` between every two
/// neighbors. Attachments are `c` apart. Apex `x_k` (`k >= 3`) has
/// `2^(k-3)` neighbors.
pub fn nested_constellation(s: usize, c: usize) -> (Constellation, ApexOrder) {
    let mut seq: Vec<usize> = if s == 1 { alloc::vec![1] } else { alloc::vec![1, 2] };
    for k in 3..=s {
        let mut next = Vec::with_capacity(2 * seq.len());
        for (i, &a) in seq.iter().enumerate() {
            if i > 0 {
                next.push(k);
            }
            next.push(a);
        }
        seq = next;
    }
    let c = c.max(1);
    let mut path = alloc::vec![Vec::new(); c * (seq.len() - 1) + 1];
    for (i, &a) in seq.iter().enumerate() {
        path[c * i].push(a - 1);
    }
    let con = from_attachment_lists(s, &[path]);
    let order = ApexOrder::natural(con.apex());
    (con, order)
}

/// Repeats every path of `con` `copies` times, keeping the apex order. Apex
/// `i` of the result is the `i`-th apex of `con`. Routes never leave a path,
/// so ampleness and the order properties carry over.
pub fn replicate_paths(con: &Constellation, copies: usize) -> Constellation {
    let apex: Vec<usize> = con.apex().iter().collect();
    let rank = |x: usize| apex.binary_search(&x).expect("apex");
    let lists: Vec<Vec<Vec<usize>>> = (0..con.l())
        .map(|p| {
            (0..con.paths()[p].len())
                .map(|pos| con.apex_neighbors(p, pos).into_iter().map(rank).collect())
                .collect()
        })
        .collect();
    let mut all = Vec::with_capacity(lists.len() * copies);
    for _ in 0..copies {
        all.extend(lists.iter().cloned());
    }
    from_attachment_lists(apex.len(), &all)
}

/// Adds pendant leaves. Leaves must be exactly the ids `base.n()..base.n()+k`,
/// each attached to one base vertex.
pub fn leaf_extension(base: &Graph, attachments: &[(usize, usize)]) -> Result<Graph, GeneratorError> {
    let n = base.n();
    let k = attachments.len();
    let mut seen = alloc::vec![false; k];
    for &(leaf, to) in attachments {
        if leaf < n || leaf >= n + k || seen[leaf - n] || to >= n {
            return Err(GeneratorError::InvalidAttachment { leaf });
        }
        seen[leaf - n] = true;
    }
    let edges = base.edges().into_iter().chain(attachments.iter().map(|&(l, t)| (t, l)));
    Ok(Graph::from_edges_unchecked(n + k, edges))
}
