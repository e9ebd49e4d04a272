//! Packing of edge-disjoint spanning rigid subgraphs: k-fold matroid union
//! with the pebble game as independence oracle, and the brute-force
//! partition-condition oracle on small graphs.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Partition};
use crate::limits::SizeLimitError;
use crate::sparsity::rank_of_edges;

pub const ORACLE_MAX_N: usize = 9;

type Edge = (usize, usize);

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PackingResult {
    pub k: usize,
    pub found: bool,
    pub parts: Vec<Vec<Edge>>,
}

fn independent(n: usize, edges: &[Edge]) -> bool {
    rank_of_edges(n, edges).0 == edges.len()
}

fn independent_with(n: usize, set: &[Edge], extra: Edge) -> bool {
    let mut edges = set.to_vec();
    edges.push(extra);
    independent(n, &edges)
}

fn independent_swap(n: usize, set: &[Edge], out: Edge, into: Edge) -> bool {
    let mut edges: Vec<Edge> = set.iter().copied().filter(|&e| e != out).collect();
    edges.push(into);
    independent(n, &edges)
}

// One round of the matroid partition algorithm: try to place `e` into the
// k-fold union of the rigidity matroid, exchanging along a BFS-shortest
// path in the exchange digraph. Ties break toward lower set index and
// earlier set position, so runs are deterministic.
fn augment(n: usize, sets: &mut [Vec<Edge>], e: Edge) -> bool {
    use std::collections::{HashMap, VecDeque};
    let k = sets.len();
    let mut parent: HashMap<Edge, (Edge, usize)> = HashMap::new();
    let mut visited: std::collections::HashSet<Edge> = std::collections::HashSet::new();
    visited.insert(e);
    let mut queue = VecDeque::new();
    queue.push_back(e);
    while let Some(x) = queue.pop_front() {
        for i in 0..k {
            if sets[i].contains(&x) {
                continue;
            }
            if independent_with(n, &sets[i], x) {
                // place x and unwind the exchange chain
                sets[i].push(x);
                let mut cur = x;
                while let Some(&(p, j)) = parent.get(&cur) {
                    sets[j].retain(|&f| f != cur);
                    sets[j].push(p);
                    cur = p;
                }
                return true;
            }
            // x is spanned by sets[i]; arcs go to the exchangeable elements
            for pos in 0..sets[i].len() {
                let y = sets[i][pos];
                if visited.contains(&y) {
                    continue;
                }
                if independent_swap(n, &sets[i], y, x) {
                    visited.insert(y);
                    parent.insert(y, (x, i));
                    queue.push_back(y);
                }
            }
        }
    }
    false
}

/// Searches for k edge-disjoint spanning rigid subgraphs via matroid union:
/// found iff the union rank reaches k(2n - 3), in which case each returned
/// part is a spanning (2,3)-tight edge set.
pub fn pack_spanning_rigid(g: &Graph, k: usize) -> PackingResult {
    assert!(k >= 1, "k must be positive");
    let n = g.n();
    if n < 3 {
        // below the scale where 2n - 3 counts spanning rigidity: a single
        // vertex is rigid with no edges at all, K2 needs its one edge
        let found = n <= 1 || (k == 1 && g.m() == 1);
        return PackingResult {
            k,
            found,
            parts: if n <= 1 && found {
                vec![Vec::new(); k]
            } else if found {
                vec![g.edges()]
            } else {
                Vec::new()
            },
        };
    }
    let target = k * (2 * n - 3);
    let mut sets: Vec<Vec<Edge>> = vec![Vec::new(); k];
    let mut total = 0usize;
    for e in g.edges() {
        if total == target {
            break;
        }
        if augment(n, &mut sets, e) {
            total += 1;
        }
    }
    let found = total == target;
    PackingResult {
        k,
        found,
        parts: if found {
            sets.into_iter()
                .map(|mut s| {
                    for e in &mut s {
                        if e.0 > e.1 {
                            *e = (e.1, e.0);
                        }
                    }
                    s.sort_unstable();
                    s
                })
                .collect()
        } else {
            Vec::new()
        },
    }
}

/// Same packing, with every returned part verified 2-connected (every rigid
/// graph on at least 3 vertices is 2-connected, so this never demotes a
/// result in practice).
pub fn pack_spanning_2connected(g: &Graph, k: usize) -> PackingResult {
    let mut res = pack_spanning_rigid(g, k);
    if res.found {
        let ok = res.parts.iter().all(|part| {
            Graph::new(g.n(), part)
                .ok()
                .and_then(|h| h.is_k_connected(2).ok())
                .unwrap_or(false)
        });
        if !ok {
            res.found = false;
            res.parts.clear();
        }
    }
    res
}

/// A failed instance of the partition condition: the deleted set Z and the
/// partition of V(G - Z) violating the inequality.
pub type PartitionWitness = (Vec<usize>, Partition);

/// Brute-force check of the sufficient partition condition for k
/// edge-disjoint spanning rigid subgraphs: for every proper Z ⊂ V and every
/// partition π of V - Z with n0 trivial and n0' nontrivial parts,
/// e_{G-Z}(π) >= k(3 - |Z|)n0' + 2k·n0 - 3k - n_Z(π).
/// Returns the violating (Z, π) when the condition fails.
pub fn partition_condition_oracle(
    g: &Graph,
    k: usize,
) -> Result<(bool, Option<PartitionWitness>), SizeLimitError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(SizeLimitError {
            what: "partition condition oracle",
            limit: ORACLE_MAX_N,
            actual: n,
        });
    }
    let kk = k as i64;
    for zmask in 0u32..(1 << n) {
        if zmask == (1u32 << n) - 1 {
            continue; // Z must be a proper subset
        }
        let z: Vec<usize> = (0..n).filter(|&v| zmask & (1 << v) != 0).collect();
        let w: Vec<usize> = (0..n).filter(|&v| zmask & (1 << v) == 0).collect();
        // edges of G - Z
        let inner: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| zmask & (1 << u) == 0 && zmask & (1 << v) == 0)
            .collect();
        // neighbors in Z for each surviving vertex
        let z_deg: Vec<i64> = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&x| zmask & (1 << x) != 0)
                    .count() as i64
            })
            .collect();
        let zsize = z.len() as i64;

        // restricted growth strings enumerate the partitions of w
        let mut rgs = vec![0usize; w.len()];
        loop {
            let parts_count = rgs.iter().copied().max().unwrap_or(0) + 1;
            let mut sizes = vec![0usize; parts_count];
            for &a in &rgs {
                sizes[a] += 1;
            }
            let n0: i64 = sizes.iter().filter(|&&s| s == 1).count() as i64;
            let n0p = parts_count as i64 - n0;
            let mut cross = 0i64;
            let mut pos = vec![usize::MAX; n];
            for (i, &v) in w.iter().enumerate() {
                pos[v] = rgs[i];
            }
            for &(u, v) in &inner {
                if pos[u] != pos[v] {
                    cross += 1;
                }
            }
            let mut n_z = 0i64;
            if zsize > 0 {
                for (i, &v) in w.iter().enumerate() {
                    if sizes[rgs[i]] == 1 {
                        n_z += z_deg[v];
                    }
                }
            }
            let rhs = kk * (3 - zsize) * n0p + 2 * kk * n0 - 3 * kk - n_z;
            if cross < rhs {
                let mut parts: Vec<Vec<usize>> = vec![Vec::new(); parts_count];
                for (i, &v) in w.iter().enumerate() {
                    parts[rgs[i]].push(v);
                }
                let pi = Partition::new(parts).expect("RGS yields a valid partition");
                return Ok((false, Some((z, pi))));
            }
            if !next_rgs(&mut rgs) {
                break;
            }
        }
    }
    Ok((true, None))
}

// Advances a restricted growth string in place; false once exhausted.
fn next_rgs(rgs: &mut [usize]) -> bool {
    let len = rgs.len();
    for i in (1..len).rev() {
        let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
        if rgs[i] <= max_prefix {
            rgs[i] += 1;
            for x in rgs[(i + 1)..].iter_mut() {
                *x = 0;
            }
            return true;
        }
    }
    false
}
