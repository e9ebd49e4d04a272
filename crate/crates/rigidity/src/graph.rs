//! Simple undirected graphs with contiguous integer labels, plus the
//! counting primitives (boundary, cross edges, partition counts) and
//! vertex connectivity used by the certification routines.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("loop edge {0} {0} not allowed")]
    Loop(usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("declared edge count {declared} does not match {actual} distinct edges")]
    EdgeCountMismatch { declared: usize, actual: usize },
    #[error("cannot delete all vertices")]
    DeleteAll,
    #[error("vertex set must be a nonempty proper subset")]
    BadSubset,
    #[error("vertex sets must be disjoint and nonempty")]
    BadPair,
    #[error("partition does not cover the expected ground set")]
    BadPartition,
    #[error("parts must be disjoint and nonempty")]
    BadParts,
    #[error("Z intersects the partition ground set")]
    ZOverlapsGround,
    #[error("operation requires at least {0} vertices")]
    TooSmall(usize),
}

/// Simple undirected graph on vertices `0..n`. Immutable after construction;
/// all mutation-style operations return fresh copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange(w, n));
                }
            }
            if !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut m = 0;
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            m += nbrs.len();
        }
        Ok(Graph { n, adj, m: m / 2 })
    }

    /// Parses the edge-list format: first line `n m`, then lines `u v`.
    /// `#` lines are comments. The declared `m` must match the number of
    /// distinct edges after collapsing duplicates.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Parse(
                    lineno,
                    format!("expected two fields, got {}", fields.len()),
                ));
            }
            let a: usize = fields[0]
                .parse()
                .map_err(|_| GraphError::Parse(lineno, format!("bad integer '{}'", fields[0])))?;
            let b: usize = fields[1]
                .parse()
                .map_err(|_| GraphError::Parse(lineno, format!("bad integer '{}'", fields[1])))?;
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    if a == b {
                        return Err(GraphError::Parse(lineno, format!("loop edge {a} {a}")));
                    }
                    if a >= n || b >= n {
                        return Err(GraphError::Parse(
                            lineno,
                            format!("vertex out of range (n = {n})"),
                        ));
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, declared_m) = header.ok_or(GraphError::Parse(0, "missing header".into()))?;
        let g = Graph::new(n, &edges)?;
        if g.m != declared_m {
            return Err(GraphError::EdgeCountMismatch {
                declared: declared_m,
                actual: g.m,
            });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// Emits the edge-list format accepted by `parse`.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Returns G - Z relabeled contiguously, plus the list of kept old
    /// labels (new label i corresponds to old label kept[i]).
    pub fn delete_vertices(&self, z: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut del = vec![false; self.n];
        for &v in z {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            del[v] = true;
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !del[v]).collect();
        if kept.is_empty() {
            return Err(GraphError::DeleteAll);
        }
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i;
        }
        let mut edges = Vec::new();
        for &u in &kept {
            for &v in &self.adj[u] {
                if u < v && !del[v] {
                    edges.push((new_label[u], new_label[v]));
                }
            }
        }
        Ok((Graph::new(kept.len(), &edges)?, kept))
    }

    /// Returns G - e as a fresh graph on the same vertex set.
    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        Graph::new(self.n, &edges).expect("subgraph of a valid graph")
    }

    /// |∂(U)|: edges with exactly one end in U. U must be a nonempty
    /// proper subset of V.
    pub fn boundary(&self, u_set: &[usize]) -> Result<usize, GraphError> {
        let mark = self.mark(u_set)?;
        let cnt = mark.iter().filter(|&&b| b).count();
        if cnt == 0 || cnt == self.n {
            return Err(GraphError::BadSubset);
        }
        let mut out = 0;
        for v in 0..self.n {
            if mark[v] {
                out += self.adj[v].iter().filter(|&&w| !mark[w]).count();
            }
        }
        Ok(out)
    }

    /// e(X, Y): edges with one end in X and the other in Y.
    pub fn cross_edges(&self, x: &[usize], y: &[usize]) -> Result<usize, GraphError> {
        if x.is_empty() || y.is_empty() {
            return Err(GraphError::BadPair);
        }
        let xm = self.mark(x)?;
        let ym = self.mark(y)?;
        if (0..self.n).any(|v| xm[v] && ym[v]) {
            return Err(GraphError::BadPair);
        }
        let mut out = 0;
        for v in 0..self.n {
            if xm[v] {
                out += self.adj[v].iter().filter(|&&w| ym[w]).count();
            }
        }
        Ok(out)
    }

    fn mark(&self, set: &[usize]) -> Result<Vec<bool>, GraphError> {
        let mut mark = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            mark[v] = true;
        }
        Ok(mark)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        cnt == self.n
    }

    /// Vertex connectivity κ(G); κ(K_n) = n - 1 by convention. Computed by
    /// unit-vertex-capacity max flow minimized over all non-adjacent pairs.
    pub fn vertex_connectivity(&self) -> Result<usize, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall(2));
        }
        if self.is_complete() {
            return Ok(self.n - 1);
        }
        let mut best = self.n - 1;
        for s in 0..self.n {
            for t in (s + 1)..self.n {
                if !self.has_edge(s, t) {
                    best = best.min(self.vertex_disjoint_paths(s, t, best + 1));
                }
            }
        }
        Ok(best)
    }

    pub fn is_k_connected(&self, k: usize) -> Result<bool, GraphError> {
        Ok(self.n > k && self.vertex_connectivity()? >= k)
    }

    /// Number of internally vertex-disjoint s-t paths, capped at `limit`.
    /// Standard split-vertex flow network: node 2v = v_in, 2v+1 = v_out.
    fn vertex_disjoint_paths(&self, s: usize, t: usize, limit: usize) -> usize {
        let nn = 2 * self.n;
        // residual adjacency with capacities; arcs stored as (to, cap, rev_index)
        let mut arcs: Vec<Vec<(usize, u32, usize)>> = vec![Vec::new(); nn];
        let add = |arcs: &mut Vec<Vec<(usize, u32, usize)>>, a: usize, b: usize, c: u32| {
            let ra = arcs[b].len();
            let rb = arcs[a].len();
            arcs[a].push((b, c, ra));
            arcs[b].push((a, 0, rb));
        };
        for v in 0..self.n {
            let cap = if v == s || v == t { u32::MAX / 2 } else { 1 };
            add(&mut arcs, 2 * v, 2 * v + 1, cap);
        }
        for u in 0..self.n {
            for &v in &self.adj[u] {
                add(&mut arcs, 2 * u + 1, 2 * v, u32::MAX / 2);
            }
        }
        let (src, snk) = (2 * s + 1, 2 * t);
        let mut flow = 0usize;
        while flow < limit {
            // BFS for an augmenting path
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; nn];
            let mut q = VecDeque::new();
            q.push_back(src);
            let mut seen = vec![false; nn];
            seen[src] = true;
            while let Some(x) = q.pop_front() {
                if x == snk {
                    break;
                }
                for (i, &(y, cap, _)) in arcs[x].iter().enumerate() {
                    if cap > 0 && !seen[y] {
                        seen[y] = true;
                        prev[y] = Some((x, i));
                        q.push_back(y);
                    }
                }
            }
            if !seen[snk] {
                break;
            }
            let mut y = snk;
            while let Some((x, i)) = prev[y] {
                let (to, _, rev) = arcs[x][i];
                arcs[x][i].1 -= 1;
                arcs[to][rev].1 += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}

/// A partition of a vertex subset into disjoint nonempty parts, with
/// trivial-part (singleton) bookkeeping.
#[derive(Clone, Debug)]
pub struct Partition {
    ground: Vec<usize>,
    parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(parts: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut ground = Vec::new();
        for p in &parts {
            if p.is_empty() {
                return Err(GraphError::BadParts);
            }
            ground.extend_from_slice(p);
        }
        let len = ground.len();
        ground.sort_unstable();
        ground.dedup();
        if ground.len() != len {
            return Err(GraphError::BadParts);
        }
        Ok(Partition { ground, parts })
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Singleton parts u_1..u_{n0}.
    pub fn trivial_parts(&self) -> Vec<usize> {
        self.parts
            .iter()
            .filter(|p| p.len() == 1)
            .map(|p| p[0])
            .collect()
    }

    pub fn trivial_count(&self) -> usize {
        self.parts.iter().filter(|p| p.len() == 1).count()
    }

    pub fn nontrivial_count(&self) -> usize {
        self.parts.len() - self.trivial_count()
    }
}

/// e_G(π): edges of G whose ends lie in two different parts of π.
/// π must partition all of V(G).
pub fn partition_cross_count(g: &Graph, pi: &Partition) -> Result<usize, GraphError> {
    if pi.ground().len() != g.n() || pi.ground().iter().any(|&v| v >= g.n()) {
        return Err(GraphError::BadPartition);
    }
    let mut part_of = vec![usize::MAX; g.n()];
    for (i, p) in pi.parts().iter().enumerate() {
        for &v in p {
            part_of[v] = i;
        }
    }
    let mut out = 0;
    for (u, v) in g.edges() {
        if part_of[u] != part_of[v] {
            out += 1;
        }
    }
    Ok(out)
}

/// n_Z(π): sum over trivial parts {u} of the number of Z-vertices adjacent
/// to u in G. Zero when Z is empty. π must partition V(G) - Z.
pub fn n_z_of_partition(g: &Graph, z: &[usize], pi: &Partition) -> Result<usize, GraphError> {
    let mut in_z = vec![false; g.n()];
    for &v in z {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange(v, g.n()));
        }
        in_z[v] = true;
    }
    if pi.ground().iter().any(|&v| v >= g.n() || in_z[v]) {
        return Err(GraphError::ZOverlapsGround);
    }
    let expected: Vec<usize> = (0..g.n()).filter(|&v| !in_z[v]).collect();
    if pi.ground() != expected.as_slice() {
        return Err(GraphError::BadPartition);
    }
    if z.is_empty() {
        return Ok(0);
    }
    let mut out = 0;
    for u in pi.trivial_parts() {
        out += g.neighbors(u).iter().filter(|&&w| in_z[w]).count();
    }
    Ok(out)
}
