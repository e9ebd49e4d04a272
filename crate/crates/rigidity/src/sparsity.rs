//! The (2,3)-pebble game: rank function of the 2-dimensional rigidity
//! matroid, and the rigidity / redundant rigidity / global rigidity
//! decisions built on it.

use crate::graph::Graph;

/// Orientation-and-pebble state of the (2,3)-pebble game. Every vertex
/// starts with 2 pebbles; an edge is accepted once 4 pebbles sit on its
/// endpoints. Accepted edges form a maximum (2,3)-sparse subset of the
/// edges inserted so far.
#[derive(Clone, Debug)]
pub struct PebbleState {
    n: usize,
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
    accepted: Vec<(usize, usize)>,
}

impl PebbleState {
    pub fn new(n: usize) -> Self {
        PebbleState {
            n,
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
            accepted: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.accepted.len()
    }

    pub fn accepted(&self) -> &[(usize, usize)] {
        &self.accepted
    }

    pub fn pebbles(&self) -> &[u8] {
        &self.pebbles
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// Tries to accept edge (u, v); returns whether it was independent of
    /// the accepted set.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        while self.pebbles[u] + self.pebbles[v] < 4 {
            let moved = if self.pebbles[u] < 2 && self.pull_pebble(u, v) {
                true
            } else {
                self.pebbles[v] < 2 && self.pull_pebble(v, u)
            };
            if !moved {
                return false;
            }
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted.push((u, v));
        true
    }

    // DFS from `start` along the orientation for a free pebble, keeping
    // pebbles on `start` and `pinned` untouched. On success the path is
    // reversed and the pebble moved to `start`.
    fn pull_pebble(&mut self, start: usize, pinned: usize) -> bool {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.n]; // (pred, index in out[pred])
        let mut visited = vec![false; self.n];
        visited[start] = true;
        visited[pinned] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            // lowest-index neighbor first for deterministic witnesses
            let mut next: Vec<(usize, usize)> = self.out[x]
                .iter()
                .copied()
                .enumerate()
                .map(|(i, y)| (y, i))
                .collect();
            next.sort_unstable();
            for (y, i) in next.into_iter().rev() {
                if visited[y] {
                    continue;
                }
                visited[y] = true;
                parent[y] = Some((x, i));
                if self.pebbles[y] > 0 {
                    self.reverse_path(start, y, &parent);
                    self.pebbles[y] -= 1;
                    self.pebbles[start] += 1;
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    fn reverse_path(&mut self, start: usize, end: usize, parent: &[Option<(usize, usize)>]) {
        let mut y = end;
        while y != start {
            let (x, i) = parent[y].expect("path back to start");
            let target = self.out[x].swap_remove(i);
            debug_assert_eq!(target, y);
            self.out[y].push(x);
            y = x;
        }
    }
}

/// Rank of an explicit edge list in the 2D rigidity matroid, with one
/// maximum independent subset as witness. Edges are examined in input order.
pub fn rank_of_edges(n: usize, edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut st = PebbleState::new(n);
    for &(u, v) in edges {
        st.insert(u, v);
    }
    let acc = st.accepted().to_vec();
    (acc.len(), acc)
}

/// Rank of E(G) in the 2D rigidity matroid.
pub fn rigidity_rank(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    rank_of_edges(g.n(), &g.edges())
}

pub fn is_rigid(g: &Graph) -> bool {
    match g.n() {
        1 => true,
        2 => g.m() == 1,
        n => rigidity_rank(g).0 == 2 * n - 3,
    }
}

/// A spanning (2,3)-tight edge set (Laman subgraph) when G is rigid.
pub fn extract_spanning_tight(g: &Graph) -> Option<Vec<(usize, usize)>> {
    if !is_rigid(g) {
        return None;
    }
    if g.n() == 1 {
        return Some(Vec::new());
    }
    let (_, mut witness) = rigidity_rank(g);
    for e in &mut witness {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    witness.sort_unstable();
    Some(witness)
}

/// Rigid, and still rigid after deletion of any single edge. With the
/// small-order rigidity conventions this makes K1 the only redundantly
/// rigid graph on n <= 3 (K2 and K3 lose rigidity with any edge).
pub fn is_redundantly_rigid(g: &Graph) -> bool {
    if !is_rigid(g) {
        return false;
    }
    g.edges()
        .into_iter()
        .all(|(u, v)| is_rigid(&g.delete_edge(u, v)))
}

/// 3-connected and redundantly rigid, or a complete graph on at most
/// three vertices.
pub fn is_globally_rigid(g: &Graph) -> bool {
    if g.n() <= 3 {
        return g.is_complete();
    }
    g.vertex_connectivity().expect("n >= 4") >= 3 && is_redundantly_rigid(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    /// Brute-force (2,3)-sparsity check, independent of the pebble game.
    pub fn is_sparse_exhaustive(n: usize, edges: &[(usize, usize)]) -> bool {
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size < 2 {
                continue;
            }
            let induced = edges
                .iter()
                .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
                .count();
            if induced > 2 * size - 3 {
                return false;
            }
        }
        true
    }

    /// Maximum sparse subset size by exhaustive search (test oracle).
    fn rank_exhaustive(n: usize, edges: &[(usize, usize)]) -> usize {
        let m = edges.len();
        let mut best = 0;
        for pick in 0u32..(1 << m) {
            let subset: Vec<(usize, usize)> = (0..m)
                .filter(|&i| pick & (1 << i) != 0)
                .map(|i| edges[i])
                .collect();
            if subset.len() > best && is_sparse_exhaustive(n, &subset) {
                best = subset.len();
            }
        }
        best
    }

    #[test]
    fn rank_examples() {
        let k2 = families::gen_complete(2).unwrap();
        assert_eq!(rigidity_rank(&k2).0, 1);
        let c4 = families::gen_cycle(4).unwrap();
        assert_eq!(rigidity_rank(&c4).0, 4);
        let k4 = families::gen_complete(4).unwrap();
        assert_eq!(rigidity_rank(&k4).0, 5);
        assert_eq!(rank_exhaustive(4, &k4.edges()), 5);
    }

    #[test]
    fn rank_matches_exhaustive_oracle_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(2..=6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            assert_eq!(rigidity_rank(&g).0, rank_exhaustive(n, &g.edges()));
        }
    }

    #[test]
    fn pebble_invariants() {
        let g = families::gen_hd(6).unwrap();
        let mut st = PebbleState::new(g.n());
        for (u, v) in g.edges() {
            st.insert(u, v);
        }
        let total: usize = st.pebbles().iter().map(|&p| p as usize).sum();
        assert_eq!(total + st.rank(), 2 * g.n());
        for v in 0..g.n() {
            assert_eq!(st.out_degree(v) + st.pebbles()[v] as usize, 2);
        }
    }

    #[test]
    fn accepted_set_is_sparse() {
        let k6 = families::gen_complete(6).unwrap();
        let (_, acc) = rigidity_rank(&k6);
        assert!(is_sparse_exhaustive(6, &acc));
    }

    #[test]
    fn rigidity_examples() {
        assert!(is_rigid(&families::gen_complete(4).unwrap()));
        assert!(!is_rigid(&families::gen_cycle(4).unwrap()));
        for d in [6, 8] {
            assert!(!is_rigid(&families::gen_hd(d).unwrap()));
        }
        assert!(is_rigid(&families::gen_complete(1).unwrap()));
        assert!(is_rigid(&families::gen_complete(2).unwrap()));
        assert!(!is_rigid(&Graph::parse("2 0").unwrap()));
    }

    #[test]
    fn extract_tight_examples() {
        let k4 = families::gen_complete(4).unwrap();
        let t = extract_spanning_tight(&k4).unwrap();
        assert_eq!(t.len(), 5);
        assert!(is_sparse_exhaustive(4, &t));

        let laman = families::gen_henneberg_laman(8, 3).unwrap();
        let mut own = laman.edges();
        own.sort_unstable();
        assert_eq!(extract_spanning_tight(&laman).unwrap(), own);

        assert!(extract_spanning_tight(&families::gen_cycle(4).unwrap()).is_none());
    }

    #[test]
    fn redundant_rigidity_examples() {
        assert!(is_redundantly_rigid(&families::gen_complete(4).unwrap()));
        // K_{3,3} is minimally rigid: removing any edge drops the rank
        let k33 = families::gen_complete_bipartite(3, 3).unwrap();
        assert!(is_rigid(&k33));
        assert!(!is_redundantly_rigid(&k33));
        assert!(!is_redundantly_rigid(&families::gen_cycle(4).unwrap()));
    }

    #[test]
    fn global_rigidity_examples() {
        assert!(is_globally_rigid(&families::gen_complete(3).unwrap()));
        assert!(is_globally_rigid(&families::gen_complete(4).unwrap()));
        assert!(!is_globally_rigid(
            &families::gen_complete_bipartite(3, 3).unwrap()
        ));
        assert!(!is_globally_rigid(&families::gen_cycle(5).unwrap()));
    }

    #[test]
    fn small_conventions() {
        let k1 = families::gen_complete(1).unwrap();
        let k2 = families::gen_complete(2).unwrap();
        let k3 = families::gen_complete(3).unwrap();
        assert!(is_redundantly_rigid(&k1));
        assert!(!is_redundantly_rigid(&k2));
        // K3 loses rigidity with any edge, so it is not redundantly rigid,
        // yet it is globally rigid via the small-complete-graph clause.
        assert!(!is_redundantly_rigid(&k3));
        assert!(is_globally_rigid(&k1));
        assert!(is_globally_rigid(&k2));
        let p3 = Graph::parse("3 2\n0 1\n1 2").unwrap();
        assert!(!is_globally_rigid(&p3));
    }

    #[test]
    fn rank_monotone_and_submodular() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(3..=8);
            let mut all = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.6) {
                        all.push((u, v));
                    }
                }
            }
            all.shuffle(&mut rng);
            let cut_a = rng.gen_range(0..=all.len());
            let cut_b = rng.gen_range(cut_a..=all.len());
            let a = &all[..cut_a];
            let b = &all[..cut_b];
            let ra = rank_of_edges(n, a).0;
            let rb = rank_of_edges(n, b).0;
            assert!(ra <= rb, "monotonicity");
            // submodularity on a random pair of subsets
            let s1: Vec<_> = all
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let s2: Vec<_> = all
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let union: Vec<_> = {
                let mut u = s1.clone();
                for e in &s2 {
                    if !u.contains(e) {
                        u.push(*e);
                    }
                }
                u
            };
            let inter: Vec<_> = s1.iter().copied().filter(|e| s2.contains(e)).collect();
            let r1 = rank_of_edges(n, &s1).0;
            let r2 = rank_of_edges(n, &s2).0;
            let ru = rank_of_edges(n, &union).0;
            let ri = rank_of_edges(n, &inter).0;
            assert!(ru + ri <= r1 + r2, "submodularity");
        }
    }
}
