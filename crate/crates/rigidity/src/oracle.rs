//! Randomized rigidity check independent of the pebble game: exact rank of
//! the rigidity matrix at random coordinates over a large prime field. A
//! full-rank observation proves generic rigidity; false negatives occur with
//! probability O(poly(n)/p) per trial.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Field modulus: 2^62 - 57, prime.
pub const PRIME: u64 = 4_611_686_018_427_387_847;

/// Base seed from which `is_rigid_numeric` derives its per-trial seeds.
pub const DEFAULT_SEED: u64 = 0x5249_4749;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, PRIME - 2)
}

/// Random coordinates for the vertices over GF(p), resampled until no
/// adjacent pair coincides.
#[derive(Clone, Debug)]
pub struct Placement {
    pub coords: Vec<(u64, u64)>,
    pub seed: u64,
}

impl Placement {
    pub fn sample(g: &Graph, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let coords: Vec<(u64, u64)> = (0..g.n())
                .map(|_| (rng.gen_range(0..PRIME), rng.gen_range(0..PRIME)))
                .collect();
            let coincident = g
                .edges()
                .into_iter()
                .any(|(u, v)| coords[u] == coords[v]);
            if !coincident {
                return Placement { coords, seed };
            }
        }
    }
}

/// m x 2n rigidity matrix over GF(p): the row for edge uv carries
/// p(u) - p(v) in u's column pair and the negation in v's.
pub fn rigidity_matrix(g: &Graph, placement: &Placement) -> Vec<Vec<u64>> {
    let n = g.n();
    g.edges()
        .into_iter()
        .map(|(u, v)| {
            let mut row = vec![0u64; 2 * n];
            let (xu, yu) = placement.coords[u];
            let (xv, yv) = placement.coords[v];
            row[2 * u] = sub(xu, xv);
            row[2 * u + 1] = sub(yu, yv);
            row[2 * v] = sub(xv, xu);
            row[2 * v + 1] = sub(yv, yu);
            row
        })
        .collect()
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let pivot = (rank..rows.len()).find(|&r| rows[r][col] != 0);
        let Some(pivot) = pivot else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let pinv = inv(rows[rank][col]);
        for c in col..cols {
            rows[rank][c] = mul(rows[rank][c], pinv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in col..cols {
                    let s = mul(f, rows[rank][c]);
                    rows[r][c] = sub(rows[r][c], s);
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Rank of the rigidity matrix at a seeded random placement.
pub fn numeric_rank(g: &Graph, seed: u64) -> usize {
    let placement = Placement::sample(g, seed);
    rank_mod_p(rigidity_matrix(g, &placement))
}

fn target_rank(g: &Graph) -> usize {
    match g.n() {
        1 => 0,
        2 => 1,
        n => 2 * n - 3,
    }
}

/// True iff some trial attains the full generic rank. One-sided: a true
/// answer is a proof of rigidity, a false answer is probabilistic.
pub fn is_rigid_numeric(g: &Graph, trials: usize) -> bool {
    if g.n() == 1 {
        return true;
    }
    if g.n() == 2 {
        return g.m() == 1;
    }
    let target = target_rank(g);
    (0..trials).any(|t| numeric_rank(g, DEFAULT_SEED.wrapping_add(t as u64)) == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rank_examples() {
        let k2 = families::gen_complete(2).unwrap();
        assert_eq!(numeric_rank(&k2, 1), 1);
        let c4 = families::gen_cycle(4).unwrap();
        assert_eq!(numeric_rank(&c4, 1), 4);
        let k4 = families::gen_complete(4).unwrap();
        assert_eq!(numeric_rank(&k4, 1), 5);
    }

    #[test]
    fn rigidity_examples() {
        assert!(is_rigid_numeric(&families::gen_complete(4).unwrap(), 3));
        assert!(!is_rigid_numeric(&families::gen_cycle(4).unwrap(), 3));
        let h10 = families::gen_hd(10).unwrap();
        assert!(!is_rigid_numeric(&h10, 3));
    }

    #[test]
    fn rank_never_exceeds_generic_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(2..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = families::gen_gnp(n, p, rng.gen()).unwrap();
            let r = numeric_rank(&g, rng.gen());
            assert!(r <= g.m().min(2 * n - 3));
        }
    }

    #[test]
    fn field_arithmetic() {
        assert_eq!(mul(PRIME - 1, PRIME - 1), 1);
        let a = 123_456_789_u64;
        assert_eq!(mul(a, inv(a)), 1);
    }
}
