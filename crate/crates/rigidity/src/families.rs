//! Deterministic and seeded graph generators used for experiments and the
//! test corpus. All randomness flows from an explicit 64-bit seed through
//! ChaCha8, so corpora are bit-reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("parameter {name} = {value} infeasible: {why}")]
    BadParameter {
        name: &'static str,
        value: String,
        why: &'static str,
    },
    #[error("pairing model failed to produce a simple graph")]
    PairingFailed,
}

fn bad(name: &'static str, value: impl ToString, why: &'static str) -> FamilyError {
    FamilyError::BadParameter {
        name,
        value: value.to_string(),
        why,
    }
}

/// One generator invocation, serializable for corpus manifests.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Hd { d: usize },
    Complete { n: usize },
    CompleteMinus2Matching { d: usize },
    Cycle { n: usize },
    CompleteBipartite { a: usize, b: usize },
    HennebergLaman { n: usize, seed: u64 },
    RandomRegular { n: usize, d: usize, seed: u64 },
    Paley { q: usize },
    Gnp { n: usize, p: f64, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Hd { d } => gen_hd(d),
            FamilySpec::Complete { n } => gen_complete(n),
            FamilySpec::CompleteMinus2Matching { d } => gen_complete_minus_2matching(d),
            FamilySpec::Cycle { n } => gen_cycle(n),
            FamilySpec::CompleteBipartite { a, b } => gen_complete_bipartite(a, b),
            FamilySpec::HennebergLaman { n, seed } => gen_henneberg_laman(n, seed),
            FamilySpec::RandomRegular { n, d, seed } => gen_random_regular(n, d, seed),
            FamilySpec::Paley { q } => gen_paley(q),
            FamilySpec::Gnp { n, p, seed } => gen_gnp(n, p, seed),
        }
    }
}

/// Number of vertices in each copy block of H_d.
pub fn hd_copy_size(d: usize) -> usize {
    d + 1
}

/// The d-regular graph H_d on 5(d+1) vertices: five copies of K_{d+1}
/// minus two disjoint edges, joined by a fixed set of ten connector edges.
/// Copy i (0-based) occupies labels [i(d+1), (i+1)(d+1)); offsets 0..3 of
/// each copy are a_i, b_i, u_i, v_i, the endpoints of the deleted edges
/// a_i b_i and u_i v_i.
pub fn gen_hd(d: usize) -> Result<Graph, FamilyError> {
    if d < 6 {
        return Err(bad("d", d, "H_d requires d >= 6"));
    }
    let s = d + 1;
    let mut edges = Vec::new();
    for i in 0..5 {
        let base = i * s;
        for u in 0..s {
            for v in (u + 1)..s {
                if (u, v) == (0, 1) || (u, v) == (2, 3) {
                    continue;
                }
                edges.push((base + u, base + v));
            }
        }
    }
    // 1-based copy indices as in the connector list:
    // F = {b1a2, b2a3, b3a4, b4a5, b5a1, u1v3, u3v5, u5v2, u2v4, u4v1}
    let a = |i: usize| (i - 1) * s;
    let b = |i: usize| (i - 1) * s + 1;
    let u = |i: usize| (i - 1) * s + 2;
    let v = |i: usize| (i - 1) * s + 3;
    edges.extend([
        (b(1), a(2)),
        (b(2), a(3)),
        (b(3), a(4)),
        (b(4), a(5)),
        (b(5), a(1)),
        (u(1), v(3)),
        (u(3), v(5)),
        (u(5), v(2)),
        (u(2), v(4)),
        (u(4), v(1)),
    ]);
    Ok(Graph::new(5 * s, &edges).expect("valid by construction"))
}

pub fn gen_complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("n", n, "need n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// K_{d+1} minus the two disjoint edges {0,1} and {2,3}.
pub fn gen_complete_minus_2matching(d: usize) -> Result<Graph, FamilyError> {
    if d < 4 {
        return Err(bad("d", d, "two disjoint edges need d >= 4"));
    }
    let n = d + 1;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if (u, v) == (0, 1) || (u, v) == (2, 3) {
                continue;
            }
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

pub fn gen_cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("n", n, "cycle needs n >= 3"));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(bad("a,b", format!("{a},{b}"), "both sides must be nonempty"));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Ok(Graph::new(a + b, &edges).expect("valid by construction"))
}

/// Random Laman graph on n vertices by Henneberg moves from K2: type I adds
/// a degree-2 vertex, type II splits an existing edge onto a new vertex.
/// Steps pick type I or II with equal probability once type II is legal.
pub fn gen_henneberg_laman(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("n", n, "need n >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut nv = 2usize;
    while nv < n {
        let type_two = nv >= 3 && rng.gen_bool(0.5);
        let z = nv;
        if type_two {
            let ei = rng.gen_range(0..edges.len());
            let (u, v) = edges.swap_remove(ei);
            let w = loop {
                let w = rng.gen_range(0..nv);
                if w != u && w != v {
                    break w;
                }
            };
            edges.push((u, z));
            edges.push((v, z));
            edges.push((w, z));
        } else {
            let u = rng.gen_range(0..nv);
            let v = loop {
                let v = rng.gen_range(0..nv);
                if v != u {
                    break v;
                }
            };
            edges.push((u, z));
            edges.push((v, z));
        }
        nv += 1;
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// Simple d-regular graph via the pairing model with rejection.
pub fn gen_random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, FamilyError> {
    if d >= n {
        return Err(bad("d", d, "need d < n"));
    }
    if (n * d) % 2 != 0 {
        return Err(bad("n*d", n * d, "n*d must be even"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Start from a circulant d-regular graph, then randomize with
    // double-edge switches (uv, xy -> ux, vy when both are new edges).
    let mut seen = std::collections::HashSet::new();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * d / 2);
    let add = |seen: &mut std::collections::HashSet<(usize, usize)>,
                   edges: &mut Vec<(usize, usize)>,
                   u: usize,
                   v: usize| {
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        }
    };
    for v in 0..n {
        for off in 1..=(d / 2) {
            add(&mut seen, &mut edges, v, (v + off) % n);
        }
    }
    if d % 2 == 1 {
        // d odd forces n even; add the diameter perfect matching.
        for v in 0..n / 2 {
            add(&mut seen, &mut edges, v, v + n / 2);
        }
    }
    if edges.len() != n * d / 2 {
        return Err(FamilyError::PairingFailed);
    }
    let switches = 20 * edges.len();
    let mut done = 0;
    for _ in 0..200 * edges.len() {
        if done >= switches {
            break;
        }
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        if i == j {
            continue;
        }
        let (mut u, mut v) = edges[i];
        let (x, y) = edges[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut u, &mut v);
        }
        // propose uv, xy -> ux, vy
        if u == x || u == y || v == x || v == y {
            continue;
        }
        let e1 = (u.min(x), u.max(x));
        let e2 = (v.min(y), v.max(y));
        if seen.contains(&e1) || seen.contains(&e2) {
            continue;
        }
        seen.remove(&(u.min(v), u.max(v)));
        seen.remove(&(x.min(y), x.max(y)));
        seen.insert(e1);
        seen.insert(e2);
        edges[i] = (u, x);
        edges[j] = (v, y);
        done += 1;
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= q {
        if q % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Paley graph on q vertices (q prime, q ≡ 1 mod 4): u ~ v iff u - v is a
/// nonzero quadratic residue mod q.
pub fn gen_paley(q: usize) -> Result<Graph, FamilyError> {
    if !is_prime(q) {
        return Err(bad("q", q, "must be prime"));
    }
    if q % 4 != 1 {
        return Err(bad("q", q, "must be 1 mod 4"));
    }
    let mut residues = vec![false; q];
    for x in 1..q {
        residues[(x * x) % q] = true;
    }
    let mut edges = Vec::new();
    for u in 0..q {
        for v in (u + 1)..q {
            if residues[(v - u) % q] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(q, &edges).expect("valid by construction"))
}

/// Erdős–Rényi G(n, p).
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("n", n, "need n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(bad("p", p, "need 0 <= p <= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}
