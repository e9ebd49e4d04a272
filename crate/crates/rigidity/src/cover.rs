//! Lovász–Yemini cover certificates. A cover is a collection of induced
//! subgraphs whose edge sets partition E(G); a cover with value
//! Σ(2|X| - 3) below 2n - 3 certifies non-rigidity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{self, FamilyError};
use crate::graph::Graph;
use crate::limits::SizeLimitError;

pub const SEARCH_MAX_N: usize = 10;

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("block {0} has fewer than 2 vertices")]
    BlockTooSmall(usize),
    #[error("block {0} contains vertex {1} out of range")]
    VertexOutOfRange(usize, usize),
    #[error("edge {0} {1} lies in the induced edge set of two blocks")]
    EdgeCoveredTwice(usize, usize),
    #[error("edge {0} {1} is not covered by any block")]
    EdgeUncovered(usize, usize),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cover {
    pub blocks: Vec<Vec<usize>>,
}

/// Outcome of checking a cover against the rigidity threshold 2n - 3.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverCheck {
    pub value: i64,
    pub threshold: i64,
    pub is_nonrigidity_witness: bool,
}

/// Validates the cover (blocks >= 2 vertices, induced edge sets partition
/// E(G) exactly) and evaluates Σ(2|X| - 3) against 2n - 3.
pub fn verify_cover(g: &Graph, cover: &Cover) -> Result<CoverCheck, CoverError> {
    let mut covered = vec![false; g.m()];
    let edges = g.edges();
    let edge_index = |u: usize, v: usize| -> usize {
        let key = (u.min(v), u.max(v));
        edges.binary_search(&key).expect("edge of G")
    };
    let mut value: i64 = 0;
    for (bi, block) in cover.blocks.iter().enumerate() {
        let mut verts = block.clone();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() < 2 {
            return Err(CoverError::BlockTooSmall(bi));
        }
        for &v in &verts {
            if v >= g.n() {
                return Err(CoverError::VertexOutOfRange(bi, v));
            }
        }
        value += 2 * verts.len() as i64 - 3;
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                let (u, v) = (verts[i], verts[j]);
                if g.has_edge(u, v) {
                    let idx = edge_index(u, v);
                    if covered[idx] {
                        return Err(CoverError::EdgeCoveredTwice(u, v));
                    }
                    covered[idx] = true;
                }
            }
        }
    }
    if let Some(idx) = covered.iter().position(|&c| !c) {
        let (u, v) = edges[idx];
        return Err(CoverError::EdgeUncovered(u, v));
    }
    let threshold = 2 * g.n() as i64 - 3;
    Ok(CoverCheck {
        value,
        threshold,
        is_nonrigidity_witness: value < threshold,
    })
}

/// Exhaustive search for a witness cover (value < 2n - 3). Branches on the
/// lowest-indexed uncovered edge over all blocks containing it whose induced
/// edges are still free, pruning once the partial value reaches the
/// threshold; the value is monotone in the blocks, so the first completed
/// cover is a witness. Returns None only after exhausting the space, which
/// by the Lovász–Yemini characterization happens exactly for rigid graphs.
pub fn search_witness_cover(g: &Graph) -> Result<Option<Cover>, SizeLimitError> {
    let n = g.n();
    if n > SEARCH_MAX_N {
        return Err(SizeLimitError {
            what: "witness cover search",
            limit: SEARCH_MAX_N,
            actual: n,
        });
    }
    let edges = g.edges();
    if edges.is_empty() {
        // no blocks needed; the empty cover has value 0 < 2n - 3 unless n = 1
        return Ok(if n > 1 {
            Some(Cover { blocks: vec![] })
        } else {
            None
        });
    }
    // induced edge mask for every vertex subset is derived on the fly;
    // precompute per-edge bit and adjacency masks
    let threshold = (2 * n - 3) as i64;
    let mut adj_mask = vec![0u16; n];
    for &(u, v) in &edges {
        adj_mask[u] |= 1 << v;
        adj_mask[v] |= 1 << u;
    }
    let induced_mask = |verts: u16| -> u64 {
        let mut mask = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if verts & (1 << u) != 0 && verts & (1 << v) != 0 {
                mask |= 1 << i;
            }
        }
        mask
    };
    let full: u64 = if edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << edges.len()) - 1
    };

    fn rec(
        edges: &[(usize, usize)],
        n: usize,
        threshold: i64,
        full: u64,
        induced_mask: &dyn Fn(u16) -> u64,
        covered: u64,
        value: i64,
        blocks: &mut Vec<Vec<usize>>,
    ) -> bool {
        if covered == full {
            return true;
        }
        let next = covered.trailing_ones() as usize;
        let (u, v) = edges[next];
        let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
        // every subset of the remaining vertices extends {u, v} to a block
        for sub in 0u32..(1 << others.len()) {
            let mut verts: u16 = (1 << u) | (1 << v);
            for (i, &w) in others.iter().enumerate() {
                if sub & (1 << i) != 0 {
                    verts |= 1 << w;
                }
            }
            let size = verts.count_ones() as i64;
            let new_value = value + (2 * size - 3);
            if new_value >= threshold {
                continue;
            }
            let mask = induced_mask(verts);
            if mask & covered != 0 {
                continue;
            }
            let block: Vec<usize> = (0..n).filter(|&w| verts & (1 << w) != 0).collect();
            blocks.push(block);
            if rec(
                edges,
                n,
                threshold,
                full,
                induced_mask,
                covered | mask,
                new_value,
                blocks,
            ) {
                return true;
            }
            blocks.pop();
        }
        false
    }

    let mut blocks = Vec::new();
    let found = rec(
        &edges,
        n,
        threshold,
        full,
        &induced_mask,
        0,
        0,
        &mut blocks,
    );
    Ok(found.then_some(Cover { blocks }))
}

/// The 15-block cover of H_d: the five copy vertex sets plus the ten
/// connector edges, with the labeling used by `families::gen_hd`. Its
/// value is 10d + 5 against the threshold 10d + 7.
pub fn hd_canonical_cover(d: usize) -> Result<Cover, FamilyError> {
    // surface the same parameter error as the generator
    families::gen_hd(d)?;
    let s = d + 1;
    let mut blocks: Vec<Vec<usize>> = (0..5).map(|i| (i * s..(i + 1) * s).collect()).collect();
    let a = |i: usize| (i - 1) * s;
    let b = |i: usize| (i - 1) * s + 1;
    let u = |i: usize| (i - 1) * s + 2;
    let v = |i: usize| (i - 1) * s + 3;
    let connectors = [
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
    ];
    blocks.extend(connectors.iter().map(|&(x, y)| vec![x, y]));
    Ok(Cover { blocks })
}
