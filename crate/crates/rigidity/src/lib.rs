//! Two-dimensional combinatorial rigidity toolkit.
//!
//! Cross-validating certificates for generic rigidity of graphs in the
//! plane: the (2,3) pebble game (exact combinatorics), Laplacian
//! eigenvalue conditions (spectral sufficiency), and randomized exact
//! rank of the rigidity matrix over a large prime field (numeric
//! oracle).  Additional machinery covers edge-disjoint spanning rigid
//! subgraph packings, Lovász–Yemini non-rigidity cover witnesses, and
//! structured graph families.

pub mod certify;
pub mod cover;
pub mod families;
pub mod graph;
pub mod limits;
pub mod oracle;
pub mod packing;
pub mod report;
pub mod sparsity;
pub mod spectral;
