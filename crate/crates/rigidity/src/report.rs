//! Full-graph analysis report: stats, spectral values, combinatorial
//! rigidity verdicts, spectral certificates, and witnesses, in one
//! JSON-serializable bundle.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::certify::{self, Certificate, VariantReport};
use crate::cover::{self, Cover, CoverCheck};
use crate::graph::Graph;
use crate::oracle;
use crate::sparsity;
use crate::spectral;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub kappa: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralValues {
    pub mu2: Option<f64>,
    pub lambda2: Option<f64>,
    pub lambda_abs: Option<f64>,
    pub q2: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RigidityVerdicts {
    pub rigid: bool,
    pub rigid_numeric: bool,
    pub redundantly_rigid: bool,
    pub globally_rigid: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witnesses {
    /// Spanning (2,3)-tight edge set when the graph is rigid.
    pub laman_subgraph: Option<Vec<(usize, usize)>>,
    /// Non-rigidity cover witness (searched only at small order).
    pub cover: Option<Cover>,
    pub cover_check: Option<CoverCheck>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub stats: GraphStats,
    pub spectral: SpectralValues,
    pub verdicts: RigidityVerdicts,
    pub certificates: Vec<Certificate>,
    pub variant_report: Option<VariantReport>,
    pub witnesses: Witnesses,
    pub elapsed_seconds: f64,
}

pub struct AnalyzeOptions {
    /// Run the O(n^2)-eigensolve theorem-level checks past the size guard.
    pub force: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { force: false }
    }
}

pub fn analyze(g: &Graph, input: &str, opts: &AnalyzeOptions) -> Report {
    let started = Instant::now();
    let stats = GraphStats {
        n: g.n(),
        m: g.m(),
        min_degree: g.min_degree(),
        kappa: g.vertex_connectivity().ok(),
    };
    let spectral = SpectralValues {
        mu2: spectral::mu2(g).ok(),
        lambda2: spectral::lambda2(g).ok(),
        lambda_abs: spectral::lambda_abs(g).ok(),
        q2: spectral::q2(g).ok(),
    };
    let rigid = sparsity::is_rigid(g);
    let verdicts = RigidityVerdicts {
        rigid,
        rigid_numeric: oracle::is_rigid_numeric(g, 3),
        redundantly_rigid: sparsity::is_redundantly_rigid(g),
        globally_rigid: sparsity::is_globally_rigid(g),
    };

    let mut certificates = Vec::new();
    for which in [certify::CorollaryId::Maincor, certify::CorollaryId::Glob] {
        if let Ok(c) = certify::certify_corollary(g, 1, which) {
            certificates.push(c);
        }
    }
    if let Ok(c) = certify::certify_corollary(g, 1, certify::CorollaryId::Kdisrig) {
        certificates.push(c);
    }
    // theorem-level checks run when within the size guard (or forced)
    if let Ok(c) = certify::certify_eigkrig(g, 1, opts.force) {
        certificates.push(c);
    }
    if let Ok(c) = certify::certify_redund(g, opts.force) {
        certificates.push(c);
    }
    if let Ok(c) = certify::certify_ramanujan_glob(g) {
        certificates.push(c);
    }
    let variant_report = certify::eigenvalue_variant_report(g).ok();

    let laman_subgraph = if rigid {
        sparsity::extract_spanning_tight(g)
    } else {
        None
    };
    let (cover, cover_check) = if !rigid && g.n() <= cover::SEARCH_MAX_N {
        match cover::search_witness_cover(g) {
            Ok(Some(w)) => {
                let check = cover::verify_cover(g, &w).ok();
                (Some(w), check)
            }
            _ => (None, None),
        }
    } else {
        (None, None)
    };

    Report {
        input: input.to_string(),
        stats,
        spectral,
        verdicts,
        certificates,
        variant_report,
        witnesses: Witnesses {
            laman_subgraph,
            cover,
            cover_check,
        },
        elapsed_seconds: started.elapsed().as_secs_f64(),
    }
}
