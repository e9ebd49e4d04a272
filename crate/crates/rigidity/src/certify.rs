//! Executable decision procedures for the spectral sufficient conditions:
//! each check emits a Certificate carrying per-condition margins, so a
//! verdict can be audited and cross-checked against the combinatorial
//! routines.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::limits::SizeLimitError;
use crate::spectral::{self, SpectralError, RESIDUAL_BOUND};

/// Strict inequalities are granted only with margin above this.
pub const EPSILON: f64 = 1e-9;
/// Margins this close to zero are reported as boundary, not decided.
pub const BOUNDARY_BAND: f64 = 1e-7;
/// Theorem-level certification needs C(n,2) eigensolves; refuse above this
/// order unless forced.
pub const THEOREM_LEVEL_MAX_N: usize = 300;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    SizeLimit(#[from] SizeLimitError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    NotApplicable,
    ConditionFailed,
    Boundary,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Condition {
    pub description: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

impl Condition {
    fn new(description: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Condition {
            description: description.into(),
            lhs,
            rhs,
            margin: lhs - rhs,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem_id: String,
    pub k: Option<usize>,
    pub verdict: Verdict,
    pub conditions: Vec<Condition>,
    pub implied_property: String,
}

fn classify(margin: f64) -> Verdict {
    if margin.abs() <= BOUNDARY_BAND {
        Verdict::Boundary
    } else if margin > EPSILON {
        Verdict::Certified
    } else {
        Verdict::ConditionFailed
    }
}

fn not_applicable(
    theorem_id: &str,
    k: Option<usize>,
    implied: &str,
    why: Condition,
) -> Certificate {
    Certificate {
        theorem_id: theorem_id.to_string(),
        k,
        verdict: Verdict::NotApplicable,
        conditions: vec![why],
        implied_property: implied.to_string(),
    }
}

/// Worst margin of mu2(G - Z) > numerator / (delta(G - Z) + 1) over a set
/// of deletions, evaluated in parallel.
fn worst_deleted_condition(
    g: &Graph,
    deletions: &[Vec<usize>],
    numerator: f64,
    label: &str,
) -> Result<Condition, SpectralError> {
    let results: Vec<Result<Condition, SpectralError>> = deletions
        .par_iter()
        .map(|z| {
            let (h, _) = g.delete_vertices(z).expect("proper subset");
            let mu = spectral::mu2(&h)?;
            let rhs = numerator / (h.min_degree() as f64 + 1.0);
            let what: Vec<String> = z.iter().map(|v| v.to_string()).collect();
            Ok(Condition::new(
                format!("{label} at {{{}}}: mu2(G-Z) > {numerator}/(delta(G-Z)+1)", what.join(",")),
                mu,
                rhs,
            ))
        })
        .collect();
    let mut worst: Option<Condition> = None;
    for r in results {
        let c = r?;
        if worst.as_ref().map_or(true, |w| c.margin < w.margin) {
            worst = Some(c);
        }
    }
    Ok(worst.expect("nonempty deletion set"))
}

/// Three-level eigenvalue check with numerators (a0, a1, a2) on G, all G-u,
/// and all G-v-w; shared by the k-fold packing theorem and the redundant
/// rigidity theorem.
fn three_level_check(
    g: &Graph,
    theorem_id: &str,
    k: Option<usize>,
    degree_floor: usize,
    numerators: (f64, f64, f64),
    implied: &str,
    force: bool,
) -> Result<Certificate, CertifyError> {
    let delta = g.min_degree();
    if delta < degree_floor {
        return Ok(not_applicable(
            theorem_id,
            k,
            implied,
            Condition::new(
                format!("precondition: delta(G) >= {degree_floor}"),
                delta as f64,
                degree_floor as f64,
            ),
        ));
    }
    let n = g.n();
    if n > THEOREM_LEVEL_MAX_N && !force {
        return Err(SizeLimitError {
            what: "theorem-level certification (use force to override)",
            limit: THEOREM_LEVEL_MAX_N,
            actual: n,
        }
        .into());
    }

    let mut conditions = Vec::new();
    let mu = spectral::mu2(g)?;
    let c1 = Condition::new(
        format!("condition (1): mu2(G) > {}/(delta(G)+1)", numerators.0),
        mu,
        numerators.0 / (delta as f64 + 1.0),
    );
    let v1 = classify(c1.margin);
    conditions.push(c1);
    if v1 != Verdict::Certified {
        return Ok(Certificate {
            theorem_id: theorem_id.to_string(),
            k,
            verdict: v1,
            conditions,
            implied_property: implied.to_string(),
        });
    }

    let singles: Vec<Vec<usize>> = (0..n).map(|u| vec![u]).collect();
    let c2 = worst_deleted_condition(g, &singles, numerators.1, "condition (2)")?;
    let v2 = classify(c2.margin);
    conditions.push(c2);
    if v2 != Verdict::Certified {
        return Ok(Certificate {
            theorem_id: theorem_id.to_string(),
            k,
            verdict: v2,
            conditions,
            implied_property: implied.to_string(),
        });
    }

    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 0..n {
        for w in (v + 1)..n {
            pairs.push(vec![v, w]);
        }
    }
    let c3 = worst_deleted_condition(g, &pairs, numerators.2, "condition (3)")?;
    let v3 = classify(c3.margin);
    conditions.push(c3);
    Ok(Certificate {
        theorem_id: theorem_id.to_string(),
        k,
        verdict: v3,
        conditions,
        implied_property: implied.to_string(),
    })
}

/// Theorem-level check for k edge-disjoint spanning rigid subgraphs:
/// delta >= 6k, and mu2 of G, every G-u, every G-v-w clears
/// (6k-1)/(delta+1), (4k-1)/(delta+1), (2k-1)/(delta+1) respectively
/// (deltas taken in the deleted graphs).
pub fn certify_eigkrig(g: &Graph, k: usize, force: bool) -> Result<Certificate, CertifyError> {
    assert!(k >= 1);
    let kf = k as f64;
    three_level_check(
        g,
        "eigkrig",
        Some(k),
        6 * k,
        (6.0 * kf - 1.0, 4.0 * kf - 1.0, 2.0 * kf - 1.0),
        &format!("contains {k} edge-disjoint spanning rigid subgraphs"),
        force,
    )
}

/// Three-level check with numerators 6, 4, 2 granting redundant rigidity.
pub fn certify_redund(g: &Graph, force: bool) -> Result<Certificate, CertifyError> {
    three_level_check(
        g,
        "redund",
        None,
        6,
        (6.0, 4.0, 2.0),
        "redundantly rigid",
        force,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorollaryId {
    /// mu2 > 2 + (2k-1)/(delta-1) gives k edge-disjoint spanning rigid
    /// subgraphs.
    Kdisrig,
    /// mu2 > 2 + 1/(delta-1) gives rigidity (k = 1 only).
    Maincor,
    /// mu2 > 2 + 2/(delta-1) gives global rigidity (k = 1 only).
    Glob,
}

/// Single-inequality corollary checks.
pub fn certify_corollary(
    g: &Graph,
    k: usize,
    which: CorollaryId,
) -> Result<Certificate, CertifyError> {
    assert!(k >= 1);
    if which != CorollaryId::Kdisrig {
        assert_eq!(k, 1, "maincor and glob are stated for k = 1");
    }
    let (id, numerator, implied) = match which {
        CorollaryId::Kdisrig => (
            "kdisrig",
            2.0 * k as f64 - 1.0,
            format!("contains {k} edge-disjoint spanning rigid subgraphs"),
        ),
        CorollaryId::Maincor => ("maincor", 1.0, "rigid".to_string()),
        CorollaryId::Glob => ("glob", 2.0, "globally rigid".to_string()),
    };
    let degree_floor = 6 * k;
    let delta = g.min_degree();
    let k_field = if which == CorollaryId::Kdisrig {
        Some(k)
    } else {
        None
    };
    if delta < degree_floor {
        return Ok(not_applicable(
            id,
            k_field,
            &implied,
            Condition::new(
                format!("precondition: delta(G) >= {degree_floor}"),
                delta as f64,
                degree_floor as f64,
            ),
        ));
    }
    let mu = spectral::mu2(g)?;
    let cond = Condition::new(
        format!("mu2(G) > 2 + {numerator}/(delta-1)"),
        mu,
        2.0 + numerator / (delta as f64 - 1.0),
    );
    let verdict = classify(cond.margin);
    Ok(Certificate {
        theorem_id: id.to_string(),
        k: k_field,
        verdict,
        conditions: vec![cond],
        implied_property: implied,
    })
}

/// Connected d-regular Ramanujan with d >= 8 implies global rigidity,
/// routed through mu2 >= d - 2*sqrt(d-1) and the global-rigidity corollary.
pub fn certify_ramanujan_glob(g: &Graph) -> Result<Certificate, CertifyError> {
    let id = "ramanujan_glob";
    let implied = "globally rigid";
    let d = match spectral::regular_degree(g) {
        Ok(d) => d,
        Err(_) => {
            return Ok(not_applicable(
                id,
                None,
                implied,
                Condition::new("precondition: G regular", 0.0, 1.0),
            ))
        }
    };
    if !g.is_connected() {
        return Ok(not_applicable(
            id,
            None,
            implied,
            Condition::new("precondition: G connected", 0.0, 1.0),
        ));
    }
    if d < 8 {
        return Ok(not_applicable(
            id,
            None,
            implied,
            Condition::new("precondition: degree >= 8", d as f64, 8.0),
        ));
    }
    let ramanujan = spectral::is_ramanujan(g)?;
    let lam = spectral::lambda_abs(g)?;
    let ram_cond = Condition::new(
        "Ramanujan: max nontrivial |lambda| <= 2*sqrt(d-1)",
        2.0 * ((d - 1) as f64).sqrt() + RESIDUAL_BOUND,
        lam,
    );
    let mu = spectral::mu2(g)?;
    // mu2 >= d - 2*sqrt(d-1) for Ramanujan graphs; for d >= 8 this clears
    // the global rigidity corollary threshold
    let glob_cond = Condition::new(
        "mu2(G) > 2 + 2/(d-1)",
        mu,
        2.0 + 2.0 / (d as f64 - 1.0),
    );
    let verdict = if !ramanujan {
        Verdict::ConditionFailed
    } else {
        classify(glob_cond.margin)
    };
    Ok(Certificate {
        theorem_id: id.to_string(),
        k: None,
        verdict,
        conditions: vec![ram_cond, glob_cond],
        implied_property: implied.to_string(),
    })
}

/// The lambda2 / q2 reformulations of the global rigidity corollary.
/// These are separate sufficient conditions; neither implies the other nor
/// the mu2 form at machine precision.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VariantReport {
    pub applicable: bool,
    pub lambda2: Option<f64>,
    pub lambda2_threshold: Option<f64>,
    pub lambda2_fires: bool,
    pub q2: Option<f64>,
    pub q2_threshold: Option<f64>,
    pub q2_fires: bool,
}

pub fn eigenvalue_variant_report(g: &Graph) -> Result<VariantReport, CertifyError> {
    let delta = g.min_degree() as f64;
    if delta < 6.0 {
        return Ok(VariantReport {
            applicable: false,
            lambda2: None,
            lambda2_threshold: None,
            lambda2_fires: false,
            q2: None,
            q2_threshold: None,
            q2_fires: false,
        });
    }
    let l2 = spectral::lambda2(g)?;
    let q2 = spectral::q2(g)?;
    let l2_thr = delta - 2.0 - 2.0 / (delta - 1.0);
    let q2_thr = 2.0 * delta - 2.0 - 2.0 / (delta - 1.0);
    Ok(VariantReport {
        applicable: true,
        lambda2: Some(l2),
        lambda2_threshold: Some(l2_thr),
        lambda2_fires: l2 < l2_thr - EPSILON,
        q2: Some(q2),
        q2_threshold: Some(q2_thr),
        q2_fires: q2 < q2_thr - EPSILON,
    })
}
