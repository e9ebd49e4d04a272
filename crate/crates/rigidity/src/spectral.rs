//! Graph matrices (L = D - A, A, Q = D + A) and a self-contained dense
//! symmetric eigensolver: Householder reduction to tridiagonal form followed
//! by implicitly shifted QL iteration, after the classic EISPACK/Jama
//! routines. Eigenvectors are accumulated so accepted spectra carry a
//! residual bound.

use thiserror::Error;

use crate::graph::Graph;

/// Residual acceptance bound for computed spectra.
pub const RESIDUAL_BOUND: f64 = 1e-8;
/// QL sweeps allowed per eigenvalue before giving up.
pub const ITERATION_BUDGET: usize = 60;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("matrix must have order >= {0}")]
    TooSmall(usize),
    #[error("QL iteration did not converge within {ITERATION_BUDGET} sweeps")]
    NoConvergence,
    #[error("eigenpair residual {0:.3e} exceeds bound {RESIDUAL_BOUND:.1e}")]
    ResidualTooLarge(f64),
    #[error("graph is not regular (degrees {0} and {1} both occur)")]
    NotRegular(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
}

/// Dense real symmetric matrix; the lower triangle is stored once.
#[derive(Clone, Debug)]
pub struct SymmetricMatrix {
    n: usize,
    // packed lower triangle, row-major: entry (i, j) with i >= j at i(i+1)/2 + j
    lo: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            lo: vec![0.0; n * (n + 1) / 2],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        self.lo[a * (a + 1) / 2 + b]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        self.lo[a * (a + 1) / 2 + b] = v;
    }

    /// Max absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n());
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, -1.0);
    }
    m
}

pub fn adjacency(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.n());
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// Eigenvalues of a symmetric matrix, sorted ascending, together with the
/// worst residual observed on the checked eigenpairs.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub max_residual: f64,
}

/// Full spectrum with residual verification on the extreme and
/// second-smallest eigenpairs. Errors rather than returning a spectrum
/// that failed to converge or verify.
pub fn eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum, SpectralError> {
    let n = m.order();
    if n == 0 {
        return Err(SpectralError::TooSmall(1));
    }
    if n == 1 {
        return Ok(Spectrum {
            values: vec![m.get(0, 0)],
            max_residual: 0.0,
        });
    }
    let (d, v) = symmetric_eigen(m)?;
    let scale = m.inf_norm().max(1.0);
    let mut max_res: f64 = 0.0;
    let mut check = vec![0, n - 1];
    if n >= 2 {
        check.push(1);
    }
    for &j in &check {
        let mut sq = 0.0;
        for i in 0..n {
            let mut mv = 0.0;
            for k in 0..n {
                mv += m.get(i, k) * v[k][j];
            }
            let r = mv - d[j] * v[i][j];
            sq += r * r;
        }
        max_res = max_res.max(sq.sqrt() / scale);
    }
    if max_res > RESIDUAL_BOUND {
        return Err(SpectralError::ResidualTooLarge(max_res));
    }
    Ok(Spectrum {
        values: d,
        max_residual: max_res,
    })
}

/// Returns (eigenvalues ascending, eigenvector matrix V with V[i][j] the
/// i-th component of the eigenvector for the j-th eigenvalue).
fn symmetric_eigen(m: &SymmetricMatrix) -> Result<(Vec<f64>, Vec<Vec<f64>>), SpectralError> {
    let n = m.order();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(n, &mut v, &mut d, &mut e);
    tql2(n, &mut v, &mut d, &mut e)?;
    Ok((d, v))
}

// Householder reduction to symmetric tridiagonal form (EISPACK tred2).
fn tred2(n: usize, v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    d[..n].copy_from_slice(&v[n - 1][..n]);

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            // Apply similarity transformation to remaining columns.
            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in (j + 1)..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate transformations.
    for i in 0..(n - 1) {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k][i + 1] * v[k][j];
                }
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k][i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

// Implicitly shifted QL iteration on the tridiagonal form (EISPACK tql2),
// with eigenvalues sorted ascending on exit.
fn tql2(n: usize, v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) -> Result<(), SpectralError> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = 2.0f64.powi(-52);
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > ITERATION_BUDGET {
                    return Err(SpectralError::NoConvergence);
                }
                // Compute implicit shift.
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // Implicit QL transformation.
                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                #[allow(unused_assignments)]
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in v.iter_mut().take(n) {
                        h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                    // hold c3/s2 for the final correction below
                    if i == l {
                        p = -s * s2 * c3 * el1 * e[l] / dl1;
                    }
                }
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }

    // Sort eigenvalues and corresponding vectors ascending.
    for i in 0..(n - 1) {
        let mut k = i;
        let mut p = d[i];
        for j in (i + 1)..n {
            if d[j] < p {
                k = j;
                p = d[j];
            }
        }
        if k != i {
            d[k] = d[i];
            d[i] = p;
            for row in v.iter_mut().take(n) {
                row.swap(i, k);
            }
        }
    }
    Ok(())
}

/// Algebraic connectivity: second-smallest Laplacian eigenvalue.
pub fn mu2(g: &Graph) -> Result<f64, SpectralError> {
    if g.n() < 2 {
        return Err(SpectralError::TooSmall(2));
    }
    Ok(eigenvalues(&laplacian(g))?.values[1])
}

/// Second-largest adjacency eigenvalue.
pub fn lambda2(g: &Graph) -> Result<f64, SpectralError> {
    if g.n() < 2 {
        return Err(SpectralError::TooSmall(2));
    }
    let s = eigenvalues(&adjacency(g))?;
    Ok(s.values[g.n() - 2])
}

/// λ(G) = max(|λ_2|, |λ_n|): largest absolute adjacency eigenvalue other
/// than the largest one.
pub fn lambda_abs(g: &Graph) -> Result<f64, SpectralError> {
    if g.n() < 2 {
        return Err(SpectralError::TooSmall(2));
    }
    let s = eigenvalues(&adjacency(g))?;
    Ok(s.values[g.n() - 2].abs().max(s.values[0].abs()))
}

/// Second-largest signless Laplacian eigenvalue.
pub fn q2(g: &Graph) -> Result<f64, SpectralError> {
    if g.n() < 2 {
        return Err(SpectralError::TooSmall(2));
    }
    let s = eigenvalues(&signless_laplacian(g))?;
    Ok(s.values[g.n() - 2])
}

/// Returns the common degree if G is regular.
pub fn regular_degree(g: &Graph) -> Result<usize, SpectralError> {
    let d = g.degree(0);
    for v in 1..g.n() {
        if g.degree(v) != d {
            return Err(SpectralError::NotRegular(d, g.degree(v)));
        }
    }
    Ok(d)
}

/// Ramanujan test: G connected and d-regular, and every adjacency
/// eigenvalue other than ±d has absolute value at most 2√(d-1) (up to the
/// residual bound).
pub fn is_ramanujan(g: &Graph) -> Result<bool, SpectralError> {
    let d = regular_degree(g)?;
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let bound = 2.0 * ((d as f64) - 1.0).sqrt() + RESIDUAL_BOUND;
    let s = eigenvalues(&adjacency(g))?;
    for &lam in &s.values {
        if (lam - d as f64).abs() <= RESIDUAL_BOUND || (lam + d as f64).abs() <= RESIDUAL_BOUND {
            continue;
        }
        if lam.abs() > bound {
            return Ok(false);
        }
    }
    Ok(true)
}
