//! Dense real-symmetric eigenvalue computation.
//!
//! Householder reduction to tridiagonal form followed by implicit-shift QL
//! iteration (the classical EISPACK tred/tql pair, eigenvalues only).
//! Deterministic for identical input; accuracy is checked through the trace
//! and Frobenius identities rather than residuals.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigenError {
    #[error("QL iteration exceeded {limit} sweeps for a {n}x{n} matrix")]
    IterationLimit { n: usize, limit: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
}

/// Dense symmetric matrix, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> SymmetricMatrix {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Validates symmetry (exact, as stored) and finiteness.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<SymmetricMatrix, EigenError> {
        let n = rows.len();
        let mut m = SymmetricMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "rows must form a square matrix");
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(EigenError::NonFinite(i, j));
                }
                m.data[i * n + j] = v;
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if m.data[i * n + j] != m.data[j * n + i] {
                    return Err(EigenError::NotSymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    /// Off-diagonal absolute row sum, the Gershgorin radius of row `i`.
    pub fn gershgorin_radius(&self, i: usize) -> f64 {
        (0..self.n)
            .filter(|&j| j != i)
            .map(|j| self.get(i, j).abs())
            .sum()
    }
}

/// Eigenvalues in non-increasing order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
}

impl Spectrum {
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_sq(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }
}

/// All `n` eigenvalues of a symmetric matrix, sorted non-increasing.
///
/// Errors with `IterationLimit` after more than `30 * n` QL sweeps, which
/// never happens on graph matrices at the orders this crate handles.
pub fn symmetric_eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum, EigenError> {
    let n = m.n;
    if n == 0 {
        return Ok(Spectrum { values: vec![] });
    }
    let mut a = m.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder_tridiagonalize(&mut a, n, &mut d, &mut e);
    ql_implicit_shift(&mut d, &mut e, n, 30 * n)?;
    d.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(Spectrum { values: d })
}

/// Greedy left-to-right clustering of a non-increasing spectrum: a value joins
/// the current cluster while it stays within `tol` of the running mean.
/// Returns `(cluster mean, multiplicity)` pairs; multiplicities sum to `n`.
pub fn cluster_multiplicities(s: &Spectrum, tol: f64) -> Vec<(f64, usize)> {
    assert!(tol > 0.0, "clustering tolerance must be positive");
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in &s.values {
        match out.last_mut() {
            Some((mean, count)) if (v - *mean).abs() <= tol => {
                *mean = (*mean * *count as f64 + v) / (*count as f64 + 1.0);
                *count += 1;
            }
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Householder reduction of a symmetric matrix to tridiagonal form,
/// eigenvalues-only variant (no accumulation of the transform).
fn householder_tridiagonalize(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += a[i * n + k].abs();
            }
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let mut f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[i * n + i];
    }
}

/// QL iteration with Wilkinson implicit shift on a tridiagonal matrix
/// `(d, e)`; deflation uses a machine-epsilon threshold scaled by the
/// neighboring diagonal magnitudes.
fn ql_implicit_shift(
    d: &mut [f64],
    e: &mut [f64],
    n: usize,
    max_sweeps: usize,
) -> Result<(), EigenError> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let mut total_sweeps = 0usize;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            total_sweeps += 1;
            if total_sweeps > max_sweeps {
                return Err(EigenError::IterationLimit {
                    n,
                    limit: max_sweeps,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r } else { -r });
            let mut s = 1.0f64;
            let mut c = 1.0f64;
            let mut p = 0.0f64;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                let t = (d[i] - g) * s + 2.0 * c * b;
                p = s * t;
                d[i + 1] = g + p;
                g = c * t - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
