//! Distance Laplacian matrix, its spectrum and the spread `DLS(G)`.
//!
//! `analyze` is the single entry point producing a [`DlapAnalysis`]; it
//! verifies the internal spectral identities (eigenvalue sum vs `2W`, squared
//! sum vs `R1`, spectral radius window) at construction and fails fast when
//! any of them drifts, since a drift means an eigensolver or APSP bug rather
//! than a mathematical finding.

use crate::eigen::{self, EigenError, Spectrum, SymmetricMatrix};
use crate::graph::{DistanceSummary, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DlapError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error("graph of order {0} has no spread (need n >= 2)")]
    OrderTooSmall(usize),
    #[error("internal identity failure: {identity} error {err:.3e} exceeds {tol:.1e}")]
    IdentityFailure {
        identity: &'static str,
        err: f64,
        tol: f64,
    },
}

/// Numeric tolerances used throughout the analysis and the bound checkers.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Tolerances {
    /// Relative tolerance for spectral identities (trace, Frobenius).
    pub eig_tol: f64,
    /// Absolute tolerance for equality detection on slacks and integer snaps.
    pub eq_tol: f64,
    /// Absolute tolerance for eigenvalue multiplicity clustering.
    pub cluster_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eig_tol: 1e-8,
            eq_tol: 1e-6,
            cluster_tol: 1e-6,
        }
    }
}

/// Full distance Laplacian report for one connected graph.
#[derive(Clone, Debug)]
pub struct DlapAnalysis {
    pub n: usize,
    /// Eigenvalues of `D^L`, non-increasing.
    pub spectrum: Spectrum,
    /// Largest eigenvalue.
    pub partial_1: f64,
    /// Second-smallest eigenvalue.
    pub partial_n_minus_1: f64,
    /// Spread `partial_1 - partial_n_minus_1`.
    pub dls: f64,
    /// `dls` snapped to the nearest integer when within `eq_tol` of one.
    pub dls_snapped: Option<i64>,
    /// Multiplicity of the eigenvalue `n` (within `eq_tol`).
    pub mult_of_n: usize,
    pub summary: DistanceSummary,
    pub trace_identity_err: f64,
    pub sq_identity_err: f64,
    pub tolerances: Tolerances,
}

/// `D^L = Diag(Tr) - D`: diagonal holds the transmissions, off-diagonal
/// `(i, j)` holds `-d_ij`. Every row sums to zero exactly.
pub fn distance_laplacian_from_summary(s: &DistanceSummary) -> SymmetricMatrix {
    let n = s.n;
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, s.tr[i] as f64);
        for j in (i + 1)..n {
            m.set_sym(i, j, -(s.dist(i, j) as f64));
        }
    }
    m
}

pub fn distance_laplacian(g: &Graph) -> Result<SymmetricMatrix, GraphError> {
    Ok(distance_laplacian_from_summary(&g.distance_summary()?))
}

pub fn analyze(g: &Graph) -> Result<DlapAnalysis, DlapError> {
    analyze_with(g, &Tolerances::default())
}

pub fn analyze_with(g: &Graph, tol: &Tolerances) -> Result<DlapAnalysis, DlapError> {
    let summary = g.distance_summary()?;
    analyze_summary(summary, tol)
}

pub fn analyze_summary(summary: DistanceSummary, tol: &Tolerances) -> Result<DlapAnalysis, DlapError> {
    let n = summary.n;
    if n < 2 {
        return Err(DlapError::OrderTooSmall(n));
    }
    let matrix = distance_laplacian_from_summary(&summary);
    let spectrum = eigen::symmetric_eigenvalues(&matrix)?;

    let partial_1 = spectrum.values[0];
    let partial_n_minus_1 = spectrum.values[n - 2];
    let partial_n = spectrum.values[n - 1];
    let dls = partial_1 - partial_n_minus_1;

    let two_w = 2.0 * summary.wiener as f64;
    let r1 = summary.r1 as f64;
    let tr_max = summary.tr_max as f64;

    let trace_identity_err = (spectrum.sum() - two_w).abs() / two_w.max(1.0);
    let sq_identity_err = (spectrum.sum_sq() - r1).abs() / r1.max(1.0);

    let fail = |identity: &'static str, err: f64| DlapError::IdentityFailure {
        identity,
        err,
        tol: tol.eig_tol,
    };
    if partial_n.abs() > tol.eig_tol * two_w.max(1.0) {
        return Err(fail("smallest eigenvalue is zero", partial_n.abs()));
    }
    if dls < -1e-8 {
        return Err(fail("spread nonnegative", -dls));
    }
    if trace_identity_err > tol.eig_tol {
        return Err(fail("eigenvalue sum equals 2W", trace_identity_err));
    }
    if sq_identity_err > tol.eig_tol {
        return Err(fail("eigenvalue square sum equals R1", sq_identity_err));
    }
    if partial_1 > 2.0 * tr_max + 1e-8 {
        return Err(fail("spectral radius at most 2*Tr_max", partial_1 - 2.0 * tr_max));
    }
    if partial_1 < tr_max + 1.0 - 1e-8 {
        return Err(fail("spectral radius at least Tr_max + 1", tr_max + 1.0 - partial_1));
    }

    let mult_of_n = spectrum
        .values
        .iter()
        .filter(|&&v| (v - n as f64).abs() <= tol.eq_tol)
        .count();
    let rounded = dls.round();
    let dls_snapped = if (dls - rounded).abs() <= tol.eq_tol {
        Some(rounded as i64)
    } else {
        None
    };

    Ok(DlapAnalysis {
        n,
        spectrum,
        partial_1,
        partial_n_minus_1,
        dls,
        dls_snapped,
        mult_of_n,
        summary,
        trace_identity_err,
        sq_identity_err,
        tolerances: *tol,
    })
}

/// Larger root of `x^2 - (tr_u + tr_v) x + tr_u tr_v - d_uv^2`, the top
/// eigenvalue of the 2x2 principal submatrix of `D^L` picked out by a vertex
/// pair at distance `d_uv`. By Cauchy interlacing it is a lower bound on the
/// distance Laplacian spectral radius.
pub fn two_by_two_interlacing_bound(tr_u: u64, tr_v: u64, d_uv: u32) -> f64 {
    let a = tr_u as f64;
    let b = tr_v as f64;
    let d = d_uv as f64;
    (a + b + ((a - b) * (a - b) + 4.0 * d * d).sqrt()) / 2.0
}
