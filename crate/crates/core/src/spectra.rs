//! Dense symmetric eigensolver (cyclic Jacobi) and graph spectra.
//!
//! The solver is deliberately the textbook algorithm: for matrices of
//! dimension at most 64 a few O(n^3) sweeps are negligible, Jacobi is
//! unconditionally stable on symmetric input, and the implementation is
//! short enough to audit line by line. Eigenvalues only; nothing downstream
//! needs eigenvectors.

use crate::graph::Graph;
use serde::Serialize;
use thiserror::Error;

/// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
pub const JACOBI_TOL: f64 = 1e-12;
/// Hard cap on Jacobi sweeps; reaching it without converging is a failure.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Maximum allowed asymmetry in solver input.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Tolerance for every downstream eigenvalue comparison. Three orders of
/// magnitude above the solver termination threshold.
pub const EIGEN_TOL: f64 = 1e-8;

/// Errors from the eigensolver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("matrix dimension must be at least 1")]
    DimensionZero,
    #[error("matrix dimension {0} exceeds the maximum of 64")]
    DimensionTooLarge(usize),
    #[error("entry ({i},{j}) differs from its transpose mirror by {delta:.3e}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },
    #[error("no convergence after {sweeps} sweeps (off-diagonal norm {offdiag:.3e})")]
    NoConvergence { sweeps: usize, offdiag: f64 },
}

/// Sort order of a spectrum's eigenvalue list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EigenOrder {
    Ascending,
    Descending,
}

/// Eigenvalues of a symmetric matrix, sorted per the order flag, plus the
/// maximum off-diagonal magnitude left when the solver stopped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    order: EigenOrder,
    residual: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> EigenOrder {
        self.order
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Dense real symmetric matrix in full row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Zero matrix of the given dimension (1..=64).
    pub fn zeros(n: usize) -> Result<Self, EigenError> {
        if n == 0 {
            return Err(EigenError::DimensionZero);
        }
        if n > 64 {
            return Err(EigenError::DimensionTooLarge(n));
        }
        Ok(SymMatrix { n, data: vec![0.0; n * n] })
    }

    /// Matrix with entries `f(i, j)`. The result is stored verbatim, so an
    /// asymmetric `f` produces a matrix the solver will reject.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self, EigenError> {
        let mut a = Self::zeros(n)?;
        for i in 0..n {
            for j in 0..n {
                a.data[i * n + j] = f(i, j);
            }
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n);
        self.data[i * self.n + j]
    }

    /// Sets the symmetric pair (i,j) and (j,i).
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert!(i < self.n && j < self.n);
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }
}

/// 0/1 adjacency matrix of a graph.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_fn(g.n(), |i, j| f64::from(g.has_edge(i, j)))
        .expect("graph order is within matrix bounds")
}

/// Laplacian D - A: degrees on the diagonal, minus adjacency off it.
pub fn laplacian_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else {
            -f64::from(g.has_edge(i, j))
        }
    })
    .expect("graph order is within matrix bounds")
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotation sweeps.
///
/// Sweeps run until the off-diagonal Frobenius norm drops below
/// [`JACOBI_TOL`], at most [`JACOBI_MAX_SWEEPS`] times. The reported residual
/// is the maximum off-diagonal magnitude at termination.
pub fn symmetric_eigenvalues(a: &SymMatrix, order: EigenOrder) -> Result<Spectrum, EigenError> {
    let n = a.n;
    for i in 0..n {
        for j in i + 1..n {
            let delta = (a.data[i * n + j] - a.data[j * n + i]).abs();
            if delta > SYMMETRY_TOL {
                return Err(EigenError::NotSymmetric { i, j, delta });
            }
        }
    }

    let mut m = a.data.clone();
    let mut sweeps = 0;
    loop {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += 2.0 * m[i * n + j] * m[i * n + j];
            }
        }
        if off.sqrt() < JACOBI_TOL {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(EigenError::NoConvergence { sweeps, offdiag: off.sqrt() });
        }
        sweeps += 1;

        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                // Rotation angle annihilating the (p,q) entry.
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = m[i * n + p];
                    let aiq = m[i * n + q];
                    m[i * n + p] = c * aip - s * aiq;
                    m[p * n + i] = m[i * n + p];
                    m[i * n + q] = s * aip + c * aiq;
                    m[q * n + i] = m[i * n + q];
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                m[p * n + p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                m[q * n + q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
            }
        }
    }

    let mut residual: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            residual = residual.max(m[i * n + j].abs());
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    if order == EigenOrder::Descending {
        values.reverse();
    }
    Ok(Spectrum { values, order, residual })
}

/// Adjacency eigenvalues, largest first.
pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum, EigenError> {
    let spec = symmetric_eigenvalues(&adjacency_matrix(g), EigenOrder::Descending)?;
    let sum: f64 = spec.values.iter().sum();
    assert!(
        sum.abs() <= g.n() as f64 * EIGEN_TOL,
        "adjacency spectrum must sum to the zero trace, got {sum:e}"
    );
    Ok(spec)
}

/// Laplacian eigenvalues, smallest first. The smallest is always 0 for a
/// nonempty vertex set and the sum equals twice the edge count; both are
/// asserted to catch solver defects loudly.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, EigenError> {
    let spec = symmetric_eigenvalues(&laplacian_matrix(g), EigenOrder::Ascending)?;
    let n = g.n() as f64;
    let sum: f64 = spec.values.iter().sum();
    assert!(
        spec.values[0].abs() <= EIGEN_TOL,
        "smallest Laplacian eigenvalue must be 0, got {:e}",
        spec.values[0]
    );
    assert!(
        spec.values.iter().all(|&v| v >= -EIGEN_TOL),
        "Laplacian eigenvalues must be nonnegative"
    );
    assert!(
        (sum - 2.0 * g.edge_count() as f64).abs() <= n * EIGEN_TOL,
        "Laplacian spectrum must sum to twice the edge count, got {sum}"
    );
    Ok(spec)
}

/// Spectral radius: the largest adjacency eigenvalue, which for a nonnegative
/// symmetric matrix is also the largest in magnitude.
pub fn spectral_radius(g: &Graph) -> Result<f64, EigenError> {
    Ok(adjacency_spectrum(g)?.values[0])
}
