use nalgebra::{Complex, DMatrix};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmath::{CMatrix, DensityMatrix, EIGEN_FLOOR, HERMITIAN_TOL, TRACE_TOL};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
#[derive(Clone, Debug)]
pub struct Eig {
    pub values: Vec<f64>,
    /// Eigenvectors as columns, aligned with `values`.
    pub vectors: CMatrix,
}

/// Hermitian eigendecomposition, backed by nalgebra's symmetric eigensolver.
pub fn eig_hermitian(m: &CMatrix) -> Result<Eig> {
    m.check_hermitian(HERMITIAN_TOL)?;
    let n = m.rows();
    let dm = DMatrix::<Complex<f64>>::from_fn(n, n, |i, j| m[(i, j)]);
    let eig = dm.symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));

    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(Eig { values, vectors })
}

/// PSD check via the minimum eigenvalue. Returns the evidence alongside the
/// verdict so feasibility scans can report it.
pub fn is_psd(m: &CMatrix, tol: f64) -> Result<(bool, f64)> {
    let eig = eig_hermitian(m)?;
    let min = eig.values.last().copied().unwrap_or(0.0);
    Ok((min >= -tol, min))
}

/// Clamps tiny negative eigenvalues to zero; anything below the floor is a
/// bug in the caller, not numerical noise.
fn clamp_eigenvalue(v: f64) -> Result<f64> {
    if v < -EIGEN_FLOOR {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue: v });
    }
    Ok(v.max(0.0))
}

/// PSD matrix square root `V sqrt(Λ) V†`.
///
/// Eigenvalues below `1e-14 * λ_max` are treated as exact rank deficiency:
/// taking the square root of eigensolver noise would otherwise inflate it
/// from ~1e-16 to ~1e-8 and contaminate downstream fidelities.
pub fn sqrt_psd(m: &CMatrix) -> Result<CMatrix> {
    let eig = eig_hermitian(m)?;
    let n = m.rows();
    let cutoff = eig.values.first().copied().unwrap_or(0.0).max(0.0) * 1e-14;
    let mut scaled = CMatrix::zeros(n, n);
    for j in 0..n {
        let v = clamp_eigenvalue(eig.values[j])?;
        let s = Complex64::new(if v <= cutoff { 0.0 } else { v.sqrt() }, 0.0);
        for i in 0..n {
            scaled[(i, j)] = eig.vectors[(i, j)] * s;
        }
    }
    Ok(scaled.matmul(&eig.vectors.adjoint()))
}

/// Von Neumann entropy in bits, with `0 log 0 := 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    if (rho.trace() - 1.0).abs() > TRACE_TOL {
        return Err(Error::NotNormalized { norm: rho.trace() });
    }
    let eig = eig_hermitian(rho.mat())?;
    let mut s = 0.0;
    for &v in &eig.values {
        let v = clamp_eigenvalue(v)?;
        if v > 0.0 {
            s -= v * v.log2();
        }
    }
    Ok(s.max(0.0))
}

/// Fidelity `F(ρ,σ) = tr sqrt(sqrt(ρ) σ sqrt(ρ))`, the square-root
/// convention, so a pure `ρ = |λ><λ|` gives `sqrt(<λ|σ|λ>)`.
///
/// Evaluated as the nuclear norm `|| sqrt(ρ) sqrt(σ) ||_1`, which is the
/// same quantity but keeps eigensolver noise at machine scale instead of
/// amplifying it through a square root.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    let a = sqrt_psd(rho.mat())?.matmul(&sqrt_psd(sigma.mat())?);
    let n = a.rows();
    let dm = DMatrix::<Complex<f64>>::from_fn(n, n, |i, j| a[(i, j)]);
    let f: f64 = dm.singular_values().iter().sum();
    Ok(f.min(1.0))
}
