//! Dense complex linear algebra for registers up to 16 dimensions: tensor
//! products, partial trace, Hermitian eigendecomposition, PSD square root,
//! entropy and fidelity. All values are immutable and every operation is a
//! pure function.

mod density;
mod ket;
mod matrix;
mod spectral;

pub use density::DensityMatrix;
pub use ket::Ket;
pub use matrix::CMatrix;
pub use spectral::{eig_hermitian, fidelity, is_psd, sqrt_psd, von_neumann_entropy, Eig};

/// Hermiticity tolerance for validated inputs.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues in `[-EIGEN_FLOOR, 0)` are clamped to zero before sqrt/log;
/// anything more negative is treated as a hard error.
pub const EIGEN_FLOOR: f64 = 1e-10;
/// Unit-trace tolerance for normalized density matrices.
pub const TRACE_TOL: f64 = 1e-9;

pub fn sigma_x() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

/// `iσ_y` in the real antisymmetric convention `[[0, -1], [1, 0]]`.
pub fn i_sigma_y() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, -1.0], &[1.0, 0.0]])
}

pub fn sigma_z() -> CMatrix {
    CMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]])
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use num_complex::Complex64;

    /// Small deterministic generator for test inputs (SplitMix64).
    pub struct SplitMix {
        state: u64,
    }

    impl SplitMix {
        pub fn new(seed: u64) -> Self {
            Self { state: seed }
        }

        pub fn next_u64(&mut self) -> u64 {
            self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = self.state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }

        /// Uniform in [-1, 1).
        pub fn uniform(&mut self) -> f64 {
            (self.next_u64() >> 11) as f64 / (1u64 << 52) as f64 - 1.0
        }
    }

    pub fn random_complex(rng: &mut SplitMix) -> Complex64 {
        Complex64::new(rng.uniform(), rng.uniform())
    }

    pub fn random_hermitian(dim: usize, rng: &mut SplitMix) -> CMatrix {
        let a = CMatrix::from_fn(dim, dim, |_, _| random_complex(rng));
        a.add(&a.adjoint()).scale(Complex64::new(0.5, 0.0))
    }

    /// Random PSD matrix with unit trace, via `A A† / tr`.
    pub fn random_density(dim: usize, rng: &mut SplitMix) -> DensityMatrix {
        let a = CMatrix::from_fn(dim, dim, |_, _| random_complex(rng));
        let p = a.matmul(&a.adjoint());
        let tr = p.trace().re;
        DensityMatrix::new(p.scale(Complex64::new(1.0 / tr, 0.0))).unwrap()
    }

    pub fn random_ket(dim: usize, rng: &mut SplitMix) -> Ket {
        Ket::from_amps((0..dim).map(|_| random_complex(rng)).collect()).normalized()
    }
}
