use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmath::{is_psd, CMatrix, Ket, EIGEN_FLOOR, HERMITIAN_TOL, TRACE_TOL};

/// Density operator over 1..4 qubits (or the d=4 teleportation qudit).
///
/// Construction validates Hermiticity and positive semidefiniteness; the
/// trace is left to the caller because sub-normalized branch states carry
/// their weight in the trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
}

impl DensityMatrix {
    pub fn new(mat: CMatrix) -> Result<Self> {
        mat.check_hermitian(HERMITIAN_TOL)?;
        let (psd, min_eig) = is_psd(&mat, EIGEN_FLOOR)?;
        if !psd {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self { mat })
    }

    /// Pure-state projector `|k><k|`. Always valid, no spectral check needed.
    pub fn from_ket(k: &Ket) -> Self {
        Self { mat: k.outer(k) }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    pub fn is_normalized(&self) -> bool {
        (self.trace() - 1.0).abs() <= TRACE_TOL
    }

    pub fn check_normalized(&self) -> Result<()> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized { norm: self.trace() });
        }
        Ok(())
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            mat: self.mat.scale(Complex64::new(factor, 0.0)),
        }
    }

    pub fn normalized(&self) -> Self {
        self.scale(1.0 / self.trace())
    }

    pub fn num_qubits(&self) -> Result<usize> {
        let dim = self.dim();
        if !dim.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { dim });
        }
        Ok(dim.trailing_zeros() as usize)
    }

    /// Traces out the listed qubits (1-based, qubit 1 = most significant bit).
    ///
    /// The result acts on the kept qubits in their original order.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<DensityMatrix> {
        let n = self.num_qubits()?;
        let mut is_traced = vec![false; n];
        for &q in traced {
            if q == 0 || q > n {
                return Err(Error::QubitOutOfRange { qubit: q, total: n });
            }
            if is_traced[q - 1] {
                return Err(Error::DuplicateQubit { qubit: q });
            }
            is_traced[q - 1] = true;
        }

        // Bit shift of qubit q (1-based, MSB first) within a full index.
        let shift = |q: usize| n - q;
        let kept: Vec<usize> = (1..=n).filter(|q| !is_traced[q - 1]).collect();
        let traced_qs: Vec<usize> = (1..=n).filter(|q| is_traced[q - 1]).collect();

        let kept_dim = 1usize << kept.len();
        let traced_dim = 1usize << traced_qs.len();

        // Scatter the bits of a reduced index back into full-register positions.
        let expand = |bits: usize, qs: &[usize]| -> usize {
            let mut idx = 0;
            for (pos, &q) in qs.iter().enumerate() {
                let bit = (bits >> (qs.len() - 1 - pos)) & 1;
                idx |= bit << shift(q);
            }
            idx
        };

        let mat = CMatrix::from_fn(kept_dim, kept_dim, |a, b| {
            let row_base = expand(a, &kept);
            let col_base = expand(b, &kept);
            (0..traced_dim)
                .map(|t| {
                    let e = expand(t, &traced_qs);
                    self.mat[(row_base | e, col_base | e)]
                })
                .sum()
        });
        // Partial trace of a PSD matrix stays PSD; revalidate anyway since it
        // is cheap at these sizes.
        DensityMatrix::new(mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::testing::{random_density, SplitMix};

    fn bell_phi_plus() -> Ket {
        Ket::two_term(4, 0, 3, 1.0)
    }

    #[test]
    fn traced_bell_pair_is_maximally_mixed() {
        let rho = DensityMatrix::from_ket(&bell_phi_plus());
        let red = rho.partial_trace(&[2]).unwrap();
        assert_eq!(red.dim(), 2);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { 0.5 } else { 0.0 };
                assert!((red.mat()[(i, j)] - Complex64::new(want, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn traced_ghz_tail_gives_classical_mixture() {
        let ghz = Ket::two_term(16, 0, 15, 1.0);
        let red = DensityMatrix::from_ket(&ghz).partial_trace(&[3, 4]).unwrap();

        // Independent oracle: direct index summation over the traced subsystem.
        let full = ghz.outer(&ghz);
        let mut oracle = CMatrix::zeros(4, 4);
        for a in 0..4 {
            for b in 0..4 {
                for t in 0..4 {
                    oracle[(a, b)] += full[(a * 4 + t, b * 4 + t)];
                }
            }
        }
        assert!(red.mat().sub(&oracle).max_abs() < 1e-14);
        assert!((red.mat()[(0, 0)].re - 0.5).abs() < 1e-14);
        assert!((red.mat()[(3, 3)].re - 0.5).abs() < 1e-14);
        assert!(red.mat()[(0, 3)].norm() < 1e-14);
    }

    #[test]
    fn product_state_factorizes() {
        // tr_B(A ⊗ B) = A * tr(B) for a product of pure states.
        let a = Ket::from_amps(vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
        ]);
        let b = Ket::basis(2, 1);
        let prod = DensityMatrix::from_ket(&a.tensor(&b));
        let red = prod.partial_trace(&[2]).unwrap();
        let expect = a.outer(&a);
        assert!(red.mat().sub(&expect).max_abs() < 1e-14);
    }

    #[test]
    fn partial_trace_rejects_bad_indices() {
        let rho = DensityMatrix::from_ket(&bell_phi_plus());
        assert!(matches!(
            rho.partial_trace(&[3]),
            Err(Error::QubitOutOfRange { .. })
        ));
        assert!(matches!(
            rho.partial_trace(&[1, 1]),
            Err(Error::DuplicateQubit { .. })
        ));
    }

    #[test]
    fn partial_trace_preserves_trace_on_random_states() {
        let mut rng = SplitMix::new(0x9e3779b97f4a7c15);
        for _ in 0..20 {
            let rho = random_density(8, &mut rng);
            let red = rho.partial_trace(&[2]).unwrap();
            assert!((red.trace() - rho.trace()).abs() < 1e-12);
        }
    }
}
