use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmath::CMatrix;

/// Pure-state amplitude vector. Qubit 1 is the most significant bit of the
/// basis index, so `|0111>` sits at index 7 in a 4-qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    amps: Vec<Complex64>,
}

impl Ket {
    pub fn from_amps(amps: Vec<Complex64>) -> Self {
        Self { amps }
    }

    /// Computational basis state `|index>` in a `dim`-dimensional space.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        Self { amps }
    }

    /// Equal-weight superposition of two basis states, `(|a> + sign*|b>)/sqrt(2)`.
    pub fn two_term(dim: usize, a: usize, b: usize, sign: f64) -> Self {
        let mut amps = vec![Complex64::ZERO; dim];
        let w = std::f64::consts::FRAC_1_SQRT_2;
        amps[a] = Complex64::new(w, 0.0);
        amps[b] = Complex64::new(sign * w, 0.0);
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amp(&self, i: usize) -> Complex64 {
        self.amps[i]
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn check_normalized(&self, tol: f64) -> Result<()> {
        let n = self.norm();
        if (n - 1.0).abs() > tol {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(())
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self {
            amps: self.amps.iter().map(|a| a / n).collect(),
        }
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Ket) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "inner: dimension mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Outer product `|self><other|`.
    pub fn outer(&self, other: &Ket) -> CMatrix {
        CMatrix::from_fn(self.dim(), other.dim(), |i, j| {
            self.amps[i] * other.amps[j].conj()
        })
    }

    /// Tensor product `|self> ⊗ |other>`.
    pub fn tensor(&self, other: &Ket) -> Ket {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ket { amps }
    }

    pub fn add(&self, other: &Ket) -> Ket {
        assert_eq!(self.dim(), other.dim(), "add: dimension mismatch");
        Ket {
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Ket {
        Ket {
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Ket, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .amps
                .iter()
                .zip(&other.amps)
                .all(|(a, b)| (a - b).norm() <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_of_basis_states() {
        let k = Ket::basis(2, 0).tensor(&Ket::basis(2, 1));
        assert_eq!(k.amp(1), Complex64::ONE);
        assert_eq!(k.dim(), 4);
    }

    #[test]
    fn two_term_is_normalized() {
        let k = Ket::two_term(16, 0, 15, -1.0);
        assert!((k.norm() - 1.0).abs() < 1e-15);
        assert!(k.amp(15).re < 0.0);
    }

    #[test]
    fn inner_is_conjugate_linear_in_first() {
        let a = Ket::from_amps(vec![Complex64::new(0.0, 1.0), Complex64::ZERO]);
        let b = Ket::basis(2, 0);
        assert_eq!(a.inner(&b), Complex64::new(0.0, -1.0));
    }
}
