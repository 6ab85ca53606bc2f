//! Dense square complex matrices with the small set of operations the
//! spectral pipeline needs: products, adjoints, norms, Gauss-Jordan inverse.
//!
//! Matrices here are small (dimension a few thousand at most), so everything
//! is written directly against row-major storage. No external linear algebra
//! backend is used; determinism matters more than peak speed.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MatrixError {
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix rows must form a square matrix")]
    NotSquare,
    #[error("matrix entries must be finite")]
    NonFiniteEntry,
    #[error("matrix is singular (pivot {0:.3e} below tolerance)")]
    Singular(f64),
}

/// An n×n complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        let data: Vec<Complex64> = rows.into_iter().flatten().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(MatrixError::NonFiniteEntry);
        }
        Ok(Self { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn diagonal_entries(&self) -> Vec<Complex64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.get(i, j) != Complex64::new(0.0, 0.0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
        self.check_dim(other)?;
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
        self.check_dim(other)?;
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: Complex64) -> ComplexMatrix {
        Self {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += self.get(i, j) * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Column `j` of the matrix.
    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Square root of the summed squared moduli of off-diagonal entries.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).norm_sqr();
                }
            }
        }
        s.sqrt()
    }

    /// ‖A − A*‖ in Frobenius norm.
    pub fn hermiticity_defect(&self) -> f64 {
        self.sub(&self.adjoint()).expect("same dim").frobenius_norm()
    }

    /// ‖A*A − I‖ in Frobenius norm.
    pub fn unitarity_defect(&self) -> f64 {
        let aa = self.adjoint().matmul(self).expect("same dim");
        aa.sub(&Self::identity(self.n))
            .expect("same dim")
            .frobenius_norm()
    }

    /// ‖AB − BA‖ in Frobenius norm.
    pub fn commutator_norm(&self, other: &ComplexMatrix) -> Result<f64, MatrixError> {
        let ab = self.matmul(other)?;
        let ba = other.matmul(self)?;
        Ok(ab.sub(&ba)?.frobenius_norm())
    }

    /// (A + A*)/2, the Hermitian part.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        self.add(&self.adjoint())
            .expect("same dim")
            .scale(Complex64::new(0.5, 0.0))
    }

    /// Gauss-Jordan inverse with partial pivoting.
    pub fn inverse(&self) -> Result<ComplexMatrix, MatrixError> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        let scale = self.frobenius_norm().max(1.0);
        for col in 0..n {
            let (mut pivot_row, mut pivot_val) = (col, a.get(col, col).norm());
            for r in (col + 1)..n {
                let v = a.get(r, col).norm();
                if v > pivot_val {
                    pivot_row = r;
                    pivot_val = v;
                }
            }
            if pivot_val < 1e-14 * scale {
                return Err(MatrixError::Singular(pivot_val));
            }
            if pivot_row != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot_row, j));
                    a.set(col, j, y);
                    a.set(pivot_row, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot_row, j));
                    inv.set(col, j, y);
                    inv.set(pivot_row, j, x);
                }
            }
            let p = a.get(col, col);
            for j in 0..n {
                a.set(col, j, a.get(col, j) / p);
                inv.set(col, j, inv.get(col, j) / p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col);
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(r, j) - f * a.get(col, j);
                    a.set(r, j, v);
                    let v = inv.get(r, j) - f * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }

    /// Largest singular value, via power iteration on A*A with a fixed
    /// deterministic starting vector. Relative accuracy ~1e−8 for the matrix
    /// sizes used here.
    pub fn operator_norm(&self) -> f64 {
        let n = self.n;
        if n == 0 {
            return 0.0;
        }
        let fro = self.frobenius_norm();
        if fro == 0.0 {
            return 0.0;
        }
        let aa = self.adjoint().matmul(self).expect("same dim");
        // deterministic non-degenerate start
        let mut v: Vec<Complex64> = (0..n)
            .map(|j| Complex64::new(1.0 + ((j + 1) as f64).sin() * 0.5, ((j + 1) as f64).cos() * 0.25))
            .collect();
        normalize(&mut v);
        let mut rho_prev = -1.0;
        for _ in 0..20_000 {
            let w = aa.matvec(&v);
            let rho: f64 = v
                .iter()
                .zip(&w)
                .map(|(a, b)| (a.conj() * b).re)
                .sum();
            let wn = norm(&w);
            if wn == 0.0 {
                return 0.0;
            }
            v = w;
            normalize(&mut v);
            if (rho - rho_prev).abs() <= 1e-13 * rho.abs().max(1e-300) {
                return rho.max(0.0).sqrt();
            }
            rho_prev = rho;
        }
        rho_prev.max(0.0).sqrt()
    }

    fn check_dim(&self, other: &ComplexMatrix) -> Result<(), MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalize(v: &mut [Complex64]) {
    let n = norm(v);
    if n > 0.0 {
        for z in v.iter_mut() {
            *z /= n;
        }
    }
}

/// Kronecker product, used to place one-site operators in a tensor family.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..na {
        for j in 0..na {
            let aij = a.get(i, j);
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..nb {
                for l in 0..nb {
                    out.set(i * nb + k, j * nb + l, aij * b.get(k, l));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn inverse_round_trip() {
        let m = ComplexMatrix::from_rows(vec![
            vec![c(2.0, 1.0), c(0.5, -0.3), c(0.0, 0.0)],
            vec![c(-1.0, 0.0), c(1.5, 0.2), c(0.3, 0.3)],
            vec![c(0.1, 0.1), c(0.0, -1.0), c(2.5, 0.0)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        let prod = m.matmul(&inv).unwrap();
        let err = prod
            .sub(&ComplexMatrix::identity(3))
            .unwrap()
            .frobenius_norm();
        assert!(err < 1e-12, "round trip error {err}");
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(2.0, 0.0), c(4.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(m.inverse(), Err(MatrixError::Singular(_))));
    }

    #[test]
    fn operator_norm_diagonal() {
        let m = ComplexMatrix::diagonal(&[c(3.0, 0.0), c(-1.0, 0.0)]);
        assert!((m.operator_norm() - 3.0).abs() < 1e-10);
        assert_eq!(ComplexMatrix::zeros(4).operator_norm(), 0.0);
    }

    #[test]
    fn kron_identity_blocks() {
        let u = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let k = kron(&ComplexMatrix::identity(2), &u);
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(2, 2), c(1.0, 0.0));
        assert_eq!(k.get(3, 3), c(0.0, 1.0));
    }

    #[test]
    fn defects_on_constructed_matrices() {
        let u = ComplexMatrix::diagonal(&[
            Complex64::from_polar(1.0, 0.3),
            Complex64::from_polar(1.0, -1.1),
        ]);
        assert!(u.unitarity_defect() < 1e-15);
        let h = ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(0.2, 0.5)],
            vec![c(0.2, -0.5), c(-2.0, 0.0)],
        ])
        .unwrap();
        assert!(h.hermiticity_defect() < 1e-15);
    }
}
