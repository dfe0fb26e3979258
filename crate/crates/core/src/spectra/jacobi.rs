//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Slow (O(n^3) per sweep) but unconditionally stable, with orthonormal
//! eigenvectors to working precision. Used as the independent oracle.

use super::matrix::DenseSymMatrix;
use super::spectrum::{Eigenpair, Provenance, Spectrum};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 50;

/// Default relative convergence threshold on the off-diagonal mass.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Eigenvalues (unsorted, paired with columns) and optionally eigenvectors.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`; unit length.
    pub vectors: Option<Vec<Vec<f64>>>,
    pub sweeps: usize,
}

/// Runs cyclic sweeps until the off-diagonal Frobenius mass drops below
/// `tol * ||M||_F`.
pub fn jacobi(m: &DenseSymMatrix, tol: f64, want_vectors: bool) -> Result<Eigensystem> {
    let n = m.dim();
    let mut a = m.as_slice().to_vec();
    let mut v = if want_vectors {
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        Some(v)
    } else {
        None
    };
    let threshold = tol * m.frobenius_norm();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let mass = off(&a);
        if mass <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence { sweeps, off: mass });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Negligible against both diagonal entries: drop it.
                if sweeps > 4
                    && app.abs() + 100.0 * apq.abs() == app.abs()
                    && aqq.abs() + 100.0 * apq.abs() == aqq.abs()
                {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let np = c * arp - s * arq;
                    let nq = s * arp + c * arq;
                    a[r * n + p] = np;
                    a[p * n + r] = np;
                    a[r * n + q] = nq;
                    a[q * n + r] = nq;
                }
                if let Some(v) = v.as_mut() {
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = c * vrp - s * vrq;
                        v[r * n + q] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i]).collect();
    let vectors = v.map(|v| (0..n).map(|k| (0..n).map(|r| v[r * n + k]).collect()).collect());
    Ok(Eigensystem {
        values,
        vectors,
        sweeps,
    })
}

/// Full eigen-decomposition, grouped and sorted descending, with bases.
pub fn dense_eigen(m: &DenseSymMatrix, tol: f64) -> Result<Spectrum> {
    let es = jacobi(m, tol, true)?;
    let vectors = es.vectors.expect("requested");
    let pairs = es
        .values
        .iter()
        .zip(vectors)
        .map(|(&value, vector)| Eigenpair {
            value,
            provenance: Provenance::Dense,
            vector: Some(vector),
        })
        .collect();
    Ok(Spectrum::from_pairs(pairs, m.inf_norm()))
}

/// Jacobi eigenvalues only, sorted descending.
pub fn jacobi_eigenvalues(m: &DenseSymMatrix, tol: f64) -> Result<Vec<f64>> {
    let mut values = jacobi(m, tol, false)?.values;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let m = DenseSymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let vals = jacobi_eigenvalues(&m, DEFAULT_TOL).unwrap();
        assert!((vals[0] - 3.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let m = DenseSymMatrix::from_fn(4, |i, j| if i == j { i as f64 } else { 0.0 });
        let es = jacobi(&m, DEFAULT_TOL, true).unwrap();
        assert_eq!(es.sweeps, 0);
        let s = dense_eigen(&m, DEFAULT_TOL).unwrap();
        assert_eq!(s.values(), vec![3.0, 2.0, 1.0, 0.0]);
    }

    #[test]
    fn path_graph_closed_form() {
        let n = 12;
        let m = DenseSymMatrix::from_fn(n, |i, j| if j == i + 1 { 1.0 } else { 0.0 });
        let vals = jacobi_eigenvalues(&m, DEFAULT_TOL).unwrap();
        let mut expect: Vec<f64> = (1..=n)
            .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
            .collect();
        expect.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in vals.iter().zip(&expect) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn residuals_and_orthonormality() {
        let n = 9;
        let m = DenseSymMatrix::from_fn(n, |i, j| ((i * 7 + j * 3) % 5) as f64 - 2.0);
        let es = jacobi(&m, DEFAULT_TOL, true).unwrap();
        let vs = es.vectors.unwrap();
        for (k, v) in vs.iter().enumerate() {
            let mv = m.mul_vec(v).unwrap();
            for i in 0..n {
                assert!((mv[i] - es.values[k] * v[i]).abs() < 1e-12);
            }
            for w in &vs[..k] {
                let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                assert!(dot.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_and_empty_matrices() {
        assert!(jacobi_eigenvalues(&DenseSymMatrix::zeros(0), DEFAULT_TOL)
            .unwrap()
            .is_empty());
        assert_eq!(
            jacobi_eigenvalues(&DenseSymMatrix::zeros(3), DEFAULT_TOL).unwrap(),
            vec![0.0; 3]
        );
    }
}
