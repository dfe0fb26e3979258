use super::matrix::DenseSymMatrix;
use super::spectrum::Spectrum;
use crate::error::{Error, Result};

/// Relative tolerance for residuals and spectrum comparisons, scaled by
/// `max(1, ||U||_inf)`.
pub const COMPARISON_REL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenspaceCheck {
    pub value: f64,
    pub multiplicity: usize,
    /// `max ||U x - lambda x||_inf / ||x||_inf` over the basis.
    pub max_residual: f64,
    /// Numerical rank of the supplied basis.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<EigenspaceCheck>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub multiplicities_sum: usize,
    pub pass: bool,
}

/// Checks every basis vector against `U` and every basis for full rank.
pub fn verify_eigenpairs(u: &DenseSymMatrix, s: &Spectrum, rel_tol: f64) -> Result<VerificationReport> {
    if s.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            got: s.dim(),
        });
    }
    let tolerance = rel_tol * u.inf_norm().max(1.0);
    let mut checks = Vec::with_capacity(s.eigenspaces().len());
    for space in s.eigenspaces() {
        let basis = space
            .basis
            .as_ref()
            .ok_or_else(|| Error::Hypothesis("spectrum carries no eigenvectors".into()))?;
        let mut max_residual: f64 = 0.0;
        for x in basis {
            let ux = u.mul_vec(x)?;
            let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            if scale == 0.0 {
                max_residual = f64::INFINITY;
                continue;
            }
            let r = ux
                .iter()
                .zip(x)
                .fold(0.0f64, |m, (a, b)| m.max((a - space.value * b).abs()));
            max_residual = max_residual.max(r / scale);
        }
        checks.push(EigenspaceCheck {
            value: space.value,
            multiplicity: space.multiplicity,
            max_residual,
            rank: numerical_rank(basis),
        });
    }
    let max_residual = checks.iter().fold(0.0f64, |m, c| m.max(c.max_residual));
    let multiplicities_sum = checks.iter().map(|c| c.multiplicity).sum();
    let pass =
        max_residual <= tolerance && multiplicities_sum == u.dim() && checks.iter().all(|c| c.rank == c.multiplicity);
    Ok(VerificationReport {
        checks,
        max_residual,
        tolerance,
        multiplicities_sum,
        pass,
    })
}

/// Rank by modified Gram-Schmidt, dropping directions below `1e-8` of the
/// original norm.
pub fn numerical_rank(vectors: &[Vec<f64>]) -> usize {
    let mut kept: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let norm0 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm0 == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for q in &kept {
            let d: f64 = w.iter().zip(q).map(|(a, b)| a * b).sum();
            w.iter_mut().zip(q).for_each(|(a, b)| *a -= d * b);
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 * norm0 {
            w.iter_mut().for_each(|a| *a /= norm);
            kept.push(w);
        }
    }
    kept.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::jacobi::{dense_eigen, DEFAULT_TOL};
    use crate::spectra::spectrum::{Eigenpair, Provenance};

    #[test]
    fn dense_decomposition_verifies() {
        let m = DenseSymMatrix::from_fn(6, |i, j| {
            if i == j {
                2.0
            } else if i + 1 == j {
                -1.0
            } else {
                0.0
            }
        });
        let s = dense_eigen(&m, DEFAULT_TOL).unwrap();
        let r = verify_eigenpairs(&m, &s, COMPARISON_REL_TOL).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn wrong_value_fails() {
        let m = DenseSymMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap();
        let pairs = vec![
            Eigenpair {
                value: 1.0,
                provenance: Provenance::Dense,
                vector: Some(vec![1.0, 0.0]),
            },
            Eigenpair {
                value: 2.5,
                provenance: Provenance::Dense,
                vector: Some(vec![0.0, 1.0]),
            },
        ];
        let r = verify_eigenpairs(&m, &Spectrum::from_pairs(pairs, 2.5), COMPARISON_REL_TOL).unwrap();
        assert!(!r.pass);
        assert!((r.max_residual - 0.5).abs() < 1e-15);
    }

    #[test]
    fn dependent_basis_fails() {
        let m = DenseSymMatrix::zeros(2);
        let pairs = vec![
            Eigenpair {
                value: 0.0,
                provenance: Provenance::Dense,
                vector: Some(vec![1.0, 1.0]),
            },
            Eigenpair {
                value: 0.0,
                provenance: Provenance::Dense,
                vector: Some(vec![2.0, 2.0]),
            },
        ];
        let r = verify_eigenpairs(&m, &Spectrum::from_pairs(pairs, 0.0), COMPARISON_REL_TOL).unwrap();
        assert!(!r.pass);
        assert_eq!(r.checks[0].rank, 1);
    }

    #[test]
    fn missing_vectors_and_dimension_errors() {
        let m = DenseSymMatrix::zeros(2);
        let s = Spectrum::from_values(&[0.0, 0.0], Provenance::Dense);
        assert!(verify_eigenpairs(&m, &s, COMPARISON_REL_TOL).is_err());
        let s3 = Spectrum::from_values(&[0.0; 3], Provenance::Dense);
        assert!(matches!(
            verify_eigenpairs(&m, &s3, COMPARISON_REL_TOL),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
