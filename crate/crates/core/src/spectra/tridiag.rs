//! Householder tridiagonalization followed by implicit QL, eigenvalues only.
//!
//! O(n^3) once rather than per sweep; used where orders make Jacobi
//! impractical.

use super::matrix::DenseSymMatrix;
use crate::error::{Error, Result};

const MAX_QL_ITERATIONS: usize = 60;

/// Eigenvalues sorted descending.
pub fn tridiagonal_eigenvalues(m: &DenseSymMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = m.as_slice().to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder(&mut a, n, &mut d, &mut e);
    implicit_ql(&mut d, &mut e)?;
    d.sort_by(|x, y| y.total_cmp(x));
    Ok(d)
}

/// Reduces `a` in place; `d` receives the diagonal, `e[i]` the subdiagonal
/// entry `(i, i - 1)` with `e[0] = 0`.
fn householder(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i * n + k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f = 0.0;
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

/// Diagonalizes the tridiagonal `(d, e)`; `d` ends up holding the eigenvalues.
fn implicit_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    // Absolute split threshold: a perturbation of eps * ||T|| keeps the
    // result normwise backward stable and stops stalls near zero eigenvalues.
    let floor = f64::EPSILON * d.iter().chain(e.iter()).fold(0.0f64, |m, x| m.max(x.abs()));
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_ITERATIONS {
                return Err(Error::NonConvergence {
                    sweeps: iter,
                    off: e[l].abs(),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
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
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::jacobi::{jacobi_eigenvalues, DEFAULT_TOL};

    #[test]
    fn agrees_with_jacobi() {
        for n in [1, 2, 3, 7, 20] {
            let m = DenseSymMatrix::from_fn(n, |i, j| (((i + 1) * (j + 2) * 31) % 11) as f64 - 5.0);
            let a = tridiagonal_eigenvalues(&m).unwrap();
            let b = jacobi_eigenvalues(&m, DEFAULT_TOL).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-11, "n = {n}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn complete_graph() {
        let n = 30;
        let m = DenseSymMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { 1.0 });
        let v = tridiagonal_eigenvalues(&m).unwrap();
        assert!((v[0] - (n as f64 - 1.0)).abs() < 1e-12);
        assert!(v[1..].iter().all(|x| (x + 1.0).abs() < 1e-12));
    }

    #[test]
    fn already_diagonal() {
        let m = DenseSymMatrix::from_fn(5, |i, j| if i == j { -(i as f64) } else { 0.0 });
        assert_eq!(tridiagonal_eigenvalues(&m).unwrap(), vec![0.0, -1.0, -2.0, -3.0, -4.0]);
    }
}
