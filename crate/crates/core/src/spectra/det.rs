use num::{BigInt, BigRational, Integer, One, Zero};

use super::params::{ExactParams, UniversalParams};
use super::universal::{universal_matrix, universal_matrix_exact};
use crate::error::{Error, Result};
use crate::groups::LabeledGraph;

/// Determinant by partial-pivot Gaussian elimination; `a` is row-major `n x n`.
pub fn determinant(mut a: Vec<f64>, n: usize) -> f64 {
    assert_eq!(a.len(), n * n);
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .expect("nonempty range");
        if a[pivot * n + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for i in (col + 1)..n {
            let f = a[i * n + col] / p;
            if f != 0.0 {
                for k in col..n {
                    a[i * n + k] -= f * a[col * n + k];
                }
            }
        }
    }
    det
}

/// Exact determinant. Rows are cleared of denominators, then Bareiss
/// fraction-free elimination runs over the integers.
pub fn determinant_exact(a: &[BigRational], n: usize) -> BigRational {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut m: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        let row = &a[i * n..(i + 1) * n];
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale *= &l;
        m.extend(row.iter().map(|x| x.numer() * (&l / x.denom())));
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k * n + k].is_zero() {
            let Some(swap) = ((k + 1)..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigRational::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j]) / &prev;
                m[i * n + j] = v;
            }
        }
        prev = m[k * n + k].clone();
    }
    BigRational::new(sign * &m[n * n - 1], scale)
}

fn degrees_checked(g: &LabeledGraph) -> Result<Vec<usize>> {
    let degrees = g.degrees();
    match degrees.iter().position(|&d| d == 0) {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(degrees),
    }
}

/// `psi(lambda) = det(U(-1, 1 - lambda, 0, 0)) / prod deg`, which equals
/// `det(L_norm - lambda I)`. Rows are divided by the degrees before
/// elimination so no intermediate product overflows.
pub fn normalized_laplacian_charpoly_at(g: &LabeledGraph, lambda: f64) -> Result<f64> {
    let degrees = degrees_checked(g)?;
    let n = g.vertex_count();
    let p = UniversalParams::new(-1.0, 1.0 - lambda, 0.0, 0.0)?;
    let u = universal_matrix(g, &p);
    let mut a = u.as_slice().to_vec();
    for i in 0..n {
        let d = degrees[i] as f64;
        a[i * n..(i + 1) * n].iter_mut().for_each(|x| *x /= d);
    }
    Ok(determinant(a, n))
}

/// Exact `psi(lambda)` for rational `lambda`.
pub fn normalized_laplacian_charpoly_exact(g: &LabeledGraph, lambda: &BigRational) -> Result<BigRational> {
    let degrees = degrees_checked(g)?;
    let zero = BigRational::zero();
    let p = ExactParams::new(-BigRational::one(), BigRational::one() - lambda, zero.clone(), zero)?;
    let u = universal_matrix_exact(g, &p);
    let prod = degrees.iter().fold(BigInt::one(), |acc, &d| acc * BigInt::from(d));
    Ok(determinant_exact(&u, g.vertex_count()) / BigRational::from_integer(prod))
}
