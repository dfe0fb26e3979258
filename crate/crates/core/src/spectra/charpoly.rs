//! Exact characteristic polynomials over the rationals and certified real
//! root location (square-free factorization, Sturm sequences, bisection).

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use super::params::{format_rational, ExactParams};
use super::quotient::QuotientMatrix;
use crate::error::Result;

/// Polynomial with rational coefficients, stored ascending without trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn from_ascending(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_descending(mut coeffs: Vec<BigRational>) -> Self {
        coeffs.reverse();
        Self::from_ascending(coeffs)
    }

    pub fn from_integers_descending(coeffs: &[i64]) -> Self {
        Self::from_descending(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPoly {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn ascending(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<BigRational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::from_ascending(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                Self::from_ascending(self.coeffs.iter().map(|c| c / &lead).collect())
            }
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().expect("nonzero").clone();
        let mut r = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &r[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_ascending(q), Self::from_ascending(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigRational::zero();
        Self::from_ascending(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        Self::from_ascending(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Yun's algorithm: pairwise coprime square-free factors with their
    /// multiplicities, so that `self = c * prod f_i^{m_i}`.
    pub fn square_free_decomposition(&self) -> Vec<(RationalPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().is_none_or(|d| d == 0) {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut c = f.div_rem(&g).0;
        let mut d = df.div_rem(&g).0.sub(&c.derivative());
        let mut m = 1;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), m));
            }
            c = c.div_rem(&a).0;
            d = d.div_rem(&a).0.sub(&c.derivative());
            m += 1;
        }
        out
    }

    /// Distinct real roots with multiplicities, descending, each located to
    /// within a relative width of `2^-60`.
    pub fn real_roots(&self) -> Vec<(f64, usize)> {
        let mut roots: Vec<(f64, usize)> = self
            .square_free_decomposition()
            .into_iter()
            .flat_map(|(f, m)| isolate_and_refine(&f).into_iter().map(move |x| (x, m)))
            .collect();
        roots.sort_by(|a, b| b.0.total_cmp(&a.0));
        roots
    }
}

impl fmt::Display for RationalPoly {
    /// Descending coefficients as `num/den`, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0/1");
        }
        let parts: Vec<String> = self.descending().iter().map(format_rational).collect();
        f.write_str(&parts.join(" "))
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

struct Sturm {
    chain: Vec<RationalPoly>,
}

impl Sturm {
    fn new(f: &RationalPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1.neg();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        Sturm { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Roots of a square-free polynomial.
fn isolate_and_refine(f: &RationalPoly) -> Vec<f64> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let lead = f.leading().expect("nonzero").abs();
    let bound = f.coeffs[..deg]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m })
        + BigRational::one();
    let sturm = Sturm::new(f);
    let two = int(2);
    let mut pending = vec![(-bound.clone(), bound)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                pending.push((lo, mid.clone()));
                pending.push((mid, hi));
            }
        }
    }
    isolated.into_iter().map(|(lo, hi)| refine(f, &sturm, lo, hi)).collect()
}

/// Bisects `(lo, hi]`, known to hold exactly one root.
fn refine(f: &RationalPoly, sturm: &Sturm, mut lo: BigRational, mut hi: BigRational) -> f64 {
    let two = int(2);
    let eps = BigRational::new(BigInt::one(), BigInt::one() << 60);
    if f.eval(&hi).is_zero() {
        return hi.to_f64().unwrap_or(f64::NAN);
    }
    // A root of f at lo belongs to a neighbouring interval; step off it.
    while f.eval(&lo).is_zero() {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let lo_positive = f.eval(&lo).is_positive();
    loop {
        let width = &hi - &lo;
        let scale = if lo.abs() > BigRational::one() {
            lo.abs()
        } else {
            BigRational::one()
        };
        if width <= &eps * scale {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let v = f.eval(&mid);
        if v.is_zero() {
            return mid.to_f64().unwrap_or(f64::NAN);
        }
        if v.is_positive() == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ((&lo + &hi) / two).to_f64().unwrap_or(f64::NAN)
}

/// Faddeev-LeVerrier: `det(lambda I - B)` for a row-major `t x t` matrix.
pub fn faddeev_leverrier(b: &[BigRational], t: usize) -> RationalPoly {
    assert_eq!(b.len(), t * t);
    let mut coeffs = vec![BigRational::zero(); t + 1];
    coeffs[t] = BigRational::one();
    // M_0 = 0; M_k = B M_{k-1} + c_{t-k+1} I; c_{t-k} = -tr(B M_k) / k.
    let mut m = vec![BigRational::zero(); t * t];
    for k in 1..=t {
        let mut next = vec![BigRational::zero(); t * t];
        for i in 0..t {
            for j in 0..t {
                let mut s = BigRational::zero();
                for l in 0..t {
                    if !b[i * t + l].is_zero() && !m[l * t + j].is_zero() {
                        s += &b[i * t + l] * &m[l * t + j];
                    }
                }
                next[i * t + j] = s;
            }
        }
        for i in 0..t {
            next[i * t + i] += &coeffs[t - k + 1];
        }
        m = next;
        let mut tr = BigRational::zero();
        for i in 0..t {
            for l in 0..t {
                if !b[i * t + l].is_zero() && !m[l * t + i].is_zero() {
                    tr += &b[i * t + l] * &m[l * t + i];
                }
            }
        }
        coeffs[t - k] = -tr / int(k as i64);
    }
    RationalPoly::from_ascending(coeffs)
}

/// `det(lambda I - B)` with the quotient's own parameters read exactly.
pub fn charpoly_exact(q: &QuotientMatrix) -> Result<RationalPoly> {
    charpoly_exact_with(q, &ExactParams::from_f64(q.params())?)
}

/// `det(lambda I - B)` under explicitly rational parameters.
pub fn charpoly_exact_with(q: &QuotientMatrix, p: &ExactParams) -> Result<RationalPoly> {
    Ok(faddeev_leverrier(&q.b_exact(p), q.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> RationalPoly {
        RationalPoly::from_integers_descending(c)
    }

    #[test]
    fn one_by_one() {
        let p = faddeev_leverrier(&[int(7)], 1);
        assert_eq!(p, poly(&[1, -7]));
    }

    #[test]
    fn two_by_two() {
        // [[2, 1], [1, 2]] -> x^2 - 4x + 3.
        let p = faddeev_leverrier(&[int(2), int(1), int(1), int(2)], 2);
        assert_eq!(p, poly(&[1, -4, 3]));
        assert_eq!(p.to_string(), "1/1 -4/1 3/1");
    }

    #[test]
    fn yun_decomposition() {
        // (x - 1)^3 (x + 2)^2 (x - 5)
        let f = poly(&[1, -1]);
        let g = poly(&[1, 2]);
        let h = poly(&[1, -5]);
        let mul = |a: &RationalPoly, b: &RationalPoly| {
            let mut c = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
            for (i, x) in a.coeffs.iter().enumerate() {
                for (j, y) in b.coeffs.iter().enumerate() {
                    c[i + j] += x * y;
                }
            }
            RationalPoly::from_ascending(c)
        };
        let p = mul(&mul(&mul(&f, &f), &mul(&f, &g)), &mul(&g, &h));
        let dec = p.square_free_decomposition();
        assert_eq!(dec, vec![(h.clone(), 1), (g.clone(), 2), (f.clone(), 3)]);
        let roots = p.real_roots();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0], (5.0, 1));
        assert_eq!(roots[1], (1.0, 3));
        assert_eq!(roots[2], (-2.0, 2));
    }

    #[test]
    fn irrational_roots() {
        // x^2 - 2
        let r = poly(&[1, 0, -2]).real_roots();
        assert!((r[0].0 - 2f64.sqrt()).abs() < 1e-15);
        assert!((r[1].0 + 2f64.sqrt()).abs() < 1e-15);
        // x^2 + 1 has no real roots.
        assert!(poly(&[1, 0, 1]).real_roots().is_empty());
    }

    #[test]
    fn close_roots_are_separated() {
        // (x - 1)(x - 1 - 2^-30)
        let a = BigRational::one();
        let b = BigRational::one() + BigRational::new(BigInt::one(), BigInt::one() << 30);
        let p = RationalPoly::from_ascending(vec![&a * &b, -(&a + &b), BigRational::one()]);
        let r = p.real_roots();
        assert_eq!(r.len(), 2);
        assert!((r[0].0 - b.to_f64().unwrap()).abs() < 1e-15);
        assert!((r[1].0 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sturm_count_half_open() {
        let f = poly(&[1, 0, -1]);
        let s = Sturm::new(&f);
        assert_eq!(s.count(&int(-1), &int(1)), 1);
        assert_eq!(s.count(&int(-2), &int(1)), 2);
        assert_eq!(s.count(&int(-2), &int(0)), 1);
    }
}
