use num::{BigInt, BigRational, Zero};

use super::matrix::DenseSymMatrix;
use super::params::{ExactParams, UniversalParams};
use crate::joinstruct::{BlockLabel, JoinStructure};

/// Symmetric quotient `K` of `U` over the block partition, together with
/// the data needed for its integer-similar form `B = N^{-1/2} K N^{1/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    labels: Vec<BlockLabel>,
    sizes: Vec<usize>,
    regularities: Vec<usize>,
    join_degrees: Vec<usize>,
    adjacent: Vec<bool>,
    params: UniversalParams,
    k: DenseSymMatrix,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.sizes.len()
    }

    pub fn k(&self) -> &DenseSymMatrix {
        &self.k
    }

    pub fn labels(&self) -> &[BlockLabel] {
        &self.labels
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn params(&self) -> &UniversalParams {
        &self.params
    }

    pub fn template_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacent[i * self.dim() + j]
    }

    /// `B_ii = kappa_i`, `B_ij = theta_ij n_j`; row-major.
    pub fn b(&self) -> Vec<f64> {
        let t = self.dim();
        let mut out = vec![0.0; t * t];
        for i in 0..t {
            for j in 0..t {
                out[i * t + j] = if i == j {
                    self.k.get(i, i)
                } else {
                    self.theta(i, j) * self.sizes[j] as f64
                };
            }
        }
        out
    }

    /// Exact `B` under the given rational parameters.
    pub fn b_exact(&self, p: &ExactParams) -> Vec<BigRational> {
        let t = self.dim();
        let int = |x: usize| BigRational::from_integer(BigInt::from(x));
        let mut out = vec![BigRational::zero(); t * t];
        for i in 0..t {
            for j in 0..t {
                out[i * t + j] = if i == j {
                    &p.alpha * int(self.regularities[i])
                        + &p.beta * int(self.regularities[i] + self.join_degrees[i])
                        + &p.gamma
                        + &p.eta * int(self.sizes[i])
                } else if self.template_adjacent(i, j) {
                    (&p.alpha + &p.eta) * int(self.sizes[j])
                } else {
                    &p.eta * int(self.sizes[j])
                };
            }
        }
        out
    }

    /// Block-constant vector with value `nu_i / sqrt(n_i)` on block `i`; unit
    /// length when `nu` is.
    pub fn lift(&self, nu: &[f64]) -> Vec<f64> {
        assert_eq!(nu.len(), self.dim());
        self.sizes
            .iter()
            .zip(nu)
            .flat_map(|(&n, &x)| std::iter::repeat_n(x / (n as f64).sqrt(), n))
            .collect()
    }

    fn theta(&self, i: usize, j: usize) -> f64 {
        if self.template_adjacent(i, j) {
            self.params.alpha() + self.params.eta()
        } else {
            self.params.eta()
        }
    }
}

/// `K_ii = alpha r_i + beta (r_i + rho_i) + gamma + eta n_i`,
/// `K_ij = theta_ij sqrt(n_i n_j)`.
pub fn quotient_k(js: &JoinStructure, p: &UniversalParams) -> QuotientMatrix {
    let blocks = js.blocks();
    let t = blocks.len();
    let template = js.template();
    let sizes: Vec<usize> = blocks.iter().map(|b| b.size()).collect();
    let regularities: Vec<usize> = blocks.iter().map(|b| b.regularity()).collect();
    let join_degrees: Vec<usize> = blocks.iter().map(|b| b.join_degree).collect();
    let mut adjacent = vec![false; t * t];
    for i in 0..t {
        for j in 0..t {
            adjacent[i * t + j] = template.has_edge(i, j);
        }
    }
    let k = DenseSymMatrix::from_fn(t, |i, j| {
        if i == j {
            p.alpha() * regularities[i] as f64
                + p.beta() * (regularities[i] + join_degrees[i]) as f64
                + p.gamma()
                + p.eta() * sizes[i] as f64
        } else {
            let theta = if adjacent[i * t + j] {
                p.alpha() + p.eta()
            } else {
                p.eta()
            };
            theta * ((sizes[i] * sizes[j]) as f64).sqrt()
        }
    });
    QuotientMatrix {
        labels: blocks.iter().map(|b| b.label).collect(),
        sizes,
        regularities,
        join_degrees,
        adjacent,
        params: *p,
        k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;
    use crate::joinstruct::assemble;
    use crate::joinstruct::{build_join, Variant};
    use crate::spectra::universal::universal_matrix;

    #[test]
    fn z6_adjacency_quotient() {
        let js = build_join(&GroupSpec::cyclic(6).unwrap(), Variant::Power).unwrap();
        let q = quotient_k(&js, &UniversalParams::adjacency());
        // Blocks 1, 2, 3, 6 with sizes 2, 2, 1, 1; 2 and 3 are not adjacent.
        assert_eq!(q.sizes(), &[2, 2, 1, 1]);
        assert_eq!(q.k().get(0, 0), 1.0);
        assert_eq!(q.k().get(1, 2), 0.0);
        assert!((q.k().get(0, 1) - 2.0).abs() < 1e-15);
        assert_eq!(q.b()[4 + 3], 1.0);
    }

    #[test]
    fn lifted_vectors_are_eigenvectors_of_u() {
        let p = UniversalParams::new(1.5, -0.5, 2.0, 0.25).unwrap();
        let js = build_join(&GroupSpec::dihedral(6).unwrap(), Variant::Power).unwrap();
        let q = quotient_k(&js, &p);
        let u = universal_matrix(&assemble(&js), &p);
        let es = crate::spectra::jacobi::jacobi(q.k(), 1e-14, true).unwrap();
        for (lambda, nu) in es.values.iter().zip(es.vectors.unwrap()) {
            let x = q.lift(&nu);
            let ux = u.mul_vec(&x).unwrap();
            for i in 0..x.len() {
                assert!((ux[i] - lambda * x[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn exact_b_matches_float_b() {
        let p = UniversalParams::seidel();
        let js = build_join(&GroupSpec::dicyclic(4).unwrap(), Variant::Proper).unwrap();
        let q = quotient_k(&js, &p);
        let exact = q.b_exact(&ExactParams::from_f64(&p).unwrap());
        for (x, y) in q.b().iter().zip(&exact) {
            assert_eq!(BigRational::from_float(*x).unwrap(), *y);
        }
    }
}
