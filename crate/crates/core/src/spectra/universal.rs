use num::{BigInt, BigRational, Zero};

use super::matrix::DenseSymMatrix;
use super::params::{ExactParams, UniversalParams};
use crate::groups::LabeledGraph;

/// `U = alpha A + beta D + gamma I + eta J` in the graph's vertex order.
pub fn universal_matrix(g: &LabeledGraph, p: &UniversalParams) -> DenseSymMatrix {
    let degrees = g.degrees();
    DenseSymMatrix::from_fn(g.vertex_count(), |i, j| {
        if i == j {
            p.beta() * degrees[i] as f64 + p.gamma() + p.eta()
        } else if g.has_edge(i, j) {
            p.alpha() + p.eta()
        } else {
            p.eta()
        }
    })
}

/// Exact counterpart of [`universal_matrix`], row-major.
pub fn universal_matrix_exact(g: &LabeledGraph, p: &ExactParams) -> Vec<BigRational> {
    let n = g.vertex_count();
    let degrees = g.degrees();
    let edge = &p.alpha + &p.eta;
    let mut out = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = if i == j {
                &p.beta * BigRational::from_integer(BigInt::from(degrees[i])) + &p.gamma + &p.eta
            } else if g.has_edge(i, j) {
                edge.clone()
            } else {
                p.eta.clone()
            };
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{complement_graph, power_graph_oracle, GroupSpec};
    use crate::spectra::params::complement_params;

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = power_graph_oracle(&GroupSpec::cyclic(12).unwrap());
        let u = universal_matrix(&g, &UniversalParams::laplacian());
        for i in 0..u.dim() {
            assert_eq!(u.row(i).iter().sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn complement_identity_is_exact_for_integer_params() {
        for spec in ["z12", "d5", "q4"] {
            let g = power_graph_oracle(&spec.parse::<GroupSpec>().unwrap());
            let gc = complement_graph(&g);
            let p = UniversalParams::new(3.0, -2.0, 5.0, 7.0).unwrap();
            let lhs = universal_matrix(&gc, &p);
            let rhs = universal_matrix(&g, &complement_params(&p, g.vertex_count()));
            assert_eq!(lhs, rhs, "{spec}");
        }
    }

    #[test]
    fn exact_and_float_agree_on_integers() {
        let g = power_graph_oracle(&GroupSpec::dihedral(4).unwrap());
        let p = UniversalParams::seidel();
        let f = universal_matrix(&g, &p);
        let e = universal_matrix_exact(&g, &ExactParams::from_f64(&p).unwrap());
        let n = g.vertex_count();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(BigRational::from_float(f.get(i, j)).unwrap(), e[i * n + j]);
            }
        }
    }
}
