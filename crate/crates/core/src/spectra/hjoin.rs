//! Spectrum of `U` over a join structure without forming `U`.
//!
//! Each block of size `m` contributes `m - 1` eigenvalues with vectors
//! supported on that block and summing to zero there; the remaining `t`
//! come from the quotient `K`, lifted block-constantly.

use super::jacobi::{jacobi, DEFAULT_TOL};
use super::params::UniversalParams;
use super::quotient::quotient_k;
use super::spectrum::{Eigenpair, Provenance, Spectrum};
use crate::error::Result;
use crate::joinstruct::{validate, BlockKind, JoinStructure};

/// Eigenvalue carried by the block-difference vectors of one block.
pub fn block_eigenvalue(kind: BlockKind, vertex_degree: usize, p: &UniversalParams) -> f64 {
    let inner = match kind {
        BlockKind::Complete => -p.alpha(),
        BlockKind::Empty => 0.0,
    };
    inner + p.beta() * vertex_degree as f64 + p.gamma()
}

/// Unvalidated structures are validated first.
pub fn hjoin_spectrum(js: &JoinStructure, p: &UniversalParams, want_vectors: bool) -> Result<Spectrum> {
    if !js.is_validated() {
        validate(js)?;
    }
    let order = js.order();
    let offsets = js.block_offsets();
    let mut pairs = Vec::with_capacity(order);

    for (block, &offset) in js.blocks().iter().zip(&offsets) {
        let value = block_eigenvalue(block.kind, block.vertex_degree(), p);
        for r in 1..block.size() {
            let vector = want_vectors.then(|| {
                let mut x = vec![0.0; order];
                x[offset] = 1.0;
                x[offset + r] = -1.0;
                x
            });
            pairs.push(Eigenpair {
                value,
                provenance: Provenance::BlockDiff,
                vector,
            });
        }
    }

    let q = quotient_k(js, p);
    let es = jacobi(q.k(), DEFAULT_TOL, want_vectors)?;
    match es.vectors {
        Some(vs) => {
            for (value, nu) in es.values.into_iter().zip(vs) {
                pairs.push(Eigenpair {
                    value,
                    provenance: Provenance::Quotient,
                    vector: Some(q.lift(&nu)),
                });
            }
        }
        None => pairs.extend(es.values.into_iter().map(|value| Eigenpair {
            value,
            provenance: Provenance::Quotient,
            vector: None,
        })),
    }

    let scale = pairs.iter().fold(0.0f64, |m, e| m.max(e.value.abs()));
    Ok(Spectrum::from_pairs(pairs, scale))
}
