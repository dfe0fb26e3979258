//! Universal adjacency spectra: dense oracles, the join route and exact
//! characteristic polynomials.

pub mod charpoly;
pub mod det;
pub mod hjoin;
pub mod jacobi;
pub mod matrix;
pub mod params;
pub mod quotient;
pub mod spectrum;
pub mod tridiag;
pub mod universal;
pub mod verify;

pub use charpoly::{charpoly_exact, charpoly_exact_with, faddeev_leverrier, RationalPoly};
pub use det::{determinant, determinant_exact, normalized_laplacian_charpoly_at, normalized_laplacian_charpoly_exact};
pub use hjoin::{block_eigenvalue, hjoin_spectrum};
pub use jacobi::{dense_eigen, jacobi, jacobi_eigenvalues, Eigensystem, DEFAULT_TOL, MAX_SWEEPS};
pub use matrix::DenseSymMatrix;
pub use params::{complement_params, parse_rational, ExactParams, Preset, UniversalParams};
pub use quotient::{quotient_k, QuotientMatrix};
pub use spectrum::{max_value_gap, Eigenpair, Eigenspace, Provenance, Spectrum, GROUPING_REL_TOL};
pub use tridiag::tridiagonal_eigenvalues;
pub use universal::{universal_matrix, universal_matrix_exact};
pub use verify::{verify_eigenpairs, EigenspaceCheck, VerificationReport, COMPARISON_REL_TOL};
