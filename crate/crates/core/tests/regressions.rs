//! Pinned small examples and previously observed failures.

mod common;

use common::max_gap;
use powspec::closedforms::{complement_zpq_adjacency, graph_in_order, q2_complement_example, q2_vertex_order};
use powspec::groups::{complement_graph, power_graph_oracle};
use powspec::joinstruct::{build_join, definitional_graph, Variant};
use powspec::spectra::{
    charpoly_exact, complement_params, dense_eigen, hjoin_spectrum, normalized_laplacian_charpoly_at, quotient_k,
    tridiagonal_eigenvalues, universal_matrix, Provenance, UniversalParams, DEFAULT_TOL,
};
use powspec::{Error, GroupSpec};

fn grouped(spec: &GroupSpec, variant: Variant, p: &UniversalParams) -> Vec<(f64, usize)> {
    let js = build_join(spec, variant).unwrap();
    hjoin_spectrum(&js, p, false)
        .unwrap()
        .eigenspaces()
        .iter()
        .map(|e| (e.value, e.multiplicity))
        .collect()
}

fn assert_grouped(got: &[(f64, usize)], want: &[(f64, usize)]) {
    assert_eq!(got.len(), want.len(), "{got:?}");
    for (g, w) in got.iter().zip(want) {
        assert!((g.0 - w.0).abs() < 1e-9 && g.1 == w.1, "{got:?} vs {want:?}");
    }
}

#[test]
fn d15_laplacian_spectrum() {
    let spec = GroupSpec::dihedral(15).unwrap();
    let want = [
        (30.0, 1),
        (15.0, 8),
        (13.0, 3),
        (11.0, 1),
        (9.0, 1),
        (1.0, 15),
        (0.0, 1),
    ];
    assert_grouped(&grouped(&spec, Variant::Power, &UniversalParams::laplacian()), &want);
    let dense = dense_eigen(
        &universal_matrix(&power_graph_oracle(&spec), &UniversalParams::laplacian()),
        DEFAULT_TOL,
    )
    .unwrap();
    let dense: Vec<(f64, usize)> = dense.eigenspaces().iter().map(|e| (e.value, e.multiplicity)).collect();
    assert_grouped(&dense, &want);
}

#[test]
fn d15_quotient_polynomial() {
    let js = build_join(&GroupSpec::dihedral(15).unwrap(), Variant::Power).unwrap();
    let poly = charpoly_exact(&quotient_k(&js, &UniversalParams::laplacian())).unwrap();
    assert_eq!(poly.to_string(), "1/1 -55/1 909/1 -4905/1 4050/1 0/1");
    let roots: Vec<(f64, usize)> = poly.real_roots();
    assert_grouped(&roots, &[(30.0, 1), (15.0, 1), (9.0, 1), (1.0, 1), (0.0, 1)]);
}

#[test]
fn cyclic_prime_power_laplacian() {
    // Complete graph K_4: 4 with multiplicity 3, then 0.
    let got = grouped(
        &GroupSpec::cyclic(4).unwrap(),
        Variant::Power,
        &UniversalParams::laplacian(),
    );
    assert_grouped(&got, &[(4.0, 3), (0.0, 1)]);
}

#[test]
fn complement_adjacency_of_z6_and_z15() {
    for (p, q, s) in [(2, 3, 2f64.sqrt()), (3, 5, 8f64.sqrt())] {
        let n = p * q;
        let g = complement_graph(&power_graph_oracle(&GroupSpec::cyclic(n).unwrap()));
        let values = dense_eigen(&universal_matrix(&g, &UniversalParams::adjacency()), DEFAULT_TOL)
            .unwrap()
            .values();
        let mut want = vec![s];
        want.extend(std::iter::repeat_n(0.0, n as usize - 2));
        want.push(-s);
        assert!(max_gap(&values, &want) < 1e-10, "Z_{n}: {values:?}");
        assert!(max_gap(&complement_zpq_adjacency(p, q).unwrap().values(), &want) < 1e-12);
    }
}

#[test]
fn q2_complement_adjacency() {
    let spec = GroupSpec::dicyclic(2).unwrap();
    let cf = q2_complement_example(&UniversalParams::adjacency()).unwrap();
    let g = graph_in_order(&spec, false, true, &q2_vertex_order()).unwrap();
    let dense = dense_eigen(&universal_matrix(&g, &UniversalParams::adjacency()), DEFAULT_TOL)
        .unwrap()
        .values();
    assert!(max_gap(&cf.values(), &dense) < 1e-10);
}

#[test]
fn dicyclic_outside_powers_of_two_is_refused() {
    for n in [3, 5, 6, 12] {
        let spec = GroupSpec::dicyclic(n).unwrap();
        assert!(
            matches!(build_join(&spec, Variant::Power), Err(Error::StructureMismatch(_))),
            "Q_{n}"
        );
    }
    for n in [2, 4, 8, 16] {
        assert!(build_join(&GroupSpec::dicyclic(n).unwrap(), Variant::Power)
            .unwrap()
            .is_validated());
    }
}

#[test]
fn alpha_zero_is_rejected() {
    assert!(matches!(
        UniversalParams::new(0.0, 1.0, 1.0, 1.0),
        Err(Error::AlphaZero)
    ));
    assert!("0,1,2,3".parse::<UniversalParams>().is_err());
}

#[test]
fn normalized_laplacian_vanishes_at_zero() {
    for spec in [GroupSpec::cyclic(4).unwrap(), GroupSpec::dihedral(6).unwrap()] {
        let g = power_graph_oracle(&spec);
        assert!(
            normalized_laplacian_charpoly_at(&g, 0.0).unwrap().abs() < 1e-12,
            "{spec}"
        );
    }
}

#[test]
fn block_and_quotient_provenance() {
    let js = build_join(&GroupSpec::cyclic(12).unwrap(), Variant::Power).unwrap();
    let s = hjoin_spectrum(&js, &UniversalParams::new(1.0, 0.5, 0.0, 0.25).unwrap(), false).unwrap();
    let kinds: Vec<Provenance> = s.eigenspaces().iter().map(|e| e.provenance).collect();
    assert!(
        kinds.contains(&Provenance::BlockDiff) && kinds.contains(&Provenance::Quotient),
        "{kinds:?}"
    );
}

/// Implicit QL used to stall on a subdiagonal of 3e-323 between two zero
/// diagonal entries of this matrix.
#[test]
fn ql_splits_denormal_subdiagonal() {
    let spec = GroupSpec::cyclic(181).unwrap();
    let g = definitional_graph(&spec, Variant::Proper).unwrap();
    let base = UniversalParams::new(-1.25, -1.5, 0.0, -1.0).unwrap();
    let p = complement_params(&base, g.vertex_count());
    let u = universal_matrix(&g, &p);
    let ql = tridiagonal_eigenvalues(&u).unwrap();
    let js = build_join(&spec, Variant::Proper).unwrap();
    let structural = hjoin_spectrum(&js, &p, false).unwrap().values();
    assert!(max_gap(&ql, &structural) < 1e-8 * u.inf_norm().max(1.0));
}
