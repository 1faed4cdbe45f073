use std::sync::Arc;

use coring_lab_core::algebra::{Action, Algebra, Bimodule};
use coring_lab_core::coring::*;
use coring_lab_core::galois::*;
use coring_lab_core::linalg::*;

fn q() -> Arc<Algebra> {
    Arc::new(Algebra::scalars())
}

fn over_q(left: Arc<Algebra>, left_mats: Vec<ExactMatrix>, dim: usize) -> Bimodule {
    Bimodule::new(
        dim,
        Some(Action::new(left, left_mats).unwrap()),
        Some(Action::new(q(), vec![ExactMatrix::identity(dim)]).unwrap()),
    )
    .unwrap()
}

/// Matrix coalgebra structure written out directly: Δ(E_ij) = Σ_k E_ik ⊗ E_kj
/// on Q⁴ ⊗ Q⁴ and ε(E_ij) = δ_ij.
fn matrix_oracle() -> (ExactMatrix, ExactMatrix) {
    let mut delta = ExactMatrix::zeros(16, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                delta.set((i * 2 + k) * 4 + k * 2 + j, i * 2 + j, rational(1));
            }
        }
    }
    let eps = ExactMatrix::from_i64_rows(&[&[1, 0, 0, 1]]);
    (delta, eps)
}

#[test]
fn comatrix_of_q2_is_the_matrix_coalgebra_entry_for_entry() {
    let sigma = over_q(q(), vec![ExactMatrix::identity(2)], 2);
    let data = comatrix_coring(&sigma).unwrap();
    let c = &data.coring;
    assert_eq!(c.dim(), 4);
    // Ω(φ⊗u) = Σ_ij φ(e_i) u_j E_ij.
    let maps = data.dual.hom.basis_maps();
    let mut flat = ExactMatrix::zeros(4, maps.len() * 2);
    for (p, phi) in maps.iter().enumerate() {
        for j in 0..2 {
            for i in 0..2 {
                flat.set(i * 2 + j, p * 2 + j, phi.get(0, i).clone());
            }
        }
    }
    let omega = &flat * data.tensor.section();
    assert!(is_isomorphism(&omega));
    let (delta, eps) = matrix_oracle();
    let lhs = &(&kronecker(&omega, &omega) * c.square.section()) * &c.delta;
    assert_eq!(lhs, &delta * &omega);
    assert_eq!(&eps * &omega, c.epsilon);
    assert!(check_coring(c).passed());
}

#[test]
fn library_matrix_coalgebra_matches_oracle() {
    let c = matrix_coalgebra(2).unwrap();
    let (delta, eps) = matrix_oracle();
    assert_eq!(c.square.section() * &c.delta, delta);
    assert_eq!(c.epsilon, eps);
}

#[test]
fn grouplike_coaction_has_rank_one_can() {
    let c = Arc::new(group_coalgebra(2).unwrap());
    let sigma = over_q(q(), vec![ExactMatrix::identity(1)], 1);
    let sc = coring_lab_core::algebra::tensor_over(&sigma, &c.carrier).unwrap();
    let rho = ExactMatrix::column_vector(&sc.class_of(&[rational(1)], &[rational(1), rational(0)]));
    let setup = GaloisSetup::new(Comodule::new(c, sigma, rho).unwrap()).unwrap();
    // can(1*⊗1) = 1*(1)·e = e.
    let phi = setup.data.dual.hom.basis_map(0).get(0, 0).clone();
    assert_eq!(setup.can, ExactMatrix::from_columns(2, &[vec![phi, rational(0)]]));
    assert_eq!(setup.can_rank(), 1);
    assert!(!setup.is_galois());
}

#[test]
fn correspondence_roundtrips_are_identities() {
    let b = Arc::new(Algebra::truncated_polynomial(2));
    let x = ExactMatrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
    let sigma = over_q(b, vec![ExactMatrix::identity(3), x], 3);
    let data = comatrix_coring(&sigma).unwrap();
    let id = ExactMatrix::identity(data.tensor.dim());
    let rho = coaction_from_can(&data, &data.coring, &id).unwrap();
    assert!(check_comodule(&rho).passed());
    assert_eq!(can_from_coaction(&data, &rho).unwrap(), id);
    let again = coaction_from_can(&data, &data.coring, &can_from_coaction(&data, &rho).unwrap()).unwrap();
    assert_eq!(again.coaction, rho.coaction);
}

#[test]
fn non_flat_sigma_breaks_equalizer_preservation() {
    // B = Q[x]/(x²) acting on Σ = B ⊕ Q; X is Q with coaction through q*⊗q.
    let b = Arc::new(Algebra::truncated_polynomial(2));
    let x = ExactMatrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
    let sigma = over_q(b, vec![ExactMatrix::identity(3), x], 3);
    let data = comatrix_coring(&sigma).unwrap();
    let id = ExactMatrix::identity(data.tensor.dim());
    let setup = GaloisSetup::new(coaction_from_can(&data, &data.coring, &id).unwrap()).unwrap();
    assert!(setup.is_galois());
    let q_star = data.dual.hom.coordinates(&ExactMatrix::from_i64_rows(&[&[0, 0, 1]])).unwrap();
    let g = data.tensor.class_of(&q_star, &unit_vector(3, 2));
    assert!(is_grouplike(&data.coring, &g));
    let xq = coaction_from_grouplike(setup.coring().clone(), &g).unwrap();
    // Hom^C(Σ, X) = 0 since X only sees the Q summand, which x·Σ cannot reach.
    assert_eq!(cotensor(&setup, &xq).unwrap().dim(), 0);
    let pn = psi_nu_factorization(&setup, &xq).unwrap();
    assert_eq!((pn.psi.rows(), pn.psi.cols()), (1, 0));
    assert!(!pn.psi_iso && pn.nu_iso && !pn.counit_iso);
    assert_eq!(pn.biconditional, Some(true));
    assert!(pn.factorization_holds);
}
