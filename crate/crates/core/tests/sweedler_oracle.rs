//! Sweedler coring of Q ⊂ Q(√2) against a hand-built model of A ⊗_Q A = Q⁴.

use std::sync::Arc;

use coring_lab_core::algebra::{Algebra, Bimodule, Subalgebra};
use coring_lab_core::coring::*;
use coring_lab_core::galois::*;
use coring_lab_core::linalg::*;

/// Multiplication in Q(√2) on pairs (a0, a1) = a0 + a1√2.
fn mul(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0 * b.0 + 2 * a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn setup() -> (Arc<Coring>, Vector, GaloisSetup) {
    let a = Arc::new(Algebra::quadratic_field(2));
    let b = Subalgebra::scalars(a.clone()).unwrap();
    let c = Arc::new(sweedler_coring(&b).unwrap());
    let g = grouplikes(&c).unwrap().found[0].clone();
    let x = coaction_from_grouplike(c.clone(), &g).unwrap();
    let reg = Bimodule::regular(a);
    let carrier = x.carrier.clone().with_left(reg.left().unwrap().restrict(&b, 2).unwrap()).unwrap();
    let sigma = Comodule::new(c.clone(), carrier, x.coaction.clone()).unwrap();
    (c, g, GaloisSetup::new(sigma).unwrap())
}

#[test]
fn dimensions_match_the_flat_model() {
    // A ⊗_Q A = Q⁴ and (A ⊗_Q A) ⊗_A (A ⊗_Q A) ≅ A ⊗_Q A ⊗_Q A = Q⁸.
    let (c, _, _) = setup();
    assert_eq!(c.dim(), 4);
    assert_eq!(c.square.dim(), 8);
    assert!(check_coring(&c).passed());
}

#[test]
fn coinvariants_match_brute_force() {
    // a⊗1 − 1⊗a = (0, −a1, a1, 0) in the basis e_i⊗e_j, so the kernel is a1 = 0.
    let mut oracle = ExactMatrix::zeros(4, 2);
    for (k, a) in [(1, 0), (0, 1)].into_iter().enumerate() {
        let left = [a.0, 0, a.1, 0];
        let right = [a.0, a.1, 0, 0];
        for i in 0..4 {
            oracle.set(i, k, rational(left[i] - right[i]));
        }
    }
    let expected = 2 - oracle.rank();
    let (c, g, _) = setup();
    assert_eq!(coinvariants(&c, &g).unwrap().dim(), expected);
    assert_eq!(expected, 1);
}

#[test]
fn endomorphisms_of_a_are_the_coinvariants() {
    let (c, g, _) = setup();
    let x = coaction_from_grouplike(c.clone(), &g).unwrap();
    let end = endomorphism_ring(&x).unwrap();
    assert_eq!(end.algebra.dim(), coinvariants(&c, &g).unwrap().dim());
}

#[test]
fn comultiplication_matches_formula() {
    // Δ(e_i⊗e_j) = (e_i⊗1)⊗_A(1⊗e_j), with 1 = e_0 and A ⊗_Q A on the flat basis.
    let (c, _, _) = setup();
    let units = [(1, 0), (0, 1)];
    for i in 0..2 {
        for j in 0..2 {
            let src = c.square.class_of(&{
                let mut v = zero_vector(4);
                v[i * 2] = rational(1);
                v
            }, &{
                let mut v = zero_vector(4);
                v[j] = rational(1);
                v
            });
            let col = c.delta.column(i * 2 + j);
            assert_eq!(col, src, "Δ(e{i}⊗e{j})");
        }
    }
    // ε(a⊗a') = aa'.
    for i in 0..2 {
        for j in 0..2 {
            let p = mul(units[i], units[j]);
            assert_eq!(c.epsilon.column(i * 2 + j), vec![rational(p.0), rational(p.1)]);
        }
    }
}

#[test]
fn can_is_the_identity_under_evaluation_at_one() {
    // Ω(φ⊗u) = φ(1)⊗u identifies Σ* ⊗_Q Σ with A ⊗_Q A; can must equal Ω.
    // Over B = Q the Sweedler carrier is A ⊗_Q A on its flat basis.
    let (_, _, s) = setup();
    let maps = s.data.dual.hom.basis_maps();
    let mut flat = ExactMatrix::zeros(4, maps.len() * 2);
    for (p, phi) in maps.iter().enumerate() {
        let at_one = phi.column(0);
        for j in 0..2 {
            for (i, x) in at_one.iter().enumerate() {
                flat.set(i * 2 + j, p * 2 + j, x.clone());
            }
        }
    }
    let omega = &flat * s.data.tensor.section();
    assert_eq!(s.can, omega);
    assert!(is_isomorphism(&omega));
    assert_eq!(s.galois_verdict().detail, "can is 4×4 invertible");
}

#[test]
fn equivalence_report_is_all_green() {
    let (c, g, s) = setup();
    let b = s.b().clone();
    let comodules = vec![
        ("C".to_string(), Comodule::cofree(c.clone()).unwrap()),
        ("A".to_string(), coaction_from_grouplike(c, &g).unwrap()),
    ];
    let bmodules = vec![
        ("B".to_string(), Bimodule::regular_right(b.clone())),
        ("B²".to_string(), Bimodule::free_right(b, 2)),
    ];
    let report = equivalence_report(&s, &comodules, &bmodules, &[]).unwrap();
    assert!(report.all_green(), "{report:#?}");
    assert_eq!(report.equivalence, Some(true));
}
