use coring_lab_core::linalg::*;
use proptest::prelude::*;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| ExactMatrix::from_entries(r, c, v.into_iter().map(rational).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix(5, 6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        prop_assert!((&m * k.inclusion()).is_zero());
    }

    #[test]
    fn cokernel_projection_and_section(rel in small_matrix(5, 4)) {
        let q = cokernel(&rel, rel.rows()).unwrap();
        prop_assert!((&q.projection * &q.section).is_identity());
        prop_assert!((&q.projection * &rel).is_zero());
        prop_assert_eq!(q.dim() + rel.rank(), rel.rows());
    }

    #[test]
    fn kronecker_is_functorial(f1 in small_matrix(3, 3), g1 in small_matrix(3, 3)) {
        // Square up so the composites are defined.
        let f2 = ExactMatrix::from_fn(f1.cols(), 2, |i, j| rational((i + 2 * j) as i64 - 1));
        let g2 = ExactMatrix::from_fn(g1.cols(), 2, |i, j| rational((3 * i) as i64 - j as i64));
        prop_assert_eq!(kronecker(&(&f1 * &f2), &(&g1 * &g2)), &kronecker(&f1, &g1) * &kronecker(&f2, &g2));
    }

    #[test]
    fn inverse_is_two_sided(m in small_matrix(4, 4)) {
        if let Some(inv) = m.inverse() {
            prop_assert!((&m * &inv).is_identity());
            prop_assert!((&inv * &m).is_identity());
            prop_assert!(is_isomorphism(&m));
        } else {
            prop_assert!(!is_isomorphism(&m));
        }
    }

    #[test]
    fn solve_returns_a_preimage(m in small_matrix(4, 5), x in prop::collection::vec(-2i64..=2, 5)) {
        let x: Vec<Rational> = x.into_iter().take(m.cols()).chain(std::iter::repeat(0)).take(m.cols()).map(rational).collect();
        let b = m.apply(&x);
        let y = m.solve(&b).expect("b lies in the image");
        prop_assert_eq!(m.apply(&y), b);
    }
}

#[test]
fn cokernel_of_diagonal_relation_identifies_coordinates() {
    let rel = ExactMatrix::from_i64_rows(&[&[1], &[-1]]);
    let q = cokernel(&rel, 2).unwrap();
    assert_eq!(q.projection, ExactMatrix::from_i64_rows(&[&[1, 1]]));
}
