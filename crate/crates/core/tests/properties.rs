//! Randomized invariants of the exact linear algebra layer and the groupoid
//! algebra pipeline. Dimensions stay small; every assertion is exact.

use proptest::collection::vec as pvec;
use proptest::prelude::*;

use wharf_core::groupoid::{
    cyclic_group, disjoint_union_of_groups, groupoid_algebra, pair_groupoid, FiniteGroupoid,
};
use wharf_core::linalg::{vec_display, vec_is_zero, Matrix, QuotientSpace, Rat, Subspace};
use wharf_core::paction::{classify_ground_field, classify_ground_field_oracle};

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rat::new(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    pvec(rat(), rows * cols)
        .prop_map(move |data| Matrix::from_fn(rows, cols, |i, j| data[i * cols + j].clone()))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

fn random_groupoid() -> impl Strategy<Value = FiniteGroupoid> {
    prop_oneof![
        (1usize..=3).prop_map(|n| pair_groupoid(n).unwrap()),
        pvec(1usize..=3, 1..=2).prop_map(|orders| {
            let tables: Vec<_> = orders.into_iter().map(cyclic_group).collect();
            disjoint_union_of_groups(&tables).unwrap()
        }),
    ]
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let once = m.rref();
        prop_assert_eq!(once.rref(), once);
    }

    #[test]
    fn rank_and_kernel_are_exact(m in any_matrix()) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for t in 0..kernel.dim() {
            prop_assert!(vec_is_zero(&m.mul_vec(kernel.basis_row(t))));
        }
    }

    #[test]
    fn spans_do_not_depend_on_the_presentation(
        rows in (1usize..=4).prop_flat_map(|n| pvec(pvec(rat(), n), 1..=4)),
        scale in (1i64..=5),
    ) {
        let ambient = rows[0].len();
        let s = Subspace::from_spanning(ambient, &rows);
        let mut shuffled: Vec<Vec<Rat>> = rows.iter().rev().cloned().collect();
        let c = Rat::from_int(scale);
        for entry in &mut shuffled[0] {
            *entry = &*entry * &c;
        }
        let last = shuffled.last().unwrap().clone();
        for (i, entry) in shuffled[0].clone().iter().enumerate() {
            shuffled[0][i] = entry + &last[i];
        }
        prop_assert_eq!(Subspace::from_spanning(ambient, &shuffled), s);
    }

    #[test]
    fn quotients_invert_their_sections(
        rows in (2usize..=4).prop_flat_map(|n| pvec(pvec(rat(), n), 1..=2)),
        coords in pvec(rat(), 4),
    ) {
        let ambient = rows[0].len();
        let relations = Subspace::from_spanning(ambient, &rows);
        let q = QuotientSpace::new(relations.clone());
        prop_assert_eq!(q.dim() + relations.dim(), ambient);
        for t in 0..relations.dim() {
            prop_assert!(vec_is_zero(&q.project(relations.basis_row(t))));
        }
        let w: Vec<Rat> = coords.iter().take(q.dim()).cloned().collect();
        prop_assert_eq!(q.project(&q.section(&w)), w);
    }

    #[test]
    fn kronecker_products_respect_composition(
        (a, c) in (1usize..=3, 1usize..=3, 1usize..=3)
            .prop_flat_map(|(r, m, k)| (matrix(r, m), matrix(m, k))),
        (b, d) in (1usize..=3, 1usize..=3, 1usize..=3)
            .prop_flat_map(|(r, m, k)| (matrix(r, m), matrix(m, k))),
    ) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn solve_finds_exact_solutions(
        (m, x) in (1usize..=4, 1usize..=4)
            .prop_flat_map(|(r, c)| (matrix(r, c), pvec(rat(), c))),
    ) {
        let rhs = m.mul_vec(&x);
        let y = m.solve(&rhs).expect("a solution exists by construction");
        prop_assert_eq!(m.mul_vec(&y), rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn random_groupoid_algebras_verify_and_classify(g in random_groupoid()) {
        prop_assert!(g.validate().is_ok());
        let rep = groupoid_algebra(&g).full_report();
        prop_assert!(rep.passed(), "{}", rep);

        let classes = classify_ground_field(&g, 16).unwrap();
        let oracle = classify_ground_field_oracle(&g, 16).unwrap();
        let mut found: Vec<String> =
            classes.iter().map(|c| vec_display(c.action.lambda())).collect();
        let mut expected: Vec<String> = oracle.iter().map(|l| vec_display(l)).collect();
        found.sort();
        expected.sort();
        prop_assert_eq!(found, expected);
    }
}
