//! Exhaustive suite of derived structural identities of a weak Hopf algebra.
//!
//! Everything here is a consequence of the axioms; running the suite on a
//! verified structure cross-checks the implementation of the projections,
//! the antipode restrictions, and the separability tensors, and running it
//! on unverified input pinpoints which consequences break.

use crate::linalg::{add_scaled, basis_vec, tensor_vec, zeros, Matrix, Rat};
use crate::report::VerificationReport;

use super::{CounitalMaps, WeakHopf};

/// Checks every derived identity on all relevant basis tuples.
pub fn lemma_suite(h: &WeakHopf, cm: &CounitalMaps) -> VerificationReport {
    let mut rep = VerificationReport::new("lemma suite");
    let n = h.dim();
    let alg = h.alg();
    let coalg = h.coalg();
    let du = h.delta_unit_components();
    let e = |i: usize| basis_vec(n, i);
    let s = |i: usize| h.antipode_basis(i);

    // Idempotency and absorption rules of the counital projections.
    for i in 0..n {
        let li = cm.eps_l.col_vec(i);
        let ri = cm.eps_r.col_vec(i);
        rep.check_vecs("eps_l is idempotent", &[i], &cm.eps_l_of(&li), &li);
        rep.check_vecs("eps_r is idempotent", &[i], &cm.eps_r_of(&ri), &ri);
    }
    for i in 0..n {
        for k in 0..n {
            let hk = alg.basis_product(i, k);
            let eps_hk = coalg.counit_of(hk);
            rep.check_scalars(
                "counit absorbs eps_l",
                &[i, k],
                &coalg.counit_of(&alg.mul(&e(i), &cm.eps_l.col_vec(k))),
                &eps_hk,
            );
            rep.check_scalars(
                "counit absorbs eps_r",
                &[i, k],
                &coalg.counit_of(&alg.mul(&cm.eps_r.col_vec(i), &e(k))),
                &eps_hk,
            );
            rep.check_vecs(
                "eps_l collapses nested products",
                &[i, k],
                &cm.eps_l_of(&alg.mul(&e(i), &cm.eps_l.col_vec(k))),
                &cm.eps_l_of(hk),
            );
            rep.check_vecs(
                "eps_r collapses nested products",
                &[i, k],
                &cm.eps_r_of(&alg.mul(&cm.eps_r.col_vec(i), &e(k))),
                &cm.eps_r_of(hk),
            );
        }
    }

    // Membership facts for Delta(1) and the counital subalgebras.
    {
        let target = cm.hr.tensor(&cm.hl);
        rep.check(
            "delta of the unit lies in H_R tensor H_L",
            &[],
            target.contains(h.delta_unit()),
            &crate::linalg::vec_display(h.delta_unit()),
            "membership in H_R (x) H_L",
        );
    }

    // The comultiplication identities cutting out H_L and H_R.
    {
        let left_legs = Matrix::from_cols(
            (0..n)
                .map(|i| {
                    let mut col = zeros(n * n);
                    for (a, b, c) in &du {
                        add_scaled(&mut col, c, &tensor_vec(alg.basis_product(*a, i), &e(*b)));
                    }
                    col
                })
                .collect(),
        );
        let solved = coalg.delta_matrix().sub(&left_legs).kernel();
        rep.check(
            "H_L is cut out by its comultiplication identity",
            &[],
            solved == cm.hl,
            &format!("solution space of dimension {}", solved.dim()),
            &format!("H_L of dimension {}", cm.hl.dim()),
        );
        let right_legs = Matrix::from_cols(
            (0..n)
                .map(|i| {
                    let mut col = zeros(n * n);
                    for (a, b, c) in &du {
                        add_scaled(&mut col, c, &tensor_vec(&e(*a), alg.basis_product(i, *b)));
                    }
                    col
                })
                .collect(),
        );
        let solved = coalg.delta_matrix().sub(&right_legs).kernel();
        rep.check(
            "H_R is cut out by its comultiplication identity",
            &[],
            solved == cm.hr,
            &format!("solution space of dimension {}", solved.dim()),
            &format!("H_R of dimension {}", cm.hr.dim()),
        );
    }
    for t in 0..cm.hl.dim() {
        let z = cm.hl.basis_row(t);
        let mut slid = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut slid, c, &tensor_vec(&alg.mul(z, &e(*a)), &e(*b)));
        }
        rep.check_vecs("delta on H_L commutes across the unit legs", &[t], &coalg.delta(z), &slid);
        rep.check(
            "delta maps H_L into H tensor H_L",
            &[t],
            crate::linalg::Subspace::full(n).tensor(&cm.hl).contains(&coalg.delta(z)),
            &crate::linalg::vec_display(&coalg.delta(z)),
            "membership in H (x) H_L",
        );
    }
    for t in 0..cm.hr.dim() {
        let w = cm.hr.basis_row(t);
        let mut slid = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut slid, c, &tensor_vec(&e(*a), &alg.mul(&e(*b), w)));
        }
        rep.check_vecs("delta on H_R commutes across the unit legs", &[t], &coalg.delta(w), &slid);
        rep.check(
            "delta maps H_R into H_R tensor H",
            &[t],
            cm.hr.tensor(&crate::linalg::Subspace::full(n)).contains(&coalg.delta(w)),
            &crate::linalg::vec_display(&coalg.delta(w)),
            "membership in H_R (x) H",
        );
    }

    // Subalgebra structure and commutation.
    rep.check(
        "H_L is a unital subalgebra",
        &[],
        cm.hl.contains(alg.unit()),
        "1_H",
        "membership in H_L",
    );
    rep.check(
        "H_R is a unital subalgebra",
        &[],
        cm.hr.contains(alg.unit()),
        "1_H",
        "membership in H_R",
    );
    for i in 0..cm.hl.dim() {
        for j in 0..cm.hl.dim() {
            let p = alg.mul(cm.hl.basis_row(i), cm.hl.basis_row(j));
            rep.check(
                "H_L is a unital subalgebra",
                &[i, j],
                cm.hl.contains(&p),
                &crate::linalg::vec_display(&p),
                "membership in H_L",
            );
        }
    }
    for i in 0..cm.hr.dim() {
        for j in 0..cm.hr.dim() {
            let p = alg.mul(cm.hr.basis_row(i), cm.hr.basis_row(j));
            rep.check(
                "H_R is a unital subalgebra",
                &[i, j],
                cm.hr.contains(&p),
                &crate::linalg::vec_display(&p),
                "membership in H_R",
            );
        }
    }
    for i in 0..cm.hl.dim() {
        for j in 0..cm.hr.dim() {
            let z = cm.hl.basis_row(i);
            let w = cm.hr.basis_row(j);
            rep.check_vecs("H_L and H_R commute elementwise", &[i, j], &alg.mul(z, w), &alg.mul(w, z));
        }
    }

    // Sweedler collapses against the antipode.
    for i in 0..n {
        let mut lhs = zeros(n * n);
        for (a, b, c, coeff) in coalg.sweedler2(i) {
            add_scaled(&mut lhs, &coeff, &tensor_vec(&e(a), &alg.mul(&e(b), &s(c))));
        }
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut rhs, c, &tensor_vec(alg.basis_product(*a, i), &e(*b)));
        }
        rep.check_vecs("sweedler tail antipode collapse", &[i], &lhs, &rhs);

        let mut lhs = zeros(n * n);
        for (a, b, c, coeff) in coalg.sweedler2(i) {
            add_scaled(&mut lhs, &coeff, &tensor_vec(&alg.mul(&s(a), &e(b)), &e(c)));
        }
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut rhs, c, &tensor_vec(&e(*a), alg.basis_product(i, *b)));
        }
        rep.check_vecs("sweedler head antipode collapse", &[i], &lhs, &rhs);

        let mut lhs = zeros(n * n);
        for (a, b, c, coeff) in coalg.sweedler2(i) {
            add_scaled(&mut lhs, &coeff, &tensor_vec(&e(a), &alg.mul(&s(b), &e(c))));
        }
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut rhs, c, &tensor_vec(alg.basis_product(i, *a), &s(*b)));
        }
        rep.check_vecs("sweedler middle antipode right collapse", &[i], &lhs, &rhs);

        let mut lhs = zeros(n * n);
        for (a, b, c, coeff) in coalg.sweedler2(i) {
            add_scaled(&mut lhs, &coeff, &tensor_vec(&alg.mul(&e(a), &s(b)), &e(c)));
        }
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut rhs, c, &tensor_vec(&s(*a), alg.basis_product(*b, i)));
        }
        rep.check_vecs("sweedler middle antipode left collapse", &[i], &lhs, &rhs);
    }

    // Counit expansions of products with projected factors.
    for i in 0..n {
        for k in 0..n {
            let mut rhs = zeros(n);
            for (a, b, c) in coalg.sweedler(i) {
                let scalar = coalg.counit_of(alg.basis_product(a, k));
                if !scalar.is_zero() {
                    rhs[b] += &(&c * &scalar);
                }
            }
            rep.check_vecs(
                "product with eps_l expands through the counit",
                &[i, k],
                &alg.mul(&e(i), &cm.eps_l.col_vec(k)),
                &rhs,
            );
            let mut rhs = zeros(n);
            for (a, b, c) in coalg.sweedler(k) {
                let scalar = coalg.counit_of(alg.basis_product(i, b));
                if !scalar.is_zero() {
                    rhs[a] += &(&c * &scalar);
                }
            }
            rep.check_vecs(
                "product with eps_r expands through the counit",
                &[i, k],
                &alg.mul(&cm.eps_r.col_vec(i), &e(k)),
                &rhs,
            );
            rep.check_vecs(
                "eps_l is multiplicative after projecting the left factor",
                &[i, k],
                &cm.eps_l_of(&alg.mul(&cm.eps_l.col_vec(i), &e(k))),
                &alg.mul(&cm.eps_l.col_vec(i), &cm.eps_l.col_vec(k)),
            );
            rep.check_vecs(
                "eps_r is multiplicative after projecting the right factor",
                &[i, k],
                &cm.eps_r_of(&alg.mul(&e(i), &cm.eps_r.col_vec(k))),
                &alg.mul(&cm.eps_r.col_vec(i), &cm.eps_r.col_vec(k)),
            );
        }
    }

    // Alternative antipode formulas for the projections.
    for i in 0..n {
        let mut via = zeros(n);
        for (a, b, c) in &du {
            let scalar = coalg.counit_of(&alg.mul(&s(i), &e(*a)));
            if !scalar.is_zero() {
                via[*b] += &(c * &scalar);
            }
        }
        rep.check_vecs("eps_l from the antipode under the counit", &[i], &via, &cm.eps_l.col_vec(i));

        let mut via = zeros(n);
        for (a, b, c) in &du {
            let scalar = coalg.counit_of(&alg.mul(&e(*b), &s(i)));
            if !scalar.is_zero() {
                via[*a] += &(c * &scalar);
            }
        }
        rep.check_vecs("eps_r from the antipode under the counit", &[i], &via, &cm.eps_r.col_vec(i));

        let mut via = zeros(n);
        for (a, b, c) in &du {
            let scalar = coalg.counit_of(alg.basis_product(*b, i));
            if !scalar.is_zero() {
                add_scaled(&mut via, &(c * &scalar), &s(*a));
            }
        }
        rep.check_vecs("eps_l from the antipode of the unit legs", &[i], &via, &cm.eps_l.col_vec(i));

        // Mirror of the previous identity: eps_r(h) = eps(h 1_1) S(1_2).
        let mut via = zeros(n);
        for (a, b, c) in &du {
            let scalar = coalg.counit_of(alg.basis_product(i, *a));
            if !scalar.is_zero() {
                add_scaled(&mut via, &(c * &scalar), &s(*b));
            }
        }
        rep.check_vecs("eps_r from the antipode of the unit legs", &[i], &via, &cm.eps_r.col_vec(i));
    }

    // Compositions of the projections with the antipode.
    for i in 0..n {
        let sl = cm.eps_l_of(&s(i));
        rep.check_vecs(
            "eps_l of antipode equals eps_l of eps_r",
            &[i],
            &sl,
            &cm.eps_l_of(&cm.eps_r.col_vec(i)),
        );
        rep.check_vecs(
            "eps_l of antipode equals antipode of eps_r",
            &[i],
            &sl,
            &h.antipode_of(&cm.eps_r.col_vec(i)),
        );
        let sr = cm.eps_r_of(&s(i));
        rep.check_vecs(
            "eps_r of antipode equals eps_r of eps_l",
            &[i],
            &sr,
            &cm.eps_r_of(&cm.eps_l.col_vec(i)),
        );
        rep.check_vecs(
            "eps_r of antipode equals antipode of eps_l",
            &[i],
            &sr,
            &h.antipode_of(&cm.eps_l.col_vec(i)),
        );
    }

    // Antihomomorphism properties of the antipode.
    {
        let mut lhs = zeros(n * n);
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut lhs, c, &tensor_vec(&s(*a), &s(*b)));
            add_scaled(&mut rhs, c, &tensor_vec(&e(*b), &e(*a)));
        }
        rep.check_vecs("antipode swaps the unit comultiplication legs", &[], &lhs, &rhs);
    }
    for i in 0..n {
        for j in 0..n {
            rep.check_vecs(
                "antipode is an algebra antihomomorphism",
                &[i, j],
                &h.antipode_of(alg.basis_product(i, j)),
                &alg.mul(&s(j), &s(i)),
            );
        }
    }
    rep.check_vecs("antipode fixes the unit", &[], &h.antipode_of(alg.unit()), alg.unit());
    for i in 0..n {
        let mut rhs = zeros(n * n);
        for (a, b, c) in coalg.sweedler(i) {
            add_scaled(&mut rhs, &c, &tensor_vec(&s(b), &s(a)));
        }
        rep.check_vecs(
            "antipode is a coalgebra antihomomorphism",
            &[i],
            &coalg.delta(&s(i)),
            &rhs,
        );
        rep.check_scalars(
            "counit is invariant under the antipode",
            &[i],
            &coalg.counit_of(&s(i)),
            &coalg.counit_of(&e(i)),
        );
    }
    {
        rep.check(
            "antipode exchanges the counital subalgebras",
            &[0],
            cm.hl.map_through(h.antipode()) == cm.hr,
            "S(H_L)",
            "H_R",
        );
        rep.check(
            "antipode exchanges the counital subalgebras",
            &[1],
            cm.hr.map_through(h.antipode()) == cm.hl,
            "S(H_R)",
            "H_L",
        );
    }

    // Separability tensors.
    {
        let collapse = |t: &[Rat]| {
            let mut out = zeros(n);
            for (idx, c) in crate::linalg::nonzeros(t) {
                let (a, b) = crate::linalg::unpair_index(idx, n);
                add_scaled(&mut out, c, alg.basis_product(a, b));
            }
            out
        };
        rep.check_vecs(
            "left separability tensor multiplies to the unit",
            &[],
            &collapse(&cm.e_l),
            alg.unit(),
        );
        rep.check_vecs(
            "right separability tensor multiplies to the unit",
            &[],
            &collapse(&cm.e_r),
            alg.unit(),
        );
        rep.check(
            "left separability tensor lies in H_L tensor H_L",
            &[],
            cm.hl.tensor(&cm.hl).contains(&cm.e_l),
            &crate::linalg::vec_display(&cm.e_l),
            "membership in H_L (x) H_L",
        );
        rep.check(
            "right separability tensor lies in H_R tensor H_R",
            &[],
            cm.hr.tensor(&cm.hr).contains(&cm.e_r),
            &crate::linalg::vec_display(&cm.e_r),
            "membership in H_R (x) H_R",
        );
    }
    for t in 0..cm.hl.dim() {
        let z = cm.hl.basis_row(t);
        let mut lhs = zeros(n * n);
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut lhs, c, &tensor_vec(&alg.mul(z, &s(*a)), &e(*b)));
            add_scaled(&mut rhs, c, &tensor_vec(&s(*a), &alg.mul(&e(*b), z)));
        }
        rep.check_vecs("H_L slides across the left separability tensor", &[t], &lhs, &rhs);
    }
    for t in 0..cm.hr.dim() {
        let w = cm.hr.basis_row(t);
        let mut lhs = zeros(n * n);
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut lhs, c, &tensor_vec(&e(*a), &alg.mul(&s(*b), w)));
            add_scaled(&mut rhs, c, &tensor_vec(&alg.mul(w, &e(*a)), &s(*b)));
        }
        rep.check_vecs("H_R slides across the right separability tensor", &[t], &lhs, &rhs);
    }

    // Inverse antipode slides through the unit legs.
    for t in 0..cm.hl.dim() {
        let z = cm.hl.basis_row(t);
        let srz = cm.s_r_inv_of(z).expect("H_L basis vector is in H_L");
        let mut lhs = zeros(n * n);
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut lhs, c, &tensor_vec(&alg.mul(&e(*a), &srz), &e(*b)));
            add_scaled(&mut rhs, c, &tensor_vec(&e(*a), &alg.mul(&e(*b), z)));
        }
        rep.check_vecs("inverse right antipode slides through the unit legs", &[t], &lhs, &rhs);
    }
    for t in 0..cm.hr.dim() {
        let w = cm.hr.basis_row(t);
        let slw = cm.s_l_inv_of(w).expect("H_R basis vector is in H_R");
        let mut lhs = zeros(n * n);
        let mut rhs = zeros(n * n);
        for (a, b, c) in &du {
            add_scaled(&mut lhs, c, &tensor_vec(&e(*a), &alg.mul(&slw, &e(*b))));
            add_scaled(&mut rhs, c, &tensor_vec(&alg.mul(w, &e(*a)), &e(*b)));
        }
        rep.check_vecs("inverse left antipode slides through the unit legs", &[t], &lhs, &rhs);
    }

    rep
}
