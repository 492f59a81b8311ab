//! The correspondence between partial groupoid actions and symmetric
//! partial actions of the groupoid algebra.
//!
//! Forward direction: a partial groupoid action (ideals `D_g`, isomorphisms
//! `alpha_g`) induces `delta_g . a = alpha_g(a 1_{g^{-1}})`, a symmetric
//! partial action of the groupoid algebra. Backward direction: a symmetric
//! partial action of a groupoid algebra yields `1_g = delta_g . 1_A`,
//! `D_g = delta_g . A`, `alpha_g = delta_g . (-)`, and this data is a
//! partial groupoid action. The two constructions are mutually inverse,
//! which the tests exercise on the corpus.

use crate::error::{Error, Result};
use crate::groupoid::{groupoid_algebra, FiniteGroupoid, PartialGroupoidAction};
use crate::linalg::{basis_vec, vec_display, zeros, Matrix, Rat, Subspace};
use crate::paction::PartialAction;
use crate::report::VerificationReport;

/// The action `delta_g . a = alpha_g(a 1_{g^{-1}})` of the groupoid algebra.
/// The groupoid-action axioms are verified first; the output then satisfies
/// the partial action axioms and is symmetric (checked by callers/tests).
pub fn groupoid_to_algebra_action(pga: &PartialGroupoidAction) -> Result<PartialAction> {
    let axioms = pga.check();
    if !axioms.passed() {
        return Err(Error::InvalidInput(format!(
            "groupoid action axioms fail: {} of {} instances",
            axioms.total_failures(),
            axioms.total_instances()
        )));
    }
    let g = pga.groupoid().clone();
    let h = groupoid_algebra(&g);
    let alg = pga.algebra().clone();
    let m = alg.dim();
    let mut act = Vec::with_capacity(g.size() * m);
    for x in 0..g.size() {
        for j in 0..m {
            let cut = alg.mul(&basis_vec(m, j), pga.unit_of(g.inv(x)));
            let moved = pga.apply_iso(x, &cut).ok_or_else(|| {
                Error::NotWellDefined(format!(
                    "a 1_{{g^{{-1}}}} left the ideal of {} on basis vector {j}",
                    g.label(x)
                ))
            })?;
            act.push(moved);
        }
    }
    PartialAction::new(h, alg, act)
}

/// True iff `p` acts through the groupoid algebra of `g`: same dimension,
/// same structure constants, unit, comultiplication, counit, and antipode
/// (labels are ignored).
pub fn action_is_over_groupoid_algebra(p: &PartialAction, g: &FiniteGroupoid) -> bool {
    let h = p.h();
    let model = groupoid_algebra(g);
    if h.dim() != model.dim() {
        return false;
    }
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            if h.alg().basis_product(i, j) != model.alg().basis_product(i, j) {
                return false;
            }
        }
    }
    h.alg().unit() == model.alg().unit()
        && (0..n).all(|i| h.coalg().delta_basis(i) == model.coalg().delta_basis(i))
        && h.coalg().counit() == model.coalg().counit()
        && h.antipode() == model.antipode()
}

/// Recovers the partial groupoid action from a symmetric partial action of
/// the groupoid algebra, verifying the construction steps:
///
/// 1. each `1_g = delta_g . 1_A` is a central idempotent with
///    `D_g = delta_g . A = 1_g A`, and `(delta_g . 1_A) a =
///    delta_g . (delta_{g^{-1}} . a) = a (delta_g . 1_A)`;
/// 2. `D_g = D_{r(g)} 1_g`;
/// 3. `alpha_g = delta_g . (-)` maps `D_{g^{-1}}` onto `D_g` with inverse
///    `alpha_{g^{-1}}`;
/// 4. the data satisfies the partial groupoid action axioms;
/// 5. `A` is the direct sum of the identity components, with orthogonal
///    identity units;
///
/// plus the closing identity `delta_g . a = alpha_g(a 1_{g^{-1}})`, which
/// makes the roundtrip exact.
pub fn algebra_to_groupoid_action(
    p: &PartialAction,
    g: &FiniteGroupoid,
) -> Result<(PartialGroupoidAction, VerificationReport)> {
    if !action_is_over_groupoid_algebra(p, g) {
        return Err(Error::NotAGroupoidAlgebra(
            "the action's weak Hopf structure does not match the groupoid algebra".into(),
        ));
    }
    if !p.check_symmetric() {
        return Err(Error::NotSymmetric("axiom (iv) fails on some basis triple".into()));
    }
    let alg = p.algebra().clone();
    let (n, m) = (g.size(), alg.dim());

    let units: Vec<Vec<Rat>> = (0..n).map(|x| p.acts_on_unit(x)).collect();
    let ideals: Vec<Subspace> = (0..n)
        .map(|x| {
            let gens: Vec<Vec<Rat>> = (0..m).map(|j| p.act_basis(x, j).to_vec()).collect();
            Subspace::from_spanning(m, &gens)
        })
        .collect();
    let isos: Vec<Matrix> = (0..n)
        .map(|x| {
            let src = &ideals[g.inv(x)];
            let cols: Vec<Vec<Rat>> = (0..src.dim())
                .map(|t| {
                    let image = p.act(&basis_vec(n, x), src.basis_row(t));
                    ideals[x].coords_of(&image).ok_or_else(|| {
                        Error::NotWellDefined(format!(
                            "delta_{} does not map D_{{g^{{-1}}}} into D_g",
                            g.label(x)
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            Ok(Matrix::from_cols(cols))
        })
        .collect::<Result<_>>()?;

    let mut rep = VerificationReport::new("groupoid action recovery");
    for x in 0..n {
        let u = &units[x];
        rep.check_vecs("recovered units are idempotent", &[x], &alg.mul(u, u), u);
        let span_1g = Subspace::from_spanning(
            m,
            &(0..m).map(|j| alg.mul(u, &basis_vec(m, j))).collect::<Vec<_>>(),
        );
        rep.check(
            "each ideal is the principal ideal of its unit",
            &[x],
            span_1g == ideals[x],
            &format!("1_g A of dimension {}", span_1g.dim()),
            &format!("delta_g . A of dimension {}", ideals[x].dim()),
        );
        let xi = g.inv(x);
        for j in 0..m {
            let a = basis_vec(m, j);
            let left = alg.mul(u, &a);
            let middle = p.act(&basis_vec(n, x), p.act_basis(xi, j));
            let right = alg.mul(&a, u);
            rep.check_vecs("unit multiplication factors through the inverse arrow", &[x, j], &left, &middle);
            rep.check_vecs("recovered units are central", &[x, j], &left, &right);
        }
        let range = &ideals[g.r(x)];
        let cut = Subspace::from_spanning(
            m,
            &(0..range.dim()).map(|t| alg.mul(range.basis_row(t), u)).collect::<Vec<_>>(),
        );
        rep.check(
            "each ideal is cut out of its range component",
            &[x],
            cut == ideals[x],
            &format!("D_r(g) 1_g of dimension {}", cut.dim()),
            &format!("D_g of dimension {}", ideals[x].dim()),
        );
        let src = &ideals[xi];
        for t in 0..src.dim() {
            let v = src.basis_row(t);
            let roundtrip = p.act(&basis_vec(n, xi), &p.act(&basis_vec(n, x), v));
            rep.check_vecs("the inverse arrow inverts the recovered map", &[x, t], &roundtrip, v);
        }
    }
    for (i, &e) in g.identities().iter().enumerate() {
        for &f in g.identities().iter().skip(i + 1) {
            let prod = alg.mul(&units[e], &units[f]);
            rep.check(
                "identity units are orthogonal",
                &[e, f],
                crate::linalg::vec_is_zero(&prod),
                &vec_display(&prod),
                "0",
            );
        }
    }

    let pga = PartialGroupoidAction::new(g.clone(), alg.clone(), ideals, units, isos)?;
    rep.absorb(pga.check());

    // Closing identity: the recovered data reproduces the action.
    let m_dim = alg.dim();
    for x in 0..n {
        for j in 0..m_dim {
            let cut = alg.mul(&basis_vec(m_dim, j), pga.unit_of(g.inv(x)));
            let via = pga.apply_iso(x, &cut).unwrap_or_else(|| zeros(m_dim));
            rep.check_vecs(
                "recovered data reproduces the action",
                &[x, j],
                &via,
                p.act_basis(x, j),
            );
        }
    }
    Ok((pga, rep))
}
