//! The Morita context between the partial and the global smash product.
//!
//! For a symmetric partial action with globalization `(B, theta)` there is a
//! non-unitary algebra monomorphism
//!
//! `Psi: A # H -> B # H, [a (x) h] -> [theta(a) (x) h]`,
//!
//! balanced because `theta(a) <. z = S_R^{-1}(z) |> theta(a) = theta(a <. z)`
//! and injective because `Psi': theta(a) (x) h -> a (x) h` is a left inverse.
//! With `M = Psi(A # H)` and `N` the span of the classes
//! `(h_1 |> theta(a)) # h_2`, the tuple
//!
//! `(A #_ H, B # H, M, N, (,), [,])`
//!
//! is a Morita context: `M` is an `(A #_ H, B # H)`-bimodule, `N` a
//! `(B # H, A #_ H)`-bimodule, and both pairings are the multiplication of
//! `B # H`. The round pairing lands in `Psi(A #_ H)`, the canonical copy of
//! the unital corner inside `B # H`; the corner image itself is not a right
//! `B # H`-submodule, which is why the module `M` of the context is the full
//! image. Both spans are kept and reported. The context maps are surjective:
//! `span(M N) = Psi(A #_ H)` and `span(N M) = B # H`, the latter through the
//! witness identity
//!
//! `(h_1 |> theta(a) # h_2)(theta(1_A) # S(h_3) g) = h |> theta(a) # g`.
//!
//! When `B` is unital the two corners are Morita equivalent; this module
//! records the unit's existence and stops there.

use crate::error::{Error, Result};
use crate::globalize::Globalization;
use crate::linalg::{add_scaled, basis_vec, tensor_vec, zeros, Matrix, Rat, Subspace};
use crate::paction::PartialAction;
use crate::report::VerificationReport;
use crate::smash::{
    build_partial_smash, build_smash, build_smash_over, PartialSmashAlgebra, SmashAlgebra,
};
use crate::wha::CounitalMaps;

/// The assembled context: both smash products, the monomorphism with its
/// left inverse, the bimodules, and the verification certificate. `m` is the
/// full image `Psi(A # H)`, the bimodule of the context; `psi_corner` is
/// `Psi(A #_ H)`, the copy of the context's unital corner ring inside
/// `B # H` and the target of the round pairing.
#[derive(Clone, Debug)]
pub struct MoritaContextData {
    g: Globalization,
    asmash: SmashAlgebra,
    acorner: PartialSmashAlgebra,
    bsmash: SmashAlgebra,
    psi: Matrix,
    psi_prime: Matrix,
    m: Subspace,
    psi_corner: Subspace,
    n: Subspace,
    theta_b: Matrix,
    has_unit_b: bool,
    certificate: VerificationReport,
}

impl MoritaContextData {
    pub fn globalization(&self) -> &Globalization {
        &self.g
    }

    /// `A # H`.
    pub fn asmash(&self) -> &SmashAlgebra {
        &self.asmash
    }

    /// The unital corner `A #_ H` of `A # H`.
    pub fn acorner(&self) -> &PartialSmashAlgebra {
        &self.acorner
    }

    /// `B # H`, built over the restricted coefficient tables of `B`.
    pub fn bsmash(&self) -> &SmashAlgebra {
        &self.bsmash
    }

    /// The monomorphism as a matrix from `A # H` to `B # H` coordinates.
    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    /// A left inverse of `psi`; `psi_prime * psi` is the identity.
    pub fn psi_prime(&self) -> &Matrix {
        &self.psi_prime
    }

    /// The bimodule `M = Psi(A # H)` inside `B # H`.
    pub fn m(&self) -> &Subspace {
        &self.m
    }

    /// `Psi(A #_ H)`, the corner's copy inside `B # H`.
    pub fn psi_corner(&self) -> &Subspace {
        &self.psi_corner
    }

    /// The bimodule `N = span{(h_1 |> theta(a)) # h_2}` inside `B # H`.
    pub fn n(&self) -> &Subspace {
        &self.n
    }

    /// `theta` in `B`-subspace coordinates.
    pub fn theta_b(&self) -> &Matrix {
        &self.theta_b
    }

    /// Whether `B` itself is unital; if so the corner and `B # H` are Morita
    /// equivalent, a conclusion recorded but not re-proved here.
    pub fn has_unit_b(&self) -> bool {
        self.has_unit_b
    }

    pub fn certificate(&self) -> &VerificationReport {
        &self.certificate
    }

    /// The round pairing `(,): M (x) N -> Psi(A #_ H)`, the multiplication
    /// of `B # H` on quotient coordinate vectors.
    pub fn pair_round(&self, m: &[Rat], n: &[Rat]) -> Vec<Rat> {
        self.bsmash.mul(m, n)
    }

    /// The square pairing `[,]: N (x) M -> B # H`.
    pub fn pair_square(&self, n: &[Rat], m: &[Rat]) -> Vec<Rat> {
        self.bsmash.mul(n, m)
    }

    /// The left action of the corner on `M` through `Psi`: corner
    /// coordinates act by multiplication with their `Psi`-image.
    pub fn act_corner_left(&self, x: &[Rat], m: &[Rat]) -> Vec<Rat> {
        self.bsmash.mul(&self.psi.mul_vec(&self.acorner.embed(x)), m)
    }

    /// The right action of the corner on `N` through `Psi`.
    pub fn act_corner_right(&self, n: &[Rat], x: &[Rat]) -> Vec<Rat> {
        self.bsmash.mul(n, &self.psi.mul_vec(&self.acorner.embed(x)))
    }
}

struct PsiParts {
    asmash: SmashAlgebra,
    bsmash: SmashAlgebra,
    theta_b: Matrix,
    psi: Matrix,
    psi_prime: Matrix,
    rep: VerificationReport,
}

/// Builds `Psi` and its left inverse between the two quotients and verifies
/// well-definedness on the relation span, injectivity, and multiplicativity.
fn psi_parts(p: &PartialAction, g: &Globalization) -> Result<PsiParts> {
    let axioms = p.check_partial_action();
    if !axioms.passed() {
        return Err(Error::InvalidInput(format!(
            "the action fails the partial-action axioms: {} failing instance(s)",
            axioms.total_failures()
        )));
    }
    let glob = crate::globalize::check_globalization(g, p);
    if !glob.passed() {
        return Err(Error::InvalidInput(format!(
            "(B, theta) fails the globalization axioms: {} failing instance(s)",
            glob.total_failures()
        )));
    }
    let asmash = build_smash(p)?;
    let bsmash = build_smash_over(p.h(), g.coefficients()?)?;
    let n = p.dim_h();
    let da = p.dim_a();
    let mb = g.dim_b();
    let theta_b = Matrix::from_cols(
        (0..da)
            .map(|j| g.b().coords_of(&g.theta().col_vec(j)).expect("theta lands in B"))
            .collect(),
    );
    // The ambient lift a_i (x) h_j -> theta(a_i) (x) h_j of Psi.
    let lift = Matrix::from_fn(mb * n, da * n, |row, col| {
        let (q, jh_row) = crate::linalg::unpair_index(row, n);
        let (i, jh_col) = crate::linalg::unpair_index(col, n);
        if jh_row == jh_col {
            theta_b[(q, i)].clone()
        } else {
            Rat::zero()
        }
    });

    let mut rep = VerificationReport::new("morita context");
    let zero_class = zeros(bsmash.dim());
    let rels = asmash.quotient().relations();
    for t in 0..rels.dim() {
        rep.check_vecs(
            "Psi annihilates the balancing relations",
            &[t],
            &bsmash.quotient().project(&lift.mul_vec(rels.basis_row(t))),
            &zero_class,
        );
    }
    if !rep.passed() {
        return Err(Error::NotWellDefined(
            "theta (x) id does not descend to the H_L-quotients".into(),
        ));
    }
    let psi = bsmash
        .quotient()
        .project_matrix()
        .mul(&lift)
        .mul(&asmash.quotient().section_matrix());

    // Left inverse row by row, the Psi' of the injectivity argument.
    let psi_t = psi.transpose();
    let mut prime_rows = Vec::with_capacity(asmash.dim());
    for r in 0..asmash.dim() {
        let row = psi_t.solve(&basis_vec(asmash.dim(), r)).ok_or_else(|| {
            Error::NotWellDefined("Psi has no left inverse; theta cannot be injective".into())
        })?;
        prime_rows.push(row);
    }
    let psi_prime = Matrix::from_rows(prime_rows);
    rep.check(
        "Psi' composed with Psi is the identity",
        &[],
        psi_prime.mul(&psi) == Matrix::identity(asmash.dim()),
        "left inverse fails",
        "left inverse holds",
    );

    for s in 0..asmash.dim() {
        for t in 0..asmash.dim() {
            let lhs = psi.mul_vec(asmash.basis_product(s, t));
            let rhs = bsmash.mul(
                &psi.mul_vec(&basis_vec(asmash.dim(), s)),
                &psi.mul_vec(&basis_vec(asmash.dim(), t)),
            );
            rep.check_vecs("Psi is multiplicative", &[s, t], &lhs, &rhs);
        }
    }
    if !rep.passed() {
        return Err(Error::NotWellDefined(format!(
            "Psi fails verification: {} failing instance(s)",
            rep.total_failures()
        )));
    }
    Ok(PsiParts { asmash, bsmash, theta_b, psi, psi_prime, rep })
}

/// The monomorphism `[a (x) h] -> [theta(a) (x) h]` from `A # H` to
/// `B # H`, verified well defined, injective, and multiplicative.
pub fn build_psi(p: &PartialAction, g: &Globalization) -> Result<Matrix> {
    Ok(psi_parts(p, g)?.psi)
}

/// `h_i |> theta(a_j)` in `B`-coordinates for every basis pair.
fn theta_translates(g: &Globalization) -> Vec<Vec<Vec<Rat>>> {
    let n = g.ambient().h().dim();
    let da = g.a().dim();
    (0..n)
        .map(|i| {
            (0..da)
                .map(|j| {
                    let moved = g.ambient().act(i, &g.theta().col_vec(j));
                    g.b().coords_of(&moved).expect("B is stable under the action")
                })
                .collect()
        })
        .collect()
}

/// Builds the full Morita context for a symmetric partial action with
/// invertible antipode: the bimodules, both corner spans, and the closure
/// certificate. Closure failures signal construction bugs, not bad inputs,
/// and are returned as errors.
pub fn build_morita_context(p: &PartialAction, g: &Globalization) -> Result<MoritaContextData> {
    if !p.check_symmetric() {
        return Err(Error::NotSymmetric(
            "the Morita context needs a symmetric action so that theta(A) is an ideal".into(),
        ));
    }
    if p.h().antipode_inverse().is_none() {
        return Err(Error::AntipodeNotInvertible);
    }
    let PsiParts { asmash, bsmash, theta_b, psi, psi_prime, mut rep } = psi_parts(p, g)?;
    assert!(g.is_ideal(), "theta(A) must be an ideal for a symmetric action");
    let acorner = build_partial_smash(&asmash)?;

    let cm = CounitalMaps::new(p.h())?;
    let th1_amb = g.theta_unit();
    for t in 0..cm.hl.dim() {
        let srz = cm.s_r_inv_of(cm.hl.basis_row(t)).expect("H_L basis");
        for j in 0..p.dim_a() {
            let moved = g.ambient().act_vec(&srz, &g.theta().col_vec(j));
            rep.check_vecs(
                "theta(1_A) fixes the inverse antipode translates of theta(A)",
                &[t, j],
                &g.ambient().mul_vec(&th1_amb, &moved),
                &moved,
            );
        }
    }

    let qb = bsmash.dim();
    let m = Subspace::from_spanning(
        qb,
        &(0..asmash.dim()).map(|t| psi.col_vec(t)).collect::<Vec<_>>(),
    );
    let psi_corner = Subspace::from_spanning(
        qb,
        &(0..acorner.dim())
            .map(|t| psi.mul_vec(&acorner.embed(&basis_vec(acorner.dim(), t))))
            .collect::<Vec<_>>(),
    );
    let translates = theta_translates(g);
    let n_h = p.dim_h();
    let mut n_gens = Vec::with_capacity(n_h * p.dim_a());
    for i in 0..n_h {
        for j in 0..p.dim_a() {
            let mut amb = zeros(g.dim_b() * n_h);
            for (i1, i2, c) in p.h().coalg().sweedler(i) {
                add_scaled(
                    &mut amb,
                    &c,
                    &tensor_vec(&translates[i1][j], &basis_vec(n_h, i2)),
                );
            }
            n_gens.push(bsmash.quotient().project(&amb));
        }
    }
    let n = Subspace::from_spanning(qb, &n_gens);

    for t in 0..m.dim() {
        for r in 0..qb {
            rep.check(
                "M is stable under right multiplication by B # H",
                &[t, r],
                m.contains(&bsmash.mul(m.basis_row(t), &basis_vec(qb, r))),
                "product escapes M",
                "product lies in M",
            );
        }
    }
    for t in 0..n.dim() {
        for r in 0..qb {
            rep.check(
                "N is stable under left multiplication by B # H",
                &[t, r],
                n.contains(&bsmash.mul(&basis_vec(qb, r), n.basis_row(t))),
                "product escapes N",
                "product lies in N",
            );
        }
    }
    for x in 0..acorner.dim() {
        let px = psi.mul_vec(&acorner.embed(&basis_vec(acorner.dim(), x)));
        for t in 0..m.dim() {
            rep.check(
                "the corner acts on M from the left through Psi",
                &[x, t],
                m.contains(&bsmash.mul(&px, m.basis_row(t))),
                "action escapes M",
                "action lies in M",
            );
        }
        for t in 0..n.dim() {
            rep.check(
                "the corner acts on N from the right through Psi",
                &[x, t],
                n.contains(&bsmash.mul(n.basis_row(t), &px)),
                "action escapes N",
                "action lies in N",
            );
        }
    }
    if !rep.passed() {
        return Err(Error::NotClosed(format!(
            "a bimodule closure check failed: {} failing instance(s)",
            rep.total_failures()
        )));
    }

    let has_unit_b = g.unit_of_b().is_some();
    Ok(MoritaContextData {
        g: g.clone(),
        asmash,
        acorner,
        bsmash,
        psi,
        psi_prime,
        m,
        psi_corner,
        n,
        theta_b,
        has_unit_b,
        certificate: rep,
    })
}

/// Surjectivity of the two pairings: `span(M N) = Psi(A #_ H)` and
/// `span(N M) = B # H`, each as a canonical subspace equality. The second
/// span rests on the witness identity
/// `(h_1 |> theta(a) # h_2)(theta(1_A) # S(h_3) g) = h |> theta(a) # g`,
/// which is asserted on every basis triple before the spans are compared.
pub fn check_morita_surjectivity(ctx: &MoritaContextData) -> (bool, bool) {
    let qb = ctx.bsmash.dim();
    let g = &ctx.g;
    let p_h = g.ambient().h();
    let n_h = p_h.dim();
    let da = g.a().dim();
    let translates = theta_translates(g);
    let th1_b = ctx.theta_b.mul_vec(g.a().unit());
    for i in 0..n_h {
        for j in 0..da {
            for k in 0..n_h {
                let mut lhs = zeros(qb);
                for (i1, i2, i3, c) in p_h.coalg().sweedler2(i) {
                    let left = ctx.bsmash.class_of(&translates[i1][j], &basis_vec(n_h, i2));
                    let s_part = p_h.alg().mul(&p_h.antipode_basis(i3), &basis_vec(n_h, k));
                    let right = ctx.bsmash.class_of(&th1_b, &s_part);
                    add_scaled(&mut lhs, &c, &ctx.bsmash.mul(&left, &right));
                }
                let rhs = ctx.bsmash.class_of(&translates[i][j], &basis_vec(n_h, k));
                assert_eq!(
                    lhs, rhs,
                    "the witness identity must hold at (h_{i}, a_{j}, g_{k})"
                );
            }
        }
    }

    let mut mn = Vec::with_capacity(ctx.m.dim() * ctx.n.dim());
    let mut nm = Vec::with_capacity(ctx.m.dim() * ctx.n.dim());
    for s in 0..ctx.m.dim() {
        for t in 0..ctx.n.dim() {
            mn.push(ctx.pair_round(ctx.m.basis_row(s), ctx.n.basis_row(t)));
            nm.push(ctx.pair_square(ctx.n.basis_row(t), ctx.m.basis_row(s)));
        }
    }
    let round = Subspace::from_spanning(qb, &mn) == ctx.psi_corner;
    let square = Subspace::from_spanning(qb, &nm) == Subspace::full(qb);
    (round, square)
}

/// The context associativity conditions `(m, n) m' = m [n, m']` and
/// `[n, m] n' = n (m, n')` on all basis triples. Every product is the
/// multiplication of `B # H`, so this is a consistency check on the
/// projections rather than new mathematics.
pub fn check_context_associativity(ctx: &MoritaContextData) -> bool {
    let dm = ctx.m.dim();
    let dn = ctx.n.dim();
    let mrow = |s: usize| ctx.m.basis_row(s);
    let nrow = |t: usize| ctx.n.basis_row(t);
    for s in 0..dm {
        for t in 0..dn {
            for s2 in 0..dm {
                let lhs = ctx.bsmash.mul(&ctx.pair_round(mrow(s), nrow(t)), mrow(s2));
                let rhs = ctx.bsmash.mul(mrow(s), &ctx.pair_square(nrow(t), mrow(s2)));
                if lhs != rhs {
                    return false;
                }
            }
            for t2 in 0..dn {
                let lhs = ctx.bsmash.mul(&ctx.pair_square(nrow(t), mrow(s)), nrow(t2));
                let rhs = ctx.bsmash.mul(nrow(t), &ctx.pair_round(mrow(s), nrow(t2)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::globalize::{check_ideal_iff_symmetric, standard_globalization};
    use crate::groupoid::{
        cyclic_group, disjoint_union_of_groups, groupoid_algebra, pair_groupoid,
    };
    use crate::paction::{epsilon_action, GroundFieldAction};
    use crate::wha::WeakHopf;

    fn r(x: i64) -> Rat {
        Rat::from_int(x)
    }

    fn indicator_action(h: &WeakHopf, ones: &[usize]) -> PartialAction {
        let mut lambda = zeros(h.dim());
        for &i in ones {
            lambda[i] = Rat::one();
        }
        GroundFieldAction::new(lambda).as_partial_action(h).unwrap()
    }

    fn pair_ground_context() -> MoritaContextData {
        let g = pair_groupoid(2).unwrap();
        let h = groupoid_algebra(&g);
        let p = indicator_action(&h, &[g.arrow_index("(1,1)").unwrap()]);
        let gl = standard_globalization(&p).unwrap();
        build_morita_context(&p, &gl).unwrap()
    }

    #[test]
    fn psi_embeds_the_partial_smash_into_the_global_one() {
        let ctx = pair_ground_context();
        assert_eq!(ctx.asmash().dim(), 2);
        assert_eq!(ctx.acorner().dim(), 1);
        assert_eq!(ctx.bsmash().dim(), 4);
        assert_eq!(ctx.psi().rank(), 2);
        assert_eq!(ctx.psi_prime().mul(ctx.psi()), Matrix::identity(2));
        assert!(ctx.certificate().passed());

        // Psi transports the left unit: Psi(1 # 1) Psi(x) = Psi(x) on the
        // corner.
        let one = ctx
            .asmash()
            .left_unit()
            .expect("ground coefficients are unital")
            .to_vec();
        let pone = ctx.psi().mul_vec(&one);
        for t in 0..ctx.acorner().dim() {
            let px = ctx
                .psi()
                .mul_vec(&ctx.acorner().embed(&basis_vec(ctx.acorner().dim(), t)));
            assert_eq!(ctx.bsmash().mul(&pone, &px), px);
        }
    }

    #[test]
    fn pair_groupoid_context_dims_and_surjectivity() {
        let ctx = pair_ground_context();
        assert_eq!(ctx.m().dim(), 2);
        assert_eq!(ctx.n().dim(), 2);
        assert_eq!(ctx.psi_corner().dim(), 1);
        assert!(ctx.has_unit_b());
        assert_eq!(check_morita_surjectivity(&ctx), (true, true));
        assert!(check_context_associativity(&ctx));

        // The corner's copy is spanned by Psi(1 # 1), an idempotent; the
        // associativity conditions degenerate to x x x = x on it.
        let x = ctx
            .psi()
            .mul_vec(&ctx.acorner().embed(&basis_vec(1, 0)));
        assert!(ctx.psi_corner().contains(&x));
        assert!(ctx.n().contains(&x));
        assert_eq!(ctx.bsmash().mul(&x, &x), x);
        assert_eq!(
            ctx.bsmash().mul(&ctx.pair_round(&x, &x), &x),
            ctx.bsmash().mul(&x, &ctx.pair_square(&x, &x))
        );
    }

    #[test]
    fn global_hopf_case_gives_an_isomorphism() {
        let h = groupoid_algebra(&disjoint_union_of_groups(&[cyclic_group(2)]).unwrap());
        let p = epsilon_action(&h, Algebra::rationals()).unwrap();
        let gl = standard_globalization(&p).unwrap();
        let ctx = build_morita_context(&p, &gl).unwrap();
        assert_eq!(ctx.asmash().dim(), 2);
        assert_eq!(ctx.bsmash().dim(), 2);
        assert!(ctx.psi().try_inverse().is_some());
        assert_eq!(ctx.m(), &Subspace::full(2));
        assert_eq!(ctx.n(), &Subspace::full(2));
        assert_eq!(ctx.psi_corner(), &Subspace::full(2));
        assert_eq!(check_morita_surjectivity(&ctx), (true, true));
        assert!(check_context_associativity(&ctx));
        assert!(ctx.has_unit_b());
    }

    #[test]
    fn disjoint_union_context_spans_match() {
        let g = disjoint_union_of_groups(&[cyclic_group(3), cyclic_group(2)]).unwrap();
        let h = groupoid_algebra(&g);
        let p = indicator_action(&h, &[g.arrow_index("g0.e").unwrap()]);
        let gl = standard_globalization(&p).unwrap();
        assert_eq!(gl.dim_b(), 3);
        let ctx = build_morita_context(&p, &gl).unwrap();
        assert_eq!(ctx.asmash().dim(), 3);
        assert_eq!(ctx.acorner().dim(), 1);
        assert_eq!(ctx.bsmash().dim(), 9);
        assert_eq!(ctx.m().dim(), 3);
        assert_eq!(ctx.n().dim(), 3);
        assert_eq!(ctx.psi_corner().dim(), 1);
        assert_eq!(check_morita_surjectivity(&ctx), (true, true));
        assert!(check_context_associativity(&ctx));
    }

    #[test]
    fn non_symmetric_actions_are_rejected() {
        // Lower triangular 2x2 matrices with Z/2 acting by e . a = a and
        // g . a = a_11 e11: a partial action whose axiom set passes but
        // whose symmetric variant fails, because g . 1_A = e11 is not
        // central.
        let h = groupoid_algebra(&disjoint_union_of_groups(&[cyclic_group(2)]).unwrap());
        let a = Algebra::new(
            vec!["e11".into(), "e21".into(), "e22".into()],
            vec![
                basis_vec(3, 0),
                zeros(3),
                zeros(3),
                basis_vec(3, 1),
                zeros(3),
                zeros(3),
                zeros(3),
                basis_vec(3, 1),
                basis_vec(3, 2),
            ],
            vec![r(1), r(0), r(1)],
        )
        .unwrap();
        assert!(a.check().passed());
        let e = h.labels().iter().position(|l| l == "g0.e").unwrap();
        let p = PartialAction::from_fn(h.clone(), a, |i, j| {
            if i == e {
                basis_vec(3, j)
            } else if j == 0 {
                basis_vec(3, 0)
            } else {
                zeros(3)
            }
        })
        .unwrap();
        assert!(p.check_partial_action().passed());
        assert!(!p.check_symmetric());

        let gl = standard_globalization(&p).unwrap();
        assert_eq!(gl.dim_b(), 5);
        assert_eq!(check_ideal_iff_symmetric(&gl, &p), (false, false));

        // Psi itself exists for any globalization; only the context needs
        // symmetry.
        let psi = build_psi(&p, &gl).unwrap();
        assert_eq!(psi.rank(), 6);
        assert!(matches!(build_morita_context(&p, &gl), Err(Error::NotSymmetric(_))));
    }
}
