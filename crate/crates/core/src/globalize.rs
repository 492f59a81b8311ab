//! Globalization of partial actions.
//!
//! Every partial action arises by restriction from a global one. The ambient
//! stage is the convolution algebra `F = Hom(H, A)` with product
//! `(f * g)(h) = f(h_1) g(h_2)` and action `(h |> f)(k) = f(kh)`; the map
//! `phi(a): h -> h . a` embeds `A` into `F`, and the standard globalization
//! is `B = H |> phi(A)` together with `phi`. A globalization in general is a
//! module algebra `B` with an embedding `theta` such that
//!
//! (i)   `theta` is an injective algebra map and `theta(A)` is a right ideal
//!       of `B`,
//! (ii)  `theta(h . a) = theta(1_A) (h |> theta(a))`,
//! (iii) `B = H |> theta(A)`.
//!
//! `B` need not be unital, and `theta(1_A)` need not be a unit even when it
//! is. `theta(A)` is a two-sided ideal exactly when the action is symmetric,
//! the standard globalization is minimal (no nonzero submodule is
//! annihilated by `theta(1_A)`), and every globalization maps onto the
//! standard one by `sum h_i |> theta(a) -> sum h_i |> phi(a)`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, basis_vec, nonzeros, pair_index, zeros, Matrix, Rat, Subspace,
};
use crate::paction::PartialAction;
use crate::report::VerificationReport;
use crate::smash::SmashCoefficients;
use crate::wha::WeakHopf;

/// A finite-dimensional algebra with an `H`-action, given by tables: the
/// ambient stage for globalizations. No unit is required; the convolution
/// algebra supplies one, user-built module algebras may not.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra {
    h: WeakHopf,
    labels: Vec<String>,
    /// `mul[pair_index(i, j, dim)]` is the product of basis elements.
    mul: Vec<Vec<Rat>>,
    /// One matrix per `H`-basis element: `action[i] * f = h_i |> f`.
    action: Vec<Matrix>,
    unit: Option<Vec<Rat>>,
}

impl ModuleAlgebra {
    pub fn new(
        h: WeakHopf,
        labels: Vec<String>,
        mul: Vec<Vec<Rat>>,
        action: Vec<Matrix>,
        unit: Option<Vec<Rat>>,
    ) -> Result<Self> {
        let m = labels.len();
        if mul.len() != m * m || mul.iter().any(|v| v.len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "module algebra multiplication table must hold {m} x {m} vectors of length {m}"
            )));
        }
        if action.len() != h.dim() || action.iter().any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::DimensionMismatch(format!(
                "module algebra needs {} action matrices of size {m} x {m}",
                h.dim()
            )));
        }
        if let Some(u) = &unit {
            if u.len() != m {
                return Err(Error::DimensionMismatch("unit length mismatch".into()));
            }
        }
        Ok(ModuleAlgebra { h, labels, mul, action, unit })
    }

    pub fn h(&self) -> &WeakHopf {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> Option<&[Rat]> {
        self.unit.as_deref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rat] {
        &self.mul[pair_index(i, j, self.dim())]
    }

    pub fn mul_vec(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (i, c) in nonzeros(u) {
            for (j, d) in nonzeros(v) {
                add_scaled(&mut out, &(c * d), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// `h_i |> f`.
    pub fn act(&self, i: usize, f: &[Rat]) -> Vec<Rat> {
        self.action[i].mul_vec(f)
    }

    /// Bilinear extension of the action to an arbitrary element of `H`.
    pub fn act_vec(&self, hv: &[Rat], f: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (i, c) in nonzeros(hv) {
            add_scaled(&mut out, c, &self.act(i, f));
        }
        out
    }

    /// Exhaustive verification of the module-algebra laws on basis tuples.
    pub fn check(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("module algebra");
        let m = self.dim();
        let n = self.h.dim();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let lhs = self.mul_vec(self.basis_product(i, j), &basis_vec(m, k));
                    let rhs = self.mul_vec(&basis_vec(m, i), self.basis_product(j, k));
                    rep.check_vecs("the product is associative", &[i, j, k], &lhs, &rhs);
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..m {
                let e = basis_vec(m, i);
                rep.check_vecs("the unit is a left unit", &[i], &self.mul_vec(u, &e), &e);
                rep.check_vecs("the unit is a right unit", &[i], &self.mul_vec(&e, u), &e);
            }
        }
        for q in 0..m {
            let f = basis_vec(m, q);
            rep.check_vecs(
                "the unit of H acts as the identity",
                &[q],
                &self.act_vec(self.h.alg().unit(), &f),
                &f,
            );
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.act(i, &self.act(j, &f));
                    let rhs = self.act_vec(self.h.alg().basis_product(i, j), &f);
                    rep.check_vecs(
                        "the action composes through products in H",
                        &[i, j, q],
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
        for i in 0..n {
            for p in 0..m {
                for q in 0..m {
                    let lhs = self.act(i, self.basis_product(p, q));
                    let mut rhs = zeros(m);
                    for (i1, i2, c) in self.h.coalg().sweedler(i) {
                        let term = self
                            .mul_vec(&self.act(i1, &basis_vec(m, p)), &self.act(i2, &basis_vec(m, q)));
                        add_scaled(&mut rhs, &c, &term);
                    }
                    rep.check_vecs(
                        "the action is multiplicative over the product",
                        &[i, p, q],
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
        rep
    }
}

/// The convolution algebra `F = Hom(H, A)` with the right-translation
/// action, as a concrete module algebra on vectors indexed by
/// `pair_index(h_index, a_index, dim A)`; the slice at block `i` is the
/// value `f(h_i)` in `A`.
#[derive(Clone, Debug)]
pub struct ConvolutionAlgebra {
    a: Algebra,
    ambient: ModuleAlgebra,
}

impl ConvolutionAlgebra {
    pub fn new(h: &WeakHopf, a: &Algebra) -> Self {
        let n = h.dim();
        let da = a.dim();
        let dim = n * da;
        let labels = (0..dim)
            .map(|f| {
                let (i, j) = crate::linalg::unpair_index(f, da);
                format!("{}*(x){}", h.labels()[i], a.label(j))
            })
            .collect();
        // (f * g)(h_k) = f(h_k1) g(h_k2): a basis pair (dual(h_p) (x) a_u,
        // dual(h_q) (x) a_v) lands on block k with the coefficient of
        // h_p (x) h_q in Delta(h_k), valued a_u a_v.
        let mut mul = vec![zeros(dim); dim * dim];
        for k in 0..n {
            for (k1, k2, c) in h.coalg().sweedler(k) {
                for u in 0..da {
                    for v in 0..da {
                        let prod = a.basis_product(u, v);
                        let entry = &mut mul
                            [pair_index(pair_index(k1, u, da), pair_index(k2, v, da), dim)];
                        for (w, cw) in nonzeros(prod) {
                            entry[pair_index(k, w, da)] += &(&c * cw);
                        }
                    }
                }
            }
        }
        // (h_i |> f)(h_k) = f(h_k h_i): dual(h_p) (x) a_u pulls back along
        // the coefficient of h_p in h_k h_i.
        let action = (0..n)
            .map(|i| {
                Matrix::from_fn(dim, dim, |row, col| {
                    let (k, wr) = crate::linalg::unpair_index(row, da);
                    let (p, wc) = crate::linalg::unpair_index(col, da);
                    if wr == wc {
                        h.alg().basis_product(k, i)[p].clone()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        let mut unit = zeros(dim);
        for k in 0..n {
            let c = h.coalg().counit_of(&basis_vec(n, k));
            if !c.is_zero() {
                for (w, cw) in nonzeros(a.unit()) {
                    unit[pair_index(k, w, da)] = &c * cw;
                }
            }
        }
        let ambient =
            ModuleAlgebra::new(h.clone(), labels, mul, action, Some(unit)).expect("table shapes");
        ConvolutionAlgebra { a: a.clone(), ambient }
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn h(&self) -> &WeakHopf {
        self.ambient.h()
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn ambient(&self) -> &ModuleAlgebra {
        &self.ambient
    }

    pub fn into_ambient(self) -> ModuleAlgebra {
        self.ambient
    }

    /// The value `f(h_i)` of a hom vector.
    pub fn value<'a>(&self, f: &'a [Rat], i: usize) -> &'a [Rat] {
        let da = self.a.dim();
        &f[i * da..(i + 1) * da]
    }

    /// Assembles a hom vector from its values on the `H`-basis.
    pub fn from_values(&self, values: &[Vec<Rat>]) -> Vec<Rat> {
        assert_eq!(values.len(), self.h().dim());
        let mut f = Vec::with_capacity(self.dim());
        for v in values {
            assert_eq!(v.len(), self.a.dim());
            f.extend_from_slice(v);
        }
        f
    }

    pub fn conv(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        self.ambient.mul_vec(u, v)
    }

    /// `phi(a): h -> h . a` as a matrix `A -> F`.
    pub fn phi_matrix(&self, p: &PartialAction) -> Matrix {
        let da = self.a.dim();
        Matrix::from_fn(self.dim(), da, |row, j| {
            let (i, w) = crate::linalg::unpair_index(row, da);
            p.act_basis(i, j)[w].clone()
        })
    }

    pub fn check(&self) -> VerificationReport {
        self.ambient.check()
    }
}

/// A globalization `(B, theta)` of a partial action: a subspace of a module
/// algebra, the embedding of `A` into it, and the two structural flags that
/// are computable without reference to the partial action.
#[derive(Clone, Debug)]
pub struct Globalization {
    ambient: ModuleAlgebra,
    b: Subspace,
    /// `theta` as a matrix from `A` into ambient coordinates.
    theta: Matrix,
    a: Algebra,
    is_ideal: bool,
    is_minimal: bool,
}

impl Globalization {
    /// Wraps user-supplied data after shape checks; computes the ideal and
    /// minimality flags, but defers the globalization axioms themselves to
    /// [`check_globalization`].
    pub fn new(ambient: ModuleAlgebra, b: Subspace, theta: Matrix, a: Algebra) -> Result<Self> {
        if b.ambient_dim() != ambient.dim() {
            return Err(Error::DimensionMismatch(
                "B must live in the ambient module algebra".into(),
            ));
        }
        if theta.rows() != ambient.dim() || theta.cols() != a.dim() {
            return Err(Error::DimensionMismatch(format!(
                "theta must be a {} x {} matrix",
                ambient.dim(),
                a.dim()
            )));
        }
        for j in 0..a.dim() {
            if !b.contains(&theta.col_vec(j)) {
                return Err(Error::InvalidInput(format!(
                    "theta({}) lies outside B",
                    a.label(j)
                )));
            }
        }
        let mut g = Globalization { ambient, b, theta, a, is_ideal: false, is_minimal: false };
        g.is_ideal = g.compute_is_ideal();
        g.is_minimal = g.degenerate_submodule().dim() == 0;
        Ok(g)
    }

    pub fn ambient(&self) -> &ModuleAlgebra {
        &self.ambient
    }

    pub fn b(&self) -> &Subspace {
        &self.b
    }

    pub fn dim_b(&self) -> usize {
        self.b.dim()
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    /// `theta(A)` as a subspace of the ambient module algebra.
    pub fn theta_image(&self) -> Subspace {
        Subspace::from_spanning(
            self.ambient.dim(),
            &(0..self.a.dim()).map(|j| self.theta.col_vec(j)).collect::<Vec<_>>(),
        )
    }

    /// `theta(1_A)` in ambient coordinates.
    pub fn theta_unit(&self) -> Vec<Rat> {
        self.theta.mul_vec(self.a.unit())
    }

    /// Whether `theta(A)` is a two-sided ideal of `B`.
    pub fn is_ideal(&self) -> bool {
        self.is_ideal
    }

    /// Whether no nonzero submodule of `B` is annihilated by `theta(1_A)`.
    pub fn is_minimal(&self) -> bool {
        self.is_minimal
    }

    /// The largest submodule `M = {m in B : theta(1_A)(h_i |> m) = 0}`,
    /// in `B`-coordinates. `M` is automatically action-stable because
    /// `h |> (g |> m)` is `(hg) |> m` again of the tested shape.
    pub fn degenerate_submodule(&self) -> Subspace {
        let th1 = self.theta_unit();
        let m = self.b.dim();
        let mut blocks: Option<Matrix> = None;
        for i in 0..self.ambient.h().dim() {
            let block = Matrix::from_cols(
                (0..m)
                    .map(|q| self.ambient.mul_vec(&th1, &self.ambient.act(i, self.b.basis_row(q))))
                    .collect(),
            );
            blocks = Some(match blocks {
                None => block,
                Some(acc) => acc.vstack(&block),
            });
        }
        match blocks {
            Some(mat) => mat.kernel(),
            None => Subspace::zero(m),
        }
    }

    /// The partial action induced on `A` by restriction:
    /// `h . a = theta^{-1}(theta(1_A)(h |> theta(a)))`.
    pub fn induced_action(&self) -> Result<PartialAction> {
        let n = self.ambient.h().dim();
        let da = self.a.dim();
        let th1 = self.theta_unit();
        let mut act = Vec::with_capacity(n * da);
        for i in 0..n {
            for j in 0..da {
                let v = self.ambient.mul_vec(&th1, &self.ambient.act(i, &self.theta.col_vec(j)));
                let coords = self.theta.solve(&v).ok_or_else(|| {
                    Error::NotARightIdeal(format!(
                        "theta(1_A)(h_{i} |> theta(a_{j})) lies outside theta(A)"
                    ))
                })?;
                act.push(coords);
            }
        }
        PartialAction::new(self.ambient.h().clone(), self.a.clone(), act)
    }

    /// The multiplication table of `B` in its own coordinates; fails when
    /// `B` is not closed under the ambient product.
    pub fn restricted_mul(&self) -> Result<Vec<Vec<Rat>>> {
        let m = self.b.dim();
        let mut mul = Vec::with_capacity(m * m);
        for p in 0..m {
            for q in 0..m {
                let prod = self.ambient.mul_vec(self.b.basis_row(p), self.b.basis_row(q));
                mul.push(self.b.coords_of(&prod).ok_or_else(|| {
                    Error::NotClosed(format!("product of B basis ({p}, {q}) escapes B"))
                })?);
            }
        }
        Ok(mul)
    }

    /// The unit of `B`, if `B` has one; independent of whether `theta(1_A)`
    /// is that unit (usually it is not).
    pub fn unit_of_b(&self) -> Option<Vec<Rat>> {
        let m = self.b.dim();
        if m == 0 {
            return None;
        }
        let mul = self.restricted_mul().ok()?;
        // Stack u * e_q = e_q and e_q * u = e_q over all q and solve for u.
        let mut rows = Vec::with_capacity(2 * m * m);
        let mut rhs = Vec::with_capacity(2 * m * m);
        for q in 0..m {
            for r in 0..m {
                rows.push((0..m).map(|p| mul[pair_index(p, q, m)][r].clone()).collect::<Vec<_>>());
                rhs.push(if r == q { Rat::one() } else { Rat::zero() });
            }
            for r in 0..m {
                rows.push((0..m).map(|p| mul[pair_index(q, p, m)][r].clone()).collect::<Vec<_>>());
                rhs.push(if r == q { Rat::one() } else { Rat::zero() });
            }
        }
        Matrix::from_rows(rows).solve(&rhs)
    }

    /// Coefficient tables of `B` for the smash construction: restricted
    /// products, restricted action, and the unit when one exists.
    pub fn coefficients(&self) -> Result<SmashCoefficients> {
        let m = self.b.dim();
        let n = self.ambient.h().dim();
        let mul = self.restricted_mul()?;
        let mut act = Vec::with_capacity(n * m);
        for i in 0..n {
            for q in 0..m {
                let moved = self.ambient.act(i, self.b.basis_row(q));
                act.push(self.b.coords_of(&moved).ok_or_else(|| {
                    Error::NotClosed(format!("h_{i} |> B basis {q} escapes B"))
                })?);
            }
        }
        let labels =
            (0..m).map(|t| self.ambient.label(self.b.pivots()[t]).to_string()).collect();
        SmashCoefficients::new(labels, mul, act, self.unit_of_b())
    }

    fn compute_is_ideal(&self) -> bool {
        let image = self.theta_image();
        let n = self.ambient.h().dim();
        let da = self.a.dim();
        for i in 0..n {
            for j in 0..da {
                let translate = self.ambient.act(i, &self.theta.col_vec(j));
                for k in 0..da {
                    let th = self.theta.col_vec(k);
                    if !image.contains(&self.ambient.mul_vec(&th, &translate)) {
                        return false;
                    }
                    if !image.contains(&self.ambient.mul_vec(&translate, &th)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Builds the standard globalization `B = H |> phi(A)` of a partial action
/// and verifies it on the spot; a failure would contradict the existence
/// theorem, so construction-level facts are asserted.
pub fn standard_globalization(p: &PartialAction) -> Result<Globalization> {
    let axioms = p.check_partial_action();
    if !axioms.passed() {
        return Err(Error::InvalidInput(format!(
            "the action fails the partial-action axioms: {} failing instance(s)",
            axioms.total_failures()
        )));
    }
    let conv = ConvolutionAlgebra::new(p.h(), p.algebra());
    assert!(conv.check().passed(), "Hom(H, A) must satisfy the module-algebra laws");
    let phi = conv.phi_matrix(p);
    let n = p.dim_h();
    let da = p.dim_a();
    let mut gens = Vec::with_capacity(n * da);
    for i in 0..n {
        for j in 0..da {
            gens.push(conv.ambient().act(i, &phi.col_vec(j)));
        }
    }
    let b = Subspace::from_spanning(conv.dim(), &gens);
    // One pass suffices because translates compose through products in H,
    // and products of translates reduce to translates again; both facts are
    // asserted rather than trusted.
    for i in 0..n {
        for q in 0..b.dim() {
            assert!(
                b.contains(&conv.ambient().act(i, b.basis_row(q))),
                "B must be stable under the action"
            );
        }
    }
    for p_ in 0..b.dim() {
        for q in 0..b.dim() {
            assert!(
                b.contains(&conv.conv(b.basis_row(p_), b.basis_row(q))),
                "B must be closed under convolution"
            );
        }
    }
    let g = Globalization::new(conv.into_ambient(), b, phi, p.algebra().clone())?;
    let rep = check_globalization(&g, p);
    assert!(rep.passed(), "the standard globalization must verify:\n{rep}");
    Ok(g)
}

/// Itemized verification of the globalization axioms of `(B, theta)`
/// against a partial action. Works on user-supplied globalizations.
pub fn check_globalization(g: &Globalization, p: &PartialAction) -> VerificationReport {
    let mut rep = VerificationReport::new("globalization");
    let n = p.dim_h();
    let da = p.dim_a();
    let ma = g.ambient();
    rep.check(
        "theta is injective",
        &[],
        g.theta().rank() == da,
        &format!("rank {}", g.theta().rank()),
        &format!("rank {da}"),
    );
    for i in 0..da {
        for j in 0..da {
            let lhs = g.theta().mul_vec(p.algebra().basis_product(i, j));
            let rhs = ma.mul_vec(&g.theta().col_vec(i), &g.theta().col_vec(j));
            rep.check_vecs("theta is multiplicative", &[i, j], &lhs, &rhs);
        }
    }
    let image = g.theta_image();
    let th1 = g.theta_unit();
    for i in 0..n {
        for j in 0..da {
            let translate = ma.act(i, &g.theta().col_vec(j));
            for k in 0..da {
                let prod = ma.mul_vec(&g.theta().col_vec(k), &translate);
                rep.check(
                    "theta(A) is a right ideal of B",
                    &[i, j, k],
                    image.contains(&prod),
                    "product escapes theta(A)",
                    "product lies in theta(A)",
                );
            }
            let lhs = g.theta().mul_vec(p.act_basis(i, j));
            let rhs = ma.mul_vec(&th1, &translate);
            rep.check_vecs("the induced action matches the original", &[i, j], &lhs, &rhs);
        }
    }
    let mut gens = Vec::with_capacity(n * da);
    for i in 0..n {
        for j in 0..da {
            gens.push(ma.act(i, &g.theta().col_vec(j)));
        }
    }
    let span = Subspace::from_spanning(ma.dim(), &gens);
    rep.check(
        "B is generated by the translates of theta(A)",
        &[],
        &span == g.b(),
        &format!("span of translates has dimension {}", span.dim()),
        &format!("B has dimension {}", g.dim_b()),
    );
    for i in 0..n {
        for q in 0..g.dim_b() {
            rep.check(
                "B is stable under the action",
                &[i, q],
                g.b().contains(&ma.act(i, g.b().basis_row(q))),
                "translate escapes B",
                "translate lies in B",
            );
        }
    }
    for p_ in 0..g.dim_b() {
        for q in 0..g.dim_b() {
            rep.check(
                "B is closed under its product",
                &[p_, q],
                g.b().contains(&ma.mul_vec(g.b().basis_row(p_), g.b().basis_row(q))),
                "product escapes B",
                "product lies in B",
            );
        }
    }
    rep
}

/// `theta(A)` is a two-sided ideal of `B` exactly when the action is
/// symmetric. Returns both sides of the equivalence and asserts they agree.
pub fn check_ideal_iff_symmetric(g: &Globalization, p: &PartialAction) -> (bool, bool) {
    let ideal = g.is_ideal();
    let symmetric = p.check_symmetric();
    assert_eq!(ideal, symmetric, "theta(A) must be an ideal exactly for symmetric actions");
    (ideal, symmetric)
}

/// Minimality: the largest submodule annihilated by `theta(1_A)` is zero.
pub fn check_minimality(g: &Globalization) -> bool {
    g.degenerate_submodule().dim() == 0
}

/// The comparison morphism `Phi: sum h_i |> theta(a) -> sum h_i |> phi(a)`
/// from any globalization onto the standard one, solved from the generator
/// correspondence and then verified: surjective, multiplicative, and
/// equivariant. Returned in `B`-coordinates on both sides.
pub fn globalization_morphism(
    g_other: &Globalization,
    g_std: &Globalization,
) -> Result<(Matrix, VerificationReport)> {
    let n = g_other.ambient().h().dim();
    let da = g_other.a().dim();
    if g_std.a().dim() != da || g_std.ambient().h().dim() != n {
        return Err(Error::DimensionMismatch(
            "both globalizations must be over the same action".into(),
        ));
    }
    let escape = || Error::NotClosed("a generator lies outside its B".into());
    let mut dom_cols = Vec::with_capacity(n * da);
    let mut img_cols = Vec::with_capacity(n * da);
    for i in 0..n {
        for j in 0..da {
            let d = g_other.ambient().act(i, &g_other.theta().col_vec(j));
            let m = g_std.ambient().act(i, &g_std.theta().col_vec(j));
            dom_cols.push(g_other.b().coords_of(&d).ok_or_else(escape)?);
            img_cols.push(g_std.b().coords_of(&m).ok_or_else(escape)?);
        }
    }
    let d_mat = Matrix::from_cols(dom_cols);
    let m_mat = Matrix::from_cols(img_cols);
    let dt = d_mat.transpose();
    let mut rows = Vec::with_capacity(g_std.dim_b());
    for r in 0..g_std.dim_b() {
        let rhs: Vec<Rat> = (0..m_mat.cols()).map(|c| m_mat[(r, c)].clone()).collect();
        let row = dt.solve(&rhs).ok_or_else(|| {
            Error::NotWellDefined(
                "the generator correspondence does not extend to a linear map".into(),
            )
        })?;
        rows.push(row);
    }
    let phi = Matrix::from_rows(rows);

    let mut rep = VerificationReport::new("globalization morphism");
    rep.check(
        "the morphism is surjective",
        &[],
        phi.rank() == g_std.dim_b(),
        &format!("rank {}", phi.rank()),
        &format!("dim B = {}", g_std.dim_b()),
    );
    let db = g_other.dim_b();
    let to_std_coords = |v: &[Rat]| g_std.b().coords_of(v);
    for p in 0..db {
        for q in 0..db {
            let prod =
                g_other.ambient().mul_vec(g_other.b().basis_row(p), g_other.b().basis_row(q));
            let lhs = match g_other.b().coords_of(&prod) {
                Some(c) => phi.mul_vec(&c),
                None => {
                    rep.check("the morphism is multiplicative", &[p, q], false, "B not closed", "");
                    continue;
                }
            };
            let ip = g_std.b().from_coords(&phi.mul_vec(&basis_vec(db, p)));
            let iq = g_std.b().from_coords(&phi.mul_vec(&basis_vec(db, q)));
            match to_std_coords(&g_std.ambient().mul_vec(&ip, &iq)) {
                Some(rhs) => rep.check_vecs("the morphism is multiplicative", &[p, q], &lhs, &rhs),
                None => rep.check(
                    "the morphism is multiplicative",
                    &[p, q],
                    false,
                    "image product escapes B",
                    "",
                ),
            }
        }
    }
    for i in 0..n {
        for q in 0..db {
            let moved = g_other.ambient().act(i, g_other.b().basis_row(q));
            let lhs = match g_other.b().coords_of(&moved) {
                Some(c) => phi.mul_vec(&c),
                None => {
                    rep.check("the morphism is equivariant", &[i, q], false, "B not stable", "");
                    continue;
                }
            };
            let image = g_std.b().from_coords(&phi.mul_vec(&basis_vec(db, q)));
            match to_std_coords(&g_std.ambient().act(i, &image)) {
                Some(rhs) => rep.check_vecs("the morphism is equivariant", &[i, q], &lhs, &rhs),
                None => {
                    rep.check("the morphism is equivariant", &[i, q], false, "image not stable", "")
                }
            }
        }
    }
    Ok((phi, rep))
}

/// A deliberately non-minimal globalization of the counit action of a group
/// algebra on the scalars: the translate algebra with basis `w_g`, products
/// `w_g w_k = w_g`, action `g |> w_h = w_{gh}`, and `theta(1) = w_e`. Its
/// comparison morphism onto the standard globalization has kernel dimension
/// `|G| - 1`.
pub fn translate_globalization(h: &WeakHopf) -> Result<Globalization> {
    let n = h.dim();
    let e = nonzeros(h.alg().unit()).map(|(i, _)| i).collect::<Vec<_>>();
    if e.len() != 1 || !h.alg().unit()[e[0]].is_one() {
        return Err(Error::InvalidInput(
            "the translate algebra needs a group algebra: the unit must be a basis element".into(),
        ));
    }
    let labels = (0..n).map(|i| format!("w.{}", h.labels()[i])).collect();
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        for _ in 0..n {
            mul.push(basis_vec(n, i));
        }
    }
    // g |> w_h = w_{gh}: the column at h is the product g h in H, which for
    // a group algebra is again a basis vector.
    let action = (0..n)
        .map(|i| Matrix::from_cols((0..n).map(|j| h.alg().basis_product(i, j).to_vec()).collect()))
        .collect::<Vec<_>>();
    if action.iter().any(|m| (0..n).any(|j| nonzeros(&m.col_vec(j)).count() != 1)) {
        return Err(Error::InvalidInput(
            "the translate algebra needs a group algebra: products must permute the basis".into(),
        ));
    }
    let ambient = ModuleAlgebra::new(h.clone(), labels, mul, action, None)?;
    let theta = Matrix::from_cols(vec![basis_vec(n, e[0])]);
    Globalization::new(ambient, Subspace::full(n), theta, Algebra::rationals())
}
