//! The smash product of a partial module algebra with its weak Hopf algebra.
//!
//! The underlying space is the tensor product over the left counital
//! subalgebra, `A (x)_{H_L} H`, realized as an explicit quotient of
//! `A (x) H` by the balancing relations `(a <. z) (x) h - a (x) zh`, where
//! `a <. z = S_R^{-1}(z) . a` is the right `H_L`-structure of `A` and `z`
//! runs over a basis of `H_L`. The product
//!
//! `[a (x) h][b (x) g] = [a(h_1 . b) (x) h_2 g]`
//!
//! is computed on canonical section representatives and projected back.
//! Construction verifies, rather than assumes, that the relation space is
//! stable under the raw product on either side, that the induced product is
//! associative, and that the class of `1_A (x) 1_H` is a left unit. That
//! class is a right unit exactly when the action is global; its corner
//! `(A # H)(1_A # 1_H)` is always a unital algebra, the partial smash
//! product.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, basis_vec, nonzeros, pair_index, tensor_vec, unpair_index, vec_sub, zeros,
    QuotientSpace, Rat, Subspace,
};
use crate::paction::PartialAction;
use crate::report::VerificationReport;
use crate::wha::{CounitalMaps, WeakHopf};

/// Coefficient data for a smash product: labels, multiplication table,
/// action table, and optional unit of the algebra that `H` acts on. A
/// [`PartialAction`] supplies all four; a globalized coefficient algebra may
/// have no unit, which only disables the left unit class and the corner.
#[derive(Clone, Debug)]
pub struct SmashCoefficients {
    labels: Vec<String>,
    mul: Vec<Vec<Rat>>,
    act: Vec<Vec<Rat>>,
    unit: Option<Vec<Rat>>,
}

impl SmashCoefficients {
    /// `mul[pair_index(i, j, dim)]` is `a_i a_j` and
    /// `act[pair_index(i, j, dim)]` is `h_i . a_j`, with `i` indexing the
    /// `H`-basis in the action table.
    pub fn new(
        labels: Vec<String>,
        mul: Vec<Vec<Rat>>,
        act: Vec<Vec<Rat>>,
        unit: Option<Vec<Rat>>,
    ) -> Result<Self> {
        let m = labels.len();
        if mul.len() != m * m || mul.iter().any(|v| v.len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "coefficient multiplication table must hold {m} x {m} vectors of length {m}"
            )));
        }
        if m == 0 || act.len() % m != 0 || act.iter().any(|v| v.len() != m) {
            return Err(Error::DimensionMismatch(
                "action table length must be a multiple of the coefficient dimension".into(),
            ));
        }
        if let Some(u) = &unit {
            if u.len() != m {
                return Err(Error::DimensionMismatch("unit length mismatch".into()));
            }
        }
        Ok(SmashCoefficients { labels, mul, act, unit })
    }

    pub fn of_action(p: &PartialAction) -> Self {
        let a = p.algebra();
        let m = a.dim();
        let mut mul = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                mul.push(a.basis_product(i, j).to_vec());
            }
        }
        let mut act = Vec::with_capacity(p.dim_h() * m);
        for i in 0..p.dim_h() {
            for j in 0..m {
                act.push(p.act_basis(i, j).to_vec());
            }
        }
        SmashCoefficients {
            labels: a.labels().to_vec(),
            mul,
            act,
            unit: Some(a.unit().to_vec()),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> Option<&[Rat]> {
        self.unit.as_deref()
    }

    fn act_basis(&self, i: usize, j: usize) -> &[Rat] {
        &self.act[pair_index(i, j, self.dim())]
    }

    /// Bilinear extension of the action table.
    fn act_vec(&self, hv: &[Rat], av: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (i, c) in nonzeros(hv) {
            for (j, d) in nonzeros(av) {
                add_scaled(&mut out, &(c * d), self.act_basis(i, j));
            }
        }
        out
    }

    /// `a_i v` for a basis element on the left.
    fn mul_basis_left(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (k, c) in nonzeros(v) {
            add_scaled(&mut out, c, &self.mul[pair_index(i, k, self.dim())]);
        }
        out
    }
}

/// The algebra `A # H` on the quotient `A (x)_{H_L} H`, together with the
/// verification certificate recorded during construction. Without a unit in
/// the coefficient algebra the left unit class is absent and the product is
/// all there is.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    h: WeakHopf,
    co: SmashCoefficients,
    quot: QuotientSpace,
    labels: Vec<String>,
    /// `mult[pair_index(p, q, dim)]` is the product of quotient classes.
    mult: Vec<Vec<Rat>>,
    left_unit: Option<Vec<Rat>>,
    certificate: VerificationReport,
}

impl SmashAlgebra {
    pub fn h(&self) -> &WeakHopf {
        &self.h
    }

    pub fn coefficients(&self) -> &SmashCoefficients {
        &self.co
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quot
    }

    pub fn ambient_dim(&self) -> usize {
        self.quot.ambient_dim()
    }

    pub fn relation_dim(&self) -> usize {
        self.quot.relations().dim()
    }

    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    /// Label of a quotient basis class, from its representative `a_i (x) h_j`.
    pub fn label(&self, t: usize) -> &str {
        &self.labels[t]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Class of `a (x) v` in quotient coordinates.
    pub fn class_of(&self, a: &[Rat], v: &[Rat]) -> Vec<Rat> {
        self.quot.project(&tensor_vec(a, v))
    }

    pub fn class_of_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        self.quot.project(&tensor_vec(
            &basis_vec(self.co.dim(), i),
            &basis_vec(self.h.dim(), j),
        ))
    }

    pub fn basis_product(&self, p: usize, q: usize) -> &[Rat] {
        &self.mult[pair_index(p, q, self.dim())]
    }

    /// Bilinear product of quotient vectors.
    pub fn mul(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (p, c) in nonzeros(u) {
            for (q, d) in nonzeros(v) {
                add_scaled(&mut out, &(c * d), self.basis_product(p, q));
            }
        }
        out
    }

    /// Class of `1_A (x) 1_H`, absent for unitless coefficients.
    pub fn left_unit(&self) -> Option<&[Rat]> {
        self.left_unit.as_deref()
    }

    /// Whether the left unit class is also a right unit; `None` without one.
    pub fn right_unit_law_holds(&self) -> Option<bool> {
        let lu = self.left_unit.as_deref()?;
        Some((0..self.dim()).all(|q| {
            let e = basis_vec(self.dim(), q);
            self.mul(&e, lu) == e
        }))
    }

    pub fn certificate(&self) -> &VerificationReport {
        &self.certificate
    }
}

/// The unital corner `(A # H)(1_A # 1_H)` of a smash algebra: the partial
/// smash product, in its own basis, with the left unit class as two-sided
/// unit.
#[derive(Clone, Debug)]
pub struct PartialSmashAlgebra {
    subspace: Subspace,
    algebra: Algebra,
}

impl PartialSmashAlgebra {
    /// The corner as a subspace of the smash quotient.
    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// The corner in its own coordinates, unit included.
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// Corner coordinates to quotient coordinates.
    pub fn embed(&self, v: &[Rat]) -> Vec<Rat> {
        self.subspace.from_coords(v)
    }

    /// Quotient coordinates to corner coordinates, when the vector lies in
    /// the corner.
    pub fn restrict(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        self.subspace.coords_of(v)
    }
}

/// The quotient `A (x) H / span{(a <. z) (x) h - a (x) zh}` underlying the
/// smash product. Requires the partial-action axioms.
pub fn tensor_over_hl(p: &PartialAction) -> Result<QuotientSpace> {
    let co = coefficients_checked(p)?;
    let cm = CounitalMaps::new(p.h())?;
    let gens = balancing_relations(p.h(), &cm, &co)?;
    Ok(QuotientSpace::new(Subspace::from_spanning(co.dim() * p.dim_h(), &gens)))
}

/// Builds and verifies the smash product of a partial action.
pub fn build_smash(p: &PartialAction) -> Result<SmashAlgebra> {
    let co = coefficients_checked(p)?;
    build_smash_over(p.h(), co)
}

/// Builds the smash product from raw coefficient tables. This is the entry
/// point for globalized coefficient algebras, whose right `H_L`-structure is
/// the same formula `b <. z = S_R^{-1}(z) . b` through the action table and
/// which may have no unit.
pub fn build_smash_over(h: &WeakHopf, co: SmashCoefficients) -> Result<SmashAlgebra> {
    let n = h.dim();
    let m = co.dim();
    if co.act.len() != n * m {
        return Err(Error::DimensionMismatch(format!(
            "action table must hold {n} x {m} vectors"
        )));
    }
    let cm = CounitalMaps::new(h)?;
    let gens = balancing_relations(h, &cm, &co)?;
    let quot = QuotientSpace::new(Subspace::from_spanning(m * n, &gens));
    let qd = quot.dim();
    let amb = quot.ambient_dim();
    let mut rep = VerificationReport::new("smash product");

    // Stability of the relation span under the raw product against every
    // ambient basis tensor; this is what makes the induced product well
    // defined.
    let zero_class = zeros(qd);
    for (gi, gen) in gens.iter().enumerate() {
        for e in 0..amb {
            let basis = basis_vec(amb, e);
            rep.check_vecs(
                "relation generators annihilate under right multiplication",
                &[gi, e],
                &quot.project(&raw_product(h, &co, gen, &basis)),
                &zero_class,
            );
            rep.check_vecs(
                "relation generators annihilate under left multiplication",
                &[gi, e],
                &quot.project(&raw_product(h, &co, &basis, gen)),
                &zero_class,
            );
        }
    }
    if !rep.passed() {
        return Err(Error::NotWellDefined(format!(
            "the relation span is not stable under the product: {} failing instance(s)",
            rep.total_failures()
        )));
    }

    let sections: Vec<Vec<Rat>> = (0..qd).map(|t| quot.section(&basis_vec(qd, t))).collect();
    let mut mult = Vec::with_capacity(qd * qd);
    for p in 0..qd {
        for q in 0..qd {
            mult.push(quot.project(&raw_product(h, &co, &sections[p], &sections[q])));
        }
    }
    let prod = |u: &[Rat], v: &[Rat]| -> Vec<Rat> {
        let mut out = zeros(qd);
        for (p, c) in nonzeros(u) {
            for (q, d) in nonzeros(v) {
                add_scaled(&mut out, &(c * d), &mult[pair_index(p, q, qd)]);
            }
        }
        out
    };
    for p in 0..qd {
        for q in 0..qd {
            for r in 0..qd {
                let er = basis_vec(qd, r);
                let ep = basis_vec(qd, p);
                let lhs = prod(&mult[pair_index(p, q, qd)], &er);
                let rhs = prod(&ep, &mult[pair_index(q, r, qd)]);
                rep.check_vecs("the induced product is associative", &[p, q, r], &lhs, &rhs);
            }
        }
    }

    let left_unit = match co.unit() {
        Some(u) => {
            let lu = quot.project(&tensor_vec(u, h.alg().unit()));
            for q in 0..qd {
                let e = basis_vec(qd, q);
                rep.check_vecs("the class of 1_A (x) 1_H is a left unit", &[q], &prod(&lu, &e), &e);
            }
            Some(lu)
        }
        None => None,
    };
    if !rep.passed() {
        return Err(Error::NotWellDefined(format!(
            "the induced product fails associativity or the left unit law: {} failing instance(s)",
            rep.total_failures()
        )));
    }

    let labels = (0..qd)
        .map(|t| {
            let (i, j) = unpair_index(quot.free_col(t), n);
            format!("{}#{}", co.label(i), h.labels()[j])
        })
        .collect();
    Ok(SmashAlgebra { h: h.clone(), co, quot, labels, mult, left_unit, certificate: rep })
}

/// Cuts the unital corner out of a smash algebra as the span of all
/// `x (1_A # 1_H)`, with the multiplication restricted to it.
pub fn build_partial_smash(s: &SmashAlgebra) -> Result<PartialSmashAlgebra> {
    let lu = s
        .left_unit()
        .ok_or_else(|| {
            Error::InvalidInput("the coefficient algebra has no unit, so no corner exists".into())
        })?
        .to_vec();
    let qd = s.dim();
    let gens: Vec<Vec<Rat>> = (0..qd).map(|t| s.mul(&basis_vec(qd, t), &lu)).collect();
    let subspace = Subspace::from_spanning(qd, &gens);
    let unit = subspace
        .coords_of(&lu)
        .ok_or_else(|| Error::NotClosed("the left unit class escapes its own corner".into()))?;
    let m = subspace.dim();
    let mut basis_mul = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let prod = s.mul(subspace.basis_row(p), subspace.basis_row(q));
            let coords = subspace.coords_of(&prod).ok_or_else(|| {
                Error::NotClosed(format!("corner product ({p}, {q}) escapes the corner"))
            })?;
            basis_mul.push(coords);
        }
    }
    let labels = (0..m).map(|t| s.label(subspace.pivots()[t]).to_string()).collect();
    let algebra = Algebra::new(labels, basis_mul, unit)?;
    let rep = algebra.check();
    if !rep.passed() {
        return Err(Error::NotWellDefined(format!(
            "the corner fails the unital algebra laws: {} failing instance(s)",
            rep.total_failures()
        )));
    }
    Ok(PartialSmashAlgebra { subspace, algebra })
}

/// The left unit class is a right unit exactly when the action is global.
/// Returns both sides of that equivalence and asserts they agree.
pub fn check_unit_iff_global(p: &PartialAction, s: &SmashAlgebra) -> (bool, bool) {
    let right = s.right_unit_law_holds().expect("smash of a unital coefficient algebra");
    let global = p.is_global();
    assert_eq!(right, global, "the right unit law must hold exactly for global actions");
    (right, global)
}

fn coefficients_checked(p: &PartialAction) -> Result<SmashCoefficients> {
    let axioms = p.check_partial_action();
    if !axioms.passed() {
        return Err(Error::InvalidInput(format!(
            "the action fails the partial-action axioms: {} failing instance(s)",
            axioms.total_failures()
        )));
    }
    Ok(SmashCoefficients::of_action(p))
}

/// Balancing generators `(a_i <. z) (x) h_j - a_i (x) z h_j` over the
/// coefficient basis, an `H_L`-basis, and the `H`-basis.
fn balancing_relations(
    h: &WeakHopf,
    cm: &CounitalMaps,
    co: &SmashCoefficients,
) -> Result<Vec<Vec<Rat>>> {
    let n = h.dim();
    let m = co.dim();
    let mut gens = Vec::new();
    for t in 0..cm.hl.dim() {
        let z = cm.hl.basis_row(t);
        let srz = cm.s_r_inv_of(z).ok_or(Error::AntipodeNotInvertible)?;
        for i in 0..m {
            let moved = co.act_vec(&srz, &basis_vec(m, i));
            for j in 0..n {
                let zh = h.alg().mul(z, &basis_vec(n, j));
                gens.push(vec_sub(
                    &tensor_vec(&moved, &basis_vec(n, j)),
                    &tensor_vec(&basis_vec(m, i), &zh),
                ));
            }
        }
    }
    Ok(gens)
}

/// `(a (x) h)(b (x) g) = a(h_1 . b) (x) h_2 g`, extended bilinearly over
/// ambient vectors of `A (x) H`.
fn raw_product(h: &WeakHopf, co: &SmashCoefficients, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
    let n = h.dim();
    let mut out = zeros(u.len());
    for (iu, cu) in nonzeros(u) {
        let (i, j) = unpair_index(iu, n);
        for (iv, cv) in nonzeros(v) {
            let (k, l) = unpair_index(iv, n);
            let c = cu * cv;
            for (j1, j2, w) in h.coalg().sweedler(j) {
                let a_part = co.mul_basis_left(i, co.act_basis(j1, k));
                let h_part = h.alg().basis_product(j2, l);
                add_scaled(&mut out, &(&c * &w), &tensor_vec(&a_part, h_part));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{
        cyclic_group, disjoint_union_of_groups, groupoid_algebra, pair_groupoid,
    };
    use crate::linalg::{vec_is_zero, vec_scale};
    use crate::paction::{epsilon_action, ground_field_check, GroundFieldAction};

    fn indicator_action(h: &WeakHopf, ones: &[usize]) -> PartialAction {
        let mut lambda = zeros(h.dim());
        for &i in ones {
            lambda[i] = Rat::one();
        }
        GroundFieldAction::new(lambda).as_partial_action(h).unwrap()
    }

    #[test]
    fn pair_groupoid_ground_action_quotient_and_corner() {
        let g = pair_groupoid(2).unwrap();
        let h = groupoid_algebra(&g);
        let e11 = g.arrow_index("(1,1)").unwrap();
        let e12 = g.arrow_index("(1,2)").unwrap();
        let p = indicator_action(&h, &[e11]);
        assert_eq!(tensor_over_hl(&p).unwrap().dim(), 2);

        let s = build_smash(&p).unwrap();
        assert_eq!(s.ambient_dim(), 4);
        assert_eq!(s.relation_dim(), 2);
        assert_eq!(s.dim(), 2);
        assert!(s.certificate().passed());
        // The surviving classes are [1 (x) delta_(1,1)] and [1 (x) delta_(1,2)].
        assert_eq!(s.class_of_basis(0, e11), basis_vec(2, 0));
        assert_eq!(s.class_of_basis(0, e12), basis_vec(2, 1));
        assert!(vec_is_zero(&s.class_of_basis(0, g.arrow_index("(2,1)").unwrap())));
        assert!(vec_is_zero(&s.class_of_basis(0, g.arrow_index("(2,2)").unwrap())));

        let c = build_partial_smash(&s).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.embed(&basis_vec(1, 0)), s.class_of_basis(0, e11));
        assert_eq!(c.algebra().label(0), "1#(1,1)");
        assert_eq!(check_unit_iff_global(&p, &s), (false, false));
    }

    #[test]
    fn unit_witness_vanishes_off_the_isotropy_group() {
        let g = pair_groupoid(2).unwrap();
        let h = groupoid_algebra(&g);
        let e11 = g.arrow_index("(1,1)").unwrap();
        let p = indicator_action(&h, &[e11]);
        let s = build_smash(&p).unwrap();
        let lu = s.left_unit().unwrap().to_vec();
        // (1 # delta_x)(1 # 1_H) = 0 for every arrow outside the isotropy
        // group at (1,1), and one of those classes is nonzero, so the left
        // unit genuinely fails to be a right unit.
        let outside: Vec<usize> = (0..g.size()).filter(|&x| x != e11).collect();
        for &x in &outside {
            assert!(vec_is_zero(&s.mul(&s.class_of_basis(0, x), &lu)));
        }
        assert!(outside.iter().any(|&x| !vec_is_zero(&s.class_of_basis(0, x))));
        assert_eq!(s.right_unit_law_holds(), Some(false));
    }

    #[test]
    fn global_component_indicator_has_two_sided_unit() {
        let g = disjoint_union_of_groups(&[cyclic_group(2), cyclic_group(2)]).unwrap();
        let h = groupoid_algebra(&g);
        let comp: Vec<usize> =
            ["g0.e", "g0.a"].iter().map(|l| g.arrow_index(l).unwrap()).collect();
        let p = indicator_action(&h, &comp);
        assert!(p.is_global());
        let s = build_smash(&p).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(check_unit_iff_global(&p, &s), (true, true));
        // The corner of a global action is the whole smash algebra.
        let c = build_partial_smash(&s).unwrap();
        assert_eq!(c.dim(), s.dim());
        assert_eq!(c.subspace(), &Subspace::full(s.dim()));
    }

    #[test]
    fn grouplike_substitution_collapses_ground_products() {
        // Over a ground-field action, (1 # delta_h)(1 # delta_k)
        // = lambda(delta_h) [1 (x) delta_h delta_k].
        let cases = [
            (pair_groupoid(2).unwrap(), vec!["(1,1)"]),
            (disjoint_union_of_groups(&[cyclic_group(3), cyclic_group(2)]).unwrap(), vec!["g0.e"]),
        ];
        for (g, ones) in cases {
            let h = groupoid_algebra(&g);
            let idx: Vec<usize> = ones.iter().map(|l| g.arrow_index(l).unwrap()).collect();
            let p = indicator_action(&h, &idx);
            let lambda: Vec<Rat> =
                (0..g.size()).map(|i| p.act_basis(i, 0)[0].clone()).collect();
            let s = build_smash(&p).unwrap();
            for x in 0..g.size() {
                for y in 0..g.size() {
                    let lhs = s.mul(&s.class_of_basis(0, x), &s.class_of_basis(0, y));
                    let rhs = vec_scale(
                        &lambda[x],
                        &s.class_of(&[Rat::one()], h.alg().basis_product(x, y)),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn hopf_case_collapses_to_the_plain_tensor_product() {
        // For a group algebra H_L is spanned by the unit, the balancing
        // relations vanish, and the product is the classical formula on
        // A (x) H.
        let g = disjoint_union_of_groups(&[cyclic_group(2)]).unwrap();
        let h = groupoid_algebra(&g);
        let p = epsilon_action(&h, Algebra::product_of_fields(2)).unwrap();
        let s = build_smash(&p).unwrap();
        assert_eq!(s.relation_dim(), 0);
        assert_eq!(s.dim(), 4);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(s.class_of_basis(i, j), basis_vec(4, pair_index(i, j, 2)));
            }
        }
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let lhs = s.mul(&s.class_of_basis(i, j), &s.class_of_basis(k, l));
                        let a_part =
                            p.algebra().mul(&basis_vec(2, i), &p.act_basis(j, k));
                        let rhs = s.class_of(&a_part, h.alg().basis_product(j, l));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn left_counital_coefficients_reproduce_the_groupoid_algebra() {
        // With A = H_L and h . z = eps_l(hz), the quotient H_L (x)_{H_L} H
        // collapses onto H itself: [delta_r(g) (x) delta_g] multiplies like
        // delta_g. The relation count has a closed form to check against.
        for g in [pair_groupoid(2).unwrap(), pair_groupoid(3).unwrap()] {
            let h = groupoid_algebra(&g);
            let n = h.dim();
            let cm = CounitalMaps::new(&h).unwrap();
            let a = Algebra::on_subspace(h.alg(), &cm.hl, h.alg().unit()).unwrap();
            let p = PartialAction::from_fn(h.clone(), a, |i, j| {
                let prod = h.alg().mul(&basis_vec(n, i), cm.hl.basis_row(j));
                cm.hl.coords_of(&cm.eps_l_of(&prod)).unwrap()
            })
            .unwrap();
            assert!(p.check_partial_action().passed());
            assert!(p.is_global());

            let s = build_smash(&p).unwrap();
            assert_eq!(s.dim(), n);
            assert_eq!(s.relation_dim(), (g.identities().len() - 1) * g.size());
            let class = |x: usize| {
                let r = cm.hl.coords_of(&basis_vec(n, g.r(x))).unwrap();
                s.class_of(&r, &basis_vec(n, x))
            };
            for x in 0..g.size() {
                assert!(!vec_is_zero(&class(x)));
                for y in 0..g.size() {
                    let lhs = s.mul(&class(x), &class(y));
                    let rhs = match g.compose(x, y) {
                        Some(z) => class(z),
                        None => zeros(s.dim()),
                    };
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn unbalanced_coefficients_are_rejected() {
        // The indicator of {(1,1), (1,2)} is not a partial action; its raw
        // product moves the relation span off itself, and the axiom gate in
        // build_smash catches it even earlier.
        let g = pair_groupoid(2).unwrap();
        let h = groupoid_algebra(&g);
        let mut lambda = zeros(4);
        lambda[g.arrow_index("(1,1)").unwrap()] = Rat::one();
        lambda[g.arrow_index("(1,2)").unwrap()] = Rat::one();
        assert!(!ground_field_check(&h, &lambda));

        let act: Vec<Vec<Rat>> = (0..4).map(|i| vec![lambda[i].clone()]).collect();
        let co = SmashCoefficients::new(
            vec!["1".into()],
            vec![vec![Rat::one()]],
            act,
            Some(vec![Rat::one()]),
        )
        .unwrap();
        assert!(matches!(build_smash_over(&h, co), Err(Error::NotWellDefined(_))));

        let p = PartialAction::from_fn(h.clone(), Algebra::rationals(), |i, _| {
            vec![lambda[i].clone()]
        })
        .unwrap();
        assert!(matches!(build_smash(&p), Err(Error::InvalidInput(_))));
    }
}
