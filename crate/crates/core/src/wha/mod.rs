//! Weak Hopf algebras: structure, axiom checkers, canonical projections.
//!
//! A weak Hopf algebra couples an [`Algebra`] and a [`Coalgebra`] on the same
//! basis with an antipode matrix. Comultiplication is multiplicative, but the
//! unit and counit satisfy only the weak laws: `Delta(1)` need not be
//! `1 (x) 1` and `epsilon` need not be multiplicative. The antipode axioms
//! read `h_(1) S(h_(2)) = eps_l(h)`, `S(h_(1)) h_(2) = eps_r(h)`, and
//! `S(h_(1)) h_(2) S(h_(3)) = S(h)`, where `eps_l(h) = epsilon(1_(1) h) 1_(2)`
//! and `eps_r(h) = 1_(1) epsilon(h 1_(2))` are the counital projections.

mod counital;
mod lemmas;

pub use counital::CounitalMaps;
pub use lemmas::lemma_suite;

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, basis_vec, nonzeros, tensor_vec, unpair_index, zeros, Matrix, Rat,
};
use crate::report::VerificationReport;

/// A finite-dimensional weak Hopf algebra candidate over `QQ`.
///
/// The constructor only checks shapes; all axioms are verified explicitly by
/// [`WeakHopf::check_weak_bialgebra`], [`WeakHopf::check_weak_hopf`], and
/// [`lemma_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopf {
    alg: Algebra,
    coalg: Coalgebra,
    antipode: Matrix,
    delta_unit: Vec<Rat>,
}

impl WeakHopf {
    pub fn new(alg: Algebra, coalg: Coalgebra, antipode: Matrix) -> Result<Self> {
        let n = alg.dim();
        if coalg.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "algebra dimension {n} differs from coalgebra dimension {}",
                coalg.dim()
            )));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "antipode must be {n} x {n}, got {} x {}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        let delta_unit = coalg.delta(alg.unit());
        Ok(WeakHopf { alg, coalg, antipode, delta_unit })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn coalg(&self) -> &Coalgebra {
        &self.coalg
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_of(&self, v: &[Rat]) -> Vec<Rat> {
        self.antipode.mul_vec(v)
    }

    pub fn antipode_basis(&self, i: usize) -> Vec<Rat> {
        self.antipode.col_vec(i)
    }

    /// `Delta(1)` as a tensor-square vector; heavily used by the weak axioms.
    pub fn delta_unit(&self) -> &[Rat] {
        &self.delta_unit
    }

    /// Nonzero components `(1_(1), 1_(2), coeff)` of `Delta(1)`.
    pub fn delta_unit_components(&self) -> Vec<(usize, usize, Rat)> {
        nonzeros(&self.delta_unit)
            .map(|(t, c)| {
                let (a, b) = unpair_index(t, self.dim());
                (a, b, c.clone())
            })
            .collect()
    }

    /// `eps_l(e_i) = epsilon(1_(1) e_i) 1_(2)`.
    pub fn eps_l_basis(&self, i: usize) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (a, b, c) in self.delta_unit_components() {
            let s = self.coalg.counit_of(self.alg.basis_product(a, i));
            if !s.is_zero() {
                out[b] += &(&c * &s);
            }
        }
        out
    }

    /// `eps_r(e_i) = 1_(1) epsilon(e_i 1_(2))`.
    pub fn eps_r_basis(&self, i: usize) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (a, b, c) in self.delta_unit_components() {
            let s = self.coalg.counit_of(self.alg.basis_product(i, b));
            if !s.is_zero() {
                out[a] += &(&c * &s);
            }
        }
        out
    }

    /// Matrix of `eps_l` on the ambient space.
    pub fn eps_l_matrix(&self) -> Matrix {
        Matrix::from_cols((0..self.dim()).map(|i| self.eps_l_basis(i)).collect())
    }

    /// Matrix of `eps_r` on the ambient space.
    pub fn eps_r_matrix(&self) -> Matrix {
        Matrix::from_cols((0..self.dim()).map(|i| self.eps_r_basis(i)).collect())
    }

    /// Inverse of the antipode matrix, `None` when singular.
    pub fn antipode_inverse(&self) -> Option<Matrix> {
        self.antipode.try_inverse()
    }

    /// Verifies multiplicativity of `Delta`, the weak counit law in both
    /// orders, and the weak unit comultiplication law in both orders.
    pub fn check_weak_bialgebra(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("weak bialgebra");
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.coalg.delta(self.alg.basis_product(i, j));
                let rhs = self.alg.mul_tensor_power(
                    2,
                    self.coalg.delta_basis(i),
                    self.coalg.delta_basis(j),
                );
                rep.check_vecs("delta is multiplicative", &[i, j], &lhs, &rhs);
            }
        }
        for k in 0..n {
            for h in 0..n {
                let sw = self.coalg.sweedler(h);
                for g in 0..n {
                    let whole = self.coalg.counit_of(&self.alg.mul(
                        self.alg.basis_product(k, h),
                        &basis_vec(n, g),
                    ));
                    let mut direct = Rat::zero();
                    let mut opposite = Rat::zero();
                    for (a, b, c) in &sw {
                        let ka = self.coalg.counit_of(self.alg.basis_product(k, *a));
                        let bg = self.coalg.counit_of(self.alg.basis_product(*b, g));
                        direct += &(&(&ka * &bg) * c);
                        let kb = self.coalg.counit_of(self.alg.basis_product(k, *b));
                        let ag = self.coalg.counit_of(self.alg.basis_product(*a, g));
                        opposite += &(&(&kb * &ag) * c);
                    }
                    rep.check_scalars("weak counit law (direct order)", &[k, h, g], &direct, &whole);
                    rep.check_scalars(
                        "weak counit law (opposite order)",
                        &[k, h, g],
                        &opposite,
                        &whole,
                    );
                }
            }
        }
        let delta2_unit = self.coalg.delta_left(&self.delta_unit);
        let left = tensor_vec(&self.delta_unit, self.alg.unit());
        let right = tensor_vec(self.alg.unit(), &self.delta_unit);
        rep.check_vecs(
            "weak unit comultiplication (direct order)",
            &[],
            &self.alg.mul_tensor_power(3, &left, &right),
            &delta2_unit,
        );
        rep.check_vecs(
            "weak unit comultiplication (opposite order)",
            &[],
            &self.alg.mul_tensor_power(3, &right, &left),
            &delta2_unit,
        );
        rep
    }

    /// Verifies the three antipode axioms against the counital projections.
    pub fn check_weak_hopf(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("weak Hopf");
        let n = self.dim();
        for i in 0..n {
            let mut left = zeros(n);
            let mut right = zeros(n);
            for (a, b, c) in self.coalg.sweedler(i) {
                add_scaled(&mut left, &c, &self.alg.mul(&basis_vec(n, a), &self.antipode_basis(b)));
                add_scaled(&mut right, &c, &self.alg.mul(&self.antipode_basis(a), &basis_vec(n, b)));
            }
            rep.check_vecs("left antipode axiom", &[i], &left, &self.eps_l_basis(i));
            rep.check_vecs("right antipode axiom", &[i], &right, &self.eps_r_basis(i));

            let mut sandwich = zeros(n);
            for (a, b, c, coeff) in self.coalg.sweedler2(i) {
                let prod = self.alg.mul_all(&[
                    &self.antipode_basis(a),
                    &basis_vec(n, b),
                    &self.antipode_basis(c),
                ]);
                add_scaled(&mut sandwich, &coeff, &prod);
            }
            rep.check_vecs("antipode composition axiom", &[i], &sandwich, &self.antipode_basis(i));
        }
        rep
    }

    /// Runs every verification layer in order: algebra, coalgebra, weak
    /// bialgebra, weak Hopf, and, when the counital maps can be built, the
    /// full structural lemma suite.
    pub fn full_report(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("weak Hopf algebra verification");
        rep.absorb(self.alg.check());
        rep.absorb(self.coalg.check());
        rep.absorb(self.check_weak_bialgebra());
        rep.absorb(self.check_weak_hopf());
        match CounitalMaps::new(self) {
            Ok(cm) => rep.absorb(lemma_suite(self, &cm)),
            Err(e) => rep.check("canonical projections construct", &[], false, &e.to_string(), ""),
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::grouplike;
    use crate::groupoid::{cyclic_group, disjoint_union_of_groups, groupoid_algebra, pair_groupoid};

    fn z2_algebra() -> WeakHopf {
        groupoid_algebra(&disjoint_union_of_groups(&[cyclic_group(2)]).unwrap())
    }

    #[test]
    fn group_algebra_is_weak_hopf() {
        let h = z2_algebra();
        assert!(h.check_weak_bialgebra().passed());
        assert!(h.check_weak_hopf().passed());
        assert!(h.full_report().passed());
    }

    #[test]
    fn pair_groupoid_algebra_is_weak_hopf() {
        let h = groupoid_algebra(&pair_groupoid(2).unwrap());
        let rep = h.full_report();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn hopf_case_has_trivial_counital_projections() {
        // For a group algebra eps_l(h) = eps(h) 1.
        let h = z2_algebra();
        for i in 0..h.dim() {
            let expect = crate::linalg::vec_scale(
                &h.coalg().counit_of(&basis_vec(h.dim(), i)),
                h.alg().unit(),
            );
            assert_eq!(h.eps_l_basis(i), expect);
            assert_eq!(h.eps_r_basis(i), expect);
        }
    }

    #[test]
    fn identity_antipode_on_z3_fails_antipode_axioms() {
        let g = disjoint_union_of_groups(&[cyclic_group(3)]).unwrap();
        let good = groupoid_algebra(&g);
        let broken =
            WeakHopf::new(good.alg().clone(), good.coalg().clone(), Matrix::identity(3)).unwrap();
        assert!(broken.check_weak_bialgebra().passed());
        let rep = broken.check_weak_hopf();
        assert!(!rep.item("left antipode axiom").unwrap().passed());
        assert!(!rep.item("antipode composition axiom").unwrap().passed());
    }

    #[test]
    fn strong_unit_comultiplication_on_pair_groupoid_fails() {
        // Forcing Delta(1) = 1 (x) 1 on a two-object groupoid breaks the weak
        // bialgebra laws: Delta is no longer multiplicative against the unit.
        let good = groupoid_algebra(&pair_groupoid(2).unwrap());
        let n = good.dim();
        let mut cols: Vec<Vec<Rat>> = (0..n).map(|i| good.coalg().delta_basis(i).to_vec()).collect();
        // Overwrite Delta on the identity components so Delta(1) = 1 (x) 1.
        let unit = good.alg().unit().to_vec();
        let unit_tensor = tensor_vec(&unit, &unit);
        let mut seen = false;
        for (i, c) in nonzeros(&unit) {
            let mut col = crate::linalg::vec_scale(&c.inv().unwrap(), &unit_tensor);
            if seen {
                col = zeros(n * n);
            }
            cols[i] = col;
            seen = true;
        }
        let coalg = Coalgebra::new(cols, good.coalg().counit().to_vec()).unwrap();
        let broken = WeakHopf::new(good.alg().clone(), coalg, good.antipode().clone()).unwrap();
        assert!(!broken.full_report().passed());
    }

    #[test]
    fn antipode_inverse_of_groupoid_algebra_is_itself() {
        let h = groupoid_algebra(&pair_groupoid(2).unwrap());
        let inv = h.antipode_inverse().unwrap();
        assert_eq!(&inv, h.antipode());
        let singular = WeakHopf::new(
            grouplike_algebra_for_test(),
            grouplike(2),
            Matrix::zero(2, 2),
        )
        .unwrap();
        assert!(singular.antipode_inverse().is_none());
    }

    fn grouplike_algebra_for_test() -> Algebra {
        Algebra::product_of_fields(2)
    }
}
