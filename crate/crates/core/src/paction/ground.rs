//! Partial actions on the ground field.
//!
//! A linear functional `lambda : H -> QQ` defines a partial action on `QQ`
//! via `h . 1 = lambda(h)` exactly when `lambda(1_H) = 1` and
//! `lambda(h) lambda(g) = lambda(h_1) lambda(h_2 g)` for all `h, g`. For a
//! groupoid algebra these are precisely the indicator functionals of
//! subgroups of isotropy groups, which the classifier enumerates; an
//! independent brute-force oracle enumerates all `{0,1}` assignments
//! instead (over `QQ` the only idempotents are `0` and `1`, so nothing else
//! can occur).

use crate::algebra::Algebra;
use crate::error::Result;
use crate::groupoid::{groupoid_algebra, FiniteGroupoid};
use crate::linalg::{dot, tensor_vec, zeros, Rat};
use crate::paction::PartialAction;
use crate::wha::WeakHopf;

/// A linear functional on `H`, viewed as a candidate action on `QQ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundFieldAction {
    lambda: Vec<Rat>,
}

impl GroundFieldAction {
    pub fn new(lambda: Vec<Rat>) -> Self {
        GroundFieldAction { lambda }
    }

    pub fn lambda(&self) -> &[Rat] {
        &self.lambda
    }

    pub fn eval(&self, hv: &[Rat]) -> Rat {
        dot(&self.lambda, hv)
    }

    /// True iff the functional satisfies the partial action conditions.
    pub fn check(&self, h: &WeakHopf) -> bool {
        ground_field_check(h, &self.lambda)
    }

    /// The corresponding one-dimensional partial action table.
    pub fn as_partial_action(&self, h: &WeakHopf) -> Result<PartialAction> {
        let lambda = self.lambda.clone();
        PartialAction::from_fn(h.clone(), Algebra::rationals(), move |i, _| vec![lambda[i].clone()])
    }
}

/// True iff `lambda(1_H) = 1` and `lambda(h) lambda(g) = lambda(h_1)
/// lambda(h_2 g)` on all basis pairs.
pub fn ground_field_check(h: &WeakHopf, lambda: &[Rat]) -> bool {
    assert_eq!(lambda.len(), h.dim());
    if !dot(lambda, h.alg().unit()).is_one() {
        return false;
    }
    for i in 0..h.dim() {
        let sweedler = h.coalg().sweedler(i);
        for j in 0..h.dim() {
            let lhs = &lambda[i] * &lambda[j];
            let mut rhs = Rat::zero();
            for (p, q, c) in &sweedler {
                let tail = dot(lambda, h.alg().basis_product(*q, j));
                rhs += &(&(c * &lambda[*p]) * &tail);
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// True iff `lambda` is a unital multiplicative functional that is also a
/// convolution idempotent; this is exactly when the induced action on `QQ`
/// is global.
pub fn ground_field_is_global(h: &WeakHopf, lambda: &[Rat]) -> bool {
    assert_eq!(lambda.len(), h.dim());
    if !dot(lambda, h.alg().unit()).is_one() {
        return false;
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            if dot(lambda, h.alg().basis_product(i, j)) != &lambda[i] * &lambda[j] {
                return false;
            }
        }
    }
    for i in 0..h.dim() {
        let mut conv = Rat::zero();
        for (p, q, c) in &h.coalg().sweedler(i) {
            conv += &(&(c * &lambda[*p]) * &lambda[*q]);
        }
        if conv != lambda[i] {
            return false;
        }
    }
    true
}

/// One classified ground-field action: the indicator of a subgroup `V` of
/// the isotropy group at `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundFieldClass {
    pub identity: usize,
    pub subgroup: Vec<usize>,
    pub action: GroundFieldAction,
    pub global: bool,
}

/// All partial actions of the groupoid algebra on `QQ`: indicators of
/// subgroups of isotropy groups, ordered by (identity, subgroup size,
/// lexicographic arrow set). Each returned functional is verified against
/// the defining conditions; a failure would signal a bug, so it panics.
pub fn classify_ground_field(g: &FiniteGroupoid, bound: usize) -> Result<Vec<GroundFieldClass>> {
    let h = groupoid_algebra(g);
    let mut out = Vec::new();
    for (identity, subgroup) in g.all_isotropy_subgroups(bound)? {
        let mut lambda = zeros(g.size());
        for &v in &subgroup {
            lambda[v] = Rat::one();
        }
        let action = GroundFieldAction::new(lambda);
        assert!(action.check(&h), "subgroup indicator must define a partial action");
        let global = ground_field_is_global(&h, action.lambda());
        out.push(GroundFieldClass { identity, subgroup, action, global });
    }
    Ok(out)
}

/// Brute-force oracle: every `{0,1}` assignment on the arrows that passes
/// `ground_field_check`, in ascending bitmask order (bit `i` set means
/// `lambda(delta_i) = 1`).
pub fn classify_ground_field_oracle(g: &FiniteGroupoid, bound: usize) -> Result<Vec<Vec<Rat>>> {
    let n = g.size();
    if n > bound {
        return Err(crate::error::Error::BoundExceeded { size: n, bound });
    }
    let h = groupoid_algebra(g);
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let lambda: Vec<Rat> =
            (0..n).map(|i| if mask & (1 << i) != 0 { Rat::one() } else { Rat::zero() }).collect();
        if ground_field_check(&h, &lambda) {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// True iff the counit defines a partial action on `QQ`, which happens
/// exactly when `H` is a Hopf algebra. Cross-checked against the direct
/// criterion (`Delta(1) = 1 (x) 1` and `eps` multiplicative); disagreement
/// would signal a bug, so it panics.
pub fn hopf_iff_epsilon(h: &WeakHopf) -> bool {
    let eps: Vec<Rat> = h.coalg().counit().to_vec();
    let via_action = ground_field_check(h, &eps);

    let unit_tensor = tensor_vec(h.alg().unit(), h.alg().unit());
    let mut direct = h.delta_unit() == &unit_tensor[..];
    'outer: for i in 0..h.dim() {
        for j in 0..h.dim() {
            let prod = dot(&eps, h.alg().basis_product(i, j));
            if prod != &eps[i] * &eps[j] {
                direct = false;
                break 'outer;
            }
        }
    }
    assert_eq!(via_action, direct, "partial-action and structural Hopf tests must agree");
    via_action
}

/// The action `h . a = eps(h) a`. A partial action exactly when `H` is
/// Hopf; the constructor does not verify this.
pub fn epsilon_action(h: &WeakHopf, algebra: Algebra) -> Result<PartialAction> {
    let eps: Vec<Rat> = h.coalg().counit().to_vec();
    let m = algebra.dim();
    PartialAction::from_fn(h.clone(), algebra, move |i, j| {
        let mut v = zeros(m);
        v[j] = eps[i].clone();
        v
    })
}
