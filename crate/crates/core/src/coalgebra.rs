//! Finite-dimensional coalgebras given by structure constants.

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, nonzeros, pair_index, tensor_vec, zeros, Matrix, Rat};
use crate::report::VerificationReport;

/// A coalgebra over `QQ` with a fixed basis.
///
/// The comultiplication is a linear map into the Kronecker-ordered tensor
/// square, stored column by column: `delta(e_i)` is `Delta(e_i)` as a vector
/// of length `dim^2`. [`Coalgebra::check`] verifies coassociativity and both
/// counit laws exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    dim: usize,
    delta_cols: Vec<Vec<Rat>>,
    counit: Vec<Rat>,
}

impl Coalgebra {
    pub fn new(delta_cols: Vec<Vec<Rat>>, counit: Vec<Rat>) -> Result<Self> {
        let dim = counit.len();
        if dim == 0 {
            return Err(Error::InvalidInput("coalgebra must have positive dimension".into()));
        }
        if delta_cols.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim} comultiplication columns, got {}",
                delta_cols.len()
            )));
        }
        if delta_cols.iter().any(|c| c.len() != dim * dim) {
            return Err(Error::DimensionMismatch(
                "comultiplication column has wrong length".into(),
            ));
        }
        Ok(Coalgebra { dim, delta_cols, counit })
    }

    /// Builds a coalgebra from sparse structure constants
    /// `Delta(e_i) = sum c[(i, j, k)] e_j (x) e_k`; absent triples are zero.
    pub fn from_triples(dim: usize, triples: &[(usize, usize, usize, Rat)], counit: Vec<Rat>) -> Result<Self> {
        let mut cols = vec![zeros(dim * dim); dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidInput(format!(
                    "comultiplication index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            cols[*i][pair_index(*j, *k, dim)] = c.clone();
        }
        Coalgebra::new(cols, counit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Delta(e_i)` as a dense tensor-square vector.
    pub fn delta_basis(&self, i: usize) -> &[Rat] {
        &self.delta_cols[i]
    }

    /// `Delta(v)` for an arbitrary vector.
    pub fn delta(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim * self.dim);
        for (i, c) in nonzeros(v) {
            add_scaled(&mut out, c, &self.delta_cols[i]);
        }
        out
    }

    /// Sweedler components of `Delta(e_i)`: nonzero `(h_(1), h_(2), coeff)`.
    pub fn sweedler(&self, i: usize) -> Vec<(usize, usize, Rat)> {
        nonzeros(&self.delta_cols[i])
            .map(|(t, c)| {
                let (a, b) = crate::linalg::unpair_index(t, self.dim);
                (a, b, c.clone())
            })
            .collect()
    }

    /// Sweedler components of `(Delta (x) id)(Delta(e_i))`: nonzero
    /// `(h_(1), h_(2), h_(3), coeff)`.
    pub fn sweedler2(&self, i: usize) -> Vec<(usize, usize, usize, Rat)> {
        let mut out = Vec::new();
        for (a, b, c) in self.sweedler(i) {
            for (x, y, d) in self.sweedler(a) {
                out.push((x, y, b, &c * &d));
            }
        }
        out
    }

    /// `(Delta (x) id)(t)` for `t` in the tensor square.
    pub fn delta_left(&self, t: &[Rat]) -> Vec<Rat> {
        let n = self.dim;
        let mut out = zeros(n * n * n);
        for (idx, c) in nonzeros(t) {
            let (a, b) = crate::linalg::unpair_index(idx, n);
            for (x, y, d) in self.sweedler(a) {
                out[crate::linalg::triple_index(x, y, b, n, n)] += &(c * &d);
            }
        }
        out
    }

    /// `(id (x) Delta)(t)` for `t` in the tensor square.
    pub fn delta_right(&self, t: &[Rat]) -> Vec<Rat> {
        let n = self.dim;
        let mut out = zeros(n * n * n);
        for (idx, c) in nonzeros(t) {
            let (a, b) = crate::linalg::unpair_index(idx, n);
            for (x, y, d) in self.sweedler(b) {
                out[crate::linalg::triple_index(a, x, y, n, n)] += &(c * &d);
            }
        }
        out
    }

    pub fn counit(&self) -> &[Rat] {
        &self.counit
    }

    /// `epsilon(v)`.
    pub fn counit_of(&self, v: &[Rat]) -> Rat {
        nonzeros(v).map(|(i, c)| &self.counit[i] * c).sum()
    }

    /// The comultiplication as a `dim^2 x dim` matrix.
    pub fn delta_matrix(&self) -> Matrix {
        Matrix::from_cols(self.delta_cols.clone())
    }

    /// Exhaustive coassociativity and counit checks.
    pub fn check(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("coalgebra");
        let n = self.dim;
        for i in 0..n {
            let d = self.delta_basis(i);
            rep.check_vecs("coassociativity", &[i], &self.delta_left(d), &self.delta_right(d));
            let mut left = zeros(n);
            let mut right = zeros(n);
            for (a, b, c) in self.sweedler(i) {
                left[b] += &(&c * &self.counit[a]);
                right[a] += &(&c * &self.counit[b]);
            }
            let e = crate::linalg::basis_vec(n, i);
            rep.check_vecs("left counit law", &[i], &left, &e);
            rep.check_vecs("right counit law", &[i], &right, &e);
        }
        rep
    }
}

/// The grouplike coalgebra on `dim` basis vectors: `Delta(e_i) = e_i (x) e_i`,
/// `epsilon(e_i) = 1`.
pub fn grouplike(dim: usize) -> Coalgebra {
    let cols = (0..dim)
        .map(|i| {
            let e = crate::linalg::basis_vec(dim, i);
            tensor_vec(&e, &e)
        })
        .collect();
    Coalgebra::new(cols, vec![Rat::one(); dim]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouplike_passes() {
        assert!(grouplike(4).check().passed());
    }

    #[test]
    fn broken_counit_fails() {
        let mut c = grouplike(3);
        c.counit[1] = Rat::zero();
        let rep = c.check();
        assert!(rep.item("coassociativity").unwrap().passed());
        assert!(!rep.item("left counit law").unwrap().passed());
    }

    #[test]
    fn broken_coassociativity_fails() {
        // Delta(e0) = e0 (x) e0 + e1 (x) e1 against grouplike e1 puts the
        // extra term on different legs of the two iterated coproducts.
        let mut c = grouplike(2);
        let e0 = crate::linalg::basis_vec(2, 0);
        let e1 = crate::linalg::basis_vec(2, 1);
        c.delta_cols[0] = crate::linalg::vec_add(&tensor_vec(&e0, &e0), &tensor_vec(&e1, &e1));
        assert!(!c.check().item("coassociativity").unwrap().passed());
    }

    #[test]
    fn sweedler2_matches_delta_left() {
        let c = grouplike(3);
        for i in 0..3 {
            let via = c.delta_left(c.delta_basis(i));
            let mut direct = zeros(27);
            for (a, b, d, coeff) in c.sweedler2(i) {
                direct[crate::linalg::triple_index(a, b, d, 3, 3)] += &coeff;
            }
            assert_eq!(via, direct);
        }
    }
}
