//! Finite-dimensional associative unital algebras given by structure constants.

use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, basis_vec, nonzeros, pair_index, unpair_index, vec_display, zeros, Matrix, Rat,
    Subspace,
};
use crate::report::VerificationReport;

/// An algebra over `QQ` with a fixed basis.
///
/// Stored as the full table of basis products `e_i * e_j` plus the unit
/// vector. Nothing is assumed about the table; [`Algebra::check`] verifies
/// associativity and the unit laws exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    basis_mul: Vec<Vec<Rat>>,
    unit: Vec<Rat>,
}

impl Algebra {
    /// Builds an algebra from the table of basis products.
    /// `basis_mul[pair_index(i, j, dim)]` is the vector `e_i * e_j`.
    pub fn new(labels: Vec<String>, basis_mul: Vec<Vec<Rat>>, unit: Vec<Rat>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidInput("algebra must have positive dimension".into()));
        }
        if basis_mul.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} basis products, got {}",
                dim * dim,
                basis_mul.len()
            )));
        }
        if let Some(bad) = basis_mul.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "basis product {} has wrong length",
                vec_display(bad)
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch("unit vector has wrong length".into()));
        }
        Ok(Algebra { labels, basis_mul, unit })
    }

    /// Builds an algebra from sparse structure constants
    /// `e_i * e_j = sum_k c[(i, j, k)] e_k`; absent triples are zero.
    pub fn from_triples(
        labels: Vec<String>,
        triples: &[(usize, usize, usize, Rat)],
        unit: Vec<Rat>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut basis_mul = vec![zeros(dim); dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidInput(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            basis_mul[pair_index(*i, *j, dim)][*k] = c.clone();
        }
        Algebra::new(labels, basis_mul, unit)
    }

    /// The one-dimensional algebra `QQ`.
    pub fn rationals() -> Self {
        Algebra::new(vec!["1".into()], vec![vec![Rat::one()]], vec![Rat::one()]).unwrap()
    }

    /// The split commutative algebra `QQ^k` with componentwise product.
    pub fn product_of_fields(k: usize) -> Self {
        let labels = (0..k).map(|i| format!("c{i}")).collect();
        let mut basis_mul = vec![zeros(k); k * k];
        for i in 0..k {
            basis_mul[pair_index(i, i, k)][i] = Rat::one();
        }
        Algebra::new(labels, basis_mul, vec![Rat::one(); k]).unwrap()
    }

    /// Restricts the product of `parent` to a subspace, re-expressing it in the
    /// canonical basis of `s`. Fails when the subspace is not closed under
    /// multiplication or does not contain the proposed unit.
    pub fn on_subspace(parent: &Algebra, s: &Subspace, unit: &[Rat]) -> Result<Self> {
        let dim = s.dim();
        if dim == 0 {
            return Err(Error::InvalidInput("subspace algebra must be nonzero".into()));
        }
        let coords = |v: &[Rat], what: &str| {
            s.coords_of(v).ok_or_else(|| {
                Error::NotClosed(format!("{what} {} is outside the subspace", vec_display(v)))
            })
        };
        let mut basis_mul = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = parent.mul(s.basis_row(i), s.basis_row(j));
                basis_mul.push(coords(&p, "product")?);
            }
        }
        let unit = coords(unit, "unit")?;
        let labels = (0..dim).map(|i| format!("s{i}")).collect();
        Algebra::new(labels, basis_mul, unit)
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

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rat] {
        &self.basis_mul[pair_index(i, j, self.dim())]
    }

    /// Bilinear product of two vectors.
    pub fn mul(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = zeros(self.dim());
        for (i, a) in nonzeros(u) {
            for (j, b) in nonzeros(v) {
                add_scaled(&mut out, &(a * b), self.basis_product(i, j));
            }
        }
        out
    }

    /// Product of several vectors, left to right.
    pub fn mul_all(&self, vs: &[&[Rat]]) -> Vec<Rat> {
        let mut acc = vs[0].to_vec();
        for v in &vs[1..] {
            acc = self.mul(&acc, v);
        }
        acc
    }

    /// Matrix of left multiplication by `v`.
    pub fn left_mul_matrix(&self, v: &[Rat]) -> Matrix {
        Matrix::from_cols((0..self.dim()).map(|j| self.mul(v, &basis_vec(self.dim(), j))).collect())
    }

    /// Matrix of right multiplication by `v`.
    pub fn right_mul_matrix(&self, v: &[Rat]) -> Matrix {
        Matrix::from_cols((0..self.dim()).map(|j| self.mul(&basis_vec(self.dim(), j), v)).collect())
    }

    /// The multiplication as a linear map `A (x) A -> A` in Kronecker coordinates.
    pub fn mul_map(&self) -> Matrix {
        Matrix::from_cols(self.basis_mul.clone())
    }

    /// Componentwise product in the `k`-fold tensor power of the algebra.
    ///
    /// Iterates over nonzero components only, so sparse inputs (grouplike
    /// comultiplications, unit tensors) stay cheap.
    pub fn mul_tensor_power(&self, k: usize, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let total = n.pow(k as u32);
        assert_eq!(x.len(), total);
        assert_eq!(y.len(), total);
        let mut out = zeros(total);
        for (xi, cx) in nonzeros(x) {
            let xd = tensor_digits(xi, n, k);
            for (yi, cy) in nonzeros(y) {
                let yd = tensor_digits(yi, n, k);
                let factors: Vec<&[Rat]> =
                    (0..k).map(|t| self.basis_product(xd[t], yd[t])).collect();
                accumulate_tensor(&mut out, &(cx * cy), &factors, n, 0, 0, Rat::one());
            }
        }
        out
    }

    /// Exhaustive associativity and unit checks.
    pub fn check(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("algebra");
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul(self.basis_product(i, j), &basis_vec(n, k));
                    let rhs = self.mul(&basis_vec(n, i), self.basis_product(j, k));
                    rep.check_vecs("associativity", &[i, j, k], &lhs, &rhs);
                }
            }
        }
        for i in 0..n {
            let e = basis_vec(n, i);
            rep.check_vecs("left unit law", &[i], &self.mul(&self.unit, &e), &e);
            rep.check_vecs("right unit law", &[i], &self.mul(&e, &self.unit), &e);
        }
        rep
    }
}

/// Big-endian base-`n` digits of a `k`-fold tensor index, matching the
/// left-associated [`pair_index`] convention.
fn tensor_digits(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut digits = vec![0; k];
    for t in (0..k).rev() {
        let (rest, d) = unpair_index(idx, n);
        digits[t] = d;
        idx = rest;
    }
    digits
}

/// Expands the tensor product of `factors` scaled by `coeff` into `out`.
fn accumulate_tensor(
    out: &mut [Rat],
    coeff: &Rat,
    factors: &[&[Rat]],
    n: usize,
    depth: usize,
    idx: usize,
    partial: Rat,
) {
    if depth == factors.len() {
        out[idx] += &(coeff * &partial);
        return;
    }
    for (b, c) in nonzeros(factors[depth]) {
        accumulate_tensor(out, coeff, factors, n, depth + 1, pair_index(idx, b, n), &partial * c);
    }
}
