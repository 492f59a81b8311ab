//! Exact linear algebra over the rationals.
//!
//! All higher layers reduce their questions to identities between vectors of
//! [`Rat`] scalars, membership in canonical [`Subspace`]s, or computations in a
//! [`QuotientSpace`]. Vectors are plain `Vec<Rat>`; the free functions below
//! cover the usual pointwise operations. Matrices are dense and row-major.
//! Subspaces are kept in reduced row echelon form, so equality of subspaces is
//! syntactic equality of their bases.

mod matrix;
mod rat;
mod space;
mod tensor;

pub use matrix::Matrix;
pub use rat::Rat;
pub use space::{QuotientSpace, Subspace};
pub use tensor::{pair_index, tensor_vec, triple_index, unpair_index};

/// The zero vector of length `n`.
pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zeros(n);
    v[i] = Rat::one();
    v
}

/// Componentwise sum.
pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference.
pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scalar multiple.
pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

/// In-place `dst += c * src`.
pub fn add_scaled(dst: &mut [Rat], c: &Rat, src: &[Rat]) {
    debug_assert_eq!(dst.len(), src.len());
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d += &(c * s);
    }
}

/// True when every component is zero.
pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(Rat::is_zero)
}

/// Standard inner product (no conjugation; everything is rational).
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut out = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            out += &(x * y);
        }
    }
    out
}

/// Iterator over the nonzero components `(index, coefficient)`.
pub fn nonzeros(a: &[Rat]) -> impl Iterator<Item = (usize, &Rat)> {
    a.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// Renders a vector as `[a, b, ...]` for failure reports.
pub fn vec_display(a: &[Rat]) -> String {
    let parts: Vec<String> = a.iter().map(Rat::to_string).collect();
    format!("[{}]", parts.join(", "))
}
