//! Kronecker indexing helpers.
//!
//! Every tensor-product coordinate in the crate goes through [`pair_index`],
//! so the convention `e_i (x) e_j  ->  e_{i * dim_v + j}` is fixed in exactly
//! one place.

use super::Rat;

/// Index of `e_i (x) e_j` in `U (x) V`, where `dim_v = dim V`.
#[inline]
pub fn pair_index(i: usize, j: usize, dim_v: usize) -> usize {
    i * dim_v + j
}

/// Inverse of [`pair_index`].
#[inline]
pub fn unpair_index(k: usize, dim_v: usize) -> (usize, usize) {
    (k / dim_v, k % dim_v)
}

/// Index of `e_i (x) e_j (x) e_k` in `U (x) V (x) W`, associated as
/// `(U (x) V) (x) W`.
#[inline]
pub fn triple_index(i: usize, j: usize, k: usize, dim_v: usize, dim_w: usize) -> usize {
    pair_index(pair_index(i, j, dim_v), k, dim_w)
}

/// Kronecker product of vectors: `(u (x) v)[pair_index(i, j)] = u[i] * v[j]`.
pub fn tensor_vec(u: &[Rat], v: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); u.len() * v.len()];
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if !b.is_zero() {
                out[pair_index(i, j, v.len())] = a * b;
            }
        }
    }
    out
}
