//! Canonical projections onto the counital subalgebras.

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, tensor_vec, zeros, Matrix, Rat, Subspace};

use super::WeakHopf;

/// The counital data of a weak Hopf algebra.
///
/// `hl` and `hr` are the images of the projections `eps_l` and `eps_r`. The
/// antipode restricts to inverse bijections between them; `s_l` and `s_r`
/// are those restrictions written in the canonical bases, with `s_l_inv` and
/// `s_r_inv` their matrix inverses. `e_l = S(1_(1)) (x) 1_(2)` and
/// `e_r = 1_(1) (x) S(1_(2))` are the separability tensors, which multiply to
/// the unit.
///
/// Construction fails when the antipode does not restrict to such bijections;
/// that property is genuinely needed to define the inverse maps used by the
/// smash product and the Morita context.
#[derive(Clone, Debug)]
pub struct CounitalMaps {
    pub eps_l: Matrix,
    pub eps_r: Matrix,
    pub hl: Subspace,
    pub hr: Subspace,
    /// Restriction of `S` to `hl`, as a map from `hl` to `hr` coordinates.
    pub s_l: Matrix,
    /// Restriction of `S` to `hr`, as a map from `hr` to `hl` coordinates.
    pub s_r: Matrix,
    /// Inverse of `s_l`: `hr` to `hl` coordinates.
    pub s_l_inv: Matrix,
    /// Inverse of `s_r`: `hl` to `hr` coordinates.
    pub s_r_inv: Matrix,
    pub e_l: Vec<Rat>,
    pub e_r: Vec<Rat>,
}

impl CounitalMaps {
    pub fn new(h: &WeakHopf) -> Result<Self> {
        let n = h.dim();
        let eps_l = h.eps_l_matrix();
        let eps_r = h.eps_r_matrix();
        let hl = Subspace::from_spanning(n, &(0..n).map(|i| eps_l.col_vec(i)).collect::<Vec<_>>());
        let hr = Subspace::from_spanning(n, &(0..n).map(|i| eps_r.col_vec(i)).collect::<Vec<_>>());
        if hl.dim() != hr.dim() {
            return Err(Error::AntipodeNotBijectiveOnCounital(format!(
                "dim H_L = {} but dim H_R = {}",
                hl.dim(),
                hr.dim()
            )));
        }
        let restrict = |src: &Subspace, dst: &Subspace, name: &str| -> Result<Matrix> {
            let mut cols = Vec::with_capacity(src.dim());
            for t in 0..src.dim() {
                let image = h.antipode_of(src.basis_row(t));
                let coords = dst.coords_of(&image).ok_or_else(|| {
                    Error::AntipodeNotBijectiveOnCounital(format!(
                        "S does not map {name} into the opposite counital subalgebra"
                    ))
                })?;
                cols.push(coords);
            }
            Ok(Matrix::from_cols(cols))
        };
        let s_l = restrict(&hl, &hr, "H_L")?;
        let s_r = restrict(&hr, &hl, "H_R")?;
        let s_l_inv = s_l.try_inverse().ok_or_else(|| {
            Error::AntipodeNotBijectiveOnCounital("S restricted to H_L is singular".into())
        })?;
        let s_r_inv = s_r.try_inverse().ok_or_else(|| {
            Error::AntipodeNotBijectiveOnCounital("S restricted to H_R is singular".into())
        })?;

        let mut e_l = zeros(n * n);
        let mut e_r = zeros(n * n);
        for (a, b, c) in h.delta_unit_components() {
            add_scaled(&mut e_l, &c, &tensor_vec(&h.antipode_basis(a), &crate::linalg::basis_vec(n, b)));
            add_scaled(&mut e_r, &c, &tensor_vec(&crate::linalg::basis_vec(n, a), &h.antipode_basis(b)));
        }
        Ok(CounitalMaps { eps_l, eps_r, hl, hr, s_l, s_r, s_l_inv, s_r_inv, e_l, e_r })
    }

    pub fn eps_l_of(&self, v: &[Rat]) -> Vec<Rat> {
        self.eps_l.mul_vec(v)
    }

    pub fn eps_r_of(&self, v: &[Rat]) -> Vec<Rat> {
        self.eps_r.mul_vec(v)
    }

    /// `S_R^{-1}(z)` for `z` in `H_L`: the unique `w` in `H_R` with `S(w) = z`.
    /// `None` when `z` is outside `H_L`.
    pub fn s_r_inv_of(&self, z: &[Rat]) -> Option<Vec<Rat>> {
        let coords = self.hl.coords_of(z)?;
        Some(self.hr.from_coords(&self.s_r_inv.mul_vec(&coords)))
    }

    /// `S_L^{-1}(w)` for `w` in `H_R`: the unique `z` in `H_L` with `S(z) = w`.
    pub fn s_l_inv_of(&self, w: &[Rat]) -> Option<Vec<Rat>> {
        let coords = self.hr.coords_of(w)?;
        Some(self.hl.from_coords(&self.s_l_inv.mul_vec(&coords)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{groupoid_algebra, pair_groupoid};
    use crate::linalg::basis_vec;

    #[test]
    fn pair_groupoid_counital_subalgebras_are_identity_spans() {
        let g = pair_groupoid(2).unwrap();
        let h = groupoid_algebra(&g);
        let cm = CounitalMaps::new(&h).unwrap();
        let identity_span = Subspace::from_spanning(
            h.dim(),
            &g.identities().iter().map(|&e| basis_vec(h.dim(), e)).collect::<Vec<_>>(),
        );
        assert_eq!(cm.hl, identity_span);
        assert_eq!(cm.hr, identity_span);
        assert_eq!(cm.hl.dim(), 2);
        // On a groupoid algebra S fixes each identity, so both restrictions
        // are the identity matrix in canonical coordinates.
        assert_eq!(cm.s_l, Matrix::identity(2));
        assert_eq!(cm.s_r_inv, Matrix::identity(2));
    }

    #[test]
    fn inverse_antipode_maps_agree_with_antipode() {
        let h = groupoid_algebra(&pair_groupoid(2).unwrap());
        let cm = CounitalMaps::new(&h).unwrap();
        for t in 0..cm.hl.dim() {
            let z = cm.hl.basis_row(t).to_vec();
            let w = cm.s_r_inv_of(&z).unwrap();
            assert_eq!(h.antipode_of(&w), z);
        }
        for t in 0..cm.hr.dim() {
            let w = cm.hr.basis_row(t).to_vec();
            let z = cm.s_l_inv_of(&w).unwrap();
            assert_eq!(h.antipode_of(&z), w);
        }
    }

    #[test]
    fn separability_tensors_multiply_to_unit() {
        let h = groupoid_algebra(&pair_groupoid(3).unwrap());
        let cm = CounitalMaps::new(&h).unwrap();
        let collapse = |t: &[Rat]| {
            let mut out = zeros(h.dim());
            for (idx, c) in crate::linalg::nonzeros(t) {
                let (a, b) = crate::linalg::unpair_index(idx, h.dim());
                add_scaled(&mut out, c, h.alg().basis_product(a, b));
            }
            out
        };
        assert_eq!(collapse(&cm.e_l), h.alg().unit().to_vec());
        assert_eq!(collapse(&cm.e_r), h.alg().unit().to_vec());
    }
}
