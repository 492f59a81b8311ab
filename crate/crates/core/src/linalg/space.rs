//! Canonical subspaces and quotient spaces.

use super::matrix::Matrix;
use super::tensor::tensor_vec;
use super::{add_scaled, basis_vec, vec_is_zero, zeros, Rat};

/// A linear subspace of `QQ^ambient` in canonical form.
///
/// The basis is the reduced row echelon form of any spanning set, with zero
/// rows dropped, so two subspaces are equal as sets exactly when they are
/// equal as values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalizes the span of the given vectors.
    pub fn from_spanning(ambient: usize, gens: &[Vec<Rat>]) -> Self {
        for g in gens {
            assert_eq!(g.len(), ambient, "generator length mismatch");
        }
        if gens.is_empty() {
            return Subspace::zero(ambient);
        }
        let (rref, pivots) = Matrix::from_rows(gens.to_vec()).rref_with_pivots();
        if pivots.is_empty() {
            return Subspace::zero(ambient);
        }
        let basis = Matrix::from_rows(rref.row_vecs().into_iter().take(pivots.len()).collect());
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &[Rat] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after subtracting its projection onto the basis rows.
    /// Zero exactly when `v` lies in the subspace.
    fn reduce(&self, v: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (t, &p) in self.pivots.iter().enumerate() {
            let c = rem[p].clone();
            if !c.is_zero() {
                let minus = -&c;
                add_scaled(&mut rem, &minus, self.basis.row(t));
            }
            coords.push(c);
        }
        (rem, coords)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        vec_is_zero(&self.reduce(v).0)
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is
    /// outside the subspace.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient);
        let (rem, coords) = self.reduce(v);
        vec_is_zero(&rem).then_some(coords)
    }

    /// The ambient vector with the given canonical-basis coordinates.
    pub fn from_coords(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim());
        let mut v = zeros(self.ambient);
        for (t, c) in coords.iter().enumerate() {
            add_scaled(&mut v, c, self.basis.row(t));
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..self.dim()).all(|i| other.contains(self.basis_row(i)))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut gens = self.basis.row_vecs();
        gens.extend(other.basis.row_vecs());
        Subspace::from_spanning(self.ambient, &gens)
    }

    /// Intersection, via the kernel of the map pairing coefficients of both
    /// bases against the shared ambient space.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // Columns: self basis rows, then negated other basis rows. A kernel
        // vector (a, b) witnesses sum(a_i u_i) = sum(b_j v_j).
        let mut cols = self.basis.row_vecs();
        cols.extend(other.basis.row_vecs().into_iter().map(|r| r.iter().map(|x| -x).collect()));
        let k = Matrix::from_cols(cols).kernel();
        let gens: Vec<Vec<Rat>> = (0..k.dim())
            .map(|t| {
                let coeffs = &k.basis_row(t)[..self.dim()];
                let mut v = zeros(self.ambient);
                for (i, c) in coeffs.iter().enumerate() {
                    add_scaled(&mut v, c, self.basis.row(i));
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient, &gens)
    }

    /// Tensor product inside the Kronecker-ordered ambient space.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                gens.push(tensor_vec(self.basis_row(i), other.basis_row(j)));
            }
        }
        Subspace::from_spanning(self.ambient * other.ambient, &gens)
    }

    /// Image of the subspace under a linear map on the ambient space.
    pub fn map_through(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.cols(), self.ambient);
        let gens: Vec<Vec<Rat>> = (0..self.dim()).map(|i| f.mul_vec(self.basis_row(i))).collect();
        Subspace::from_spanning(f.rows(), &gens)
    }
}

/// A quotient `QQ^ambient / relations` with a fixed linear section.
///
/// The quotient basis consists of the classes of the standard basis vectors
/// at the non-pivot columns of the relation space, in ascending column order.
/// [`QuotientSpace::section`] maps a class back to the representative
/// supported on those free columns; `project . section` is the identity and
/// `w - section(project(w))` always lies in the relation space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientSpace {
    relations: Subspace,
    free_cols: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let free_cols =
            (0..relations.ambient_dim()).filter(|c| !relations.pivots().contains(c)).collect();
        QuotientSpace { relations, free_cols }
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient index of the representative basis vector of quotient class `t`.
    pub fn free_col(&self, t: usize) -> usize {
        self.free_cols[t]
    }

    /// Quotient coordinates of the class of `w`.
    pub fn project(&self, w: &[Rat]) -> Vec<Rat> {
        assert_eq!(w.len(), self.ambient_dim());
        let mut rem = w.to_vec();
        for (t, &p) in self.relations.pivots().iter().enumerate() {
            let c = rem[p].clone();
            if !c.is_zero() {
                let minus = -&c;
                add_scaled(&mut rem, &minus, self.relations.basis_row(t));
            }
        }
        self.free_cols.iter().map(|&f| rem[f].clone()).collect()
    }

    /// Canonical ambient representative of a quotient vector.
    pub fn section(&self, q: &[Rat]) -> Vec<Rat> {
        assert_eq!(q.len(), self.dim());
        let mut v = zeros(self.ambient_dim());
        for (t, &f) in self.free_cols.iter().enumerate() {
            v[f] = q[t].clone();
        }
        v
    }

    pub fn project_matrix(&self) -> Matrix {
        Matrix::from_cols((0..self.ambient_dim()).map(|i| self.project(&basis_vec(self.ambient_dim(), i))).collect())
    }

    pub fn section_matrix(&self) -> Matrix {
        Matrix::from_cols((0..self.dim()).map(|t| self.section(&basis_vec(self.dim(), t))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Rat {
        Rat::from_int(x)
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_spanning(3, &[vec![r(1), r(1), r(0)], vec![r(0), r(0), r(1)]]);
        let b = Subspace::from_spanning(3, &[vec![r(2), r(2), r(2)], vec![r(0), r(0), r(5)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[r(3), r(3), r(-1)]));
        assert!(!a.contains(&[r(1), r(0), r(0)]));
    }

    #[test]
    fn coords_roundtrip() {
        let s = Subspace::from_spanning(3, &[vec![r(1), r(2), r(0)], vec![r(0), r(0), r(3)]]);
        let v = vec![r(2), r(4), r(-3)];
        let c = s.coords_of(&v).unwrap();
        assert_eq!(s.from_coords(&c), v);
        assert!(s.coords_of(&[r(1), r(0), r(0)]).is_none());
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::from_spanning(3, &[vec![r(1), r(0), r(0)], vec![r(0), r(1), r(0)]]);
        let b = Subspace::from_spanning(3, &[vec![r(0), r(1), r(0)], vec![r(0), r(0), r(1)]]);
        assert_eq!(a.sum(&b), Subspace::full(3));
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[r(0), r(1), r(0)]));
    }

    #[test]
    fn quotient_by_diagonal() {
        // Relations span (1, -1): classes of e0 and e1 agree.
        let q = QuotientSpace::new(Subspace::from_spanning(2, &[vec![r(1), r(-1)]]));
        assert_eq!(q.dim(), 1);
        assert_eq!(q.project(&[r(1), r(0)]), q.project(&[r(0), r(1)]));
        assert_eq!(q.project(&q.section(&[r(5)])), vec![r(5)]);
    }

    #[test]
    fn quotient_edge_cases() {
        let all = QuotientSpace::new(Subspace::zero(2));
        assert_eq!(all.dim(), 2);
        assert_eq!(all.project(&[r(3), r(4)]), vec![r(3), r(4)]);
        let none = QuotientSpace::new(Subspace::full(2));
        assert_eq!(none.dim(), 0);
        assert_eq!(none.project(&[r(3), r(4)]), Vec::<Rat>::new());
    }

    #[test]
    fn projection_kills_exactly_the_relations() {
        let rel = Subspace::from_spanning(4, &[vec![r(1), r(2), r(0), r(0)], vec![r(0), r(0), r(1), r(1)]]);
        let q = QuotientSpace::new(rel.clone());
        for i in 0..rel.dim() {
            assert!(vec_is_zero(&q.project(rel.basis_row(i))));
        }
        let w = vec![r(1), r(1), r(1), r(1)];
        let diff = crate::linalg::vec_sub(&w, &q.section(&q.project(&w)));
        assert!(rel.contains(&diff));
    }
}
