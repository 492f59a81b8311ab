//! Finite groupoids, their algebras, and partial groupoid actions.
//!
//! A finite groupoid is stored as a table: arrows with domain `d`, range `r`,
//! inverse, and a partial composition defined exactly on pairs `(g, h)` with
//! `d(g) = r(h)`, composing as `g . h : d(h) -> r(g)`. The groupoid algebra
//! has the arrows as basis, grouplike comultiplication, counit identically
//! one, unit the sum of the identity arrows, and antipode `delta_g ->
//! delta_{g^{-1}}`; it is the motivating family of weak Hopf algebras here.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::coalgebra;
use crate::error::{Error, Result};
use crate::linalg::{basis_vec, pair_index, vec_display, zeros, Matrix, Rat, Subspace};
use crate::report::VerificationReport;
use crate::wha::WeakHopf;

/// A finite group given by labels and a full Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn new(labels: Vec<String>, mul: Vec<Vec<usize>>) -> Self {
        GroupTable { labels, mul }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i][j]
    }

    /// Checks the group axioms and returns the identity index.
    pub fn validate(&self) -> Result<usize> {
        let n = self.order();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if self.mul.len() != n || self.mul.iter().any(|row| row.len() != n) {
            return Err(Error::NotAGroup("Cayley table is not square".into()));
        }
        if self.mul.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotAGroup("Cayley table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| self.mul[e][x] == x && self.mul[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| self.mul[x][y] == identity && self.mul[y][x] == identity) {
                return Err(Error::NotAGroup(format!("element {} has no inverse", self.labels[x])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(identity)
    }
}

/// The cyclic group of order `n` with labels `e, a, a2, ...`.
pub fn cyclic_group(n: usize) -> GroupTable {
    assert!(n > 0);
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect();
    let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable::new(labels, mul)
}

/// A finite groupoid as explicit tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    arrows: Vec<String>,
    d: Vec<usize>,
    r: Vec<usize>,
    inv: Vec<usize>,
    comp: Vec<Option<usize>>,
    identities: Vec<usize>,
}

impl FiniteGroupoid {
    /// Builds a groupoid from raw tables. Only index ranges are checked here;
    /// run [`FiniteGroupoid::validate`] for the axioms.
    pub fn from_tables(
        arrows: Vec<String>,
        d: Vec<usize>,
        r: Vec<usize>,
        inv: Vec<usize>,
        compositions: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let n = arrows.len();
        if n == 0 {
            return Err(Error::InvalidGroupoid("a groupoid needs at least one arrow".into()));
        }
        if d.len() != n || r.len() != n || inv.len() != n {
            return Err(Error::InvalidGroupoid("d, r, inv must cover every arrow".into()));
        }
        if d.iter().chain(&r).chain(&inv).any(|&x| x >= n) {
            return Err(Error::InvalidGroupoid("arrow index out of range".into()));
        }
        let mut comp = vec![None; n * n];
        for &(g, h, gh) in compositions {
            if g >= n || h >= n || gh >= n {
                return Err(Error::InvalidGroupoid(format!(
                    "composition entry ({g}, {h}, {gh}) out of range"
                )));
            }
            let slot = &mut comp[pair_index(g, h, n)];
            if slot.is_some() {
                return Err(Error::InvalidGroupoid(format!(
                    "duplicate composition entry for ({g}, {h})"
                )));
            }
            *slot = Some(gh);
        }
        let identities: Vec<usize> = {
            let set: BTreeSet<usize> = d.iter().chain(&r).copied().collect();
            set.into_iter().collect()
        };
        Ok(FiniteGroupoid { arrows, d, r, inv, comp, identities })
    }

    pub fn size(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow_labels(&self) -> &[String] {
        &self.arrows
    }

    pub fn label(&self, g: usize) -> &str {
        &self.arrows[g]
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|l| l == label)
    }

    pub fn d(&self, g: usize) -> usize {
        self.d[g]
    }

    pub fn r(&self, g: usize) -> usize {
        self.r[g]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.comp[pair_index(g, h, self.size())]
    }

    /// Identity arrows (the objects), ascending.
    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    /// Checks every groupoid axiom on the stored tables.
    ///
    /// Composability must hold exactly when domains and ranges match;
    /// composition must be associative with matching endpoint bookkeeping;
    /// domain and range arrows must act as one-sided identities; inverses
    /// must compose to them.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let fail = |msg: String| Err(Error::InvalidGroupoid(msg));
        for g in 0..n {
            for h in 0..n {
                let defined = self.compose(g, h).is_some();
                let composable = self.d[g] == self.r[h];
                if defined != composable {
                    return fail(format!(
                        "composability mismatch at ({}, {}): d = {}, r = {}, entry {}",
                        self.label(g),
                        self.label(h),
                        self.label(self.d[g]),
                        self.label(self.r[h]),
                        if defined { "present" } else { "absent" }
                    ));
                }
                if let Some(gh) = self.compose(g, h) {
                    if self.d[gh] != self.d[h] || self.r[gh] != self.r[g] {
                        return fail(format!(
                            "endpoints of {} . {} = {} are wrong",
                            self.label(g),
                            self.label(h),
                            self.label(gh)
                        ));
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                let Some(gh) = self.compose(g, h) else { continue };
                for l in 0..n {
                    let Some(hl) = self.compose(h, l) else { continue };
                    if self.compose(gh, l) != self.compose(g, hl) {
                        return fail(format!(
                            "associativity fails at ({}, {}, {})",
                            self.label(g),
                            self.label(h),
                            self.label(l)
                        ));
                    }
                }
            }
        }
        for g in 0..n {
            if self.compose(g, self.d[g]) != Some(g) || self.compose(self.r[g], g) != Some(g) {
                return fail(format!("d/r of {} are not one-sided identities", self.label(g)));
            }
        }
        for &e in &self.identities {
            if self.d[e] != e || self.r[e] != e || self.inv[e] != e {
                return fail(format!("{} is not an identity arrow", self.label(e)));
            }
        }
        for g in 0..n {
            let gi = self.inv[g];
            if self.inv[gi] != g || self.d[gi] != self.r[g] || self.r[gi] != self.d[g] {
                return fail(format!("inverse tables inconsistent at {}", self.label(g)));
            }
            if self.compose(gi, g) != Some(self.d[g]) || self.compose(g, gi) != Some(self.r[g]) {
                return fail(format!("{} does not invert {}", self.label(gi), self.label(g)));
            }
        }
        Ok(())
    }

    /// The isotropy group at an identity arrow: all loops based there.
    /// Returns the loop arrows (ascending) and their Cayley table.
    pub fn isotropy_group(&self, e: usize) -> Result<(Vec<usize>, GroupTable)> {
        if !self.identities.contains(&e) {
            return Err(Error::NotAnIdentity(self.label(e).to_string()));
        }
        let arrows: Vec<usize> =
            (0..self.size()).filter(|&g| self.d[g] == e && self.r[g] == e).collect();
        let pos = |g: usize| arrows.iter().position(|&x| x == g).unwrap();
        let mul = arrows
            .iter()
            .map(|&g| {
                arrows
                    .iter()
                    .map(|&h| pos(self.compose(g, h).expect("loops at e compose")))
                    .collect()
            })
            .collect();
        let labels = arrows.iter().map(|&g| self.label(g).to_string()).collect();
        Ok((arrows, GroupTable::new(labels, mul)))
    }

    /// All subgroups of the isotropy group at `e`, as sorted arrow-index sets,
    /// ordered by size then lexicographically. Exhaustive subset search;
    /// refuses isotropy groups larger than `bound` elements.
    pub fn subgroups_of_isotropy(&self, e: usize, bound: usize) -> Result<Vec<Vec<usize>>> {
        let (arrows, table) = self.isotropy_group(e)?;
        let k = arrows.len();
        if k > bound {
            return Err(Error::BoundExceeded { size: k, bound });
        }
        let identity = table.validate().map_err(|err| {
            Error::InvalidGroupoid(format!("isotropy group at {} invalid: {err}", self.label(e)))
        })?;
        let mut out = Vec::new();
        for mask in 0u64..(1 << k) {
            if mask & (1 << identity) == 0 {
                continue;
            }
            let members: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
            let closed = members.iter().all(|&i| {
                let inv_ok = members.iter().any(|&j| table.mul(i, j) == identity);
                inv_ok && members.iter().all(|&j| members.contains(&table.mul(i, j)))
            });
            if closed {
                out.push(members.iter().map(|&i| arrows[i]).collect::<Vec<usize>>());
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Subgroups of every isotropy group, keyed by identity arrow, in the
    /// deterministic order (identity, size, lexicographic member set).
    pub fn all_isotropy_subgroups(&self, bound: usize) -> Result<Vec<(usize, Vec<usize>)>> {
        let mut out = Vec::new();
        for &e in &self.identities {
            for v in self.subgroups_of_isotropy(e, bound)? {
                out.push((e, v));
            }
        }
        Ok(out)
    }
}

/// Disjoint union of groups as a groupoid: one object per group, loops only.
/// Arrow labels are `g{i}.{label}`.
pub fn disjoint_union_of_groups(groups: &[GroupTable]) -> Result<FiniteGroupoid> {
    if groups.is_empty() {
        return Err(Error::InvalidGroupoid("need at least one group".into()));
    }
    let mut arrows = Vec::new();
    let mut d = Vec::new();
    let mut r = Vec::new();
    let mut inv = Vec::new();
    let mut comps = Vec::new();
    let mut offset = 0;
    for (gi, grp) in groups.iter().enumerate() {
        let identity = grp.validate().map_err(|e| match e {
            Error::NotAGroup(msg) => Error::NotAGroup(format!("component {gi}: {msg}")),
            other => other,
        })?;
        let n = grp.order();
        for (x, label) in grp.labels().iter().enumerate() {
            arrows.push(format!("g{gi}.{label}"));
            d.push(offset + identity);
            r.push(offset + identity);
            let x_inv = (0..n)
                .find(|&y| grp.mul(x, y) == identity && grp.mul(y, x) == identity)
                .expect("validated group has inverses");
            inv.push(offset + x_inv);
        }
        for x in 0..n {
            for y in 0..n {
                comps.push((offset + x, offset + y, offset + grp.mul(x, y)));
            }
        }
        offset += n;
    }
    let g = FiniteGroupoid::from_tables(arrows, d, r, inv, &comps)?;
    g.validate()?;
    Ok(g)
}

/// The pair groupoid on `n` objects: arrows `(i, j)` with `d(i, j) = (j, j)`,
/// `r(i, j) = (i, i)`, and `(i, j) . (j, k) = (i, k)`.
pub fn pair_groupoid(n: usize) -> Result<FiniteGroupoid> {
    if n == 0 {
        return Err(Error::InvalidGroupoid("pair groupoid needs at least one object".into()));
    }
    let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut arrows = Vec::new();
    let mut d = Vec::new();
    let mut r = Vec::new();
    let mut inv = Vec::new();
    let mut comps = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            arrows.push(format!("({i},{j})"));
            d.push(idx(j, j));
            r.push(idx(i, i));
            inv.push(idx(j, i));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                comps.push((idx(i, j), idx(j, k), idx(i, k)));
            }
        }
    }
    let g = FiniteGroupoid::from_tables(arrows, d, r, inv, &comps)?;
    g.validate()?;
    Ok(g)
}

/// The groupoid algebra as a weak Hopf algebra: basis `delta_g`, product by
/// composition (zero when undefined), grouplike comultiplication, counit one
/// on every arrow, unit the sum of identity arrows, antipode by inversion.
pub fn groupoid_algebra(g: &FiniteGroupoid) -> WeakHopf {
    let n = g.size();
    let mut triples = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if let Some(xy) = g.compose(x, y) {
                triples.push((x, y, xy, Rat::one()));
            }
        }
    }
    let mut unit = zeros(n);
    for &e in g.identities() {
        unit[e] = Rat::one();
    }
    let alg = Algebra::from_triples(g.arrow_labels().to_vec(), &triples, unit)
        .expect("groupoid tables are in range");
    let coalg = coalgebra::grouplike(n);
    let antipode = Matrix::from_cols((0..n).map(|x| basis_vec(n, g.inv(x))).collect());
    WeakHopf::new(alg, coalg, antipode).expect("dimensions agree by construction")
}

/// A partial action of a finite groupoid on an algebra `A`:
/// ideals `D_g` with central units `1_g`, and algebra isomorphisms
/// `alpha_g : D_{g^{-1}} -> D_g`, stored in the canonical bases of the ideals.
#[derive(Clone, Debug)]
pub struct PartialGroupoidAction {
    groupoid: FiniteGroupoid,
    algebra: Algebra,
    ideals: Vec<Subspace>,
    units: Vec<Vec<Rat>>,
    isos: Vec<Matrix>,
}

impl PartialGroupoidAction {
    /// `isos[g]` maps canonical coordinates of `D_{g^{-1}}` to canonical
    /// coordinates of `D_g`. Shapes are checked here; the axioms are checked
    /// by [`PartialGroupoidAction::check`].
    pub fn new(
        groupoid: FiniteGroupoid,
        algebra: Algebra,
        ideals: Vec<Subspace>,
        units: Vec<Vec<Rat>>,
        isos: Vec<Matrix>,
    ) -> Result<Self> {
        let n = groupoid.size();
        let dim = algebra.dim();
        if ideals.len() != n || units.len() != n || isos.len() != n {
            return Err(Error::DimensionMismatch(
                "need one ideal, unit, and isomorphism per arrow".into(),
            ));
        }
        for (g, ideal) in ideals.iter().enumerate() {
            if ideal.ambient_dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "ideal for arrow {} lives in the wrong space",
                    groupoid.label(g)
                )));
            }
            if units[g].len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "unit for arrow {} has wrong length",
                    groupoid.label(g)
                )));
            }
        }
        for g in 0..n {
            let (rows, cols) = (isos[g].rows(), isos[g].cols());
            let (want_rows, want_cols) = (ideals[g].dim(), ideals[groupoid.inv(g)].dim());
            if rows != want_rows || cols != want_cols {
                return Err(Error::DimensionMismatch(format!(
                    "iso for arrow {} must be {want_rows} x {want_cols}, got {rows} x {cols}",
                    groupoid.label(g)
                )));
            }
        }
        Ok(PartialGroupoidAction { groupoid, algebra, ideals, units, isos })
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn ideal(&self, g: usize) -> &Subspace {
        &self.ideals[g]
    }

    pub fn unit_of(&self, g: usize) -> &[Rat] {
        &self.units[g]
    }

    pub fn iso(&self, g: usize) -> &Matrix {
        &self.isos[g]
    }

    /// Applies `alpha_g` to an ambient vector, which must lie in `D_{g^{-1}}`.
    pub fn apply_iso(&self, g: usize, v: &[Rat]) -> Option<Vec<Rat>> {
        let coords = self.ideals[self.groupoid.inv(g)].coords_of(v)?;
        Some(self.ideals[g].from_coords(&self.isos[g].mul_vec(&coords)))
    }

    /// Verifies the partial groupoid action axioms exhaustively:
    /// each `D_g` is a unital ideal of `D_{r(g)}` with central unit, the
    /// identity components decompose `A`, the `alpha_g` are multiplicative
    /// isomorphisms inverse to `alpha_{g^{-1}}` restricting correctly on
    /// composable pairs, and the unit-twisted composition rule holds on all
    /// of `A`.
    pub fn check(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("partial groupoid action");
        let g0 = &self.groupoid;
        let alg = &self.algebra;
        let n = g0.size();
        let dim = alg.dim();

        for g in 0..n {
            let ideal = &self.ideals[g];
            let unit = &self.units[g];
            rep.check(
                "unit of each ideal lies in the ideal",
                &[g],
                ideal.contains(unit),
                &vec_display(unit),
                "membership in D_g",
            );
            for t in 0..ideal.dim() {
                let x = ideal.basis_row(t);
                rep.check_vecs("unit of each ideal is a unit", &[g, t], &alg.mul(unit, x), x);
                rep.check_vecs("unit of each ideal is a unit", &[g, t, 1], &alg.mul(x, unit), x);
            }
            for i in 0..dim {
                let b = basis_vec(dim, i);
                rep.check_vecs(
                    "units are central in A",
                    &[g, i],
                    &alg.mul(unit, &b),
                    &alg.mul(&b, unit),
                );
            }
            rep.check(
                "each ideal sits inside the range component",
                &[g],
                ideal.is_subspace_of(&self.ideals[g0.r(g)]),
                &format!("D_{}", g0.label(g)),
                &format!("D_{}", g0.label(g0.r(g))),
            );
            let range_ideal = &self.ideals[g0.r(g)];
            for t in 0..range_ideal.dim() {
                for u in 0..ideal.dim() {
                    let x = range_ideal.basis_row(t);
                    let y = ideal.basis_row(u);
                    rep.check(
                        "each ideal is an ideal of its range component",
                        &[g, t, u],
                        ideal.contains(&alg.mul(x, y)) && ideal.contains(&alg.mul(y, x)),
                        &vec_display(&alg.mul(x, y)),
                        "membership in D_g",
                    );
                }
            }
        }

        // Identity components decompose A.
        {
            let mut sum = Subspace::zero(dim);
            let mut total = 0;
            for &e in g0.identities() {
                sum = sum.sum(&self.ideals[e]);
                total += self.ideals[e].dim();
            }
            rep.check(
                "identity components direct-sum to A",
                &[],
                sum == Subspace::full(dim) && total == dim,
                &format!("sum of dimension {} spanning dimension {}", total, sum.dim()),
                &format!("A of dimension {dim}"),
            );
            let mut unit_sum = zeros(dim);
            for &e in g0.identities() {
                unit_sum = crate::linalg::vec_add(&unit_sum, &self.units[e]);
            }
            rep.check_vecs("identity units sum to the unit of A", &[], &unit_sum, alg.unit());
            for &e in g0.identities() {
                let ideal = &self.ideals[e];
                for i in 0..dim {
                    for t in 0..ideal.dim() {
                        let b = basis_vec(dim, i);
                        let x = ideal.basis_row(t);
                        rep.check(
                            "identity components are ideals of A",
                            &[e, i, t],
                            ideal.contains(&alg.mul(&b, x)) && ideal.contains(&alg.mul(x, &b)),
                            &vec_display(&alg.mul(&b, x)),
                            "membership in D_e",
                        );
                    }
                }
            }
        }

        // Isomorphism structure.
        for g in 0..n {
            let gi = g0.inv(g);
            let src = &self.ideals[gi];
            rep.check_vecs(
                "alpha is unital on the ideal units",
                &[g],
                &self.apply_iso(g, &self.units[gi]).unwrap_or_else(|| zeros(dim)),
                &self.units[g],
            );
            for t in 0..src.dim() {
                for u in 0..src.dim() {
                    let x = src.basis_row(t);
                    let y = src.basis_row(u);
                    let lhs = self.apply_iso(g, &alg.mul(x, y)).unwrap_or_else(|| zeros(dim));
                    let rhs = alg.mul(
                        &self.apply_iso(g, x).unwrap_or_else(|| zeros(dim)),
                        &self.apply_iso(g, y).unwrap_or_else(|| zeros(dim)),
                    );
                    rep.check_vecs("alpha is multiplicative", &[g, t, u], &lhs, &rhs);
                }
            }
            let roundtrip = self.isos[gi].mul(&self.isos[g]);
            rep.check(
                "alpha of the inverse arrow inverts alpha",
                &[g],
                roundtrip == Matrix::identity(src.dim()),
                "alpha_{g^{-1}} . alpha_g",
                "identity on D_{g^{-1}}",
            );
        }
        for &e in g0.identities() {
            rep.check(
                "alpha at identities is the identity map",
                &[e],
                self.isos[e] == Matrix::identity(self.ideals[e].dim()),
                "alpha_e",
                "identity matrix",
            );
        }

        // Composable pairs: restriction and composition laws.
        for g in 0..n {
            for h in 0..n {
                let Some(gh) = g0.compose(g, h) else { continue };
                let meet = self.ideals[g0.inv(g)].intersect(&self.ideals[h]);
                let pulled = {
                    let gens: Vec<Vec<Rat>> = (0..meet.dim())
                        .map(|t| {
                            self.apply_iso(g0.inv(h), meet.basis_row(t))
                                .unwrap_or_else(|| zeros(dim))
                        })
                        .collect();
                    Subspace::from_spanning(dim, &gens)
                };
                rep.check(
                    "alpha pulls composable overlaps into the composite ideal",
                    &[g, h],
                    pulled.is_subspace_of(&self.ideals[g0.inv(gh)]),
                    &format!("alpha_{{h^{{-1}}}}(D_{{g^{{-1}}}} meet D_h) of dimension {}", pulled.dim()),
                    &format!("D_{{(gh)^{{-1}}}} of dimension {}", self.ideals[g0.inv(gh)].dim()),
                );
                for t in 0..pulled.dim() {
                    let x = pulled.basis_row(t);
                    let step = self.apply_iso(h, x).unwrap_or_else(|| zeros(dim));
                    let lhs = self.apply_iso(g, &step).unwrap_or_else(|| zeros(dim));
                    let rhs = self.apply_iso(gh, x).unwrap_or_else(|| zeros(dim));
                    rep.check_vecs("alpha composes on overlaps", &[g, h, t], &lhs, &rhs);
                }
                // Unit-twisted composition on every basis vector of A.
                for i in 0..dim {
                    let x = basis_vec(dim, i);
                    let inner = self
                        .apply_iso(h, &alg.mul(&x, &self.units[g0.inv(h)]))
                        .unwrap_or_else(|| zeros(dim));
                    let lhs = self
                        .apply_iso(g, &alg.mul(&inner, &self.units[g0.inv(g)]))
                        .unwrap_or_else(|| zeros(dim));
                    let rhs = alg.mul(
                        &self
                            .apply_iso(gh, &alg.mul(&x, &self.units[g0.inv(gh)]))
                            .unwrap_or_else(|| zeros(dim)),
                        &self.units[g],
                    );
                    rep.check_vecs("unit-twisted composition rule", &[g, h, i], &lhs, &rhs);
                }
            }
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_validate() {
        for n in 1..=6 {
            assert_eq!(cyclic_group(n).validate().unwrap(), 0);
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        let no_identity = GroupTable::new(vec!["x".into(), "y".into()], vec![vec![0, 0], vec![0, 0]]);
        assert!(matches!(no_identity.validate(), Err(Error::NotAGroup(_))));
        let non_assoc = GroupTable::new(
            vec!["e".into(), "a".into(), "b".into()],
            vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]],
        );
        assert!(non_assoc.validate().is_err());
    }

    #[test]
    fn pair_groupoid_structure() {
        let g = pair_groupoid(2).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(g.identities(), &[0, 3]);
        let a21 = g.arrow_index("(2,1)").unwrap();
        let a12 = g.arrow_index("(1,2)").unwrap();
        assert_eq!(g.inv(a21), a12);
        assert_eq!(g.d(a21), g.arrow_index("(1,1)").unwrap());
        assert_eq!(g.r(a21), g.arrow_index("(2,2)").unwrap());
        assert_eq!(g.compose(a12, a21), Some(g.arrow_index("(1,1)").unwrap()));
        assert_eq!(g.compose(a12, a12), None);
        assert!(g.validate().is_ok());
    }

    #[test]
    fn corrupted_tables_fail_validation() {
        let g = pair_groupoid(2).unwrap();
        let mut d = g.d.clone();
        d.swap(1, 2);
        let mut comps = Vec::new();
        for x in 0..g.size() {
            for y in 0..g.size() {
                if let Some(xy) = g.compose(x, y) {
                    comps.push((x, y, xy));
                }
            }
        }
        let bad = FiniteGroupoid::from_tables(
            g.arrows.clone(),
            d,
            g.r.clone(),
            g.inv.clone(),
            &comps,
        )
        .unwrap();
        assert!(matches!(bad.validate(), Err(Error::InvalidGroupoid(_))));
    }

    #[test]
    fn disjoint_union_of_two_groups() {
        let g = disjoint_union_of_groups(&[cyclic_group(3), cyclic_group(2)]).unwrap();
        assert_eq!(g.size(), 5);
        assert_eq!(g.identities().len(), 2);
        assert!(g.validate().is_ok());
        let e0 = g.identities()[0];
        let (loops, table) = g.isotropy_group(e0).unwrap();
        assert_eq!(loops.len(), 3);
        assert_eq!(table.validate().unwrap(), 0);
    }

    #[test]
    fn subgroup_enumeration_counts() {
        let z3 = disjoint_union_of_groups(&[cyclic_group(3)]).unwrap();
        assert_eq!(z3.subgroups_of_isotropy(0, 16).unwrap().len(), 2);
        let z2z2 = disjoint_union_of_groups(&[cyclic_group(2), cyclic_group(2)]).unwrap();
        assert_eq!(z2z2.all_isotropy_subgroups(16).unwrap().len(), 4);
        let pair = pair_groupoid(2).unwrap();
        assert_eq!(pair.all_isotropy_subgroups(16).unwrap().len(), 2);
        let z4 = disjoint_union_of_groups(&[cyclic_group(4)]).unwrap();
        let subs = z4.subgroups_of_isotropy(0, 16).unwrap();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[0], vec![0]);
        assert_eq!(subs[1], vec![0, 2]);
        assert_eq!(subs[2], vec![0, 1, 2, 3]);
        assert!(matches!(
            z4.subgroups_of_isotropy(0, 3),
            Err(Error::BoundExceeded { size: 4, bound: 3 })
        ));
    }

    #[test]
    fn groupoid_algebra_counital_projections_hit_endpoints() {
        let g = pair_groupoid(2).unwrap();
        let h = groupoid_algebra(&g);
        for x in 0..g.size() {
            assert_eq!(h.eps_l_basis(x), basis_vec(g.size(), g.r(x)));
            assert_eq!(h.eps_r_basis(x), basis_vec(g.size(), g.d(x)));
        }
    }
}
