//! Readers and writers for the JSON file formats.
//!
//! Every format carries exact rationals as strings, `"p/q"` or plain `"p"`
//! when the denominator is one. Multiplication and comultiplication tables
//! are sparse lists of `[i, j, k, "p/q"]` entries over the 0-based basis;
//! absent entries are zero and a later entry overwrites an earlier one at
//! the same position.
//!
//! A groupoid file lists its arrows with domain, range, inverse, and the
//! composition table restricted to the defined products; the arrow order in
//! the file fixes the basis order of the groupoid algebra. Loading rejects
//! composition entries whose endpoints do not match and any violation of the
//! groupoid axioms.
//!
//! Action files reference their ingredients under `"H"` and `"A"` either
//! inline or as a file name resolved relative to the referring file. An
//! `"H"` reference may be a weak Hopf algebra file or a groupoid file; the
//! latter is loaded through its groupoid algebra.
//!
//! Loaders check shapes, not theorems: a structurally well-formed file whose
//! tables violate the weak Hopf or partial action axioms loads fine and
//! fails verification afterwards, which is what the command line reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::groupoid::{groupoid_algebra, FiniteGroupoid, PartialGroupoidAction};
use crate::linalg::{nonzeros, pair_index, zeros, Matrix, Rat, Subspace};
use crate::paction::PartialAction;
use crate::wha::WeakHopf;

/// On-disk form of a finite groupoid. Domains, ranges, and inverses are
/// maps from arrow label to arrow label; `comp` lists exactly the defined
/// compositions as `[g, h, gh]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupoidFile {
    pub arrows: Vec<String>,
    pub d: BTreeMap<String, String>,
    pub r: BTreeMap<String, String>,
    pub inv: BTreeMap<String, String>,
    pub comp: Vec<(String, String, String)>,
}

/// On-disk form of a finite-dimensional unital algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, Rat)>,
    pub unit: Vec<Rat>,
}

/// On-disk form of a weak Hopf algebra: sparse structure constants for the
/// product and coproduct, dense unit and counit vectors, and the antipode
/// as a row-major matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WhaFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, Rat)>,
    pub unit: Vec<Rat>,
    pub delta: Vec<(usize, usize, usize, Rat)>,
    pub counit: Vec<Rat>,
    pub antipode: Vec<Vec<Rat>>,
}

/// On-disk form of a partial action. `act` entries `[i, j, v]` give
/// `h_i . a_j = v`; absent pairs act as zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionFile {
    #[serde(rename = "H")]
    pub h: Value,
    #[serde(rename = "A")]
    pub a: Value,
    pub act: Vec<(usize, usize, Vec<Rat>)>,
}

/// On-disk form of a partial groupoid action: per arrow `g`, spanning
/// vectors for the ideal `D_g`, its unit `1_g`, and the row-major matrix of
/// `alpha_g : D_{g^{-1}} -> D_g` written in the canonical reduced bases of
/// the two ideals.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupoidActionFile {
    pub groupoid: Value,
    #[serde(rename = "A")]
    pub a: Value,
    pub ideals: Vec<Vec<Vec<Rat>>>,
    pub units: Vec<Vec<Rat>>,
    pub isos: Vec<Vec<Vec<Rat>>>,
}

/// Serializes any file structure to pretty JSON with a trailing newline,
/// byte-identical across runs for equal inputs.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("file structures serialize");
    text.push('\n');
    text
}

fn read_value(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    Ok(serde_json::from_value(v)?)
}

/// Resolves an `"H"`/`"A"`/`"groupoid"` reference: a string names a file
/// relative to `dir`, an object is the content itself.
fn resolve(v: &Value, dir: &Path) -> Result<Value> {
    match v {
        Value::String(name) => read_value(&dir.join(name)),
        Value::Object(_) => Ok(v.clone()),
        _ => Err(Error::InvalidInput(
            "a reference must be a file name or an inline object".into(),
        )),
    }
}

fn parent_dir(path: &Path) -> &Path {
    match path.parent() {
        Some(dir) if dir != Path::new("") => dir,
        _ => Path::new("."),
    }
}

pub fn groupoid_from_file(f: &GroupoidFile) -> Result<FiniteGroupoid> {
    let n = f.arrows.len();
    let index = |label: &str| -> Result<usize> {
        f.arrows
            .iter()
            .position(|a| a == label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown arrow '{label}'")))
    };
    for (name, map) in [("d", &f.d), ("r", &f.r), ("inv", &f.inv)] {
        for key in map.keys() {
            index(key)?;
        }
        if map.len() != n {
            return Err(Error::InvalidInput(format!(
                "'{name}' must map every arrow exactly once"
            )));
        }
    }
    let lookup = |name: &str, map: &BTreeMap<String, String>| -> Result<Vec<usize>> {
        f.arrows
            .iter()
            .map(|a| {
                let target = map.get(a).ok_or_else(|| {
                    Error::InvalidInput(format!("'{name}' has no entry for arrow '{a}'"))
                })?;
                index(target)
            })
            .collect()
    };
    let d = lookup("d", &f.d)?;
    let r = lookup("r", &f.r)?;
    let inv = lookup("inv", &f.inv)?;
    let mut comp = Vec::with_capacity(f.comp.len());
    for (g, h, gh) in &f.comp {
        let (gi, hi, ghi) = (index(g)?, index(h)?, index(gh)?);
        if d[gi] != r[hi] {
            return Err(Error::InvalidGroupoid(format!(
                "composition entry {g} . {h} violates d({g}) = r({h})"
            )));
        }
        comp.push((gi, hi, ghi));
    }
    let groupoid = FiniteGroupoid::from_tables(f.arrows.clone(), d, r, inv, &comp)?;
    groupoid.validate()?;
    Ok(groupoid)
}

pub fn groupoid_to_file(g: &FiniteGroupoid) -> GroupoidFile {
    let n = g.size();
    let label = |x: usize| g.label(x).to_string();
    let map_of = |f: &dyn Fn(usize) -> usize| -> BTreeMap<String, String> {
        (0..n).map(|x| (label(x), label(f(x)))).collect()
    };
    let mut comp = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if let Some(xy) = g.compose(x, y) {
                comp.push((label(x), label(y), label(xy)));
            }
        }
    }
    GroupoidFile {
        arrows: (0..n).map(label).collect(),
        d: map_of(&|x| g.d(x)),
        r: map_of(&|x| g.r(x)),
        inv: map_of(&|x| g.inv(x)),
        comp,
    }
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<Algebra> {
    if f.labels.len() != f.dim {
        return Err(Error::DimensionMismatch(format!(
            "declared dimension {} but {} labels",
            f.dim,
            f.labels.len()
        )));
    }
    Algebra::from_triples(f.labels.clone(), &f.mult, f.unit.clone())
}

pub fn algebra_to_file(a: &Algebra) -> AlgebraFile {
    let n = a.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in nonzeros(a.basis_product(i, j)) {
                mult.push((i, j, k, c.clone()));
            }
        }
    }
    AlgebraFile { dim: n, labels: a.labels().to_vec(), mult, unit: a.unit().to_vec() }
}

pub fn wha_from_file(f: &WhaFile) -> Result<WeakHopf> {
    let n = f.dim;
    if f.labels.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "declared dimension {n} but {} labels",
            f.labels.len()
        )));
    }
    if f.antipode.len() != n || f.antipode.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch(format!("antipode must be a {n} x {n} matrix")));
    }
    let alg = Algebra::from_triples(f.labels.clone(), &f.mult, f.unit.clone())?;
    let coalg = Coalgebra::from_triples(n, &f.delta, f.counit.clone())?;
    let antipode = Matrix::from_rows(f.antipode.clone());
    WeakHopf::new(alg, coalg, antipode)
}

pub fn wha_to_file(h: &WeakHopf) -> WhaFile {
    let n = h.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in nonzeros(h.alg().basis_product(i, j)) {
                mult.push((i, j, k, c.clone()));
            }
        }
    }
    let mut delta = Vec::new();
    for i in 0..n {
        for (j, k, c) in h.coalg().sweedler(i) {
            delta.push((i, j, k, c));
        }
    }
    WhaFile {
        dim: n,
        labels: h.labels().to_vec(),
        mult,
        unit: h.alg().unit().to_vec(),
        delta,
        counit: h.coalg().counit().to_vec(),
        antipode: h.antipode().row_vecs(),
    }
}

/// Interprets a resolved reference as a weak Hopf algebra: a groupoid file
/// (recognized by its `arrows` key) through its groupoid algebra, anything
/// else as a weak Hopf algebra file.
pub fn hopf_from_value(v: Value) -> Result<WeakHopf> {
    if v.get("arrows").is_some() {
        let groupoid = groupoid_from_file(&from_value(v)?)?;
        Ok(groupoid_algebra(&groupoid))
    } else {
        wha_from_file(&from_value(v)?)
    }
}

pub fn action_from_file(f: &ActionFile, dir: &Path) -> Result<PartialAction> {
    let h = hopf_from_value(resolve(&f.h, dir)?)?;
    let algebra = algebra_from_file(&from_value(resolve(&f.a, dir)?)?)?;
    let (n, m) = (h.dim(), algebra.dim());
    let mut act = vec![zeros(m); n * m];
    for (i, j, v) in &f.act {
        if *i >= n || *j >= m {
            return Err(Error::InvalidInput(format!(
                "action entry ({i}, {j}) out of range for dimensions {n} x {m}"
            )));
        }
        if v.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "action entry ({i}, {j}) must be a vector of length {m}"
            )));
        }
        act[pair_index(*i, *j, m)] = v.clone();
    }
    PartialAction::new(h, algebra, act)
}

/// Writes a partial action with its weak Hopf algebra and algebra inline,
/// listing only nonzero action values.
pub fn action_to_file(p: &PartialAction) -> ActionFile {
    let (n, m) = (p.dim_h(), p.dim_a());
    let mut act = Vec::new();
    for i in 0..n {
        for j in 0..m {
            let v = p.act_basis(i, j);
            if !v.iter().all(Rat::is_zero) {
                act.push((i, j, v.to_vec()));
            }
        }
    }
    ActionFile {
        h: serde_json::to_value(wha_to_file(p.h())).expect("file structures serialize"),
        a: serde_json::to_value(algebra_to_file(p.algebra())).expect("file structures serialize"),
        act,
    }
}

pub fn groupoid_action_from_file(
    f: &GroupoidActionFile,
    dir: &Path,
) -> Result<PartialGroupoidAction> {
    let resolved = resolve(&f.groupoid, dir)?;
    if resolved.get("arrows").is_none() {
        return Err(Error::InvalidInput("'groupoid' must reference a groupoid file".into()));
    }
    let groupoid = groupoid_from_file(&from_value(resolved)?)?;
    let algebra = algebra_from_file(&from_value(resolve(&f.a, dir)?)?)?;
    let (n, m) = (groupoid.size(), algebra.dim());
    for (name, len) in
        [("ideals", f.ideals.len()), ("units", f.units.len()), ("isos", f.isos.len())]
    {
        if len != n {
            return Err(Error::DimensionMismatch(format!(
                "'{name}' must have one entry per arrow, got {len} for {n} arrows"
            )));
        }
    }
    let ideals: Vec<Subspace> = f
        .ideals
        .iter()
        .enumerate()
        .map(|(g, rows)| {
            if rows.iter().any(|row| row.len() != m) {
                return Err(Error::DimensionMismatch(format!(
                    "ideal spanning vectors for arrow '{}' must have length {m}",
                    groupoid.label(g)
                )));
            }
            Ok(Subspace::from_spanning(m, rows))
        })
        .collect::<Result<_>>()?;
    let mut isos = Vec::with_capacity(n);
    for g in 0..n {
        let (rows, cols) = (ideals[g].dim(), ideals[groupoid.inv(g)].dim());
        let table = &f.isos[g];
        if table.len() != rows || table.iter().any(|row| row.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "iso for arrow '{}' must be a {rows} x {cols} matrix",
                groupoid.label(g)
            )));
        }
        isos.push(Matrix::from_fn(rows, cols, |i, j| table[i][j].clone()));
    }
    PartialGroupoidAction::new(groupoid, algebra, ideals, f.units.clone(), isos)
}

/// Writes a partial groupoid action with its groupoid and algebra inline.
/// Ideals are saved through their canonical reduced bases, which `isos`
/// matrices are written against.
pub fn groupoid_action_to_file(p: &PartialGroupoidAction) -> GroupoidActionFile {
    let g = p.groupoid();
    let n = g.size();
    let basis_rows = |s: &Subspace| (0..s.dim()).map(|t| s.basis_row(t).to_vec()).collect();
    GroupoidActionFile {
        groupoid: serde_json::to_value(groupoid_to_file(g)).expect("file structures serialize"),
        a: serde_json::to_value(algebra_to_file(p.algebra())).expect("file structures serialize"),
        ideals: (0..n).map(|x| basis_rows(p.ideal(x))).collect(),
        units: (0..n).map(|x| p.unit_of(x).to_vec()).collect(),
        isos: (0..n).map(|x| p.iso(x).row_vecs()).collect(),
    }
}

pub fn load_groupoid(path: impl AsRef<Path>) -> Result<FiniteGroupoid> {
    groupoid_from_file(&from_value(read_value(path.as_ref())?)?)
}

/// Loads a weak Hopf algebra from either a weak Hopf algebra file or a
/// groupoid file.
pub fn load_wha(path: impl AsRef<Path>) -> Result<WeakHopf> {
    hopf_from_value(read_value(path.as_ref())?)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<Algebra> {
    algebra_from_file(&from_value(read_value(path.as_ref())?)?)
}

pub fn load_action(path: impl AsRef<Path>) -> Result<PartialAction> {
    let path = path.as_ref();
    action_from_file(&from_value(read_value(path)?)?, parent_dir(path))
}

pub fn load_groupoid_action(path: impl AsRef<Path>) -> Result<PartialGroupoidAction> {
    let path = path.as_ref();
    groupoid_action_from_file(&from_value(read_value(path)?)?, parent_dir(path))
}

pub fn save_json<T: Serialize>(value: &T, path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, to_json(value))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::pair_groupoid;
    use crate::linalg::basis_vec;
    use crate::paction::{epsilon_action, GroundFieldAction};

    fn pair2() -> FiniteGroupoid {
        pair_groupoid(2).unwrap()
    }

    /// Global action of the pair groupoid on `QQ^2`: each `D_g` is the range
    /// component and `alpha_(i,j)` carries `e_j` to `e_i`.
    fn qq2_groupoid_action() -> PartialGroupoidAction {
        let g = pair2();
        let a = Algebra::product_of_fields(2);
        let e = |i: usize| basis_vec(2, i);
        let span = |v: Vec<Rat>| Subspace::from_spanning(2, &[v]);
        let at = |label: &str| g.arrow_index(label).unwrap();
        let mut ideals = vec![Subspace::zero(2); 4];
        let mut units = vec![zeros(2); 4];
        for (label, i) in [("(1,1)", 0), ("(1,2)", 0), ("(2,1)", 1), ("(2,2)", 1)] {
            ideals[at(label)] = span(e(i));
            units[at(label)] = e(i);
        }
        let isos = vec![Matrix::identity(1); 4];
        PartialGroupoidAction::new(g, a, ideals, units, isos).unwrap()
    }

    #[test]
    fn groupoid_files_roundtrip() {
        let g = pair2();
        let text = to_json(&groupoid_to_file(&g));
        let back =
            groupoid_from_file(&serde_json::from_str(&text).expect("groupoid json parses"))
                .expect("groupoid file loads");
        assert_eq!(back.size(), g.size());
        for x in 0..g.size() {
            assert_eq!(back.label(x), g.label(x));
            assert_eq!(back.d(x), g.d(x));
            assert_eq!(back.r(x), g.r(x));
            assert_eq!(back.inv(x), g.inv(x));
            for y in 0..g.size() {
                assert_eq!(back.compose(x, y), g.compose(x, y));
            }
        }
        assert!(back.validate().is_ok());
    }

    #[test]
    fn mismatched_composition_entries_are_rejected() {
        let g = pair2();
        let mut file = groupoid_to_file(&g);
        // (1,2) . (1,2) has d = (2,2) but r = (1,1), so it is not composable.
        file.comp.push(("(1,2)".into(), "(1,2)".into(), "(1,2)".into()));
        let err = groupoid_from_file(&file).unwrap_err();
        assert!(matches!(err, Error::InvalidGroupoid(_)), "{err}");

        let mut file = groupoid_to_file(&g);
        // Dropping a defined product breaks composability the other way.
        file.comp.retain(|(a, b, _)| !(a == "(1,2)" && b == "(2,1)"));
        let err = groupoid_from_file(&file).unwrap_err();
        assert!(matches!(err, Error::InvalidGroupoid(_)), "{err}");
    }

    #[test]
    fn wha_files_roundtrip() {
        let h = groupoid_algebra(&pair2());
        let text = to_json(&wha_to_file(&h));
        let back = wha_from_file(&serde_json::from_str(&text).expect("wha json parses"))
            .expect("wha file loads");
        assert_eq!(back.dim(), h.dim());
        assert_eq!(back.labels(), h.labels());
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                assert_eq!(back.alg().basis_product(i, j), h.alg().basis_product(i, j));
            }
            assert_eq!(back.coalg().delta_basis(i), h.coalg().delta_basis(i));
        }
        assert_eq!(back.alg().unit(), h.alg().unit());
        assert_eq!(back.coalg().counit(), h.coalg().counit());
        assert_eq!(back.antipode(), h.antipode());
    }

    #[test]
    fn corrupted_antipode_loads_but_fails_verification() {
        let mut file = wha_to_file(&groupoid_algebra(&pair2()));
        file.antipode[0][1] = Rat::one();
        let h = wha_from_file(&file).expect("shape checks still pass");
        let rep = h.check_weak_hopf();
        assert!(!rep.passed(), "corruption must surface in the axiom suite");
    }

    #[test]
    fn action_files_resolve_file_references() {
        let dir = tempfile::tempdir().unwrap();
        let h = groupoid_algebra(&pair2());
        let lambda: Vec<Rat> =
            (0..4).map(|i| if i == 0 { Rat::one() } else { Rat::zero() }).collect();
        let action = GroundFieldAction::new(lambda).as_partial_action(&h).unwrap();
        assert!(action.check_partial_action().passed());

        save_json(&groupoid_to_file(&pair2()), dir.path().join("pair.json")).unwrap();
        let mut file = action_to_file(&action);
        file.h = Value::String("pair.json".into());
        save_json(&file, dir.path().join("action.json")).unwrap();

        let back = load_action(dir.path().join("action.json")).expect("action file loads");
        assert_eq!(back.dim_h(), action.dim_h());
        for i in 0..action.dim_h() {
            for j in 0..action.dim_a() {
                assert_eq!(back.act_basis(i, j), action.act_basis(i, j));
            }
        }
        assert!(back.check_partial_action().passed());
    }

    #[test]
    fn out_of_range_action_entries_are_rejected() {
        let h = groupoid_algebra(&pair2());
        let mut file = action_to_file(&epsilon_action(&h, Algebra::rationals()).unwrap());
        file.act.push((7, 0, vec![Rat::one()]));
        let err = action_from_file(&file, Path::new(".")).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)), "{err}");
    }

    #[test]
    fn groupoid_action_files_roundtrip() {
        let pga = qq2_groupoid_action();
        assert!(pga.check().passed());
        let text = to_json(&groupoid_action_to_file(&pga));
        let back = groupoid_action_from_file(
            &serde_json::from_str(&text).expect("groupoid action json parses"),
            Path::new("."),
        )
        .expect("groupoid action file loads");
        assert!(back.check().passed());
        for x in 0..pga.groupoid().size() {
            assert_eq!(back.ideal(x), pga.ideal(x));
            assert_eq!(back.unit_of(x), pga.unit_of(x));
            assert_eq!(back.iso(x), pga.iso(x));
        }
    }

    #[test]
    fn rationals_in_files_stay_exact() {
        let third = Rat::new(1, 3);
        let a = Algebra::from_triples(
            vec!["u".into()],
            &[(0, 0, 0, third.clone())],
            vec![Rat::from_int(3)],
        )
        .unwrap();
        let text = to_json(&algebra_to_file(&a));
        assert!(text.contains("\"1/3\""), "{text}");
        let back = algebra_from_file(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.basis_product(0, 0)[0], third);
    }
}
