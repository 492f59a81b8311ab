//! Helpers shared by the command line test files.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use wharf_core::groupoid::{pair_groupoid, PartialGroupoidAction};
use wharf_core::linalg::{basis_vec, zeros, Matrix, Rat, Subspace};
use wharf_core::Algebra;

/// The committed fixture directory at the workspace root.
pub fn testdata_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../testdata")
}

/// Runs the `wharf` binary; returns exit success and captured stdout.
pub fn run_wharf(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wharf"))
        .args(args)
        .output()
        .expect("the wharf binary runs");
    (out.status.success(), String::from_utf8(out.stdout).expect("reports are utf-8"))
}

/// Global action of the pair groupoid on `QQ^2`: each `D_g` is the range
/// component, with `alpha_(i,j)` carrying `e_j` to `e_i`. A two-dimensional
/// coefficient algebra whose ideals are proper, for roundtrip coverage.
pub fn qq2_groupoid_action() -> PartialGroupoidAction {
    let g = pair_groupoid(2).unwrap();
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
