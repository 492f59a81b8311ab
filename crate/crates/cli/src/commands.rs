//! One function per subcommand, each returning a finished [`RunReport`].
//!
//! Commands never panic on bad input: load errors and rejected
//! preconditions become `error:` result lines and count as failures, so the
//! exit code aggregates everything that went wrong. Theorems the
//! constructions guarantee are reported through [`RunReport::expect`], which
//! flags a `false` as a failure instead of asserting.

use std::path::Path;

use wharf_core::files;
use wharf_core::globalize::{check_globalization, check_minimality, standard_globalization};
use wharf_core::groupoid::groupoid_algebra;
use wharf_core::linalg::vec_display;
use wharf_core::morita::{
    build_morita_context, check_context_associativity, check_morita_surjectivity,
};
use wharf_core::paction::{
    algebra_to_groupoid_action, classify_ground_field, classify_ground_field_oracle,
    groupoid_to_algebra_action,
};
use wharf_core::smash::{build_partial_smash, build_smash};
use wharf_core::wha::lemma_suite;
use wharf_core::CounitalMaps;

use crate::report::RunReport;

/// Evaluates a fallible step; on error records it and returns the report.
macro_rules! step {
    ($rep:ident, $key:expr, $expr:expr) => {
        match $expr {
            Ok(value) => value,
            Err(err) => {
                $rep.error($key, err);
                return $rep;
            }
        }
    };
}

pub fn verify_wha(input: &Path) -> RunReport {
    let mut rep = RunReport::new("verify-wha");
    step!(rep, "input", rep.input(input));
    let h = step!(rep, "load", files::load_wha(input));
    rep.push("dim", h.dim());
    rep.suite("algebra axioms", &h.alg().check());
    rep.suite("coalgebra axioms", &h.coalg().check());
    rep.suite("weak bialgebra axioms", &h.check_weak_bialgebra());
    rep.suite("weak hopf axioms", &h.check_weak_hopf());
    match CounitalMaps::new(&h) {
        Ok(cm) => {
            rep.push("dim H_L", cm.hl.dim());
            rep.push("dim H_R", cm.hr.dim());
            rep.suite("lemma suite", &lemma_suite(&h, &cm));
        }
        Err(err) => rep.error("lemma suite", err),
    }
    rep
}

pub fn groupoid_algebra_cmd(input: &Path, out: Option<&Path>) -> RunReport {
    let mut rep = RunReport::new("groupoid-algebra");
    step!(rep, "input", rep.input(input));
    let g = step!(rep, "load", files::load_groupoid(input));
    rep.push("arrows", g.size());
    rep.push("identities", g.identities().len());
    let h = groupoid_algebra(&g);
    rep.push("dim", h.dim());
    rep.suite("weak hopf verification", &h.full_report());
    if let Some(out) = out {
        step!(rep, "write", files::save_json(&files::wha_to_file(&h), out));
        match out.file_name() {
            Some(name) => rep.push("out", name.to_string_lossy()),
            None => rep.push("out", out.display()),
        }
    }
    rep
}

pub fn check_paction(input: &Path, emit_tables: bool) -> RunReport {
    let mut rep = RunReport::new("check-paction");
    step!(rep, "input", rep.input(input));
    let p = step!(rep, "load", files::load_action(input));
    rep.push("dim H", p.dim_h());
    rep.push("dim A", p.dim_a());
    rep.suite("partial action axioms", &p.check_partial_action());
    rep.push("symmetric", p.check_symmetric());
    rep.push("global", p.is_global());
    match p.derived_identity_suite() {
        Ok(suite) => rep.suite("derived identities", &suite),
        Err(err) => rep.error("derived identities", err),
    }
    if emit_tables {
        let (h, a) = (p.h().labels().to_vec(), p.algebra().labels().to_vec());
        for i in 0..p.dim_h() {
            for j in 0..p.dim_a() {
                let value = p.act_basis(i, j);
                if !value.iter().all(|c| c.is_zero()) {
                    rep.push(&format!("act[{}, {}]", h[i], a[j]), vec_display(value));
                }
            }
        }
    }
    rep
}

pub fn classify_ground(input: &Path, oracle_bound: usize) -> RunReport {
    let mut rep = RunReport::new("classify-ground");
    step!(rep, "input", rep.input(input));
    let g = step!(rep, "load", files::load_groupoid(input));
    rep.push("arrows", g.size());
    rep.push("identities", g.identities().len());
    let classes = step!(rep, "classification", classify_ground_field(&g, oracle_bound));
    rep.push("actions", classes.len());
    rep.push("global actions", classes.iter().filter(|c| c.global).count());
    let oracle = step!(rep, "oracle", classify_ground_field_oracle(&g, oracle_bound));
    let mut found: Vec<String> =
        classes.iter().map(|c| vec_display(c.action.lambda())).collect();
    let mut expected: Vec<String> = oracle.iter().map(|l| vec_display(l)).collect();
    found.sort();
    expected.sort();
    rep.expect("oracle agreement", found == expected);
    for (idx, class) in classes.iter().enumerate() {
        let members: Vec<&str> = class.subgroup.iter().map(|&a| g.label(a)).collect();
        rep.push(
            &format!("action {idx}"),
            format!(
                "e={} V={{{}}} global={}",
                g.label(class.identity),
                members.join(", "),
                class.global
            ),
        );
    }
    rep
}

pub fn smash(input: &Path, emit_tables: bool) -> RunReport {
    let mut rep = RunReport::new("smash");
    step!(rep, "input", rep.input(input));
    let p = step!(rep, "load", files::load_action(input));
    rep.push("dim H", p.dim_h());
    rep.push("dim A", p.dim_a());
    let global = p.is_global();
    rep.push("global", global);
    let s = step!(rep, "smash", build_smash(&p));
    rep.push("ambient dim", s.ambient_dim());
    rep.push("relation dim", s.relation_dim());
    rep.push("smash dim", s.dim());
    rep.expect("left unit", s.left_unit().is_some());
    match s.right_unit_law_holds() {
        Some(holds) => {
            rep.push("right unit law", holds);
            rep.expect("right unit law matches globality", holds == global);
        }
        None => rep.push("right unit law", "not applicable"),
    }
    let corner = step!(rep, "corner", build_partial_smash(&s));
    rep.push("corner dim", corner.dim());
    rep.suite("smash verification", s.certificate());
    if emit_tables {
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                rep.push(
                    &format!("mul[{}, {}]", s.label(i), s.label(j)),
                    vec_display(s.basis_product(i, j)),
                );
            }
        }
    }
    rep
}

pub fn globalize(input: &Path, emit_tables: bool) -> RunReport {
    let mut rep = RunReport::new("globalize");
    step!(rep, "input", rep.input(input));
    let p = step!(rep, "load", files::load_action(input));
    rep.push("dim H", p.dim_h());
    rep.push("dim A", p.dim_a());
    let g = step!(rep, "globalization", standard_globalization(&p));
    rep.push("ambient dim", g.ambient().dim());
    rep.push("dim B", g.dim_b());
    let symmetric = p.check_symmetric();
    rep.push("symmetric", symmetric);
    rep.push("ideal", g.is_ideal());
    rep.expect("ideal iff symmetric", g.is_ideal() == symmetric);
    rep.expect("minimal", check_minimality(&g));
    rep.push("unit of B", g.unit_of_b().is_some());
    rep.suite("globalization checks", &check_globalization(&g, &p));
    if emit_tables {
        let a = p.algebra().labels();
        for j in 0..p.dim_a() {
            rep.push(&format!("theta[{}]", a[j]), vec_display(&g.theta().col_vec(j)));
        }
    }
    rep
}

pub fn morita(input: &Path) -> RunReport {
    let mut rep = RunReport::new("morita");
    step!(rep, "input", rep.input(input));
    let p = step!(rep, "load", files::load_action(input));
    rep.push("dim H", p.dim_h());
    rep.push("dim A", p.dim_a());
    let g = step!(rep, "globalization", standard_globalization(&p));
    rep.push("dim B", g.dim_b());
    let ctx = step!(rep, "context", build_morita_context(&p, &g));
    rep.push("dim A smash", ctx.asmash().dim());
    rep.push("dim corner", ctx.acorner().dim());
    rep.push("dim B smash", ctx.bsmash().dim());
    rep.push("dim M", ctx.m().dim());
    rep.push("dim N", ctx.n().dim());
    rep.push("dim psi corner", ctx.psi_corner().dim());
    let (round, square) = check_morita_surjectivity(&ctx);
    rep.expect("surjective round", round);
    rep.expect("surjective square", square);
    rep.expect("associativity", check_context_associativity(&ctx));
    rep.push("has unit B", ctx.has_unit_b());
    rep.suite("morita verification", ctx.certificate());
    rep
}

pub fn roundtrip(input: &Path) -> RunReport {
    let mut rep = RunReport::new("roundtrip");
    step!(rep, "input", rep.input(input));
    let pga = step!(rep, "load", files::load_groupoid_action(input));
    let n = pga.groupoid().size();
    rep.push("arrows", n);
    rep.push("dim A", pga.algebra().dim());
    rep.suite("groupoid action axioms", &pga.check());
    let p = step!(rep, "to algebra action", groupoid_to_algebra_action(&pga));
    rep.suite("partial action axioms", &p.check_partial_action());
    rep.push("symmetric", p.check_symmetric());
    let (back, recovery) =
        step!(rep, "to groupoid action", algebra_to_groupoid_action(&p, pga.groupoid()));
    rep.suite("recovery checks", &recovery);
    let same_groupoid_action = (0..n).all(|x| {
        back.ideal(x) == pga.ideal(x)
            && back.unit_of(x) == pga.unit_of(x)
            && back.iso(x) == pga.iso(x)
    });
    rep.expect("groupoid action reproduced", same_groupoid_action);
    let p2 = step!(rep, "second algebra action", groupoid_to_algebra_action(&back));
    let same_algebra_action = (0..p.dim_h())
        .all(|i| (0..p.dim_a()).all(|j| p2.act_basis(i, j) == p.act_basis(i, j)));
    rep.expect("algebra action reproduced", same_algebra_action);
    rep
}
