//! The acceptance gate: one test per criterion, each printing a single
//! pass/fail line in the harness output.
//!
//! The corpus pairs group algebras (one identity) with genuine multi-object
//! groupoid algebras. Every check is exact over the rationals; a single
//! failing basis tuple anywhere fails its criterion.

mod common;

use std::fs;

use wharf_core::globalize::{
    check_globalization, check_ideal_iff_symmetric, check_minimality, standard_globalization,
};
use wharf_core::groupoid::{
    cyclic_group, disjoint_union_of_groups, groupoid_algebra, pair_groupoid, FiniteGroupoid,
};
use wharf_core::linalg::{vec_display, vec_is_zero, Rat};
use wharf_core::morita::{
    build_morita_context, check_context_associativity, check_morita_surjectivity,
};
use wharf_core::paction::{
    algebra_to_groupoid_action, classify_ground_field, classify_ground_field_oracle,
    groupoid_to_algebra_action, hopf_iff_epsilon,
};
use wharf_core::smash::{build_smash, check_unit_iff_global};
use wharf_core::{GroundFieldAction, PartialAction};

fn union(tables: &[wharf_core::GroupTable]) -> FiniteGroupoid {
    disjoint_union_of_groups(tables).unwrap()
}

fn corpus() -> Vec<(&'static str, FiniteGroupoid)> {
    vec![
        ("Z/2", union(&[cyclic_group(2)])),
        ("Z/3", union(&[cyclic_group(3)])),
        ("pair(2)", pair_groupoid(2).unwrap()),
        ("pair(3)", pair_groupoid(3).unwrap()),
        ("Z/2 + Z/2", union(&[cyclic_group(2), cyclic_group(2)])),
        ("Z/3 + Z/2", union(&[cyclic_group(3), cyclic_group(2)])),
    ]
}

/// Every ground-field partial action of the corpus member.
fn ground_actions(g: &FiniteGroupoid) -> Vec<PartialAction> {
    let h = groupoid_algebra(g);
    classify_ground_field(g, 16)
        .unwrap()
        .into_iter()
        .map(|class| class.action.as_partial_action(&h).unwrap())
        .collect()
}

/// The non-global ground action of the pair groupoid: the indicator of the
/// trivial subgroup at `(1,1)`.
fn pair_indicator_action() -> (FiniteGroupoid, usize, PartialAction) {
    let g = pair_groupoid(2).unwrap();
    let h = groupoid_algebra(&g);
    let e11 = g.arrow_index("(1,1)").unwrap();
    let lambda: Vec<Rat> =
        (0..g.size()).map(|i| if i == e11 { Rat::one() } else { Rat::zero() }).collect();
    let p = GroundFieldAction::new(lambda).as_partial_action(&h).unwrap();
    (g, e11, p)
}

fn actions_equal(a: &PartialAction, b: &PartialAction) -> bool {
    a.dim_h() == b.dim_h()
        && a.dim_a() == b.dim_a()
        && (0..a.dim_h())
            .all(|i| (0..a.dim_a()).all(|j| a.act_basis(i, j) == b.act_basis(i, j)))
}

#[test]
fn criterion_1_axiom_and_lemma_suites_pass_with_zero_failures() {
    for (name, g) in corpus() {
        let rep = groupoid_algebra(&g).full_report();
        assert_eq!(rep.total_failures(), 0, "{name}:\n{rep}");
    }
}

#[test]
fn criterion_2_ground_classification_equals_the_subgroup_oracle() {
    for (name, g) in corpus() {
        assert!(g.size() <= 16, "{name}");
        let classes = classify_ground_field(&g, 16).unwrap();
        let oracle = classify_ground_field_oracle(&g, 16).unwrap();
        let mut found: Vec<String> =
            classes.iter().map(|c| vec_display(c.action.lambda())).collect();
        let mut expected: Vec<String> = oracle.iter().map(|l| vec_display(l)).collect();
        found.sort();
        expected.sort();
        assert_eq!(found, expected, "{name}");
    }
    let count = |g: &FiniteGroupoid| classify_ground_field(g, 16).unwrap().len();
    assert_eq!(count(&pair_groupoid(2).unwrap()), 2);
    assert_eq!(count(&union(&[cyclic_group(2), cyclic_group(2)])), 4);
    assert_eq!(count(&union(&[cyclic_group(3)])), 2);
}

#[test]
fn criterion_3_counit_actions_are_partial_exactly_on_group_algebras() {
    for (name, g) in corpus() {
        let is_group = g.identities().len() == 1;
        assert_eq!(hopf_iff_epsilon(&groupoid_algebra(&g)), is_group, "{name}");
    }
}

#[test]
fn criterion_4_groupoid_correspondence_roundtrips_exactly() {
    for (name, g) in corpus() {
        for (k, p) in ground_actions(&g).iter().enumerate() {
            assert!(p.check_symmetric(), "{name} action {k}");
            let (pga, rep) = algebra_to_groupoid_action(p, &g).unwrap();
            assert!(rep.passed(), "{name} action {k}:\n{rep}");
            let p2 = groupoid_to_algebra_action(&pga).unwrap();
            assert!(actions_equal(&p2, p), "{name} action {k}");
        }
    }
    // Two-dimensional coefficients with proper ideals, starting from the
    // groupoid presentation.
    let pga = common::qq2_groupoid_action();
    let p = groupoid_to_algebra_action(&pga).unwrap();
    let (back, rep) = algebra_to_groupoid_action(&p, pga.groupoid()).unwrap();
    assert!(rep.passed(), "{rep}");
    for x in 0..pga.groupoid().size() {
        assert_eq!(back.ideal(x), pga.ideal(x));
        assert_eq!(back.unit_of(x), pga.unit_of(x));
        assert_eq!(back.iso(x), pga.iso(x));
    }
    let p2 = groupoid_to_algebra_action(&back).unwrap();
    assert!(actions_equal(&p2, &p));
}

#[test]
fn criterion_5_smash_products_verify_and_the_unit_witness_vanishes() {
    let mut saw_global = false;
    let mut saw_partial = false;
    for (name, g) in corpus() {
        for (k, p) in ground_actions(&g).iter().enumerate() {
            let s = build_smash(p).unwrap();
            assert!(s.certificate().passed(), "{name} action {k}");
            let global = p.is_global();
            assert_eq!(check_unit_iff_global(p, &s), (global, global), "{name} action {k}");
            saw_global |= global;
            saw_partial |= !global;
        }
    }
    assert!(saw_global && saw_partial, "need both a global and a non-global instance");

    // (1 # delta_x)(1 # 1_H) = 0 for every x outside the acting subgroup,
    // with at least one such class nonzero.
    let (g, e11, p) = pair_indicator_action();
    let s = build_smash(&p).unwrap();
    let lu = s.left_unit().unwrap().to_vec();
    let mut nonzero_outside = false;
    for x in (0..g.size()).filter(|&x| x != e11) {
        let class = s.class_of_basis(0, x);
        assert!(vec_is_zero(&s.mul(&class, &lu)), "witness fails at {}", g.label(x));
        nonzero_outside |= !vec_is_zero(&class);
    }
    assert!(nonzero_outside);
}

#[test]
fn criterion_6_globalizations_are_minimal_symmetric_ideals() {
    let mut instances: Vec<(String, PartialAction)> = Vec::new();
    for (name, g) in corpus() {
        for (k, p) in ground_actions(&g).into_iter().enumerate() {
            instances.push((format!("{name} action {k}"), p));
        }
    }
    instances.push((
        "pair(2) on QQ^2".into(),
        groupoid_to_algebra_action(&common::qq2_groupoid_action()).unwrap(),
    ));
    for (name, p) in &instances {
        let gl = standard_globalization(p).unwrap();
        let checks = check_globalization(&gl, p);
        assert!(checks.passed(), "{name}:\n{checks}");
        let (ideal, symmetric) = check_ideal_iff_symmetric(&gl, p);
        assert!(ideal && symmetric, "{name}");
        assert!(check_minimality(&gl), "{name}");
    }

    // The pair-groupoid ground action globalizes into dimension two and the
    // induced action recovers lambda exactly.
    let (_, _, p) = pair_indicator_action();
    let gl = standard_globalization(&p).unwrap();
    assert_eq!(gl.dim_b(), 2);
    let induced = gl.induced_action().unwrap();
    assert!(actions_equal(&induced, &p));
}

#[test]
fn criterion_7_morita_spans_are_surjective_and_associative() {
    let mut instances: Vec<(String, PartialAction)> = Vec::new();
    for (name, g) in corpus() {
        for (k, p) in ground_actions(&g).into_iter().enumerate() {
            instances.push((format!("{name} action {k}"), p));
        }
    }
    instances.push((
        "pair(2) on QQ^2".into(),
        groupoid_to_algebra_action(&common::qq2_groupoid_action()).unwrap(),
    ));
    for (name, p) in &instances {
        let gl = standard_globalization(p).unwrap();
        let ctx = build_morita_context(p, &gl).unwrap();
        assert!(ctx.certificate().passed(), "{name}:\n{}", ctx.certificate());
        assert_eq!(check_morita_surjectivity(&ctx), (true, true), "{name}");
        assert!(check_context_associativity(&ctx), "{name}");
    }
}

#[test]
fn criterion_8_every_cli_command_reports_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let emitted = dir.path().join("emitted.json");
    let fixture =
        |name: &str| common::testdata_dir().join(name).to_string_lossy().into_owned();
    let cases: Vec<Vec<String>> = vec![
        vec!["verify-wha".into(), "--input".into(), fixture("z2.json")],
        vec![
            "groupoid-algebra".into(),
            "--input".into(),
            fixture("pair2.json"),
            "--out".into(),
            emitted.to_string_lossy().into_owned(),
        ],
        vec![
            "check-paction".into(),
            "--input".into(),
            fixture("pair2-ground.json"),
            "--emit-tables".into(),
        ],
        vec!["classify-ground".into(), "--input".into(), fixture("z3z2.json")],
        vec!["smash".into(), "--input".into(), fixture("pair2-ground.json"), "--emit-tables".into()],
        vec![
            "globalize".into(),
            "--input".into(),
            fixture("pair2-ground.json"),
            "--emit-tables".into(),
        ],
        vec!["morita".into(), "--input".into(), fixture("pair2-ground.json")],
        vec!["roundtrip".into(), "--input".into(), fixture("qq2-action.json")],
    ];
    for args in &cases {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (ok, first) = common::run_wharf(&argv);
        let first_emitted = emitted.exists().then(|| fs::read(&emitted).unwrap());
        let (ok2, second) = common::run_wharf(&argv);
        let second_emitted = emitted.exists().then(|| fs::read(&emitted).unwrap());
        assert!(ok && ok2, "{argv:?}:\n{first}");
        assert_eq!(first, second, "nondeterministic report for {argv:?}");
        assert_eq!(first_emitted, second_emitted, "nondeterministic output file for {argv:?}");
    }
}
