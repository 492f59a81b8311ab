//! Benchmarks of the main verification and construction pipelines at desk
//! scale: axiom suites, ground-field classification, smash products,
//! globalization, and the Morita context.

use criterion::{criterion_group, criterion_main, Criterion};

use wharf_core::globalize::standard_globalization;
use wharf_core::groupoid::{
    cyclic_group, disjoint_union_of_groups, groupoid_algebra, pair_groupoid,
};
use wharf_core::linalg::Rat;
use wharf_core::morita::build_morita_context;
use wharf_core::paction::classify_ground_field;
use wharf_core::smash::build_smash;
use wharf_core::{GroundFieldAction, PartialAction};

/// Indicator of the trivial subgroup at `(1,1)` in the pair groupoid on two
/// objects: the smallest non-global symmetric action.
fn pair_ground_action() -> PartialAction {
    let g = pair_groupoid(2).unwrap();
    let h = groupoid_algebra(&g);
    let e11 = g.arrow_index("(1,1)").unwrap();
    let lambda: Vec<Rat> =
        (0..g.size()).map(|i| if i == e11 { Rat::one() } else { Rat::zero() }).collect();
    GroundFieldAction::new(lambda).as_partial_action(&h).unwrap()
}

fn weak_hopf_verification(c: &mut Criterion) {
    let h = groupoid_algebra(&pair_groupoid(3).unwrap());
    c.bench_function("full verification, pair groupoid algebra dim 9", |b| {
        b.iter(|| assert!(h.full_report().passed()))
    });
}

fn ground_classification(c: &mut Criterion) {
    let g = disjoint_union_of_groups(&[cyclic_group(3), cyclic_group(2)]).unwrap();
    c.bench_function("ground field classification, Z/3 + Z/2", |b| {
        b.iter(|| assert_eq!(classify_ground_field(&g, 16).unwrap().len(), 4))
    });
}

fn smash_product(c: &mut Criterion) {
    let p = pair_ground_action();
    c.bench_function("smash product, pair groupoid ground action", |b| {
        b.iter(|| assert_eq!(build_smash(&p).unwrap().dim(), 2))
    });
}

fn globalization(c: &mut Criterion) {
    let p = pair_ground_action();
    c.bench_function("standard globalization, pair groupoid ground action", |b| {
        b.iter(|| assert_eq!(standard_globalization(&p).unwrap().dim_b(), 2))
    });
}

fn morita_context(c: &mut Criterion) {
    let p = pair_ground_action();
    let gl = standard_globalization(&p).unwrap();
    c.bench_function("morita context, pair groupoid ground action", |b| {
        b.iter(|| assert_eq!(build_morita_context(&p, &gl).unwrap().m().dim(), 2))
    });
}

criterion_group!(
    benches,
    weak_hopf_verification,
    ground_classification,
    smash_product,
    globalization,
    morita_context
);
criterion_main!(benches);
