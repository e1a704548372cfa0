use criterion::{black_box, criterion_group, criterion_main, Criterion};

use grk_bench::{code, codes, graph, graphs};
use grk_core::homology::{baldridge_homology, khovanov_z2};
use grk_core::rewrite::{canonical_key, equivalent_within, Budget};
use grk_core::{fixtures, jones, k_map, penrose_number, tait_count_expansion, two_colorings, two_factor_bracket};

fn brackets(c: &mut Criterion) {
    let mut g = c.benchmark_group("bracket");
    for (name, gr) in graphs() {
        g.bench_function(format!("two_factor/{name}"), |b| b.iter(|| two_factor_bracket(black_box(&gr))));
    }
    for (name, d) in codes() {
        g.bench_function(format!("jones/{name}"), |b| b.iter(|| jones(black_box(&d))));
    }
    g.finish();
}

fn counts(c: &mut Criterion) {
    let cube = graph(fixtures::CUBEQ3);
    let petersen = graph(fixtures::PETERSEN);
    c.bench_function("penrose/CUBEQ3", |b| b.iter(|| penrose_number(black_box(&cube))));
    c.bench_function("tait_expansion/PETERSEN", |b| b.iter(|| tait_count_expansion(black_box(&petersen))));
    c.bench_function("two_colorings/k_map(CUBEQ3)", |b| {
        let d = k_map(&cube).unwrap();
        b.iter(|| two_colorings(black_box(&d)))
    });
}

fn homology(c: &mut Criterion) {
    let trefoil = code(fixtures::TREFOIL);
    let k4 = graph(fixtures::K4M);
    let mut g = c.benchmark_group("homology");
    g.sample_size(20);
    g.bench_function("khovanov/TREFOIL", |b| b.iter(|| khovanov_z2(black_box(&trefoil))));
    g.bench_function("baldridge/K4M", |b| b.iter(|| baldridge_homology(black_box(&k4))));
    g.finish();
}

fn search(c: &mut Criterion) {
    let franklin = code(fixtures::FRANKLIN_CODE);
    let unknot = code(fixtures::UNKNOT0);
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    g.bench_function("canonical_key/FRANKLIN_CODE", |b| b.iter(|| canonical_key(black_box(&franklin))));
    g.bench_function("franklin_to_unknot", |b| b.iter(|| equivalent_within(&franklin, &unknot, Budget::depth(3))));
    g.finish();
}

criterion_group!(benches, brackets, counts, homology, search);
criterion_main!(benches);
