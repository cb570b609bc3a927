use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cdcrit::families::FamilySpec;
use cdcrit::gamma::{gamma_c, gamma_c_value};
use cdcrit::graph::Graph;

fn gamma_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma_c");
    for k in [4usize, 6, 8] {
        let cycle = Graph::cycle(k + 2);
        group.bench_with_input(BenchmarkId::new("cycle", k), &cycle, |b, g| {
            b.iter(|| gamma_c_value(g).unwrap())
        });
    }
    let f = FamilySpec::F { p: 1, q: 2, r: 2 }.generate().unwrap().graph;
    group.bench_function("F(1,2,2)", |b| b.iter(|| gamma_c_value(&f).unwrap()));
    group.bench_function("F(1,2,2) all min sets", |b| {
        b.iter(|| gamma_c(&f, true).unwrap())
    });
    group.finish();
}

fn criticality(c: &mut Criterion) {
    let x3 = FamilySpec::X { s: 3 }.generate().unwrap().graph;
    c.bench_function("criticality_level X(3)", |b| {
        b.iter(|| cdcrit::critical::criticality_level(&x3).unwrap())
    });
}

criterion_group!(benches, gamma_solver, criticality);
criterion_main!(benches);
