use criterion::{criterion_group, criterion_main, Criterion};

use cdcrit::graph::Graph;
use cdcrit::matching::{favaron_check, max_matching};

fn blossom(c: &mut Criterion) {
    // two rings of blossom-heavy structure
    let mut edges: Vec<(usize, usize)> = (0..15).map(|i| (i, (i + 1) % 16)).collect();
    edges.extend([(0, 5), (3, 9), (7, 13), (2, 11)]);
    let g = Graph::build(16, &edges).unwrap();
    c.bench_function("max_matching n=16", |b| b.iter(|| max_matching(&g)));
}

fn cut_set_scan(c: &mut Criterion) {
    let g = Graph::cycle(13);
    c.bench_function("favaron_check C13 ell=1", |b| {
        b.iter(|| favaron_check(&g, 1).unwrap())
    });
}

criterion_group!(benches, blossom, cut_set_scan);
criterion_main!(benches);
