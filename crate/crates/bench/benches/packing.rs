use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use treepack::{generate, max_packing, pack_cartesian, pack_lex};
use treepack_bench::{factor, CARTESIAN, LEX, ORACLE};

fn cartesian(c: &mut Criterion) {
    let mut group = c.benchmark_group("pack_cartesian");
    for (g, h) in CARTESIAN {
        let (g, h) = (factor(g), factor(h));
        group.bench_function(
            BenchmarkId::from_parameter(format!("{}x{}", g.name, h.name)),
            |b| b.iter(|| pack_cartesian(&g.graph, &h.graph, &g.packing, &h.packing).unwrap()),
        );
    }
    group.finish();
}

fn lex(c: &mut Criterion) {
    let mut group = c.benchmark_group("pack_lex");
    for (g, h) in LEX {
        let (g, h) = (factor(g), factor(h));
        group.bench_function(
            BenchmarkId::from_parameter(format!("{}o{}", g.name, h.name)),
            |b| b.iter(|| pack_lex(&g.graph, &h.graph, &g.packing, &h.packing).unwrap()),
        );
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_packing");
    group.sample_size(20);
    for name in ORACLE {
        let g = generate(name.parse().unwrap()).unwrap();
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| max_packing(&g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, cartesian, lex, oracle);
criterion_main!(benches);
