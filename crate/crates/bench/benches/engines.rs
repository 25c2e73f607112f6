use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use nmi_bench::{antihole7, degree7_ideal, dense_12_vertex};
use nmi_core::{
    covering_vertices, hilbert_basis, lp_max, normality_via_rees, rees_cone, Budget, QVector,
};

fn bench_lp(c: &mut Criterion) {
    let ideal = antihole7().cover_ideal();
    let a = ideal.incidence_matrix().unwrap();
    let b = QVector::ones(7);
    let ones = QVector::ones(a.cols());
    c.bench_function("lp_max_antihole_cover", |bench| {
        bench.iter(|| lp_max(black_box(&a), black_box(&b), black_box(&ones)).unwrap())
    });
}

fn bench_hilbert(c: &mut Criterion) {
    let budget = Budget::points(500_000_000);
    let cone = rees_cone(&antihole7().edge_ideal()).unwrap();
    c.bench_function("hilbert_basis_antihole_edges", |bench| {
        bench.iter(|| hilbert_basis(black_box(&cone), &budget).unwrap())
    });

    let heavy = rees_cone(&degree7_ideal()).unwrap();
    let mut slow = c.benchmark_group("heavy");
    slow.sample_size(10);
    slow.bench_function("hilbert_basis_degree7_rees", |bench| {
        bench.iter(|| hilbert_basis(black_box(&heavy), &budget).unwrap())
    });
    slow.finish();
}

fn bench_blocker(c: &mut Criterion) {
    let g = dense_12_vertex();
    c.bench_function("blocker_dense_12_vertex", |bench| {
        bench.iter(|| black_box(&g).blocker())
    });
    let budget = Budget::points(500_000_000);
    let ic = g.complement().cover_ideal();
    let mut slow = c.benchmark_group("heavy_cover");
    slow.sample_size(10);
    slow.bench_function("normality_cover_complement_12", |bench| {
        bench.iter(|| normality_via_rees(black_box(&ic), &budget).unwrap())
    });
    slow.finish();
}

fn bench_vertices(c: &mut Criterion) {
    let ideal = antihole7().cover_ideal();
    c.bench_function("covering_vertices_antihole", |bench| {
        bench.iter(|| covering_vertices(black_box(&ideal)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_lp,
    bench_hilbert,
    bench_blocker,
    bench_vertices
);
criterion_main!(benches);
