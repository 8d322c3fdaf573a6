use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use radii_atlas::diagram::{f_map, sample_boundary};
use radii_atlas::families::construct;
use radii_atlas::radii::compute_radii;
use radii_atlas_bench::{specs, vertex_bodies};

fn radii(c: &mut Criterion) {
    let mut g = c.benchmark_group("compute_radii");
    for (name, body) in vertex_bodies() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &body, |b, k| b.iter(|| compute_radii(black_box(k))));
    }
    g.finish();
}

fn families(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    for spec in specs() {
        g.bench_with_input(BenchmarkId::from_parameter(spec.to_string()), &spec, |b, s| {
            b.iter(|| construct(black_box(s)))
        });
    }
    g.finish();
}

fn diagram(c: &mut Criterion) {
    let bodies: Vec<_> = specs().iter().map(|s| construct(s).expect("fixture")).collect();
    c.bench_function("f_map/fixtures", |b| {
        b.iter(|| bodies.iter().map(|k| f_map(black_box(k)).map(|p| p.x).unwrap_or(0.0)).sum::<f64>())
    });
    let mut g = c.benchmark_group("sample_boundary");
    g.sample_size(10);
    g.bench_function("resolution_4", |b| b.iter(|| sample_boundary(black_box(4))));
    g.finish();
}

criterion_group!(benches, radii, families, diagram);
criterion_main!(benches);
