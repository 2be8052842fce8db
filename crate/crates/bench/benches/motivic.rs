use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use motivic_core::ff_oracle::{count_commuting_pairs, count_cyclic_pairs, EnumOptions};
use motivic_core::formulas::{
    commuting_series_product, cyclic_class, default_cyclic_depth, feit_fine_class, feit_fine_pipeline,
    min_feit_fine_depth, CyclicDimensionVector, ProductMode,
};
use motivic_core::power::random_unit_series;
use motivic_core::series::euler_factorize;
use motivic_core::{euler_assemble, MotivicClass};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(c: &mut Criterion) {
    let a = MotivicClass::from_terms(-60, (-60..=4).map(|e| (e, e % 7 - 3)));
    let u = MotivicClass::from_terms(-60, [(2, 1), (0, -3), (-1, 5)]);
    c.bench_function("class mul, depth 60", |b| b.iter(|| black_box(&a) * black_box(&a)));
    c.bench_function("class invert, depth 60", |b| b.iter(|| black_box(&u).invert_unit().unwrap()));
}

fn series(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = random_unit_series(&mut rng, 2, 8, -20);
    let g = random_unit_series(&mut rng, 2, 8, -20);
    c.bench_function("series mul, 2 vars, N=8", |b| b.iter(|| f.mul(black_box(&g)).unwrap()));
    c.bench_function("factorize and assemble, 2 vars, N=8", |b| {
        b.iter(|| euler_assemble(&euler_factorize(black_box(&f)).unwrap()))
    });
}

fn formulas(c: &mut Criterion) {
    let mut group = c.benchmark_group("feit-fine");
    for n in [3u32, 5] {
        let d = min_feit_fine_depth(n);
        group.bench_with_input(BenchmarkId::new("class", n), &n, |b, &n| b.iter(|| feit_fine_class(n, d).unwrap()));
        group.bench_with_input(BenchmarkId::new("pipeline", n), &n, |b, &n| b.iter(|| feit_fine_pipeline(n, d)));
        group.bench_with_input(BenchmarkId::new("product", n), &n, |b, &n| {
            b.iter(|| commuting_series_product(n, ProductMode::SingleVariable, d))
        });
    }
    group.finish();
    let v: CyclicDimensionVector = "2,2".parse().unwrap();
    let d = default_cyclic_depth(&v);
    c.bench_function("cyclic class (2,2)", |b| b.iter(|| cyclic_class(black_box(&v), d).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let opts = EnumOptions::default();
    group.bench_function("commuting n=3 q=3", |b| b.iter(|| count_commuting_pairs(3, 3, &opts).unwrap()));
    group.bench_function("commuting n=4 q=2", |b| b.iter(|| count_commuting_pairs(4, 2, &opts).unwrap()));
    group.bench_function("cyclic (2,2) q=3", |b| b.iter(|| count_cyclic_pairs(&[2, 2], 3, &opts).unwrap()));
    group.finish();
}

criterion_group!(benches, ring, series, formulas, oracle);
criterion_main!(benches);
