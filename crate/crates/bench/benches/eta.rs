use criterion::{black_box, criterion_group, criterion_main, Criterion};

use stong_bench::{dold_ast, flag_base, full_proj, large_flag};
use stong_core::cobordism::{dold_eta_formula, eta};
use stong_core::spaces::{complex_from_real, dold_fixed_data, flag_fixed_points, real_flag_space};

fn flags(c: &mut Criterion) {
    let spec = large_flag();
    c.bench_function("flag_fixed_points/560", |b| {
        b.iter(|| flag_fixed_points(black_box(&spec)).unwrap())
    });
    c.bench_function("real_flag_space/560", |b| {
        b.iter(|| real_flag_space(black_box(&spec)).unwrap())
    });
    let base = flag_base();
    c.bench_function("eta/complex_flag/560", |b| {
        b.iter(|| eta(&complex_from_real(black_box(&base))))
    });
}

fn dold(c: &mut Criterion) {
    let proj = full_proj();
    let base = flag_base();
    c.bench_function("dold/assemble+eta", |b| {
        b.iter(|| eta(&dold_fixed_data(black_box(&proj), black_box(&base)).unwrap()))
    });
    c.bench_function("dold/expanded_formula", |b| {
        b.iter(|| dold_eta_formula(black_box(&proj), black_box(&base)).unwrap())
    });
    let ast = dold_ast();
    c.bench_function("dold/from_ast", |b| {
        b.iter(|| eta(black_box(&ast).build().unwrap().model()))
    });
}

criterion_group!(benches, flags, dold);
criterion_main!(benches);
