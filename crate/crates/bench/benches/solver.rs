use criterion::{criterion_group, criterion_main, Criterion};
use packcolor::{packing_chromatic, s_colorable, verify_s_coloring, PackingVector, SearchConfig};
use packcolor_bench::{petersen, subdivided_complete};

fn solver(c: &mut Criterion) {
    let pet = petersen();
    let s = PackingVector::one_one_two_two();
    c.bench_function("refute (1,1,2,2) on Petersen", |b| {
        b.iter(|| s_colorable(&pet, &s, &SearchConfig::deterministic()).unwrap())
    });
    for n in [4, 5] {
        let g = subdivided_complete(n, 1);
        c.bench_function(&format!("packing chromatic of S(K{n})"), |b| {
            b.iter(|| packing_chromatic(&g, &SearchConfig::deterministic()).unwrap())
        });
    }
    let g = subdivided_complete(5, 2);
    c.bench_function("packing chromatic of S2(K5), parallel", |b| {
        b.iter(|| packing_chromatic(&g, &SearchConfig::parallel()).unwrap())
    });
}

fn verifier(c: &mut Criterion) {
    let g = subdivided_complete(12, 3);
    let witness = packcolor::constructive::color_si_complete(12, 3).unwrap().1;
    c.bench_function("verify S3(K12) coloring", |b| {
        b.iter(|| verify_s_coloring(&g, &witness).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = solver, verifier
}
criterion_main!(benches);
