use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sigbasis::{buchberger, fglm, gvw_run, GvwConfig, ModuleOrderKind, MonomialOrder};
use sigbasis_bench::load;

const INSTANCES: [&str; 4] = ["worked_example", "katsura3", "cyclic4", "random_quadrics_1"];

fn gvw_vs_buchberger(c: &mut Criterion) {
    let mut group = c.benchmark_group("grevlex");
    for name in INSTANCES {
        let p = load(name).with_order(MonomialOrder::Grevlex);
        let ring = p.ring();
        let (gens, _) = p.nonzero_generators();
        group.bench_with_input(BenchmarkId::new("gvw", name), &gens, |b, gens| {
            b.iter(|| gvw_run(ring, gens, ModuleOrderKind::Schreyer, GvwConfig::default()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("buchberger", name), &gens, |b, gens| {
            b.iter(|| buchberger(&ring, gens))
        });
    }
    group.finish();
}

fn fglm_katsura(c: &mut Criterion) {
    let p = load("katsura3").with_order(MonomialOrder::Grevlex);
    let ring = p.ring();
    let gb = ring.interreduce(&buchberger(&ring, &p.generators));
    c.bench_function("fglm/katsura3/grevlex->lex", |b| {
        b.iter(|| fglm(&ring, &gb, MonomialOrder::Lex).unwrap())
    });
}

criterion_group!(benches, gvw_vs_buchberger, fglm_katsura);
criterion_main!(benches);
