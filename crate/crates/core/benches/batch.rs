use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::SeedableRng;
use starcoh::arrows::System;
use starcoh::batch::{self, Pair};
use starcoh::{random, Net};

fn pairs(n: usize) -> Vec<Pair> {
    let mut rng = StdRng::seed_from_u64(11);
    (0..n)
        .map(|_| {
            let t = random::term(&mut rng, System::S, 6, 12);
            let (m, _) = random::mutate(&mut rng, &t, System::S, 3);
            (t, m)
        })
        .collect()
}

fn nets(n: usize) -> Vec<Net> {
    let mut rng = StdRng::seed_from_u64(12);
    (0..n).map(|_| random::cut_net(&mut rng, 4, 3)).collect()
}

fn decide(c: &mut Criterion) {
    let mut g = c.benchmark_group("decide");
    for n in [64, 256] {
        let ps = pairs(n);
        g.bench_with_input(BenchmarkId::new("parallel", n), &ps, |b, ps| b.iter(|| batch::decide_pairs(ps)));
        g.bench_with_input(BenchmarkId::new("sequential", n), &ps, |b, ps| b.iter(|| batch::decide_pairs_seq(ps)));
    }
    g.finish();
}

fn eliminate(c: &mut Criterion) {
    let mut g = c.benchmark_group("eliminate");
    g.sample_size(10);
    let ns = nets(64);
    g.bench_function("parallel", |b| b.iter(|| batch::eliminate_all(&ns)));
    g.bench_function("sequential", |b| b.iter(|| batch::eliminate_all_seq(&ns)));
    g.finish();
}

criterion_group!(benches, decide, eliminate);
criterion_main!(benches);
