use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hit_bench::{single_thread, FQU_CENSUS, Q_CENSUS};
use hit_core::census::{census_galois, census_reducible, CensusOptions};
use hit_core::field::{fqu, rationals, BoxSpec};
use hit_core::poly::BiRing;

fn reducible_q(c: &mut Criterion) {
    let br = BiRing::new(rationals());
    let mut g = c.benchmark_group("census_reducible_q");
    g.sample_size(10);
    for (p, b) in Q_CENSUS {
        let f = br.parse(p).unwrap();
        let bx = BoxSpec::integer(*b);
        g.bench_with_input(BenchmarkId::new(*p, b), &bx, |bch, bx| {
            bch.iter(|| {
                census_reducible(&br, &f, bx, &single_thread())
                    .unwrap()
                    .count
            })
        });
    }
    g.finish();
}

fn reducible_fqu(c: &mut Criterion) {
    let br = BiRing::new(fqu(3).unwrap());
    let mut g = c.benchmark_group("census_reducible_f3u");
    g.sample_size(10);
    for (p, n) in FQU_CENSUS {
        let f = br.parse(p).unwrap();
        let bx = BoxSpec::Power { q: 3, n: *n };
        g.bench_with_input(BenchmarkId::new(*p, format!("3^{n}")), &bx, |bch, bx| {
            bch.iter(|| {
                census_reducible(&br, &f, bx, &single_thread())
                    .unwrap()
                    .count
            })
        });
    }
    g.finish();
}

fn galois_q(c: &mut Criterion) {
    let br = BiRing::new(rationals());
    let f = br.parse("Y^3 - T*Y - 1").unwrap();
    let bx = BoxSpec::integer(500);
    let mut g = c.benchmark_group("census_galois_q");
    g.sample_size(10);
    g.bench_function("single thread", |b| {
        b.iter(|| census_galois(&br, &f, &bx, &single_thread()).unwrap().count)
    });
    g.bench_function("all threads", |b| {
        b.iter(|| {
            census_galois(&br, &f, &bx, &CensusOptions::default())
                .unwrap()
                .count
        })
    });
    g.finish();
}

criterion_group!(benches, reducible_q, reducible_fqu, galois_q);
criterion_main!(benches);
