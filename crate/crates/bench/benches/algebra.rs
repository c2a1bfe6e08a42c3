use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hit_bench::QUARTICS;
use hit_core::arith::Ring;
use hit_core::bounds::{kernel, KernelParams, TheoremTag};
use hit_core::factor::{factor_bipoly, factor_univariate_q};
use hit_core::field::{fqu, height_projective, rationals, BaseField};
use hit_core::galois::{galois_group_generic, galois_group_specialized};
use hit_core::poly::{subset_resolvent, BiRing};

fn univariate(c: &mut Criterion) {
    let q = rationals();
    let fs: Vec<_> = QUARTICS
        .iter()
        .map(|s| {
            let br = BiRing::new(q.clone());
            br.specialize(&br.parse(s).unwrap(), &q.zero())
        })
        .collect();
    c.bench_function("factor quartics over Q", |b| {
        b.iter(|| {
            fs.iter()
                .map(|f| factor_univariate_q(f).unwrap().factors.len())
                .sum::<usize>()
        })
    });
    c.bench_function("galois quartics over Q", |b| {
        b.iter(|| {
            fs.iter()
                .map(|f| galois_group_specialized(&q, f).unwrap().group.order)
                .sum::<u64>()
        })
    });
}

fn bivariate(c: &mut Criterion) {
    let br = BiRing::new(rationals());
    let f = br.parse("Y^4 - 2*T^2*Y^2 + T^4 - T").unwrap();
    c.bench_function("factor bivariate over Q", |b| {
        b.iter(|| factor_bipoly(&br, &f, 0).unwrap().len())
    });
    let g = br.parse("Y^4 + T*Y + 1").unwrap();
    c.bench_function("generic galois group over Q(T)", |b| {
        b.iter(|| galois_group_generic(&br, &g).unwrap().group.order)
    });
    c.bench_function("subset resolvent R_2,1", |b| {
        b.iter(|| subset_resolvent(&br, &g, 2, 1).unwrap())
    });
    let bu = BiRing::new(fqu(5).unwrap());
    let h = bu.parse("Y^3 - T*Y - u").unwrap();
    c.bench_function("generic galois group over F_5(u)(T)", |b| {
        b.iter(|| galois_group_generic(&bu, &h).unwrap().group.order)
    });
}

fn heights_and_kernels(c: &mut Criterion) {
    let br = BiRing::new(rationals());
    let f = br.parse("3/7*Y^3 - 22/5*T*Y + 100*T^3 - 9/2").unwrap();
    let coeffs = br.coefficients(&f);
    c.bench_function("projective height", |b| {
        b.iter(|| height_projective(&br.k, &coeffs).unwrap().ln())
    });
    let p = KernelParams::new(BaseField::Q, 3, 2, 2.0, 20.0);
    c.bench_function("hit01 kernel", |b| {
        b.iter(|| kernel(TheoremTag::Hit01, black_box(&p)).unwrap().log2)
    });
}

criterion_group!(benches, univariate, bivariate, heights_and_kernels);
criterion_main!(benches);
